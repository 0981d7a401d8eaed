"""Obscured-face hallucination: inpaint a masked 16x16 face, then upsample 8x.

Submodules are imported lazily by the CLI so that thread caps can be applied
before numpy spins up its BLAS pools.
"""

__version__ = "0.1.0"
