"""Verification laboratory for gcd-restricted inhomogeneous approximation sets.

Exact rational constructions of the approximation sets on the torus, their
closed-form measures and pairwise intersections, quasi-independence-on-
average ratios, and seeded Monte Carlo experiments exhibiting the zero/one
measure dichotomy.
"""

from .kernel import HAVE_COMPILED_KERNEL, IMPLEMENTATION

__all__ = ["HAVE_COMPILED_KERNEL", "IMPLEMENTATION", "__version__"]

__version__ = "1.0.0"
