"""Dispatch between the compiled arc-intersection kernel and its fallback.

The compiled extension (groshevlab._kernel, Cython) and the pure-Python
module (groshevlab._kernel_py) implement the same exact algorithm; the
extension additionally requires its integer work to fit in 64/128-bit
machine words, so oversized inputs are routed to the fallback.  Both
return exact rationals and are cross-checked against the interval-union
oracle in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _kernel_py
from .circle import CircleIntervalUnion

try:  # pragma: no cover - depends on build environment
    from . import _kernel as _kernel_c

    HAVE_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover
    _kernel_c = None
    HAVE_COMPILED_KERNEL = False

IMPLEMENTATION = "cython" if HAVE_COMPILED_KERNEL else "python"

# magnitude limits for the compiled kernel's 64/128-bit arithmetic
_C_W_LIMIT = 1 << 40
_C_S_LIMIT = 1 << 62

HALF = Fraction(1, 2)


def masked_arcs(
    d: int, radius: Fraction, y: Fraction, mask: bytes
) -> CircleIntervalUnion:
    """Interval union of arcs at (p + y)/d over set mask bits (oracle path)."""
    arcs = [
        (Fraction(p + y, d) % 1, radius) for p in range(abs(d)) if mask[p]
    ]
    return CircleIntervalUnion.from_arcs(arcs)


def pair_intersection(
    d: int,
    e: int,
    delta1: Fraction,
    delta2: Fraction,
    y: Fraction,
    mask_d: bytes,
    mask_e: bytes,
    force: str | None = None,
) -> Fraction:
    """Exact |U1 cap U2| for the masked arc unions at moduli d (> 0) and e.

    force: None (auto), "oracle", "python", "cython" - used by parity tests
    and the benchmark.
    """
    if d <= 0 or e == 0:
        raise ValueError("requires d > 0 and e != 0")
    if delta1 == 0 or delta2 == 0:
        return Fraction(0)
    rho1 = delta1 / d
    rho2 = delta2 / abs(e)
    if force == "oracle" or 2 * (rho1 + rho2) > 1:
        # arcs may overlap in two components; use the interval oracle
        u1 = masked_arcs(d, rho1, y, mask_d)
        u2 = masked_arcs(e, rho2, y, mask_e)
        return u1.intersect(u2).measure
    args = (
        d,
        e,
        rho1.numerator,
        rho1.denominator,
        rho2.numerator,
        rho2.denominator,
        y.numerator,
        y.denominator,
        mask_d,
        mask_e,
    )
    if force == "python":
        return _kernel_py.arc_pair_overlap_sum(*args)
    if force == "cython":
        if not HAVE_COMPILED_KERNEL:
            raise RuntimeError("compiled kernel unavailable")
        return Fraction(*_kernel_c.arc_pair_overlap_sum(*args))
    if HAVE_COMPILED_KERNEL and _fits_compiled(d, e, rho1, rho2, y):
        num, den = _kernel_c.arc_pair_overlap_sum(*args)
        return Fraction(num, den) if num else Fraction(0)
    return _kernel_py.arc_pair_overlap_sum(*args)


def _fits_compiled(d, e, rho1, rho2, y) -> bool:
    w = y.denominator * d * abs(e)
    s = rho1.denominator * rho2.denominator
    r = rho1.numerator * rho2.denominator + rho2.numerator * rho1.denominator
    return w < _C_W_LIMIT and s < _C_S_LIMIT and r < _C_S_LIMIT
