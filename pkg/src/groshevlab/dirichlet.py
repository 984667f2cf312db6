"""Dirichlet approximation pairs for an inhomogeneous target.

For a target y and each modulus d != 0 we pick integers (a, b) with

    |b*y - a| < 1/|d|,   1 <= b <= |d|,   gcd(a, b) = 1.

Dirichlet's theorem guarantees existence; the constructed pair is canonical:
smallest admissible b, then the nearest a with smallest |a| on ties, then
reduced by gcd.  Pairs depend on |d| only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


@dataclass(frozen=True)
class DirichletPair:
    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("b must be a positive integer")
        if math.gcd(abs(self.a), self.b) != 1:
            raise ValueError(f"pair ({self.a}, {self.b}) is not reduced")

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.b)

    def error(self, y: Fraction) -> Fraction:
        return abs(self.b * y - self.a)


@dataclass(frozen=True)
class TargetScheme:
    """Target for the approximation inequality.

    kind "fixed-rational": a fixed y in [0,1)^m (here m = 1 rational y);
    kind "fixed-pair": y = a/b with gcd(a..., b) = 1, and the pair (a, b)
    itself is used for every modulus;
    kind "moving": an explicit table d -> y_d (carried in the data model,
    not exercised by the exact pipelines).
    """

    kind: str
    y: tuple[Fraction, ...] = ()
    a: tuple[int, ...] = ()
    b: int = 1
    table: Mapping[int, tuple[Fraction, ...]] | None = None
    m: int = 1

    @classmethod
    def fixed_rational(cls, y: Fraction | int | str) -> "TargetScheme":
        y = Fraction(y) % 1
        return cls(kind="fixed-rational", y=(y,), m=1)

    @classmethod
    def fixed_pair(cls, a: Sequence[int] | int, b: int) -> "TargetScheme":
        a = (a,) if isinstance(a, int) else tuple(a)
        if b < 1:
            raise ValueError("b must be a positive integer")
        if math.gcd(*[abs(c) for c in a], b) != 1:
            raise ValueError(f"fixed pair requires gcd(a..., b) = 1, got {a}, {b}")
        y = tuple(Fraction(c, b) % 1 for c in a)
        return cls(kind="fixed-pair", y=y, a=a, b=b, m=len(a))

    @classmethod
    def moving(cls, table: Mapping[int, Fraction], m: int = 1) -> "TargetScheme":
        tbl = {d: (Fraction(v) % 1,) for d, v in table.items()}
        return cls(kind="moving", table=tbl, m=m)

    @property
    def y1(self) -> Fraction:
        """The scalar target (m = 1 paths)."""
        if self.kind == "moving":
            raise ValueError("moving targets have no single y")
        return self.y[0]


class PairTable:
    """Memoized pair construction for one rational target y = alpha/beta.

    The first success index over b is always a record-low approximation
    error, so only the (few) record b's need to be kept: for a modulus d
    the canonical pair is the first record with error < 1/d.
    """

    def __init__(self, y: Fraction):
        y = Fraction(y) % 1
        self.y = y
        # (b, error_numerator, a) with strictly decreasing error; error of
        # candidate b is min_a |b*alpha - a*beta| / beta.
        self._records: list[tuple[int, int, int]] = []
        self._scanned_to = 0

    def _extend(self, b_max: int) -> None:
        alpha, beta = self.y.numerator, self.y.denominator
        best = self._records[-1][1] if self._records else None
        for b in range(self._scanned_to + 1, b_max + 1):
            t = (b * alpha) % beta
            # nearest integer a to b*y; on an exact half tie the smaller
            # |a| is the floor choice since y >= 0
            if 2 * t <= beta:
                a = (b * alpha - t) // beta
                err = t
            else:
                a = (b * alpha - t) // beta + 1
                err = beta - t
            if best is None or err < best:
                self._records.append((b, err, a))
                best = err
                if err == 0:
                    self._scanned_to = b_max
                    return
        self._scanned_to = max(self._scanned_to, b_max)

    def pair(self, d: int) -> DirichletPair:
        if d == 0:
            raise ValueError("modulus d must be nonzero")
        d = abs(d)
        beta = self.y.denominator
        self._extend(min(d, beta))
        for b, err, a in self._records:
            if b > d:
                break
            # |b*y - a| = err/beta < 1/d  <=>  err*d < beta
            if err * d < beta:
                g = math.gcd(abs(a), b)
                return DirichletPair(a // g, b // g, d)
        raise AssertionError("Dirichlet's theorem violated; unreachable")


def dirichlet_pair(y: Fraction, d: int) -> DirichletPair:
    """Canonical Dirichlet pair for target y and modulus d (see PairTable)."""
    return PairTable(y).pair(d)


def pair_for_vector(y: Fraction, q: Sequence[int]) -> DirichletPair:
    """Pair attached to a vector: the pair of its gcd."""
    from .arith import gcd_vec

    return dirichlet_pair(y, gcd_vec(q))


def rational_surrogate(x: float, min_den: int) -> Fraction:
    """Continued-fraction convergent of x with denominator > min_den.

    Irrational targets enter the exact pipeline only through such a
    surrogate whose denominator exceeds every modulus in the experiment.
    """
    frac = Fraction(x).limit_denominator(max(min_den * 1000, 10**6))
    # walk convergents of frac until the denominator clears min_den
    h0, h1 = 1, 0
    k0, k1 = 0, 1
    rest = frac
    while True:
        a = int(rest)
        h0, h1 = a * h0 + h1, h0
        k0, k1 = a * k0 + k1, k0
        if k0 > min_den:
            return Fraction(h0, k0) % 1
        if rest == a:
            return Fraction(h0, k0) % 1
        rest = 1 / (rest - a)
