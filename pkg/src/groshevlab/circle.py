"""Exact algebra of finite unions of half-open intervals on the circle [0,1).

The canonical form (sorted, pairwise disjoint, maximally merged, half-open
pieces) makes set equality equal to list equality, so oracle comparisons in
the test suite are exact.  Measures are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

Piece = tuple[Fraction, Fraction]


class CircleIntervalUnion:
    """Normalized disjoint union of half-open intervals [lo, hi) in [0,1)."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[tuple[Fraction | int, Fraction | int]] = ()):
        self.pieces: tuple[Piece, ...] = _normalize(pieces)

    @classmethod
    def empty(cls) -> "CircleIntervalUnion":
        return cls(())

    @classmethod
    def full(cls) -> "CircleIntervalUnion":
        return cls(((ZERO, ONE),))

    @classmethod
    def from_arcs(
        cls, arcs: Iterable[tuple[Fraction, Fraction]]
    ) -> "CircleIntervalUnion":
        """Union of open arcs (center - radius, center + radius) mod 1.

        Radius 0 arcs vanish (open intervals); radius >= 1/2 is rejected
        because every construction in the package assumes delta < 1/2.
        """
        pieces: list[Piece] = []
        for center, radius in arcs:
            if radius < 0:
                raise ValueError("arc radius must be nonnegative")
            if radius >= HALF:
                raise ValueError(f"arc radius must be < 1/2, got {radius}")
            if radius == 0:
                continue
            lo = (center - radius) % 1
            hi = lo + 2 * radius
            if hi <= 1:
                pieces.append((lo, hi))
            else:
                pieces.append((lo, ONE))
                pieces.append((ZERO, hi - 1))
        return cls(pieces)

    @property
    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.pieces), ZERO)

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircleIntervalUnion):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        body = ", ".join(f"[{lo}, {hi})" for lo, hi in self.pieces)
        return f"CircleIntervalUnion({{{body}}})"

    def union(self, other: "CircleIntervalUnion") -> "CircleIntervalUnion":
        return CircleIntervalUnion(self.pieces + other.pieces)

    def intersect(self, other: "CircleIntervalUnion") -> "CircleIntervalUnion":
        """Exact set intersection by a two-pointer sweep over sorted pieces."""
        out: list[Piece] = []
        i = j = 0
        a, b = self.pieces, other.pieces
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return CircleIntervalUnion(out)

    def complement(self) -> "CircleIntervalUnion":
        out: list[Piece] = []
        prev = ZERO
        for lo, hi in self.pieces:
            if prev < lo:
                out.append((prev, lo))
            prev = hi
        if prev < ONE:
            out.append((prev, ONE))
        return CircleIntervalUnion(out)

    def contains(self, x: Fraction) -> bool:
        x = x % 1
        return any(lo <= x < hi for lo, hi in self.pieces)

    def rotate(self, shift: Fraction) -> "CircleIntervalUnion":
        """Rotation by a rational shift mod 1; preserves measure."""
        pieces: list[Piece] = []
        for lo, hi in self.pieces:
            nlo = (lo + shift) % 1
            nhi = nlo + (hi - lo)
            if nhi <= 1:
                pieces.append((nlo, nhi))
            else:
                pieces.append((nlo, ONE))
                pieces.append((ZERO, nhi - 1))
        return CircleIntervalUnion(pieces)

    def endpoint_strings(self) -> list[str]:
        """Flat ["lo", "hi", ...] endpoint list as "num/den" strings."""
        out: list[str] = []
        for lo, hi in self.pieces:
            out.append(f"{lo.numerator}/{lo.denominator}")
            out.append(f"{hi.numerator}/{hi.denominator}")
        return out


def _normalize(
    pieces: Iterable[tuple[Fraction | int, Fraction | int]],
) -> tuple[Piece, ...]:
    cleaned: list[Piece] = []
    for lo, hi in pieces:
        lo, hi = Fraction(lo), Fraction(hi)
        if not (0 <= lo < hi <= 1):
            raise ValueError(f"piece [{lo}, {hi}) outside [0,1)")
        cleaned.append((lo, hi))
    cleaned.sort()
    merged: list[Piece] = []
    for lo, hi in cleaned:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    # Wrap-around adjacency: [0, a) and [b, 1) merge only as circle arcs;
    # the canonical form keeps them split, which preserves list equality.
    return tuple(merged)


def union_measure(unions: Sequence[CircleIntervalUnion]) -> Fraction:
    acc = CircleIntervalUnion.empty()
    for u in unions:
        acc = acc.union(u)
    return acc.measure
