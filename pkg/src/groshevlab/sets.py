"""Approximation sets on the torus and their one-dimensional geometry.

Variants of the set attached to a vector q and radius delta < 1/2:

    plain       some p in Z^m with |qx - p - y| < delta
    coprime     additionally gcd(q, p) = 1
    tilde       additionally gcd(q, b_d p + a_d) = 1 with the Dirichlet
                pair (a_d, b_d) of d = gcd(q)
    fixed-pair  additionally gcd(q, b p + a) = 1 with a fixed reduced
                rational target y = a/b

Exact interval geometry exists only for m = 1: the set with modulus d is a
union of arcs of radius delta/|d| centered at (p + y)/d over the admissible
residues p mod |d|.  Higher m uses closed formulas or Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import gcd_vec
from .circle import CircleIntervalUnion
from .dirichlet import PairTable, TargetScheme

HALF = Fraction(1, 2)

VARIANTS = ("plain", "coprime", "tilde", "fixed-pair")

# float membership within this distance of the decision boundary is
# re-evaluated exactly (rational x) or flagged (float x)
BOUNDARY_GUARD = 1e-12


class ApproxFunction:
    """Approximating function psi with values in [0, 1/2).

    kinds: "power" c*q^(-s); "capped" min(psi(q), 1/q); "table" explicit
    values; "sparse" a support set with one value.  Values are exact
    Fractions whenever the parameters allow (rational c, integer exponent),
    otherwise floats (Monte Carlo paths only).
    """

    def __init__(
        self,
        kind: str,
        *,
        c: Fraction = Fraction(1),
        exponent: Fraction | float = 1,
        table: dict[int, Fraction] | None = None,
        support: frozenset[int] | None = None,
        value: Fraction = Fraction(0),
        base: "ApproxFunction | None" = None,
        q_max: int = 10**6,
    ):
        self.kind = kind
        self.c = Fraction(c)
        self.exponent = exponent
        self.table = table
        self.support = support
        self.sparse_value = value
        self.base = base
        self.q_max = q_max

    @classmethod
    def power(cls, c, exponent, q_max: int = 10**6) -> "ApproxFunction":
        return cls("power", c=Fraction(c), exponent=exponent, q_max=q_max)

    @classmethod
    def capped(cls, base: "ApproxFunction") -> "ApproxFunction":
        """min(psi(q), 1/q), the reduction used by the divergence arguments."""
        return cls("capped", base=base, q_max=base.q_max)

    @classmethod
    def from_table(cls, table: dict[int, Fraction]) -> "ApproxFunction":
        return cls("table", table={q: Fraction(v) for q, v in table.items()},
                   q_max=max(table) if table else 0)

    @classmethod
    def sparse(cls, support, value, q_max: int = 10**6) -> "ApproxFunction":
        return cls("sparse", support=frozenset(support), value=Fraction(value),
                   q_max=q_max)

    @classmethod
    def zero(cls) -> "ApproxFunction":
        return cls.power(0, 1)

    @property
    def exact(self) -> bool:
        if self.kind == "power":
            return isinstance(self.exponent, int) or (
                isinstance(self.exponent, Fraction) and self.exponent.denominator == 1
            )
        if self.kind == "capped":
            return self.base.exact
        return True

    @property
    def is_capped(self) -> bool:
        return self.kind == "capped"

    def __call__(self, q: int) -> Fraction | float:
        if q < 1:
            raise ValueError("psi is defined on positive integers")
        if self.kind == "power":
            if self.c == 0:
                return Fraction(0)
            if self.exact:
                v = self.c * Fraction(1, q ** int(self.exponent))
            else:
                v = float(self.c) * q ** -float(self.exponent)
        elif self.kind == "capped":
            b = self.base(q)
            cap = Fraction(1, q)
            v = min(b, cap) if isinstance(b, Fraction) else min(b, 1.0 / q)
        elif self.kind == "table":
            v = self.table.get(q, Fraction(0))
        elif self.kind == "sparse":
            v = self.sparse_value if q in self.support else Fraction(0)
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        # values >= 1/2 are legal for sums and Monte Carlo; the exact set
        # constructors enforce their own delta < 1/2 precondition
        return v

    def describe(self) -> str:
        if self.kind == "power":
            return f"{self.c}*q^(-{self.exponent})"
        if self.kind == "capped":
            return f"min({self.base.describe()}, 1/q)"
        if self.kind == "sparse":
            return f"sparse(value={self.sparse_value})"
        return self.kind


@dataclass(frozen=True)
class SetSpec:
    """Names one approximation set."""

    n: int
    m: int
    variant: str
    q: tuple[int, ...]
    delta: Fraction
    target: TargetScheme

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if not any(self.q):
            raise ValueError("q must be a nonzero vector")
        if len(self.q) != self.n:
            raise ValueError("q must have length n")
        if not (0 <= self.delta < HALF):
            raise ValueError("delta must lie in [0, 1/2)")
        if self.variant == "fixed-pair" and self.target.kind != "fixed-pair":
            raise ValueError("fixed-pair variant requires a fixed-pair target")


@dataclass(frozen=True)
class MembershipWitness:
    p: tuple[int, ...]
    error: Fraction | float
    boundary: bool = False


def residue_filter(variant: str, d: int, target: TargetScheme,
                   pair_table: PairTable | None = None) -> list[int]:
    """Admissible residues p in {0, ..., |d|-1} for the variant at modulus d."""
    d = abs(d)
    if variant == "plain":
        return list(range(d))
    if variant == "coprime":
        return [p for p in range(d) if math.gcd(d, p) == 1]
    if variant == "fixed-pair":
        a, b = target.a[0], target.b
    else:  # tilde
        table = pair_table if pair_table is not None else PairTable(target.y1)
        pr = table.pair(d)
        a, b = pr.a, pr.b
    return [p for p in range(d) if math.gcd(d, b * p + a) == 1]


def build_interval_set(
    variant: str,
    d: int,
    delta: Fraction,
    target: TargetScheme,
    pair_table: PairTable | None = None,
) -> CircleIntervalUnion:
    """Exact m = 1 set at modulus d: arcs at (p + y)/d of radius delta/|d|."""
    if d == 0:
        raise ValueError("modulus d must be nonzero")
    if not (0 <= delta < HALF):
        raise ValueError("delta must lie in [0, 1/2)")
    if target.kind == "moving":
        y = target.table[abs(d)][0]
    else:
        y = target.y1
    radius = delta / abs(d)
    arcs = [
        (Fraction(p + y, d) % 1, radius)
        for p in residue_filter(variant, d, target, pair_table)
    ]
    return CircleIntervalUnion.from_arcs(arcs)


def reduce_to_primitive(q: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """q = d*k with d = gcd(q) > 0 and k primitive inheriting q's direction."""
    d = gcd_vec(q)
    return tuple(c // d for c in q), d


def torus_map_image(k: Sequence[int], x: Sequence[Sequence[Fraction]]) -> tuple:
    """T_k(x) = kx mod 1 componentwise, for primitive k (n x m matrix x)."""
    if gcd_vec(k) != 1:
        raise ValueError("k must be primitive (gcd 1)")
    m = len(x[0])
    return tuple(
        sum(k[i] * x[i][j] for i in range(len(k))) % 1 for j in range(m)
    )


def _variant_gcd_ok(variant: str, q: Sequence[int], p: Sequence[int],
                    target: TargetScheme,
                    pair_table: PairTable | None = None) -> bool:
    if variant == "plain":
        return True
    d = gcd_vec(q)
    if variant == "coprime":
        return math.gcd(d, *[abs(c) for c in p]) == 1
    if variant == "fixed-pair":
        a, b = target.a, target.b
    else:
        table = pair_table if pair_table is not None else PairTable(target.y1)
        pr = table.pair(d)
        a, b = (pr.a,) * len(p), pr.b
    return math.gcd(d, *[abs(b * pj + aj) for pj, aj in zip(p, a)]) == 1


def membership(
    x: Sequence[Sequence[Fraction | float]],
    spec: SetSpec,
    pair_table: PairTable | None = None,
) -> tuple[bool, MembershipWitness | None]:
    """Nearest-integer membership test; x is an n x m matrix.

    With delta < 1/2 the candidate witness p = round(qx - y) is unique.
    Float inputs within BOUNDARY_GUARD of the decision boundary are
    re-evaluated exactly when the entries are Fractions, otherwise the
    witness is flagged as a boundary case.
    """
    if spec.delta == 0:
        return False, None
    target = spec.target
    ys = target.y if target.kind != "moving" else target.table[gcd_vec(spec.q)]
    z = [
        sum(spec.q[i] * x[i][j] for i in range(spec.n)) - ys[j]
        for j in range(spec.m)
    ]
    exact_input = all(isinstance(v, (Fraction, int)) for row in x for v in row)
    p = tuple(_round_half_even(v) for v in z)
    errs = [z[j] - p[j] for j in range(spec.m)]
    err = max(abs(e) for e in errs)
    boundary = False
    if not exact_input:
        if abs(float(err) - float(spec.delta)) < BOUNDARY_GUARD:
            boundary = True
    inside = err < spec.delta
    if not inside:
        return False, (MembershipWitness(p, err, boundary) if boundary else None)
    if not _variant_gcd_ok(spec.variant, spec.q, p, target, pair_table):
        return False, None
    return True, MembershipWitness(p, err, boundary)


def _round_half_even(v) -> int:
    if isinstance(v, Fraction):
        f = math.floor(v)
        r = v - f
        if r > HALF:
            return f + 1
        if r < HALF:
            return f
        return f if f % 2 == 0 else f + 1
    return round(v)
