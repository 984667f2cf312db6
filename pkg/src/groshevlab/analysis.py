"""Closed-form measures, comparability sums, pairwise intersections, and
quasi-independence-on-average (QIA) ratios.

All returned values are exact rationals.  Where an inequality carries an
unspecified implied constant, the audit functions return both sides and the
verification suite calibrates the constant once on a frozen grid, pinning
it for regression.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import divisors, factorize, gcd_vec, sup_norm, totient
from .circle import CircleIntervalUnion
from .dirichlet import PairTable, TargetScheme
from .kernel import masked_arcs, pair_intersection
from .sets import ApproxFunction, build_interval_set, reduce_to_primitive, residue_filter

HALF = Fraction(1, 2)


class MaskCache:
    """Admissible-residue bitmasks per modulus for one (variant, target)."""

    def __init__(self, variant: str, target: TargetScheme):
        self.variant = variant
        self.target = target
        self.pair_table = (
            PairTable(target.y1) if target.kind == "fixed-rational" else None
        )
        self._masks: dict[int, bytes] = {}

    def mask(self, d: int) -> bytes:
        d = abs(d)
        m = self._masks.get(d)
        if m is None:
            allowed = residue_filter(self.variant, d, self.target, self.pair_table)
            buf = bytearray(d)
            for p in allowed:
                buf[p] = 1
            m = bytes(buf)
            self._masks[d] = m
        return m

    def count(self, d: int) -> int:
        return sum(self.mask(d))

    @property
    def y(self) -> Fraction:
        if self.target.kind == "moving":
            raise ValueError("moving targets not supported on this path")
        return self.target.y1


def closed_form_measure(
    n: int,
    m: int,
    q: Sequence[int] | int,
    delta: Fraction,
    pair=None,
    variant: str = "tilde",
) -> Fraction:
    """(2 delta)^m times the Euler product over primes p | gcd(q), p not | b.

    The measure depends on q only through d = gcd(q); b comes from the
    variant: 1 for coprime, the attached pair's denominator for tilde and
    fixed-pair, and no product at all for plain.
    """
    if not (0 <= delta < HALF):
        raise ValueError("delta must lie in [0, 1/2)")
    d = gcd_vec(q) if isinstance(q, (tuple, list)) else abs(q)
    base = (2 * delta) ** m
    if variant == "plain" or base == 0:
        return base
    if variant == "coprime":
        b = 1
    elif pair is None:
        raise ValueError("tilde/fixed-pair measure needs the pair (a, b)")
    else:
        b = pair.b if hasattr(pair, "b") else pair[1]
    for p, _ in factorize(d):
        if b % p:
            base *= 1 - Fraction(1, p**m)
    return base


def partial_sum_psi(psi: ApproxFunction, n: int, m: int, Q: int) -> Fraction:
    """Exact partial sum of q^(n-1) psi(q)^m up to Q."""
    if Q > psi.q_max:
        raise ValueError(f"Q={Q} exceeds the function's domain bound {psi.q_max}")
    total = Fraction(0)
    for q in range(1, Q + 1):
        v = psi(q)
        if not isinstance(v, Fraction):
            raise TypeError("partial_sum_psi requires an exact psi")
        total += q ** (n - 1) * v**m
    return total


def measure_for_modulus(
    d: int, delta: Fraction, cache: MaskCache
) -> Fraction:
    """|set at modulus d| = (#admissible residues) * 2*delta/|d|."""
    if delta == 0:
        return Fraction(0)
    return cache.count(d) * 2 * delta / abs(d)


def sum_set_measures(
    psi: ApproxFunction,
    target: TargetScheme,
    variant: str,
    Q: int,
    n: int = 2,
    m: int = 1,
    cache: MaskCache | None = None,
) -> tuple[Fraction, list[tuple[int, Fraction]]]:
    """Exact sum of |set_q| over 1 <= |q| <= Q, with per-norm breakdown.

    Vectors of norm s split by gcd d | s with multiplicity 8 phi(s/d); the
    measure of each only depends on d.
    """
    if (n, m) != (2, 1):
        raise ValueError("exact sum is implemented for (n, m) = (2, 1)")
    if cache is None:
        cache = MaskCache(variant, target)
    per_s: list[tuple[int, Fraction]] = []
    total = Fraction(0)
    for s in range(1, Q + 1):
        delta = psi(s)
        if not isinstance(delta, Fraction):
            raise TypeError("exact sums require an exact psi")
        row = Fraction(0)
        if delta:
            for d in divisors(s):
                row += 8 * totient(s // d) * measure_for_modulus(d, delta, cache)
        per_s.append((s, row))
        total += row
    return total, per_s


def intersection_1d(
    variant: str,
    target: TargetScheme,
    d: int,
    delta1: Fraction,
    e: int,
    delta2: Fraction,
    cache: MaskCache | None = None,
    force: str | None = None,
) -> Fraction:
    """Exact |set(d, delta1) cap set(e, delta2)| on the circle."""
    if cache is None:
        cache = MaskCache(variant, target)
    if d < 0:
        # reflection x -> -x maps the pair (d, e) to (-d, -e), preserving measure
        d, e = -d, -e
    return pair_intersection(
        d, e, delta1, delta2, cache.y, cache.mask(d), cache.mask(e), force=force
    )


def pairwise_intersection_measure(
    q: Sequence[int],
    r: Sequence[int],
    psi: ApproxFunction,
    variant: str,
    target: TargetScheme,
    cache: MaskCache | None = None,
) -> tuple[Fraction, str]:
    """|set_q cap set_r| for (n, m) = (2, 1).

    Parallel pairs reduce exactly to one dimension through the common
    primitive direction.  Non-parallel pairs return the product of the
    plain measures: exact for the plain variant, an upper bound otherwise.
    """
    delta1, delta2 = psi(sup_norm(q)), psi(sup_norm(r))
    if q[0] * r[1] == q[1] * r[0]:  # parallel
        k, d = reduce_to_primitive(q)
        i = 0 if k[0] else 1
        e, rem = divmod(r[i], k[i])
        if rem or tuple(c * e for c in k) != tuple(r):
            raise AssertionError("parallel reduction failed")
        val = intersection_1d(variant, target, d, delta1, e, delta2, cache)
        return val, "exact"
    val = (2 * delta1) * (2 * delta2)
    return val, ("exact" if variant == "plain" else "upper-bound")


@dataclass(frozen=True)
class DisjointnessResult:
    measure: Fraction
    hypotheses_ok: bool
    violated: tuple[str, ...]


def disjointness_check(
    d: int,
    e: int,
    q: int,
    r: int,
    psi: ApproxFunction,
    y: Fraction,
) -> DisjointnessResult:
    """Measure of tilde(d, psi(q)) cap plain(e, psi(r)).

    Under 1 <= r < q, 1 <= |e| < |d|, gcd(d, e) >= 3, r >= 2 d^2 and the
    cap psi(t) <= 1/t, the two unions cannot meet and the measure is 0.
    Violated hypotheses are reported, not rejected.
    """
    violated = []
    if not (1 <= r < q):
        violated.append("order:1<=r<q")
    if not (1 <= abs(e) < abs(d)):
        violated.append("order:1<=|e|<|d|")
    if math.gcd(abs(d), abs(e)) < 3:
        violated.append("gcd(d,e)>=3")
    if r < 2 * d * d:
        violated.append("r>=2d^2")
    if psi(q) > Fraction(1, q) or psi(r) > Fraction(1, r):
        violated.append("psi(t)<=1/t")
    target = TargetScheme.fixed_rational(y)
    tilde = build_interval_set("tilde", d, psi(q), target)
    plain = build_interval_set("plain", e, psi(r), target)
    return DisjointnessResult(
        measure=tilde.intersect(plain).measure,
        hypotheses_ok=not violated,
        violated=tuple(violated),
    )


def basic_bound_audit(
    d: int,
    e: int,
    delta1: Fraction,
    delta2: Fraction,
    target: TargetScheme,
) -> tuple[Fraction, Fraction]:
    """lhs = |tilde(d, delta1) cap tilde(e, delta2)|, rhs = d1*d2 + d1*gcd/|d|."""
    variant = "fixed-pair" if target.kind == "fixed-pair" else "tilde"
    lhs = intersection_1d(variant, target, d, delta1, e, delta2)
    rhs = delta1 * delta2 + delta1 * Fraction(math.gcd(abs(d), abs(e)), abs(d))
    return lhs, rhs


@dataclass(frozen=True)
class QiaReport:
    Q: int
    variant: str
    S1: Fraction
    S2_parallel: Fraction
    S2_nonparallel: Fraction
    ratio: Fraction
    step2_lhs: Fraction
    step2_rhs: Fraction
    step3_lhs: Fraction
    step3_rhs: Fraction
    degenerate: bool = False

    @property
    def S2(self) -> Fraction:
        return self.S2_parallel + self.S2_nonparallel


def _parallel_block(
    s: int,
    Q: int,
    psi: ApproxFunction,
    cache: MaskCache,
) -> Fraction:
    """Sum of 1-dim intersections over ordered pairs (d, e) at primitive norm s.

    Ordered pairs with d in 1..Q//s (the primitive direction absorbs the
    sign of the first vector) and e in +-1..+-Q//s; folded to |e| <= d
    using commutativity and the reflection symmetry, weight 2 off the
    |e| = d diagonal.
    """
    D = Q // s
    y = cache.y
    deltas = [None] + [psi(t * s) for t in range(1, D + 1)]
    block = Fraction(0)
    for d in range(1, D + 1):
        delta_d = deltas[d]
        mask_d = cache.mask(d)
        # diagonal e = d: the set intersected with itself
        block += cache.count(d) * 2 * delta_d / d
        # antipodal e = -d
        block += pair_intersection(d, -d, delta_d, delta_d, y, mask_d, mask_d)
        for e in range(1, d):
            delta_e = deltas[e]
            mask_e = cache.mask(e)
            v_pos = pair_intersection(d, e, delta_d, delta_e, y, mask_d, mask_e)
            v_neg = pair_intersection(d, -e, delta_d, delta_e, y, mask_d, mask_e)
            block += 2 * (v_pos + v_neg)
    return block


def qia_ratio(
    psi: ApproxFunction,
    target: TargetScheme,
    variant: str,
    Q: int,
    n: int = 2,
    m: int = 1,
    threads: int = 1,
    q_max: int | None = None,
) -> QiaReport:
    """Certified lower bound for the Chung-Erdos quotient at cutoff Q.

    S1 sums the variant measures; S2 splits into the exact parallel block
    (one-dimensional reduction per primitive direction) and the non-parallel
    block bounded by products of plain measures, so S1^2/S2 is a rigorous
    lower bound of the true quotient.
    """
    if (n, m) != (2, 1):
        raise ValueError("qia_ratio is implemented for (n, m) = (2, 1)")
    limit = q_max if q_max is not None else psi.q_max
    if Q > limit:
        raise ValueError(f"Q={Q} exceeds Q_max={limit}")
    if variant == "tilde" and not psi.is_capped:
        raise ValueError("tilde QIA path requires capped psi (psi(q) <= 1/q)")
    cache = MaskCache(variant, target)
    S1, _ = sum_set_measures(psi, target, variant, Q, cache=cache)
    if S1 == 0:
        zero = Fraction(0)
        return QiaReport(Q, variant, zero, zero, zero, zero, zero, zero, zero, zero,
                         degenerate=True)

    norms = range(1, Q + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(
                lambda s: 8 * totient(s) * _parallel_block(s, Q, psi, cache), norms
            ))
        S2_par = sum(blocks, Fraction(0))
    else:
        S2_par = sum(
            (8 * totient(s) * _parallel_block(s, Q, psi, cache) for s in norms),
            Fraction(0),
        )

    # non-parallel block: (sum of plain measures)^2 minus the plain parallel part
    plain_sum = Fraction(0)
    par_plain = Fraction(0)
    for s in norms:
        v = psi(s)
        plain_sum += 8 * s * 2 * v
        T = sum((2 * psi(t * s) for t in range(1, Q // s + 1)), Fraction(0))
        par_plain += 8 * totient(s) * 2 * T**2
    S2_nonpar = plain_sum**2 - par_plain

    s2l, s2r, s3l, s3r = step_bounds_audit(Q, psi)
    ratio = S1**2 / (S2_par + S2_nonpar)
    return QiaReport(Q, variant, S1, S2_par, S2_nonpar, ratio, s2l, s2r, s3l, s3r)


def step_bounds_audit(
    q: int, psi: ApproxFunction
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Exact finite values of the two divisor-sum bounds at norm q.

    step2: sum over d | q of sum over signed e, 1 <= |e| < d, |e| < 2d^3/q
    of psi(q) gcd(d, e)/d.  step3: sum over d | q of phi(q/d) psi(q)/d times
    the inner sum of gcd(d, e) restricted to gcd(d, e) <= 2.  Both
    right-hand sides are q*psi(q).
    """
    psi_q = psi(q)
    if not isinstance(psi_q, Fraction):
        raise TypeError("step_bounds_audit requires an exact psi")
    step2 = Fraction(0)
    step3 = Fraction(0)
    for d in divisors(q):
        inner2 = Fraction(0)
        inner3 = 0
        for e in range(1, d):
            g = math.gcd(d, e)
            if 2 * d**3 > q * e:  # |e| < 2d^3/q
                inner2 += 2 * Fraction(g, d)
            if g <= 2:
                inner3 += 2 * g
        step2 += psi_q * inner2
        step3 += totient(q // d) * psi_q * Fraction(inner3, d)
    rhs = q * psi_q
    return step2, rhs, step3, rhs


def gallagher_overlap_sum(a: Fraction, b: Fraction, m: int) -> Fraction:
    """Exact sum over nonzero integer shifts j of |U(a) cap (U(b) + j)|.

    U(t) = (-t, t)^m; by the product structure the total equals
    (sum over all j of the per-axis overlap)^m minus the j = 0 term^m.
    """
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise ValueError("box radii must be nonnegative")
    o0 = 2 * min(a, b)
    axis_total = o0
    j = 1
    while j < a + b:
        ov = min(a, j + b) - max(-a, j - b)
        if ov > 0:
            axis_total += 2 * ov
        j += 1
    return axis_total**m - o0**m


def rational_pair_audit(
    q: int,
    r: int,
    delta1: Fraction,
    delta2: Fraction,
    target: TargetScheme,
) -> tuple[Fraction, Fraction]:
    """lhs = |fixed-pair set(q, delta1) cap set(r, delta2)|, rhs = b d1 d2."""
    if target.kind != "fixed-pair":
        raise ValueError("rational_pair_audit requires a fixed-pair target")
    lhs = intersection_1d("fixed-pair", target, q, delta1, r, delta2)
    rhs = target.b * delta1 * delta2
    return lhs, rhs


def local_density_check(
    d: int,
    delta: Fraction,
    window: CircleIntervalUnion,
    target: TargetScheme,
    variant: str = "tilde",
    c_m: Fraction = Fraction(1, 4),
) -> tuple[Fraction, Fraction, bool]:
    """lhs = |set cap W| and rhs = c_m |set| |W|, plus the threshold flag.

    The density bound only promises lhs >= rhs once |d| exceeds the inverse
    window radius; the radius of a multi-piece window is taken from its
    largest piece.
    """
    u = build_interval_set(variant, d, delta, target)
    lhs = u.intersect(window).measure
    rhs = c_m * u.measure * window.measure
    if window.pieces:
        largest = max(hi - lo for lo, hi in window.pieces)
        threshold_ok = abs(d) * largest > 2  # |d| > 1/(largest/2)
    else:
        threshold_ok = True
    return lhs, rhs, threshold_ok
