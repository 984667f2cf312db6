"""Seeded Monte Carlo experiments for the zero/one measure dichotomy.

Tail unions of the approximation sets over norm windows [Q0, Q1] are
estimated by counting seeded uniform sample points; the exact first
Borel-Cantelli tail sum bounds the union from above, the Chung-Erdos
quotient from an exact QIA report bounds the limsup measure from below.
The multiply-by-l invariance of the zero-one law is checked as an exact
rational identity on random samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .analysis import QiaReport
from .arith import enumerate_vectors, sup_norm
from .circle import CircleIntervalUnion
from .dirichlet import TargetScheme
from .sets import ApproxFunction, build_interval_set


@dataclass(frozen=True)
class TailEstimate:
    Q0: int
    Q1: int
    samples: int
    hits: int
    estimate: float
    stderr: float
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.estimate <= 1.0:
            raise ValueError("estimate out of [0, 1]")


def _philox(seed: int) -> np.random.Generator:
    """Counter-based generator: the stream is a pure function of the key."""
    return np.random.Generator(np.random.Philox(key=seed))


def _make_estimate(Q0, Q1, samples, hits, seed) -> TailEstimate:
    p = hits / samples
    return TailEstimate(
        Q0=Q0, Q1=Q1, samples=samples, hits=hits, estimate=p,
        stderr=math.sqrt(p * (1.0 - p) / samples), seed=seed,
    )


def tail_union_estimate(
    psi: ApproxFunction,
    target: TargetScheme,
    Q0: int,
    Q1: int,
    samples: int,
    seed: int,
    n: int = 2,
    m: int = 1,
    variant: str = "plain",
    chunk: int = 2048,
) -> TailEstimate:
    """Fraction of seeded uniform x in [0,1)^n lying in the window union.

    Membership scans norms Q0..Q1 grouped by shell with an alive mask, so
    each sample stops at its first hit.
    """
    if m != 1 or n not in (1, 2):
        raise ValueError("Monte Carlo path supports (n, m) in {(1,1), (2,1)}")
    if variant != "plain":
        raise ValueError("Monte Carlo membership is implemented for plain sets")
    if not (1 <= Q0 <= Q1):
        raise ValueError("need 1 <= Q0 <= Q1")
    if samples < 1000:
        raise ValueError("need at least 10^3 samples")
    X = _philox(seed).random((samples, n))
    y = float(target.y1)
    alive = np.ones(samples, dtype=bool)
    for s in range(Q0, Q1 + 1):
        r = float(psi(s))
        if r <= 0.0:
            continue
        idx = np.flatnonzero(alive)
        if idx.size == 0:
            break
        V = np.asarray(enumerate_vectors(s, n), dtype=np.float64)
        for start in range(0, idx.size, chunk):
            sl = idx[start : start + chunk]
            f = (X[sl] @ V.T - y) % 1.0
            hit = ((f < r) | (f > 1.0 - r)).any(axis=1)
            alive[sl[hit]] = False
    hits = int(samples - alive.sum())
    return _make_estimate(Q0, Q1, samples, hits, seed)


def exact_window_union_1d(
    psi: ApproxFunction,
    target: TargetScheme,
    Q0: int,
    Q1: int,
) -> CircleIntervalUnion:
    """Exact union of the plain (1,1) sets over Q0 <= |q| <= Q1."""
    u = CircleIntervalUnion.empty()
    for s in range(Q0, Q1 + 1):
        delta = psi(s)
        if not isinstance(delta, Fraction):
            raise TypeError("exact window union requires an exact psi")
        if delta == 0:
            continue
        for d in (s, -s):
            u = u.union(build_interval_set("plain", d, delta, target))
    return u


def tail_sum_bound(psi: ApproxFunction, Q0: int, Q1: int, n: int = 2) -> Fraction:
    """First Borel-Cantelli ceiling: min(1, sum over the window of #shell * 2 psi).

    Float psi values are binary rationals, so the sum is still exact for
    the values actually used by the Monte Carlo membership test.
    """
    total = Fraction(0)
    for s in range(Q0, Q1 + 1):
        count = 8 * s if n == 2 else 2
        total += count * 2 * Fraction(psi(s))
        if total >= 1:
            return Fraction(1)
    return total


@dataclass(frozen=True)
class DichotomyRow:
    tail: TailEstimate
    tail_bound: Fraction
    floor: float | None


@dataclass(frozen=True)
class DichotomyResult:
    rows: tuple[DichotomyRow, ...]
    diagnosis: str


def dichotomy_experiment(
    psi: ApproxFunction,
    target: TargetScheme,
    schedule: list[tuple[int, int]],
    samples: int,
    seed: int,
    n: int = 2,
    floor: float | None = None,
) -> DichotomyResult:
    """Window estimates along the schedule plus a convergence diagnosis.

    Each row carries the exact Borel-Cantelli tail sum for its window; the
    diagnosis reports which side of the dichotomy the data supports and
    never claims a limit.
    """
    if any(schedule[i] >= schedule[i + 1] for i in range(len(schedule) - 1)):
        raise ValueError("schedule must be strictly increasing")
    rows = []
    for Q0, Q1 in schedule:
        est = tail_union_estimate(psi, target, Q0, Q1, samples, seed, n=n)
        rows.append(DichotomyRow(est, tail_sum_bound(psi, Q0, Q1, n=n), floor))
    ests = [r.tail.estimate for r in rows]
    bounds = [float(r.tail_bound) for r in rows]
    if floor is not None and all(e >= floor for e in ests):
        diagnosis = "divergent-side: estimates stay above the calibrated floor"
    elif all(b < 1 for b in bounds) or ests == sorted(ests, reverse=True):
        diagnosis = "convergent-side: estimates bounded by shrinking tail sums"
    else:
        diagnosis = "inconclusive"
    return DichotomyResult(rows=tuple(rows), diagnosis=diagnosis)


def zero_one_invariance_sample(
    target: TargetScheme,
    psi: ApproxFunction,
    samples: int,
    seed: int,
    k: int = 1,
    n: int = 1,
    q_range: int = 50,
    denominator_bits: int = 40,
) -> int:
    """Count violations of the multiply-by-l stability of the limsup set.

    With y = a/b and l = b + 1, whenever |q . x - p - y| < k psi(|q|) for
    some integer p, the point x' with coordinates l x_i mod 1 satisfies
    |q . x' - p' - y| < k l psi(|q|) with p' = l p + a - sum q_i floor(l x_i);
    the identity q . x' - y = l (q . x - y) - l p ... holds exactly in
    rational arithmetic.  Returns the number of sampled premises for which
    no such p' exists; must be 0.
    """
    if target.kind != "fixed-rational":
        raise ValueError("invariance check needs a fixed rational target")
    y = target.y1
    l = y.denominator + 1
    rng = _philox(seed)
    den = 1 << denominator_bits
    nums = rng.integers(0, den, size=(samples, n))
    qs = rng.integers(-q_range, q_range + 1, size=(samples, n))
    violations = 0
    for i in range(samples):
        q = tuple(int(v) for v in qs[i])
        if not any(q):
            continue
        x = tuple(Fraction(int(v), den) for v in nums[i])
        s = sup_norm(q)
        bound = k * psi(s)
        if bound == 0:
            continue
        dot = sum(qi * xi for qi, xi in zip(q, x))
        err = dot - y
        p = round(err)  # nearest integer; ties are measure-zero for random x
        if abs(err - p) >= bound:
            continue  # premise fails: implication is vacuous
        xp = tuple((l * xi) % 1 for xi in x)
        dotp = sum(qi * xi for qi, xi in zip(q, xp))
        errp = dotp - y
        pp = round(errp)
        if abs(errp - pp) >= l * bound:
            violations += 1
    return violations


def chung_erdos_floor(qia: QiaReport) -> Fraction:
    """S1^2 / S2: a certified lower bound at the report's truncation."""
    if qia.degenerate or qia.S1 == 0:
        raise ValueError("degenerate report: S1 = 0")
    return qia.S1**2 / qia.S2
