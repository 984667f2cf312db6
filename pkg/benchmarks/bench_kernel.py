"""Benchmark the compiled arc-intersection kernel against the fallback.

Times the same randomized pair-intersection workload through the Cython
extension and the pure-Python module, then a full QIA report, and prints
the per-call costs and the speedup.  Usage:

    python3 benchmarks/bench_kernel.py [--pairs N] [--Q N]
"""

import argparse
import random
import time
from fractions import Fraction

from groshevlab.analysis import MaskCache, qia_ratio
from groshevlab.dirichlet import TargetScheme
from groshevlab.kernel import HAVE_COMPILED_KERNEL, pair_intersection
from groshevlab.sets import ApproxFunction


def make_workload(pairs: int, seed: int = 20260826):
    rng = random.Random(seed)
    target = TargetScheme.fixed_rational(Fraction(1, 3))
    cache = MaskCache("tilde", target)
    work = []
    for _ in range(pairs):
        d = rng.randint(1, 400)
        e = rng.choice((1, -1)) * rng.randint(1, d)
        delta1 = Fraction(1, 4 * d)
        delta2 = Fraction(1, 4 * abs(e))
        work.append((d, e, delta1, delta2, target.y1,
                     cache.mask(d), cache.mask(abs(e))))
    return work


def run(work, force: str) -> tuple[float, Fraction]:
    total = Fraction(0)
    t0 = time.perf_counter()
    for d, e, d1, d2, y, md, me in work:
        total += pair_intersection(d, e, d1, d2, y, md, me, force=force)
    return time.perf_counter() - t0, total


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=20000)
    ap.add_argument("--Q", type=int, default=150)
    args = ap.parse_args()

    if not HAVE_COMPILED_KERNEL:
        print("compiled kernel unavailable; nothing to compare")
        return 1

    work = make_workload(args.pairs)
    t_py, total_py = run(work, "python")
    t_c, total_c = run(work, "cython")
    assert total_py == total_c, "implementations disagree"
    print(f"pair_intersection x {args.pairs}:")
    print(f"  python  {t_py:8.3f}s  ({1e6 * t_py / args.pairs:7.1f} us/call)")
    print(f"  cython  {t_c:8.3f}s  ({1e6 * t_c / args.pairs:7.1f} us/call)")
    print(f"  speedup {t_py / t_c:.1f}x  (checksum {total_py})")

    psi = ApproxFunction.capped(ApproxFunction.power(Fraction(1, 4), 1))
    target = TargetScheme.fixed_rational(Fraction(1, 3))
    t0 = time.perf_counter()
    rep = qia_ratio(psi, target, "tilde", args.Q)
    print(f"qia_ratio(Q={args.Q}, tilde, dispatch=auto): "
          f"{time.perf_counter() - t0:.3f}s, ratio = {rep.ratio}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
