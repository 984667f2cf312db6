"""Pure-Python arc-pair intersection kernel (fallback for the C extension).

Computes the exact measure of the intersection of two unions of arcs

    U1 = union over admissible p mod d   of arcs at (p + y)/d, radius rho1
    U2 = union over admissible s mod |e| of arcs at (s + y)/e, radius rho2

without materializing the unions.  The center distance of the (p, s) arc
pair is (beta*(e*p - d*s) + (e - d)*alpha) / (beta*d*e) with y = alpha/beta,
so distances only depend on the class of e*p - d*s modulo d*|e|, which runs
over multiples of g = gcd(d, e).  Only the few classes whose distance is
below rho1 + rho2 contribute; each class holds exactly g residue pairs,
enumerated via the inverse of e/g modulo d/g.

Preconditions (enforced by the dispatcher in kernel.py):
    d > 0, e != 0, rho_i < 1/(2 modulus), rho1 + rho2 <= 1/2.
"""

from __future__ import annotations

import math
from fractions import Fraction


def arc_pair_overlap_sum(
    d: int,
    e: int,
    r1n: int,
    r1d: int,
    r2n: int,
    r2d: int,
    alpha: int,
    beta: int,
    mask_d: bytes,
    mask_e: bytes,
) -> Fraction:
    ea = abs(e)
    g = math.gcd(d, ea)
    W = beta * d * ea
    R = r1n * r2d + r2n * r1d  # rho1 + rho2 = R/S
    S = r1d * r2d
    step = beta * g
    c0 = (e - d) * alpha
    n0 = c0 % step
    P = (d * ea) // g
    dp = d // g
    ep_inv = pow((e // g) % dp, -1, dp) if dp > 1 else 0
    two_r1 = Fraction(2 * r1n, r1d)
    two_r2 = Fraction(2 * r2n, r2d)
    rsum = Fraction(R, S)
    WR = W * R
    total = Fraction(0)

    def process(N: int) -> None:
        nonlocal total
        tau = Fraction(min(N, W - N), W)
        ov = min(two_r1, two_r2, rsum - tau)
        if ov <= 0:
            return
        t = ((N - c0) // step) % P
        mt = g * t
        p0 = (t * ep_inv) % dp if dp > 1 else 0
        cnt = 0
        for j in range(g):
            p = (p0 + j * dp) % d
            if mask_d[p]:
                s = ((e * p - mt) // d) % ea
                if mask_e[s]:
                    cnt += 1
        if cnt:
            total += cnt * ov

    # low window: classes with N/W close to 0
    N = n0
    while N * S < WR and N < W:
        process(N)
        N += step
    lo_end = N
    # high window: classes with N/W close to 1
    N = n0 + ((W - 1 - n0) // step) * step
    while N >= lo_end and (W - N) * S < WR:
        process(N)
        N -= step
    return total
