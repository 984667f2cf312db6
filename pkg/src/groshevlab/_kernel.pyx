# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arc-pair intersection kernel.

Mirror of _kernel_py.arc_pair_overlap_sum, but every quantity is carried
as an integer numerator over the common denominator W*S (W = beta*d*|e|,
S = r1d*r2d), so the whole call runs on C integers with 128-bit products.
Returns (numerator, denominator) as Python ints; the dispatcher builds the
Fraction.  The dispatcher guarantees W < 2**40 and R, S < 2**62, keeping
all products below 2**104.
"""


cdef extern from *:
    ctypedef long long int128 "__int128"


cdef long long c_gcd(long long a, long long b) noexcept:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long c_mod(long long a, long long m) noexcept:
    cdef long long r = a % m
    if r < 0:
        r += m
    return r


cdef long long mod_inv(long long a, long long m) noexcept:
    # m > 1, gcd(a, m) == 1; extended Euclid
    cdef long long r0 = m, r1 = c_mod(a, m)
    cdef long long t0 = 0, t1 = 1
    cdef long long q, tmp
    while r1:
        q = r0 / r1
        tmp = r0 - q * r1; r0 = r1; r1 = tmp
        tmp = t0 - q * t1; t0 = t1; t1 = tmp
    return c_mod(t0, m)


cdef object int128_to_pyint(int128 v):
    # v >= 0
    cdef unsigned long long lo = <unsigned long long> (<int128> v & <int128> 0xFFFFFFFFFFFFFFFFULL)
    cdef unsigned long long hi = <unsigned long long> (v >> 64)
    if hi == 0:
        return lo
    return ((<object> hi) << 64) | (<object> lo)


def arc_pair_overlap_sum(
    long long d,
    long long e,
    long long r1n,
    long long r1d,
    long long r2n,
    long long r2d,
    long long alpha,
    long long beta,
    const unsigned char[::1] mask_d,
    const unsigned char[::1] mask_e,
):
    cdef long long ea = e if e > 0 else -e
    cdef long long g = c_gcd(d, ea)
    cdef long long W = beta * d * ea
    cdef long long R = r1n * r2d + r2n * r1d
    cdef long long S = r1d * r2d
    cdef long long step = beta * g
    cdef long long c0 = (e - d) * alpha
    cdef long long n0 = c_mod(c0, step)
    cdef long long P = (d * ea) / g
    cdef long long dp = d / g
    cdef long long ep_inv = mod_inv(c_mod(e / g, dp), dp) if dp > 1 else 0
    cdef int128 WR = <int128> W * <int128> R
    # 2*rho1 and 2*rho2 as numerators over W*S
    cdef int128 a1 = <int128> (2 * r1n) * <int128> r2d * <int128> W
    cdef int128 a2 = <int128> (2 * r2n) * <int128> r1d * <int128> W
    cdef int128 total = 0
    cdef int128 ov
    cdef long long N, lo_end, tau_n, cnt, t, mt, p0, p, s, j

    # low window: classes with N/W close to 0, then the high window near 1
    N = n0
    while (<int128> N) * (<int128> S) < WR and N < W:
        tau_n = N if N <= W - N else W - N
        ov = WR - <int128> tau_n * <int128> S  # (R/S - tau) over W*S
        if a1 < ov:
            ov = a1
        if a2 < ov:
            ov = a2
        if ov > 0:
            t = c_mod((N - c0) / step, P)
            mt = g * t
            p0 = c_mod(t * ep_inv, dp) if dp > 1 else 0
            cnt = 0
            for j in range(g):
                p = (p0 + j * dp) % d
                if mask_d[p]:
                    # e*p - mt == 0 (mod d) by construction: exact division
                    s = c_mod((e * p - mt) / d, ea)
                    if mask_e[s]:
                        cnt += 1
            total += <int128> cnt * ov
        N += step
    lo_end = N
    N = n0 + ((W - 1 - n0) / step) * step
    while N >= lo_end and (<int128> (W - N)) * (<int128> S) < WR:
        tau_n = N if N <= W - N else W - N
        ov = WR - <int128> tau_n * <int128> S
        if a1 < ov:
            ov = a1
        if a2 < ov:
            ov = a2
        if ov > 0:
            t = c_mod((N - c0) / step, P)
            mt = g * t
            p0 = c_mod(t * ep_inv, dp) if dp > 1 else 0
            cnt = 0
            for j in range(g):
                p = (p0 + j * dp) % d
                if mask_d[p]:
                    s = c_mod((e * p - mt) / d, ea)
                    if mask_e[s]:
                        cnt += 1
            total += <int128> cnt * ov
        N -= step
    return int128_to_pyint(total), (<object> W) * (<object> S)
