# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernels (same semantics as ``_kernels_py``)."""

from libc.stdlib cimport malloc, free


cdef inline long long _mod(long long a, long long m) nogil:
    cdef long long r = a % m
    if r < 0:
        r += m
    return r


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def count_coordinate_solutions(long long a, long long b, long long c, long long d):
    cdef long long x, y, count = 0
    a = _mod(a, d)
    b = _mod(b, d)
    c = _mod(c, d)
    with nogil:
        for x in range(d):
            for y in range(d):
                if _mod(a * x - b * y, d) == 0 and _mod(c * y - b * x, d) == 0:
                    count += 1
    return count


def count_pair_solutions_direct(long long a, long long b, long long c, long long d):
    cdef long long total = 1, idx, t, count = 0
    cdef int i, ok
    cdef long long xs[8]
    for i in range(8):
        total *= d
    a = _mod(a, d)
    b = _mod(b, d)
    c = _mod(c, d)
    with nogil:
        for idx in range(total):
            t = idx
            for i in range(8):
                xs[i] = t % d
                t = t // d
            ok = 1
            for i in range(4):
                if _mod(a * xs[i] - b * xs[4 + i], d) != 0 or _mod(c * xs[4 + i] - b * xs[i], d) != 0:
                    ok = 0
                    break
            if ok:
                count += 1
    return count


def order_phase_histogram(long long n, long long c0, long long c1, long long c2, long long c3):
    cdef long long size = (n + 1) * n
    cdef long long *hist = <long long *> malloc(size * sizeof(long long))
    cdef long long x0, x1, x2, x3, g0, g1, g2, p0, p1, p2, i
    if hist == NULL:
        raise MemoryError()
    try:
        c0 = _mod(c0, n)
        c1 = _mod(c1, n)
        c2 = _mod(c2, n)
        c3 = _mod(c3, n)
        with nogil:
            for i in range(size):
                hist[i] = 0
            for x0 in range(n):
                g0 = _gcd(n, x0)
                p0 = c0 * x0
                for x1 in range(n):
                    g1 = _gcd(g0, x1)
                    p1 = p0 + c1 * x1
                    for x2 in range(n):
                        g2 = _gcd(g1, x2)
                        p2 = p1 + c2 * x2
                        for x3 in range(n):
                            hist[_gcd(g2, x3) * n + (p2 + c3 * x3) % n] += 1
        return [hist[i] for i in range(size)]
    finally:
        free(hist)
