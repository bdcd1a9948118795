"""Pure-Python versions of the brute-force kernels.

Semantics are identical to the compiled ``_kernels`` module; this file is
used when the extension is not built or ``VERLINDE_PURE_PYTHON`` is set.
"""

from itertools import product
from math import gcd


def count_coordinate_solutions(a, b, c, d):
    a %= d
    b %= d
    c %= d
    count = 0
    for x in range(d):
        ax = a * x
        bx = b * x
        for y in range(d):
            if (ax - b * y) % d == 0 and (c * y - bx) % d == 0:
                count += 1
    return count


def count_pair_solutions_direct(a, b, c, d):
    count = 0
    for x in product(range(d), repeat=4):
        for y in product(range(d), repeat=4):
            ok = True
            for i in range(4):
                if (a * x[i] - b * y[i]) % d or (c * y[i] - b * x[i]) % d:
                    ok = False
                    break
            if ok:
                count += 1
    return count


def order_phase_histogram(n, c0, c1, c2, c3):
    c0 %= n
    c1 %= n
    c2 %= n
    c3 %= n
    hist = [0] * ((n + 1) * n)
    for x0 in range(n):
        g0 = gcd(n, x0)
        p0 = c0 * x0
        for x1 in range(n):
            g1 = gcd(g0, x1)
            p1 = p0 + c1 * x1
            for x2 in range(n):
                g2 = gcd(g1, x2)
                p2 = p1 + c2 * x2
                for x3 in range(n):
                    hist[gcd(g2, x3) * n + (p2 + c3 * x3) % n] += 1
    return hist
