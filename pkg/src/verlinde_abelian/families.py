"""Generators for the input families exercised by tests and verify suites.

All random generators take an explicit seed and are deterministic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .arith import CongruenceInstance
from .mukai import MukaiVector, dim_invariant, is_orthogonal
from .semihom import Triple, is_admissible

__all__ = [
    "degree_zero_pairs",
    "random_orthogonal_pairs",
    "random_twist_cases",
    "random_admissible_triples",
    "lemma_a2_instances",
    "random_lemma_a1_instances",
]

DEFAULT_H_MAX = 10


def degree_zero_pairs(max_sum: int = 60, h_max: int = DEFAULT_H_MAX):
    """All ``v = (r, 0, chi)``, ``w = (rh, k, -chi h)`` with odd ``d_v, d_w >= 1``.

    Ranges: ``r >= 1``, ``chi <= -1``, ``gcd(r, chi) = 1``, ``0 <= h <= h_max``,
    ``k >= 1``, ``gcd(h, k) = 1`` and ``d_v + d_w <= max_sum``.  ``h`` needs
    an explicit bound because ``d_w = k^2 - d_v h^2`` stays small along
    Pell-type curves.
    """
    out = []
    for d_v in range(1, max_sum, 2):
        for r in range(1, d_v + 1):
            if d_v % r:
                continue
            chi = -(d_v // r)
            if math.gcd(r, chi) != 1:
                continue
            v = MukaiVector(r, 0, chi)
            for h in range(h_max + 1):
                k = 1
                while True:
                    d_w = k * k - d_v * h * h
                    if d_w > max_sum - d_v:
                        break
                    if d_w >= 1 and d_w % 2 == 1 and math.gcd(h, k) == 1:
                        out.append((v, MukaiVector(r * h, k, -chi * h)))
                    k += 1
    return out


def _random_vector(rng: random.Random, bound: int) -> MukaiVector:
    r = rng.randint(1, bound)
    return MukaiVector(r, rng.randint(-bound, bound), rng.randint(-bound * bound, bound))


def random_orthogonal_pairs(count: int, seed: int = 0, bound: int = 6, max_d: int | None = None):
    """Primitive orthogonal pairs with odd positive ``d_v, d_w`` (rejection sampling)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = _random_vector(rng, bound)
        if not v.is_primitive():
            continue
        r2 = rng.randint(0, bound * 2)
        k2 = rng.randint(-bound * 2, bound * 2)
        num = -(r2 * v.chi + 2 * v.k * k2)
        if num % v.r:
            continue
        w = MukaiVector(r2, k2, num // v.r)
        if not w.is_primitive() or not is_orthogonal(v, w):
            continue
        d_v, d_w = dim_invariant(v), dim_invariant(w)
        if d_v < 1 or d_w < 1 or d_v % 2 == 0 or d_w % 2 == 0:
            continue
        if max_d is not None and (d_v > max_d or d_w > max_d):
            continue
        out.append((v, w))
    return out


def random_twist_cases(count: int, seed: int = 0, bound: int = 6, ell_bound: int = 5, max_d=None):
    rng = random.Random(seed + 1)
    pairs = random_orthogonal_pairs(count, seed=seed, bound=bound, max_d=max_d)
    return [(v, w, rng.randint(-ell_bound, ell_bound)) for v, w in pairs]


def random_admissible_triples(count: int, seed: int = 0, num: int = 30, den: int = 15):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = Triple(
            Fraction(rng.randint(-num, num), rng.randint(1, den)),
            Fraction(rng.randint(-num, num), rng.randint(1, den)),
            Fraction(rng.randint(-num, num), rng.randint(1, den)),
        )
        if is_admissible(p):
            out.append(p)
    return out


def lemma_a2_instances(coef_bound: int = 8, max_d: int = 12):
    """Every instance in the box whose counting hypotheses hold."""
    rng = range(-coef_bound, coef_bound + 1)
    out = []
    for d in range(1, max_d + 1):
        for a in rng:
            for b in rng:
                for c in rng:
                    disc = b * b - a * c
                    if disc % d == 0 and math.gcd(a, c, d, disc // d) == 1:
                        out.append(CongruenceInstance(a, b, c, d))
    return out


def random_lemma_a1_instances(count: int, seed: int = 0, max_d: int = 10_000, coef_bound: int = 10**6):
    """Instances with ``gcd(a, b, c, d) = 1`` and ``b^2 = ac (mod d)``.

    ``c`` is solved from the congruence when ``a`` is a unit mod ``d``;
    otherwise a fresh draw is made.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_d)
        a = rng.randint(-coef_bound, coef_bound)
        b = rng.randint(-coef_bound, coef_bound)
        if math.gcd(a, d) != 1:
            # Non-unit a: take c = b^2 / a exactly when a divides b^2 (a != 0).
            if a == 0 or (b * b) % a:
                continue
            c = b * b // a + d * rng.randint(-5, 5)
        else:
            c = (b * b * pow(a, -1, d)) % d + d * rng.randint(-5, 5) if d > 1 else rng.randint(-9, 9)
        if (b * b - a * c) % d or math.gcd(a, b, c, d) != 1:
            continue
        out.append(CongruenceInstance(a, b, c, d))
    return out
