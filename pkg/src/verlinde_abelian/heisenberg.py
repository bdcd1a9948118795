"""Characters of finite torsion groups and the trace/multiplicity inversion.

The torsion groups involved are ``(Z/a)^4 x (Z/b)^4`` with ``a, b`` coprime,
which is ``(Z/ab)^4``.  Character sums over elements of a fixed order are
computed two independent ways: by Moebius inversion over subgroups
(``character_sum``), and by enumerating the group through the compiled
histogram kernel (``character_sum_bruteforce``).  Both are exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .arith import divisors, factorize, jordan_totient, mobius
from .errors import DomainError, InternalInvariantError, OracleDivergence

__all__ = [
    "TorsionGroup",
    "jordan_symbol",
    "count_elements_of_order",
    "character_sum",
    "character_sum_bruteforce",
    "exact_phase_sum",
    "random_element_of_order",
    "multiplicity_from_traces",
    "trace_from_decomposition",
    "heisenberg_irrep_data",
]


@dataclass(frozen=True)
class TorsionGroup:
    """Product of cyclic groups ``Z/n_i``; canonically ``[a]*4 + [b]*4``."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(n < 1 for n in self.orders):
            raise DomainError(f"cyclic orders must be positive: {self.orders}")

    @classmethod
    def abelian_surface(cls, a: int, b: int = 1) -> "TorsionGroup":
        return cls((a,) * 4 + (b,) * 4)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)


def jordan_symbol(lam: int, h: int) -> Fraction:
    """The weight ``{lam / h}`` built from the factorization ``h = prod p^e``.

    Zero unless ``prod p^(e-1)`` divides ``lam``; otherwise the product of
    ``eps_p - p^-4`` where ``eps_p`` is 1 exactly when ``p^e`` divides ``lam``.
    """
    if h < 1:
        raise DomainError(f"h must be positive, got {h}")
    value = Fraction(1)
    for p, e in factorize(h) if h > 1 else ():
        if lam % p ** (e - 1):
            return Fraction(0)
        eps = 1 if lam % p**e == 0 else 0
        value *= eps - Fraction(1, p**4)
    return value


def count_elements_of_order(n: int, omega: int) -> int:
    if n < 1 or omega < 1 or n % omega:
        raise DomainError(f"order {omega} does not divide {n}")
    return jordan_totient(omega, 4)


def _check_charsum_args(a: int, b: int, omega: int, delta: int) -> int:
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise DomainError(f"a={a}, b={b} must be coprime positive integers")
    n = a * b
    if omega < 1 or n % omega:
        raise DomainError(f"omega={omega} does not divide ab={n}")
    if delta < 1 or n % delta:
        raise DomainError(f"delta={delta} does not divide ab={n}")
    return n


def character_sum(a: int, b: int, omega: int, delta: int) -> int:
    """Sum of ``zeta(pi)`` over ``pi`` of order ``delta``, for ``zeta`` of order ``omega``.

    Summing over the subgroup killed by ``e`` gives ``e^4`` when ``zeta`` is
    trivial there (iff ``e`` divides ``ab/omega``) and 0 otherwise; Moebius
    inversion over ``e | delta`` isolates exact order ``delta``.
    """
    n = _check_charsum_args(a, b, omega, delta)
    quot = n // omega
    return sum(
        mobius(delta // e) * e**4 for e in divisors(delta) if quot % e == 0
    )


def exact_phase_sum(n: int, coeffs) -> int:
    """``sum_j coeffs[j] * exp(2 pi i j / n)`` for coefficients constant on gcd classes.

    Such a sum is ``sum_g C_g * mu(n/g)`` (Ramanujan sums at 1); a
    coefficient that varies inside a class raises, since the sum would then
    not be a rational integer.
    """
    by_class: dict[int, int] = {}
    for j in range(n):
        g = math.gcd(j, n)
        if g in by_class:
            if by_class[g] != coeffs[j]:
                raise InternalInvariantError(
                    f"phase coefficients not constant on gcd class {g} mod {n}"
                )
        else:
            by_class[g] = coeffs[j]
    return sum(c * mobius(n // g) for g, c in by_class.items())


def random_element_of_order(n: int, order: int, rng: random.Random) -> tuple[int, int, int, int]:
    """A uniformly random element of ``(Z/n)^4`` of exact order ``order``."""
    if n % order:
        raise DomainError(f"order {order} does not divide {n}")
    scale = n // order
    while True:
        y = tuple(rng.randrange(order) if order > 1 else 0 for _ in range(4))
        if math.gcd(order, *y) == 1:
            return tuple(scale * c for c in y)


def _histogram(n: int, vec) -> list[list[int]]:
    flat = kernels.order_phase_histogram(n, *vec)
    return [flat[g * n:(g + 1) * n] for g in range(n + 1)]


def character_sum_bruteforce(a: int, b: int, omega: int, delta: int, zeta=None, seed: int = 0) -> int:
    """Enumerate ``(Z/ab)^4`` and add ``zeta(pi)`` over ``pi`` of order ``delta``.

    ``zeta`` is the character ``x -> exp(2 pi i <zeta, x> / ab)``; a random
    vector of order ``omega`` is drawn when none is given.
    """
    n = _check_charsum_args(a, b, omega, delta)
    if zeta is None:
        zeta = random_element_of_order(n, omega, random.Random(seed))
    hist = _histogram(n, zeta)
    return exact_phase_sum(n, hist[n // delta])


def multiplicity_from_traces(v, w):
    """Rebuild the degree-zero decomposition from traces and character sums only.

    ``m_omega = (1 / (dim R * (ab)^4)) * sum_delta Trace(delta) * S(omega, delta)``
    with ``dim R = (chi/a)^2 (r/b)^2``.  The result is compared row by row
    with :func:`verlinde.decompose`; any difference raises
    :class:`OracleDivergence`.
    """
    from . import verlinde
    from .verlinde import Entry

    if not verlinde.is_degree_zero_shape(v, w):
        raise DomainError(f"{v}, {w} is not of degree-zero shape")
    direct = verlinde.decompose(v, w)
    a = math.gcd(w.k, v.chi)
    b = math.gcd(w.k, v.r)
    n = a * b
    if n != direct.delta:
        raise OracleDivergence("Delta = ab", f"a*b = {n} but Delta = {direct.delta}")
    dim_r = (v.chi // a) ** 2 * (v.r // b) ** 2
    traces = {dl: verlinde.trace(v, w, dl) for dl in divisors(n)}
    entries = []
    for omega in divisors(n):
        total = sum(traces[dl] * character_sum(a, b, omega, dl) for dl in traces)
        m = Fraction(total, dim_r * n**4)
        if m.denominator != 1 or m < 0:
            raise OracleDivergence("multiplicity from traces", f"omega={omega}: {m}")
        entries.append(Entry(omega, count_elements_of_order(n, omega), int(m)))
    if dim_r != direct.summand_rank:
        raise OracleDivergence("summand rank", f"{dim_r} != {direct.summand_rank}")
    if tuple(entries) != direct.entries:
        raise OracleDivergence(
            "multiplicity from traces",
            f"trace inversion {[(e.order, e.multiplicity) for e in entries]} vs "
            f"direct {[(e.order, e.multiplicity) for e in direct.entries]}",
        )
    return direct.__class__(**{**direct.__dict__, "entries": tuple(entries)})


def trace_from_decomposition(table, delta: int, samples: int = 3, seed: int = 0) -> int:
    """``summand_rank * sum_zeta m_zeta zeta(pi)`` for sampled ``pi`` of order ``delta``.

    ``zeta`` runs over ``(Z/N)^4`` with ``N = table.delta``.  Every sample
    must give the same value.
    """
    n = table.delta
    if delta < 1 or n % delta:
        raise DomainError(f"delta={delta} does not divide {n}")
    mult = table.multiplicities()
    rng = random.Random(seed)
    values = set()
    for _ in range(samples):
        pi = random_element_of_order(n, delta, rng)
        hist = _histogram(n, pi)
        coeffs = [0] * n
        for g in divisors(n):
            m = mult[n // g]
            row = hist[g]
            for j in range(n):
                coeffs[j] += m * row[j]
        values.add(exact_phase_sum(n, coeffs) * table.summand_rank)
    if len(values) != 1:
        raise InternalInvariantError(f"trace depends on the chosen point: {sorted(values)}")
    return values.pop()


def heisenberg_irrep_data(n: int, k: int) -> dict:
    """Irreducible constituents of sections of ``Theta^(kn)`` under ``H[n]``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    h = math.gcd(k, n)
    return {"count": h**4, "dim": (n // h) ** 2, "multiplicity": (k // h) ** 2}
