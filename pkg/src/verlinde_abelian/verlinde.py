"""Verlinde numbers, slope triples and torsion-twisted decompositions.

For orthogonal Mukai vectors ``v, w`` the Verlinde bundle ``E(v, w)`` is
predicted to split as a sum of ``W(P(v, w)) (x) zeta`` over torsion line
bundles ``zeta``.  Tables here record, for each order ``omega`` of
``zeta``, how many such ``zeta`` exist and the multiplicity each carries.
Torsion bundles themselves are never materialized; only orders and counts.

All arithmetic is exact.  Binomials are big integers, division happens
last, and every result that must be integral is checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import divisors, jordan_totient
from .errors import (
    ConjectureViolation,
    DomainError,
    HypothesisError,
    IdentityViolation,
    InternalInvariantError,
)
from .heisenberg import jordan_symbol
from .mukai import (
    AssumptionReport,
    MukaiVector,
    check_assumptions,
    dim_invariant,
    is_orthogonal,
    twist,
)
from .nslattice import IsogenyMatrix, NsClass, mat_vec, pullback_matrix
from .semihom import Triple, euler_triple, invert_triple, rank_triple

__all__ = [
    "verlinde_number",
    "slope_triple",
    "delta",
    "trace",
    "multiplicity",
    "Entry",
    "DecompositionTable",
    "decompose",
    "decompose_plus",
    "decompose_minus",
    "theta_pullback_class",
    "DualityReport",
    "duality_check",
    "strange_duality_status",
    "twist_invariance_check",
    "regime",
]


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InternalInvariantError(f"{what} is not an integer: {value}")
    return value.numerator


def verlinde_number(d_v: int, d_w: int) -> int:
    """``d_v^2 / (d_v + d_w) * C(d_v + d_w, d_v)``."""
    if d_v < 1:
        raise DomainError(f"d_v must be positive, got {d_v}")
    n = d_v + d_w
    if n < 1:
        raise DomainError(f"d_v + d_w must be positive, got {n}")
    return _exact_int(Fraction(d_v * d_v * math.comb(n, d_v), n), "Verlinde number")


def _require_pair(v: MukaiVector, w: MukaiVector) -> tuple[int, int]:
    if not is_orthogonal(v, w):
        raise DomainError(f"vectors {v} and {w} are not orthogonal")
    d_v, d_w = dim_invariant(v), dim_invariant(w)
    if d_v < 1:
        raise DomainError(f"d_v must be positive, got {d_v} for {v}")
    if d_v + d_w < 1:
        raise DomainError(f"d_v + d_w must be positive, got {d_v + d_w}")
    return d_v, d_w


def _mixed(v: MukaiVector, w: MukaiVector) -> tuple[int, int, int]:
    """``(rk' + r'k, chi k' + chi' k, r' chi + kk')``."""
    return (
        v.r * w.k + w.r * v.k,
        v.chi * w.k + w.chi * v.k,
        w.r * v.chi + v.k * w.k,
    )


def slope_triple(v: MukaiVector, w: MukaiVector) -> Triple:
    d_v, _ = _require_pair(v, w)
    t, s, x = _mixed(v, w)
    return Triple(Fraction(t, d_v), Fraction(s, d_v), Fraction(x, d_v))


def delta(v: MukaiVector, w: MukaiVector) -> int:
    d_v, d_w = _require_pair(v, w)
    t, s, _ = _mixed(v, w)
    return math.gcd(t, s, d_v, d_w)


def _binom_term(d_v: int, d_w: int, dl: int) -> int:
    return math.comb(d_v // dl + d_w // dl, d_v // dl)


def trace(v: MukaiVector, w: MukaiVector, delta_order: int) -> int:
    """Trace of an order-``delta_order`` torsion point on the space of sections."""
    d_v, d_w = _require_pair(v, w)
    big = delta(v, w)
    if delta_order < 1 or big % delta_order:
        raise DomainError(f"order {delta_order} does not divide Delta = {big}")
    value = Fraction(d_v * d_v * _binom_term(d_v, d_w, delta_order), d_v + d_w)
    return _exact_int(value, "trace")


def _weighted_sum(group: int, omega: int, d_v: int, d_w: int, weight) -> Fraction:
    total = Fraction(0)
    for dl in divisors(group):
        total += weight(dl) * jordan_symbol(group // omega, dl) * _binom_term(d_v, d_w, dl)
    return total


def _check_multiplicity(value: Fraction, omega: int) -> int:
    if value.denominator != 1 or value < 0:
        raise ConjectureViolation(omega, value)
    return value.numerator


def _full_multiplicity(d_v: int, d_w: int, big: int, omega: int) -> Fraction:
    s = _weighted_sum(big, omega, d_v, d_w, lambda dl: Fraction(dl**4, big * big))
    return s / (d_v + d_w)


def multiplicity(v: MukaiVector, w: MukaiVector, omega: int) -> int:
    d_v, d_w = _require_pair(v, w)
    big = delta(v, w)
    if omega < 1 or big % omega:
        raise DomainError(f"order {omega} does not divide Delta = {big}")
    return _check_multiplicity(_full_multiplicity(d_v, d_w, big, omega), omega)


def is_degree_zero_shape(v: MukaiVector, w: MukaiVector) -> bool:
    """``v = (r, 0, chi)`` and ``w = (rh, k', -chi h)`` for some integer ``h``."""
    if v.k != 0 or v.r < 1:
        return False
    if w.r % v.r:
        return False
    h = w.r // v.r
    return w.chi == -v.chi * h


def regime(variant: str, v: MukaiVector, w: MukaiVector, report: AssumptionReport) -> str:
    """``"theorem"`` inside the proven range, ``"conjectural"`` otherwise."""
    base = all(
        report[key]
        for key in ("v_primitive", "w_primitive", "d_v_positive", "d_w_positive",
                    "d_v_odd", "d_w_odd", "orthogonal")
    )
    if not base:
        return "conjectural"
    if variant == "full":
        # Degree zero up to a twist by a power of Theta.
        return "theorem" if v.r >= 1 and v.k % v.r == 0 else "conjectural"
    if variant == "plus":
        return "theorem"
    if variant == "minus":
        return "theorem" if is_degree_zero_shape(v, w) else "conjectural"
    raise DomainError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class Entry:
    order: int
    count: int
    multiplicity: int


@dataclass(frozen=True)
class DecompositionTable:
    variant: str
    v: MukaiVector
    w: MukaiVector
    d_v: int
    d_w: int
    delta: int
    slope: Triple
    index_pair: tuple[int, int] | None
    summand_rank: int
    entries: tuple[Entry, ...]
    total_rank: int
    checks: dict = field(default_factory=dict)
    assumptions: AssumptionReport | None = None
    regime: str = "conjectural"

    def multiplicities(self) -> dict[int, int]:
        return {e.order: e.multiplicity for e in self.entries}

    def rows(self) -> list[tuple[int, int, int]]:
        return [(e.order, e.count, e.multiplicity) for e in self.entries]

    def to_json(self) -> dict:
        doc = {
            "variant": self.variant,
            "v": self.v.to_json(),
            "w": self.w.to_json(),
            "d_v": self.d_v,
            "d_w": self.d_w,
            "delta": self.delta,
            "slope": self.slope.to_json(),
        }
        if self.index_pair is not None:
            doc["index_pair"] = list(self.index_pair)
        doc.update(
            {
                "summand_rank": str(self.summand_rank),
                "entries": [
                    {"order": e.order, "count": str(e.count), "multiplicity": str(e.multiplicity)}
                    for e in self.entries
                ],
                "total_rank": str(self.total_rank),
                "checks": dict(sorted(self.checks.items())),
                "assumptions": self.assumptions.to_dict() if self.assumptions else {},
                "regime": self.regime,
            }
        )
        return doc

    def to_csv(self) -> str:
        lines = ["order,count,multiplicity"]
        lines += [f"{e.order},{e.count},{e.multiplicity}" for e in self.entries]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        head = [
            f"variant      {self.variant}",
            f"v, w         {self.v}  {self.w}",
            f"d_v, d_w     {self.d_v}  {self.d_w}",
            f"delta        {self.delta}",
            f"slope        ({', '.join(str(x) for x in self.slope.as_tuple())})",
        ]
        if self.index_pair is not None:
            head.append(f"index pair   {self.index_pair}")
        head += [
            f"summand rank {self.summand_rank}",
            f"total rank   {self.total_rank}",
            f"regime       {self.regime}",
            "",
            f"{'order':>8} {'count':>12} {'multiplicity':>20}",
        ]
        rows = [f"{e.order:>8} {e.count:>12} {e.multiplicity:>20}" for e in self.entries]
        return "\n".join(head + rows) + "\n"


def _build(variant, v, w, d_v, d_w, group, slope, index_pair, summand_rank, mult) -> DecompositionTable:
    entries = []
    for omega in divisors(group):
        entries.append(Entry(omega, jordan_totient(omega, 4), _check_multiplicity(mult(omega), omega)))
    total = sum(e.count * e.multiplicity for e in entries) * summand_rank
    expected = verlinde_number(d_v, d_w)
    if total != expected:
        raise IdentityViolation(
            "rank bookkeeping", f"{variant} table for {v}, {w}: total {total} != Verlinde number {expected}"
        )
    report = check_assumptions(v, w)
    return DecompositionTable(
        variant=variant,
        v=v,
        w=w,
        d_v=d_v,
        d_w=d_w,
        delta=group,
        slope=slope,
        index_pair=index_pair,
        summand_rank=summand_rank,
        entries=tuple(entries),
        total_rank=total,
        checks={
            "counts_sum_to_group_order": sum(e.count for e in entries) == group**4,
            "total_rank_equals_verlinde_number": True,
        },
        assumptions=report,
        regime=regime(variant, v, w, report),
    )


def decompose(v: MukaiVector, w: MukaiVector) -> DecompositionTable:
    d_v, d_w = _require_pair(v, w)
    big = delta(v, w)
    return _build(
        "full", v, w, d_v, d_w, big,
        slope_triple(v, w), None, (d_v // big) ** 2,
        lambda omega: _full_multiplicity(d_v, d_w, big, omega),
    )


def decompose_plus(v: MukaiVector, w: MukaiVector) -> DecompositionTable:
    d_v, d_w = _require_pair(v, w)
    h = math.gcd(v.r, v.k)
    if h == 0:
        raise DomainError(f"r and k both vanish for {v}")
    t = v.r * w.k + w.r * v.k
    a = math.gcd(t, d_v) // h
    if a == 0:
        raise DomainError(f"gcd(t, d_v) vanishes for {v}, {w}")
    if math.gcd(v.r, a) != 1:
        raise HypothesisError(f"gcd(r, a) = gcd({v.r}, {a}) != 1")
    ha = h * a

    def mult(omega):
        s = _weighted_sum(a, omega, d_v, d_w, lambda dl: Fraction(dl, a) ** 4)
        return s * ha * ha / (d_v + d_w)

    return _build(
        "plus", v, w, d_v, d_w, a,
        slope_triple(v, w), (d_v // ha, t // ha), (d_v // ha) ** 2, mult,
    )


def decompose_minus(v: MukaiVector, w: MukaiVector) -> DecompositionTable:
    d_v, d_w = _require_pair(v, w)
    if not is_degree_zero_shape(v, w):
        raise DomainError(f"{v}, {w} is not of the shape (r,0,chi), (rh,k,-chi h)")
    b = math.gcd(v.r, w.k)
    if b == 0:
        raise DomainError("gcd(r, k') vanishes")

    def mult(omega):
        s = _weighted_sum(b, omega, d_v, d_w, lambda dl: Fraction(dl**4, b * b))
        return s * v.chi * v.chi / (d_v + d_w)

    return _build(
        "minus", v, w, d_v, d_w, b,
        slope_triple(v, w), (v.r // b, -w.k // b), (v.r // b) ** 2, mult,
    )


def theta_pullback_class(v: MukaiVector, w: MukaiVector) -> NsClass:
    """``(-chi' k - chi k', -r k' - r' k, r' chi + k k')``."""
    t, s, x = _mixed(v, w)
    return NsClass(-s, -t, x)


@dataclass(frozen=True)
class DualityReport:
    v: MukaiVector
    w: MukaiVector
    identities: dict
    status: str

    @property
    def ok(self) -> bool:
        return all(self.identities.values())

    @property
    def failures(self) -> list[str]:
        return sorted(k for k, ok in self.identities.items() if not ok)

    def require(self) -> "DualityReport":
        if not self.ok:
            raise IdentityViolation(self.failures[0], f"fails for v={self.v}, w={self.w}")
        return self

    def to_json(self) -> dict:
        return {
            "v": self.v.to_json(),
            "w": self.w.to_json(),
            "identities": dict(sorted(self.identities.items())),
            "status": self.status,
        }


def _inv2(m):
    (a, b), (c, d) = m
    det = Fraction(a * d - b * c)
    return ((d / det, -b / det), (-c / det, a / det))


def _mul2(x, y):
    return tuple(
        tuple(x[i][0] * y[0][j] + x[i][1] * y[1][j] for j in range(2)) for i in range(2)
    )


def matrix_identity_holds(v: MukaiVector, w: MukaiVector) -> bool:
    """``J W^dual V^-1 = P~(v, w)`` with ``J = diag(1, -1)`` and ``W^dual = psi(dual w)``."""
    from .nslattice import psi_matrix
    from .mukai import dual

    big_v = psi_matrix(v).rows()
    w_dual = psi_matrix(dual(w)).rows()
    j = ((1, 0), (0, -1))
    lhs = _mul2(_mul2(j, w_dual), _inv2(big_v))
    p = slope_triple(v, w)
    rhs = ((p.h, -p.v), (p.u, p.h))
    return all(lhs[i][k] == rhs[i][k] for i in range(2) for k in range(2))


def strange_duality_status(v: MukaiVector, w: MukaiVector) -> str:
    _require_pair(v, w)
    if dim_invariant(v) == 1 or dim_invariant(w) == 1:
        return "iso-or-zero"
    return "open"


def duality_check(v: MukaiVector, w: MukaiVector) -> DualityReport:
    d_v, d_w = _require_pair(v, w)
    if d_w < 1:
        raise DomainError(f"d_w must be positive, got {d_w}")
    t, s, x = _mixed(v, w)
    ids = {}
    pvw, pwv = slope_triple(v, w), slope_triple(w, v)
    ids["slope_inverse"] = pvw == -invert_triple(pwv)
    ids["matrix_identity"] = matrix_identity_holds(v, w)
    ids["product_identity"] = t * s + (v.r * w.chi + v.k * w.k) ** 2 == -d_v * d_w
    ids["rank_identity"] = w.r**2 * d_v + v.r**2 * d_w == t * t
    ids["slope_rank"] = rank_triple(pvw) == d_v // delta(v, w)
    ids["slope_euler"] = euler_triple(pvw) == -(d_w // delta(v, w))
    tab_vw, tab_wv = decompose(v, w), decompose(w, v)
    ids["multiplicities_symmetric"] = tab_vw.rows() == tab_wv.rows()
    # rank E(v, w) against |chi(E(w, v))| computed from the (w, v) table.
    chi_summand = euler_triple(pwv) ** 2
    chi_total = sum(e.count * e.multiplicity for e in tab_wv.entries) * chi_summand
    ids["rank_equals_dual_euler"] = tab_vw.total_rank == chi_total
    return DualityReport(v, w, ids, strange_duality_status(v, w))


def twist_invariance_check(v: MukaiVector, w: MukaiVector, ell: int) -> bool:
    """Twisting ``(v, w)`` to ``(v e^{-ell Theta}, w e^{ell Theta})`` keeps the table.

    The slope moves by the pullback along ``[[1, -ell], [0, 1]]``.
    """
    _require_pair(v, w)
    v0, w0 = twist(v, -ell), twist(w, ell)
    if not is_orthogonal(v0, w0):
        return False
    if delta(v0, w0) != delta(v, w):
        return False
    if decompose(v0, w0).rows() != decompose(v, w).rows():
        return False
    big_r = pullback_matrix(IsogenyMatrix(1, -ell, 0, 1))
    return mat_vec(big_r, slope_triple(v0, w0).as_tuple()) == slope_triple(v, w).as_tuple()
