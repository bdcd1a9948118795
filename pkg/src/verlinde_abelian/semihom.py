"""Slope triples and the discrete invariants of simple semihomogeneous bundles.

A triple ``P = (u, v, h)`` of rationals has ``det P = uv + h^2``; its rank
``r(P)`` is the least positive integer clearing the denominators of ``u``,
``v`` and ``det P``, and ``chi(P) = r(P) * det P``.  Rank is kept positive
and ``chi`` signed, so inversion swaps rank and ``|chi|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateTripleError, DomainError
from .nslattice import (
    NsClass,
    circ,
    format_fraction,
    mat_vec,
    parse_fraction,
    phi_matrix,
    pullback_matrix,
)

__all__ = [
    "Triple",
    "det_triple",
    "rank_triple",
    "euler_triple",
    "is_admissible",
    "invert_triple",
    "SemihomInvariants",
    "semihom_invariants",
    "Factorization",
    "factorize",
    "fm_dual_triple",
    "pullback_identity_check",
]


@dataclass(frozen=True)
class Triple:
    u: Fraction
    v: Fraction
    h: Fraction

    def __post_init__(self):
        for name in ("u", "v", "h"):
            object.__setattr__(self, name, parse_fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "Triple":
        parts = text.split(",")
        if len(parts) != 3:
            raise DomainError(f"expected three comma-separated rationals, got {text!r}")
        return cls(*parts)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.u, self.v, self.h)

    def to_json(self) -> list[str]:
        return [format_fraction(x) for x in self.as_tuple()]

    def to_class(self) -> NsClass:
        return NsClass(*self.as_tuple())

    def __neg__(self) -> "Triple":
        return Triple(-self.u, -self.v, -self.h)

    def scale(self, s) -> "Triple":
        return Triple(self.u * s, self.v * s, self.h * s)


def det_triple(p: Triple) -> Fraction:
    return p.u * p.v + p.h * p.h


def rank_triple(p: Triple) -> int:
    # Integrality of r*h follows from that of r*u, r*v and r*det.
    return math.lcm(p.u.denominator, p.v.denominator, det_triple(p).denominator)


def euler_triple(p: Triple) -> int:
    val = rank_triple(p) * det_triple(p)
    assert val.denominator == 1
    return int(val)


def is_admissible(p: Triple) -> bool:
    return rank_triple(p) % 2 == 1 and euler_triple(p) % 2 == 1


def invert_triple(p: Triple) -> Triple:
    det = det_triple(p)
    if det == 0:
        raise DegenerateTripleError(f"triple {p.to_json()} has determinant 0")
    return Triple(p.u / det, p.v / det, -p.h / det)


@dataclass(frozen=True)
class SemihomInvariants:
    w_rank: int
    w_euler: int
    sigma_order: int
    k_order: int
    index: int

    def to_dict(self) -> dict:
        return {
            "w_rank": str(self.w_rank),
            "w_euler": str(self.w_euler),
            "sigma_order": str(self.sigma_order),
            "k_order": str(self.k_order),
            "index": self.index,
        }


def _index(p: Triple) -> int | None:
    det = det_triple(p)
    if det > 0:
        return 2
    if det < 0:
        if p.u > 0:
            return 0
        if p.u < 0:
            return 4
    return None


def semihom_invariants(p: Triple) -> SemihomInvariants:
    """Rank, Euler characteristic, group orders and cohomological index of ``W(P)``."""
    if not is_admissible(p):
        raise DomainError(f"triple {p.to_json()} is not admissible")
    r = rank_triple(p)
    chi = euler_triple(p)
    index = _index(p)
    if index is None:
        raise DomainError(f"index undefined for {p.to_json()} (u = 0 with det < 0)")
    return SemihomInvariants(r * r, chi * chi, r**4, chi**4, index)


@dataclass(frozen=True)
class Factorization:
    """``W(P) = W_{a,b} [x] W^dagger_{c,d} (x) P^h``."""

    a: int
    b: int
    c: int
    d: int
    h: int

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "h": self.h}


def factorize(p: Triple) -> Factorization | None:
    if p.h.denominator != 1:
        return None
    a, b = p.u.denominator, p.u.numerator
    c, d = p.v.denominator, p.v.numerator
    if math.gcd(a, c) != 1 or a % 2 == 0 or c % 2 == 0:
        return None
    return Factorization(a, b, c, d, int(p.h))


def fm_dual_triple(p: Triple) -> Triple:
    """Slope of the Fourier-Mukai dual of ``W(P)``: the inverse triple."""
    return invert_triple(p)


def pullback_identity_check(p: Triple) -> bool:
    """Pull ``W(P^-1)`` back along ``Phi_{rP}`` and compare with ``-r^2 P``.

    ``Phi_{rP}`` is ``rho`` of the circ form of ``phi_matrix(rP)``; the
    comparison is on Neron-Severi coordinates, exactly.
    """
    if not is_admissible(p):
        raise DomainError(f"triple {p.to_json()} is not admissible")
    inv = invert_triple(p)
    r = rank_triple(p)
    rp = p.scale(r).to_class()
    big_r = pullback_matrix(circ(phi_matrix(rp)))
    lhs = mat_vec(big_r, inv.as_tuple())
    rhs = tuple(-r * r * x for x in p.as_tuple())
    return lhs == rhs
