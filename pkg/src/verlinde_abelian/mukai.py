"""Mukai vectors ``(r, k, chi)`` on a principally polarized abelian surface.

A vector stands for ``(r, k*Theta, chi)`` with ``Theta^2 = 2``.  Two vectors
are orthogonal when the Euler characteristic of their product vanishes,
``r*chi' + r'*chi + 2*k*k' = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "MukaiVector",
    "mukai_pairing",
    "euler_pairing",
    "is_orthogonal",
    "dim_invariant",
    "twist",
    "dual",
    "fm_transform",
    "AssumptionReport",
    "check_assumptions",
]


@dataclass(frozen=True, order=True)
class MukaiVector:
    r: int
    k: int
    chi: int

    def __post_init__(self):
        for name in ("r", "k", "chi"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int):
                raise DomainError(f"Mukai vector entry {name} must be an integer, got {val!r}")

    @classmethod
    def parse(cls, text: str) -> "MukaiVector":
        """Parse ``"r,k,chi"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise DomainError(f"expected three comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            raise DomainError(f"non-integer entry in {text!r}") from exc

    @classmethod
    def from_json(cls, data) -> "MukaiVector":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise DomainError(f"expected [r, k, chi], got {data!r}")
        return cls(*(int(x) for x in data))

    def to_json(self) -> list[int]:
        return [self.r, self.k, self.chi]

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.k, self.chi)

    @property
    def d(self) -> int:
        return dim_invariant(self)

    def is_primitive(self) -> bool:
        return math.gcd(self.r, self.k, self.chi) == 1

    def __str__(self) -> str:
        return f"({self.r},{self.k},{self.chi})"


def mukai_pairing(v: MukaiVector, w: MukaiVector) -> int:
    """The Mukai pairing ``2kk' - r chi' - r' chi``; self-pairing is ``2 d_v``."""
    return 2 * v.k * w.k - v.r * w.chi - w.r * v.chi


def euler_pairing(v: MukaiVector, w: MukaiVector) -> int:
    """``chi(v . w) = r chi' + r' chi + 2kk'``, the quantity whose vanishing is orthogonality."""
    return v.r * w.chi + w.r * v.chi + 2 * v.k * w.k


def is_orthogonal(v: MukaiVector, w: MukaiVector) -> bool:
    return euler_pairing(v, w) == 0


def dim_invariant(v: MukaiVector) -> int:
    return v.k * v.k - v.r * v.chi


def twist(v: MukaiVector, ell: int) -> MukaiVector:
    """Tensor by ``Theta^ell``: ``(r, k + r ell, chi + 2k ell + r ell^2)``."""
    return MukaiVector(v.r, v.k + v.r * ell, v.chi + 2 * v.k * ell + v.r * ell * ell)


def dual(v: MukaiVector) -> MukaiVector:
    return MukaiVector(v.r, -v.k, v.chi)


def fm_transform(v: MukaiVector) -> MukaiVector:
    """Fourier-Mukai image, with the convention ``(r, k, chi) -> (chi, -k, r)``."""
    return MukaiVector(v.chi, -v.k, v.r)


@dataclass(frozen=True)
class AssumptionReport:
    """Flags for the standing hypotheses on a pair ``(v, w)``.

    ``flags`` maps a name to ``True``/``False``, or to ``None`` when a
    condition does not apply or cannot be decided here.
    """

    flags: dict = field(default_factory=dict)

    # Sufficient conditions reported for information; they are not hypotheses.
    INFORMATIONAL = ("hilbert_slope_bound",)

    def __getitem__(self, key):
        return self.flags[key]

    @property
    def all_hold(self) -> bool:
        return not self.failed

    @property
    def failed(self) -> list[str]:
        return sorted(
            k for k, val in self.flags.items() if val is False and k not in self.INFORMATIONAL
        )

    def to_dict(self) -> dict:
        return {k: ("unknown" if val is None else val) for k, val in sorted(self.flags.items())}


def _hilbert_slope_bound(v: MukaiVector, w: MukaiVector):
    # Rank-one shape v = (1, 0, -n), w = (h, k, n h): sufficient vanishing when k >= (n + 2) h.
    if v.r != 1 or v.k != 0 or v.chi >= 0:
        return None
    n = -v.chi
    h = w.r
    if h < 1 or w.chi != n * h:
        return None
    return w.k >= (n + 2) * h


def check_assumptions(v: MukaiVector, w: MukaiVector) -> AssumptionReport:
    r, k, chi = v.as_tuple()
    r2, k2, chi2 = w.as_tuple()
    dv, dw = dim_invariant(v), dim_invariant(w)
    t = r * k2 + r2 * k
    s = chi * k2 + chi2 * k
    orth = is_orthogonal(v, w)
    flags = {
        "v_primitive": v.is_primitive(),
        "w_primitive": w.is_primitive(),
        "d_v_positive": dv > 0,
        "d_w_positive": dw > 0,
        "d_v_odd": dv % 2 == 1,
        "d_w_odd": dw % 2 == 1,
        "orthogonal": orth,
        "c1_positive": t > 0,
        "dual_c1_negative": s < 0,
        "product_identity": (t * s + (r * chi2 + k * k2) ** 2 == -dv * dw) if orth else None,
        "rank_identity": (r2 * r2 * dv + r * r * dw == t * t) if orth else None,
        "hilbert_slope_bound": _hilbert_slope_bound(v, w),
        "higher_cohomology_vanishes": None,
    }
    return AssumptionReport(flags)
