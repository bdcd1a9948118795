"""Neron-Severi coordinates on ``A x A^`` and the action of isogenies.

Classes are written ``u*Theta + v*Theta^ + h*P`` and stored as columns
``(u, v, h)``.  An integer matrix ``M = [[a, b], [c, d]]`` defines an
isogeny ``rho_M``; its pullback acts on columns by the 3x3 matrix ``R(M)``.
Every intersection number needed here factors through the quartic form
``Q(u, v, h) = (uv + h^2)^2``.

The ``circ`` operation negates ``b``.  Pullbacks compose contravariantly
only after conjugating by it: ``R((MN)circ) = R(N circ) R(M circ)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SingularIsogenyError
from .mukai import MukaiVector

__all__ = [
    "NsClass",
    "IsogenyMatrix",
    "circ",
    "euler_char",
    "quartic_form",
    "pullback_matrix",
    "pullback_matrix_inverse",
    "pullback_determinant",
    "compose_circ",
    "phi_matrix",
    "psi_matrix",
    "isogeny_degree",
    "hilbert_theta_coords",
    "mat_mul",
    "mat_vec",
    "identity",
    "parse_fraction",
    "format_fraction",
]


def parse_fraction(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise DomainError(f"not a rational number: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class NsClass:
    u: Fraction
    v: Fraction
    h: Fraction

    def __post_init__(self):
        for name in ("u", "v", "h"):
            object.__setattr__(self, name, parse_fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "NsClass":
        parts = text.split(",")
        if len(parts) != 3:
            raise DomainError(f"expected three comma-separated rationals, got {text!r}")
        return cls(*parts)

    @classmethod
    def from_json(cls, data) -> "NsClass":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise DomainError(f"expected [u, v, h], got {data!r}")
        return cls(*data)

    def to_json(self) -> list[str]:
        return [format_fraction(x) for x in self.as_tuple()]

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.u, self.v, self.h)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.as_tuple())

    def scale(self, s) -> "NsClass":
        return NsClass(self.u * s, self.v * s, self.h * s)


@dataclass(frozen=True)
class IsogenyMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int):
                raise DomainError(f"matrix entry {name} must be an integer, got {val!r}")

    @classmethod
    def parse(cls, text: str) -> "IsogenyMatrix":
        parts = text.split(",")
        if len(parts) != 4:
            raise DomainError(f"expected a,b,c,d, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            raise DomainError(f"non-integer matrix entry in {text!r}") from exc

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other: "IsogenyMatrix") -> "IsogenyMatrix":
        return IsogenyMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def to_json(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY2 = IsogenyMatrix(1, 0, 0, 1)


def circ(m: IsogenyMatrix) -> IsogenyMatrix:
    return IsogenyMatrix(m.a, -m.b, m.c, m.d)


def identity(n: int = 3):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][t] * y[t][j] for t in range(len(y))) for j in range(len(y[0])))
        for i in range(len(x))
    )


def mat_vec(x, vec):
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in x)


def quartic_form(x) -> Fraction:
    """``(uv + h^2)^2`` for a class or a plain coordinate triple."""
    u, v, h = x.as_tuple() if isinstance(x, NsClass) else x
    return (u * v + h * h) ** 2


def euler_char(cls: NsClass) -> int:
    """Euler characteristic of a line bundle with the given class."""
    if not cls.is_integral():
        raise DomainError(f"class {cls.to_json()} is not integral")
    return int(quartic_form(cls))


def pullback_matrix(m: IsogenyMatrix):
    a, b, c, d = m.a, m.b, m.c, m.d
    return (
        (a * a, -c * c, 2 * a * c),
        (-b * b, d * d, 2 * b * d),
        (-a * b, -c * d, a * d - b * c),
    )


def pullback_determinant(m: IsogenyMatrix) -> int:
    """``det R(M) = (ad + bc)^3``."""
    return (m.a * m.d + m.b * m.c) ** 3


def pullback_matrix_inverse(m: IsogenyMatrix):
    a, b, c, d = m.a, m.b, m.c, m.d
    s = a * d + b * c
    if s == 0:
        raise SingularIsogenyError(f"ad + bc = 0 for {m.to_json()}; pullback matrix is singular")
    scale = Fraction(1, s * s)
    raw = (
        (d * d, -c * c, -2 * c * d),
        (-b * b, a * a, -2 * a * b),
        (b * d, a * c, a * d - b * c),
    )
    return tuple(tuple(scale * x for x in row) for row in raw)


def compose_circ(m: IsogenyMatrix, n: IsogenyMatrix) -> IsogenyMatrix:
    """The product ``MN``, so that ``rho_{M circ} o rho_{N circ} = rho_{(MN) circ}``.

    Consequently ``pullback_matrix(circ(MN)) == R(circ N) @ R(circ M)``.
    """
    return m @ n


def phi_matrix(p) -> IsogenyMatrix:
    """``[[h, -v], [u, h]]`` for an integral class ``(u, v, h)``; det is ``uv + h^2``."""
    u, v, h = p.as_tuple()
    if any(Fraction(x).denominator != 1 for x in (u, v, h)):
        raise DomainError("phi_matrix needs integral coordinates")
    u, v, h = int(u), int(v), int(h)
    return IsogenyMatrix(h, -v, u, h)


def psi_matrix(vec: MukaiVector) -> IsogenyMatrix:
    """``[[-chi, -k], [k, r]]``; det is ``d_v``."""
    return IsogenyMatrix(-vec.chi, -vec.k, vec.k, vec.r)


def isogeny_degree(m: IsogenyMatrix) -> int:
    det = m.det
    if det == 0:
        raise SingularIsogenyError(f"det = 0 for {m.to_json()}")
    return det**4


def hilbert_theta_coords(w: MukaiVector, n: int) -> tuple[int, int, int, int]:
    """Theta class on ``A^[n] x A^`` in the basis ``{Theta_(n), M, Theta^, (a,1)^*P}``.

    ``M`` is half the exceptional divisor.  ``n`` only names the Hilbert
    scheme; the coordinates depend on ``w`` alone.
    """
    if n < 1:
        raise DomainError("n must be positive")
    return (w.k, w.r, -w.k, w.r)
