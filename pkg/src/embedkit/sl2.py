"""Normal affine SL(2)-embeddings, classified by a height h = p/q in (0,1].

The embedding with height h carries the monomial algebra generated by the
lattice points (i, j) with j/i <= h, and its orbit structure depends only on
whether h = 1 (two orbits, smooth) or h < 1 (three orbits, an isolated
singular fixed point, and a boundary orbit with unipotent stabilizer of
index p+q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, NotAHeightAlgebraError
from .lattice_cone import hilbert_basis_pointed


@dataclass(frozen=True)
class Height:
    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise InvalidInputError("height numerator/denominator must be integers")
        if not (0 < self.p <= self.q):
            raise InvalidInputError(f"height {self.p}/{self.q} not in (0, 1]")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidInputError(f"height {self.p}/{self.q} not in lowest terms")

    @classmethod
    def parse(cls, text: str) -> "Height":
        s = text.strip()
        try:
            if "/" in s:
                p_str, q_str = s.split("/", 1)
                p, q = int(p_str), int(q_str)
            else:
                p, q = int(s), 1
        except ValueError:
            raise InvalidInputError(f"cannot parse height {text!r}") from None
        if q <= 0 or p <= 0:
            raise InvalidInputError(f"height must be positive, got {text!r}")
        g = math.gcd(p, q)
        return cls(p // g, q // g)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return "1" if self.p == self.q else f"{self.p}/{self.q}"


@dataclass(frozen=True)
class MonomialExponent:
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.j < 0:
            raise InvalidInputError(f"exponents must be non-negative, got ({self.i}, {self.j})")


@dataclass(frozen=True)
class OrbitStructure:
    orbits: tuple[str, ...]
    smooth: bool


def orbit_structure(h: Height) -> OrbitStructure:
    """Orbit decomposition of the embedding with height h, open orbit first."""
    if h.p == h.q:
        return OrbitStructure(("SL(2)", "SL(2)/T"), smooth=True)
    return OrbitStructure(("SL(2)", f"SL(2)/U_{h.p + h.q}", "pt"), smooth=False)


def height_algebra_basis(h: Height) -> list[MonomialExponent]:
    """Minimal monomial generators of {(i, j) >= 0 : q*j <= p*i}.

    The semigroup is the set of lattice points of the pointed plane cone
    spanned by (1, 0) and (q, p), so its Hilbert basis is the answer.
    """
    rays = [(1, 0), (h.q, h.p)]
    normals = [(0, 1), (h.p, -h.q)]
    basis = hilbert_basis_pointed(rays, normals)
    return [MonomialExponent(i, j) for i, j in sorted(basis)]


def height_from_monomials(gens: list[MonomialExponent]) -> Height:
    """The least height h with every generator inside the h-algebra."""
    if not gens:
        raise InvalidInputError("need at least one monomial")
    best = Fraction(0)
    for g in gens:
        if g.i == 0:
            raise NotAHeightAlgebraError(f"monomial A^0 B^{g.j} lies in no height algebra")
        best = max(best, Fraction(g.j, g.i))
    if best == 0:
        raise NotAHeightAlgebraError("all ratios are 0 but heights must be positive")
    if best > 1:
        raise NotAHeightAlgebraError(f"ratio {best} exceeds 1")
    return Height(best.numerator, best.denominator)
