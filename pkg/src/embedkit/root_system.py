"""Reductive group combinatorics: Cartan matrices, Weyl orbits, group data.

Groups are products of simple factors of type A, B, C, D, G2 with a central
torus.  Weights are integer tuples in the basis (fundamental weights of each
simple factor in order, then central torus characters); dominance constrains
only the semisimple block.  Cartan matrices follow the Bourbaki numbering,
with entry a[i][j] = <alpha_j, alpha_i^vee>, so the coordinates of the simple
root alpha_j form column j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInputError, OrbitTooLargeError
from .linalg import Vec, matrix_inverse_fraction

DEFAULT_ORBIT_CAP = 10**6

_FAMILY_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_GROUP_RE = re.compile(r"^([ABCDG])(\d+)$")
_TORUS_RE = re.compile(r"^T(\d+)$")


@dataclass(frozen=True)
class GroupType:
    """Product of simple factors plus a central torus, e.g. A1xB2+T1."""

    factors: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    def __post_init__(self):
        for fam, rank in self.factors:
            if fam == "G":
                if rank != 2:
                    raise InvalidInputError("family G exists only in rank 2")
            elif fam in _FAMILY_MIN_RANK:
                if rank < _FAMILY_MIN_RANK[fam]:
                    raise InvalidInputError(f"family {fam} needs rank >= {_FAMILY_MIN_RANK[fam]}")
            else:
                raise InvalidInputError(f"unsupported family {fam!r} (A, B, C, D, G2 only)")
        if self.torus_rank < 0:
            raise InvalidInputError("torus rank must be >= 0")
        if self.total_rank < 1:
            raise InvalidInputError("group must have rank >= 1")

    @property
    def semisimple_rank(self) -> int:
        return sum(rank for _, rank in self.factors)

    @property
    def total_rank(self) -> int:
        return self.semisimple_rank + self.torus_rank

    @property
    def is_semisimple(self) -> bool:
        return self.torus_rank == 0 and bool(self.factors)

    def describe(self) -> str:
        ss = "x".join(f"{fam}{rank}" for fam, rank in self.factors)
        if self.torus_rank and ss:
            return f"{ss}+T{self.torus_rank}"
        if self.torus_rank:
            return f"T{self.torus_rank}"
        return ss

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        parts = [p for p in text.strip().split("+") if p]
        if not parts:
            raise InvalidInputError(f"empty group string {text!r}")
        factors: list[tuple[str, int]] = []
        torus = 0
        saw_torus = False
        for part in parts:
            tm = _TORUS_RE.match(part)
            if tm:
                if saw_torus:
                    raise InvalidInputError(f"more than one torus term in {text!r}")
                torus = int(tm.group(1))
                saw_torus = True
                continue
            for piece in part.split("x"):
                gm = _GROUP_RE.match(piece)
                if not gm:
                    raise InvalidInputError(f"cannot parse group factor {piece!r} in {text!r}")
                factors.append((gm.group(1), int(gm.group(2))))
        return cls(tuple(factors), torus)

    def factor_node_ranges(self) -> list[tuple[int, int]]:
        """1-based [start, end] node interval of each simple factor."""
        out = []
        start = 1
        for _, rank in self.factors:
            out.append((start, start + rank - 1))
            start += rank
        return out


@dataclass(frozen=True)
class GroupInfo:
    dim: int
    rank: int
    num_positive_roots: int
    complexity: int
    weyl_order: int
    orbit_param_bound: int


def _cartan_matrix_simple(family: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(i, j):
        a[i][j] = -1
        a[j][i] = -1

    for i in range(rank - 1):
        chain(i, i + 1)
    if family == "B" and rank >= 2:
        a[rank - 1][rank - 2] = -2  # alpha_rank is short
    elif family == "C" and rank >= 2:
        a[rank - 2][rank - 1] = -2  # alpha_rank is long
    elif family == "D":
        # fork: both end nodes attach to node rank-2
        a[rank - 2][rank - 1] = 0
        a[rank - 1][rank - 2] = 0
        chain(rank - 3, rank - 1)
    elif family == "G":
        a[0][1] = -3  # alpha_1 short, alpha_2 long
        a[1][0] = -1
    return a


def _root_lengths(family: str, rank: int) -> list[int]:
    """Squared-length halves of the simple roots, up to one overall scale."""
    if family == "B":
        return [2] * (rank - 1) + [1]
    if family == "C":
        return [1] * (rank - 1) + [2]
    if family == "G":
        return [1, 3]
    return [1] * rank


def _simple_weyl_order(family: str, rank: int) -> int:
    import math

    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    return 12  # G2


@dataclass(frozen=True)
class CartanData:
    """Per-group root data in the fundamental-weight coordinates."""

    group: GroupType
    matrix: tuple[tuple[int, ...], ...]  # semisimple block
    positive_roots: tuple[Vec, ...]  # weight coordinates, semisimple block only
    positive_coroots: tuple[Vec, ...]  # <., beta^vee> pairing coefficients
    root_coords: tuple[Vec, ...]  # the same roots in simple-root coordinates
    lengths: tuple[int, ...]  # (alpha_i, alpha_i)/2 per simple root, one scale per group


@lru_cache(maxsize=None)
def cartan_data(group: GroupType) -> CartanData:
    n = group.semisimple_rank
    mat = [[0] * n for _ in range(n)]
    lengths: list[int] = []
    offset = 0
    for fam, rank in group.factors:
        block = _cartan_matrix_simple(fam, rank)
        for i in range(rank):
            for j in range(rank):
                mat[offset + i][offset + j] = block[i][j]
        lengths.extend(_root_lengths(fam, rank))
        offset += rank
    matrix = tuple(tuple(r) for r in mat)
    pos_roots, pos_coroots, root_coords = _positive_roots(matrix, lengths, n)
    return CartanData(group, matrix, pos_roots, pos_coroots, root_coords, tuple(lengths))


def _positive_roots(matrix, lengths, n):
    """Height induction: alpha-string condition p - <beta, alpha_i^vee> >= 1."""
    if n == 0:
        return (), (), ()
    cols = [tuple(matrix[i][j] for i in range(n)) for j in range(n)]
    simple_rc = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    known = {simple_rc[j]: cols[j] for j in range(n)}
    by_height = {1: list(range(n))}
    roots_rc = list(simple_rc)
    roots_wt = list(cols)
    height = 1
    while by_height.get(height):
        for idx in by_height[height]:
            rc = roots_rc[idx]
            wt = roots_wt[idx]
            for i in range(n):
                q = wt[i]
                p = 0
                probe = list(rc)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in known:
                        break
                    p += 1
                if p - q >= 1:
                    up = list(rc)
                    up[i] += 1
                    up_t = tuple(up)
                    if up_t not in known:
                        up_wt = tuple(a + b for a, b in zip(wt, cols[i]))
                        known[up_t] = up_wt
                        roots_rc.append(up_t)
                        roots_wt.append(up_wt)
                        by_height.setdefault(height + 1, []).append(len(roots_rc) - 1)
        height += 1
    coroots = []
    for rc in roots_rc:
        dbeta = _root_square(rc, matrix, lengths)
        coroot = tuple(Fraction(c * lengths[i], 1) / dbeta for i, c in enumerate(rc))
        assert all(f.denominator == 1 for f in coroot), "coroot must be integral"
        coroots.append(tuple(int(f) for f in coroot))
    order = sorted(range(len(roots_rc)), key=lambda k: (sum(roots_rc[k]), roots_rc[k]))
    return (
        tuple(roots_wt[k] for k in order),
        tuple(coroots[k] for k in order),
        tuple(roots_rc[k] for k in order),
    )


def _root_square(rc, matrix, lengths):
    """(beta, beta)/2 in the scale where (alpha_i, alpha_i)/2 = lengths[i]."""
    n = len(rc)
    total = Fraction(0)
    for i in range(n):
        for j in range(n):
            if rc[i] and rc[j]:
                total += Fraction(rc[i] * rc[j] * lengths[i] * matrix[i][j], 2)
    return total


def check_weight(group: GroupType, w) -> Vec:
    w = tuple(int(x) for x in w)
    if len(w) != group.total_rank:
        raise InvalidInputError(
            f"weight {list(w)} has length {len(w)}, group {group.describe()} has rank {group.total_rank}"
        )
    return w


def is_dominant(group: GroupType, w) -> bool:
    w = check_weight(group, w)
    n = group.semisimple_rank
    return all(c >= 0 for c in w[:n])


def _reflect(group: GroupType, w: Vec, i: int) -> Vec:
    """Simple reflection s_i; i is 0-based into the semisimple block."""
    data = cartan_data(group)
    c = w[i]
    if c == 0:
        return w
    col = tuple(data.matrix[k][i] for k in range(group.semisimple_rank))
    n = group.semisimple_rank
    return tuple(w[k] - c * col[k] for k in range(n)) + w[n:]


def weyl_orbit(group: GroupType, w, cap: int = DEFAULT_ORBIT_CAP) -> tuple[Vec, ...]:
    """Full Weyl orbit of a weight (central block is fixed by every reflection)."""
    w = check_weight(group, w)
    n = group.semisimple_rank
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                r = _reflect(group, v, i)
                if r not in seen:
                    seen.add(r)
                    if len(seen) > cap:
                        raise OrbitTooLargeError(f"orbit exceeds cap {cap}")
                    nxt.append(r)
        frontier = nxt
    return tuple(sorted(seen))


def dominant_representative(group: GroupType, w) -> Vec:
    w = check_weight(group, w)
    n = group.semisimple_rank
    cur = w
    while True:
        i = next((k for k in range(n) if cur[k] < 0), None)
        if i is None:
            return cur
        cur = _reflect(group, cur, i)


def dual_weight(group: GroupType, w) -> Vec:
    """Highest weight of the dual representation: -w0 on the semisimple block,
    negation on the central block."""
    w = check_weight(group, w)
    return dominant_representative(group, tuple(-x for x in w))


@lru_cache(maxsize=None)
def group_info(group: GroupType) -> GroupInfo:
    data = cartan_data(group)
    npos = len(data.positive_roots)
    dim = group.total_rank + 2 * npos
    order = 1
    for fam, rank in group.factors:
        order *= _simple_weyl_order(fam, rank)
    return GroupInfo(
        dim=dim,
        rank=group.total_rank,
        num_positive_roots=npos,
        complexity=npos,
        weyl_order=order,
        orbit_param_bound=max(0, npos - 1),
    )


@lru_cache(maxsize=None)
def _inverse_cartan(group: GroupType) -> tuple[tuple[Fraction, ...], ...]:
    data = cartan_data(group)
    if not data.matrix:
        return ()
    return tuple(matrix_inverse_fraction(data.matrix))


def root_coordinates(group: GroupType, delta: Vec) -> tuple[Fraction, ...] | None:
    """Simple-root coordinates of a semisimple-block vector, if in the root span."""
    inv = _inverse_cartan(group)
    n = group.semisimple_rank
    if len(delta) != n:
        raise InvalidInputError("expected a semisimple-block vector")
    # delta = A n  =>  n = A^{-1} delta; A^{-1} columns indexed like weights
    return tuple(
        sum(inv[i][j] * delta[j] for j in range(n)) for i in range(n)
    ) if n else ()


def simple_roots(group: GroupType) -> tuple[Vec, ...]:
    """Simple roots in full weight coordinates (central block zero)."""
    data = cartan_data(group)
    n = group.semisimple_rank
    z = group.torus_rank
    out = []
    for j in range(n):
        col = tuple(data.matrix[i][j] for i in range(n)) + tuple([0] * z)
        out.append(col)
    return tuple(out)
