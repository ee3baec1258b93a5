"""Weight multiplicities and tensor product decompositions.

Dimensions come from the Weyl product formula, multiplicities from the
Freudenthal recursion over dominant weights (extended to the full orbit by
Weyl invariance), and tensor products from the alternating character shift:
each weight nu of the second factor contributes det(w) at w(lambda+rho+nu)-rho,
with wall hits contributing nothing.  All arithmetic is integral; inner
products use the weight-space Gram matrix cleared of denominators, which
cancels from every identity used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidInputError, RepresentationTooLargeError
from .linalg import Vec, matrix_inverse_fraction
from .root_system import GroupType, cartan_data, check_weight, is_dominant

DEFAULT_DIMENSION_CAP = 10**5


@dataclass(frozen=True)
class WeightMultiplicityTable:
    group: GroupType
    highest: Vec
    entries: tuple[tuple[Vec, int], ...]  # sorted by weight

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, w: Vec) -> int:
        return dict(self.entries).get(tuple(w), 0)


@dataclass(frozen=True)
class TensorDecomposition:
    group: GroupType
    lhs: Vec
    rhs: Vec
    terms: tuple[tuple[Vec, int], ...]  # sorted by weight, all mults positive


def _require_dominant(group: GroupType, w) -> Vec:
    w = check_weight(group, w)
    if not is_dominant(group, w):
        raise InvalidInputError(f"weight {list(w)} is not dominant for {group.describe()}")
    return w


@lru_cache(maxsize=None)
def _gram_int(group: GroupType) -> tuple[tuple[int, ...], ...]:
    """Weight-space Gram matrix (omega_i, omega_j), scaled integral."""
    data = cartan_data(group)
    n = group.semisimple_rank
    if n == 0:
        return ()
    inv = matrix_inverse_fraction(data.matrix)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = Fraction(0)
            for k in range(n):
                for l in range(n):
                    # (alpha_k, alpha_l) = lengths[k] * a[k][l] in this scale
                    s += inv[k][i] * inv[l][j] * data.lengths[k] * data.matrix[k][l]
            gram[i][j] = s
    lcm = 1
    for row in gram:
        for a in row:
            lcm = lcm * a.denominator // gcd(lcm, a.denominator)
    return tuple(tuple(int(a * lcm) for a in row) for row in gram)


def _inner(gram, u, v) -> int:
    total = 0
    for i, a in enumerate(u):
        if a:
            row = gram[i]
            for j, b in enumerate(v):
                if b:
                    total += a * row[j] * b
    return total


def _reflect_ss(matrix, w: Vec, i: int) -> Vec:
    c = w[i]
    if c == 0:
        return w
    return tuple(w[k] - c * matrix[k][i] for k in range(len(w)))


def _dominant_ss(matrix, w: Vec) -> Vec:
    cur = w
    while True:
        i = next((k for k, c in enumerate(cur) if c < 0), None)
        if i is None:
            return cur
        cur = _reflect_ss(matrix, cur, i)


def _to_dominant_with_sign(matrix, w: Vec) -> tuple[Vec, int, bool]:
    """(dominant image, reflection parity, hit_wall)."""
    cur = w
    parity = 0
    while True:
        i = next((k for k, c in enumerate(cur) if c < 0), None)
        if i is None:
            return cur, parity, any(c == 0 for c in cur)
        cur = _reflect_ss(matrix, cur, i)
        parity ^= 1


def _orbit_ss(matrix, w: Vec) -> list[Vec]:
    seen = {w}
    frontier = [w]
    n = len(w)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                r = _reflect_ss(matrix, v, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(seen)


def weyl_dim(group: GroupType, w) -> int:
    """Dimension of the irreducible module with this highest weight."""
    w = _require_dominant(group, w)
    data = cartan_data(group)
    n = group.semisimple_rank
    ss = w[:n]
    num = 1
    den = 1
    for coroot in data.positive_coroots:
        num *= sum((c + 1) * m for c, m in zip(ss, coroot))
        den *= sum(coroot)
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def _dominant_mult_table(group: GroupType, ss: Vec) -> dict[Vec, int]:
    """Freudenthal multiplicities at the dominant weights of V(ss)."""
    data = cartan_data(group)
    matrix = data.matrix
    gram = _gram_int(group)
    n = len(ss)
    inv = matrix_inverse_fraction(matrix) if n else []

    def in_root_span_nonneg(delta: Vec) -> bool:
        # simple-root coordinates of delta must be non-negative integers
        for i in range(n):
            c = sum(inv[i][j] * delta[j] for j in range(n))
            if c.denominator != 1 or c < 0:
                return False
        return True

    # all weights of the module: BFS downward from the highest weight
    weights = {ss}
    frontier = [ss]
    cols = [tuple(matrix[k][i] for k in range(n)) for i in range(n)]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                cand = tuple(a - b for a, b in zip(v, cols[i]))
                if cand in weights:
                    continue
                dom = _dominant_ss(matrix, cand)
                if in_root_span_nonneg(tuple(a - b for a, b in zip(ss, dom))):
                    weights.add(cand)
                    nxt.append(cand)
        frontier = nxt

    dominant = [w for w in weights if all(c >= 0 for c in w)]

    def depth(mu: Vec) -> int:
        d = tuple(a - b for a, b in zip(ss, mu))
        total = sum(sum(inv[i][j] * d[j] for j in range(n)) for i in range(n))
        assert total.denominator == 1
        return int(total)

    dominant.sort(key=lambda mu: (depth(mu), mu))
    rho = tuple([1] * n)
    lam_rho = tuple(a + b for a, b in zip(ss, rho))
    norm_top = _inner(gram, lam_rho, lam_rho)
    mult: dict[Vec, int] = {}
    for mu in dominant:
        if mu == ss:
            mult[mu] = 1
            continue
        acc = 0
        for beta in data.positive_roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, beta))
                if nu not in weights:
                    break
                m_nu = mult.get(_dominant_ss(matrix, nu), 0)
                if m_nu:
                    acc += _inner(gram, nu, beta) * m_nu
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        den = norm_top - _inner(gram, mu_rho, mu_rho)
        assert den > 0
        val = Fraction(2 * acc, den)
        assert val.denominator == 1 and val > 0
        mult[mu] = int(val)
    return mult


@lru_cache(maxsize=None)
def _full_mult_table(group: GroupType, ss: Vec) -> tuple[tuple[Vec, int], ...]:
    matrix = cartan_data(group).matrix
    table = _dominant_mult_table(group, ss)
    out: dict[Vec, int] = {}
    for mu, m in table.items():
        for w in _orbit_ss(matrix, mu):
            out[w] = m
    return tuple(sorted(out.items()))


def weight_multiplicities(
    group: GroupType, w, cap: int = DEFAULT_DIMENSION_CAP
) -> WeightMultiplicityTable:
    """Full weight multiplicity table of the irreducible module V(w)."""
    w = _require_dominant(group, w)
    dim = weyl_dim(group, w)
    if dim > cap:
        raise RepresentationTooLargeError(f"dimension {dim} exceeds cap {cap}")
    n = group.semisimple_rank
    central = w[n:]
    entries = [
        (ss + central, m) for ss, m in _full_mult_table(group, w[:n])
    ]
    table = WeightMultiplicityTable(group, w, tuple(sorted(entries)))
    assert table.dimension == dim
    return table


def tensor_decompose(
    group: GroupType, lhs, rhs, cap: int = DEFAULT_DIMENSION_CAP
) -> TensorDecomposition:
    """Decomposition of V(lhs) (x) V(rhs) into irreducible terms.

    Iterates over the weight table of the smaller factor (canonical choice,
    so the result is symmetric in its arguments by construction as well as
    by mathematics).
    """
    lhs = _require_dominant(group, lhs)
    rhs = _require_dominant(group, rhs)
    return _tensor_cached(group, lhs, rhs, cap)


@lru_cache(maxsize=4096)
def _tensor_cached(
    group: GroupType, lhs: Vec, rhs: Vec, cap: int
) -> TensorDecomposition:
    n = group.semisimple_rank
    central = tuple(a + b for a, b in zip(lhs[n:], rhs[n:]))
    d_l, d_r = weyl_dim(group, lhs), weyl_dim(group, rhs)
    if (d_r, rhs) < (d_l, lhs):
        big_ss, small, small_dim = lhs[:n], rhs, d_r
    else:
        big_ss, small, small_dim = rhs[:n], lhs, d_l
    if small_dim > cap:
        raise RepresentationTooLargeError(f"dimension {small_dim} exceeds cap {cap}")
    matrix = cartan_data(group).matrix
    rho = tuple([1] * n)
    acc: dict[Vec, int] = {}
    for nu, m in _full_mult_table(group, small[:n]):
        t = tuple(a + b + c for a, b, c in zip(big_ss, rho, nu))
        dom, parity, wall = _to_dominant_with_sign(matrix, t)
        if wall:
            continue
        res = tuple(a - b for a, b in zip(dom, rho))
        acc[res] = acc.get(res, 0) + (-1 if parity else 1) * m
    terms = [(ss + central, mult) for ss, mult in acc.items() if mult != 0]
    assert all(mult > 0 for _, mult in terms), "alternating sum left a negative term"
    total = sum(weyl_dim(group, wt) * mult for wt, mult in terms)
    assert total == d_l * d_r, "dimension conservation failed"
    return TensorDecomposition(group, lhs, rhs, tuple(sorted(terms)))


def xi_support(group: GroupType, lhs, rhs) -> tuple[Vec, ...]:
    """Highest weights appearing in V(lhs) (x) V(rhs), sorted."""
    return tuple(wt for wt, _ in tensor_decompose(group, lhs, rhs).terms)
