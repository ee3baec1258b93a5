"""Exact integer and rational linear algebra on small matrices.

Everything here works on tuples of Python ints (or Fractions where noted), so
results are deterministic and never see floating point.  Matrices are given as
sequences of row vectors.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Vec = tuple[int, ...]


def vec_add(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u: Sequence[int]) -> Vec:
    return tuple(-a for a in u)


def vec_scale(c: int, u: Sequence[int]) -> Vec:
    return tuple(c * a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v, strict=True))


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def primitive(v: Sequence[int]) -> Vec:
    """Divide an integer vector by the gcd of its entries (direction kept)."""
    g = 0
    for a in v:
        g = math.gcd(g, abs(a))
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def fraction_vec_to_primitive(v: Sequence[Fraction]) -> Vec:
    """Scale a rational vector by the positive lcm of denominators, then reduce."""
    lcm = 1
    for a in v:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    return primitive(tuple(int(a * lcm) for a in v))


def mat_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free Gaussian elimination."""
    work = [[Fraction(a) for a in r] for r in rows if not is_zero(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pv = work[rank][col]
        for i in range(rank + 1, len(work)):
            f = work[i][col] / pv
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[Vec], list[Vec]]:
    """Row Hermite normal form H = U * A with U unimodular.

    Returns (H, U) with H in canonical form: positive pivots, entries above a
    pivot reduced into [0, pivot).  H keeps zero rows so U stays square.
    """
    h = [list(r) for r in rows]
    m = len(h)
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    if m == 0:
        return [], []
    n = len(h[0])
    row = 0
    for col in range(n):
        if row == m:
            break
        # clear the column below `row` with Euclidean row operations
        while True:
            nz = [i for i in range(row, m) if h[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(h[i][col]), i))
            if piv != row:
                h[row], h[piv] = h[piv], h[row]
                u[row], u[piv] = u[piv], u[row]
            if len(nz) == 1:
                break
            for i in range(row + 1, m):
                if h[i][col]:
                    q = h[i][col] // h[row][col]
                    if q:
                        h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                        u[i] = [a - q * b for a, b in zip(u[i], u[row])]
        if h[row][col] != 0:
            if h[row][col] < 0:
                h[row] = [-a for a in h[row]]
                u[row] = [-a for a in u[row]]
            for i in range(row):
                q = h[i][col] // h[row][col]
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[row])]
            row += 1
    return [tuple(r) for r in h], [tuple(r) for r in u]


def lattice_basis(vectors: Sequence[Sequence[int]]) -> list[Vec]:
    """Canonical (HNF) basis of the subgroup of Z^n generated by `vectors`."""
    if not vectors:
        return []
    h, _ = hnf_with_transform(vectors)
    return [r for r in h if not is_zero(r)]


def lattice_index(basis: Sequence[Vec], rank: int) -> int | None:
    """Index of the lattice in Z^rank, or None when the rank is deficient."""
    if len(basis) != rank:
        return None
    idx = 1
    h, _ = hnf_with_transform(basis)
    rows = [r for r in h if not is_zero(r)]
    if len(rows) != rank:
        return None
    for i, r in enumerate(rows):
        piv = next(a for a in r if a != 0)
        idx *= abs(piv)
        del i
    return idx


def lattice_solve(gens: Sequence[Sequence[int]], v: Sequence[int]) -> Vec | None:
    """Integer coefficients x with sum(x_i * gens_i) = v, any sign, or None."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return None if not is_zero(v) else ()
    h, u = hnf_with_transform(gens)
    n = len(v)
    # forward substitution against the echelon rows of h
    coeff = [0] * len(h)
    rem = list(v)
    for i, row in enumerate(h):
        if is_zero(row):
            continue
        col = next(j for j in range(n) if row[j] != 0)
        if rem[col] % row[col] != 0:
            return None
        c = rem[col] // row[col]
        if c:
            rem = [a - c * b for a, b in zip(rem, row)]
        coeff[i] = c
    if not is_zero(rem):
        return None
    out = [0] * len(gens)
    for i, c in enumerate(coeff):
        if c:
            for j in range(len(gens)):
                out[j] += c * u[i][j]
    return tuple(out)


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[Vec]:
    """Canonical basis of {x in Z^n : <x, r> = 0 for every r in rows}.

    The result spans a saturated sublattice (it is the integer kernel of the
    map x -> (<x, r_i>)_i), returned in HNF form.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    # rows of U aligned with zero rows of H = U * M^T form the kernel
    mt = [tuple(r[j] for r in rows) for j in range(n)]
    h, u = hnf_with_transform(mt)
    ker = [u[i] for i in range(len(h)) if is_zero(h[i])]
    return lattice_basis(ker) if ker else []


def snf_with_transforms(
    rows: Sequence[Sequence[int]],
) -> tuple[list[Vec], list[Vec], list[Vec]]:
    """Smith normal form D = U * A * V with U, V unimodular.

    Returns (D, U, V) as row-lists; D is diagonal with divisibility
    d_1 | d_2 | ... along the diagonal.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    def diagonalize() -> int:
        t = 0
        while t < min(m, n):
            pos = [(i, j) for i in range(t, m) for j in range(t, n) if a[i][j] != 0]
            if not pos:
                break
            i0, j0 = min(pos, key=lambda p: (abs(a[p[0]][p[1]]), p))
            swap_rows(t, i0)
            swap_cols(t, j0)
            while True:
                done = True
                for i in range(t + 1, m):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        addmul_row(i, t, q)
                        if a[i][t]:
                            swap_rows(t, i)
                        done = False
                for j in range(t + 1, n):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        addmul_col(j, t, q)
                        if a[t][j]:
                            swap_cols(t, j)
                        done = False
                if done:
                    break
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            t += 1
        return t

    # diagonalize, then repair the divisibility chain and re-diagonalize; the
    # pivot gcd strictly improves, so this terminates
    while True:
        t = diagonalize()
        bad = None
        for i in range(t - 1):
            if a[i + 1][i + 1] % a[i][i] != 0:
                bad = i
                break
        if bad is None:
            break
        addmul_col(bad, bad + 1, -1)
    return [tuple(r) for r in a], [tuple(r) for r in u], [tuple(r) for r in v]


def inverse_unimodular(rows: Sequence[Vec]) -> list[Vec]:
    """Exact inverse of a unimodular integer matrix, as integer rows."""
    inv = matrix_inverse_fraction(rows)
    out = []
    for r in inv:
        assert all(a.denominator == 1 for a in r), "matrix was not unimodular"
        out.append(tuple(int(a) for a in r))
    return out


def matrix_inverse_fraction(rows: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Inverse over Q via Gauss-Jordan; raises on a singular matrix."""
    n = len(rows)
    work = [[Fraction(a) for a in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        pv = work[col][col]
        work[col] = [a / pv for a in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return [tuple(r[n:]) for r in work]


def nonneg_rational_combination(
    gens: Sequence[Vec], target: Sequence[int]
) -> tuple[Fraction, ...] | None:
    """Rational lambda >= 0 with sum(lambda_i * gens_i) = target, or None.

    Caratheodory: a feasible target lies in the cone of some linearly
    independent subset, so trying all independent subsets (sizes 1..rank of
    the span) is complete.  Intended for small generator lists only.
    """
    from itertools import combinations

    gens = [tuple(g) for g in gens]
    if is_zero(target):
        return tuple(Fraction(0) for _ in gens)
    if not gens:
        return None
    dim = mat_rank(gens)
    for size in range(1, dim + 1):
        for subset in combinations(range(len(gens)), size):
            sol = _solve_exact_nonneg([gens[i] for i in subset], target)
            if sol is not None:
                out = [Fraction(0)] * len(gens)
                for idx, lam in zip(subset, sol):
                    out[idx] = lam
                return tuple(out)
    return None


def _solve_exact_nonneg(cols: list[Vec], target: Sequence[int]):
    """Unique solution of sum(x_i cols_i) = target for independent cols, if >= 0."""
    n = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    row = 0
    piv_cols = []
    for col in range(k):
        piv = next((i for i in range(row, n) if aug[i][col] != 0), None)
        if piv is None:
            return None  # dependent subset, skip
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [a / pv for a in aug[row]]
        for i in range(n):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        piv_cols.append(col)
        row += 1
    # consistency of the remaining equations
    for i in range(row, n):
        if aug[i][k] != 0:
            return None
    sol = [aug[r][k] for r in range(k)]
    if any(s < 0 for s in sol):
        return None
    return sol
