"""Rational polyhedral cones and affine semigroups, in exact arithmetic.

Cones live in Q^n but are described by integer data: primitive ray generators
and primitive integer facet normals.  Non-pointed cones are supported; their
lineality space shows up as +/- pairs in the generator list and as +/- pairs
of normals in the H-representation.

Rank limits: face lattices and memberships work at any small rank, the
Hilbert-basis based saturation test is limited to ambient rank 4 (with an
exact fast path for linearly independent generator sets at any rank).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Optional, Sequence

from .errors import InvalidInputError, UnsupportedRankError
from .linalg import (
    Vec,
    dot,
    hnf_with_transform,
    integer_kernel,
    inverse_unimodular,
    is_zero,
    lattice_basis,
    lattice_index,
    lattice_solve,
    mat_rank,
    nonneg_rational_combination,
    primitive,
    snf_with_transforms,
    vec_add,
    vec_neg,
    vec_sub,
)

DEFAULT_MEMBERSHIP_BUDGET = 10**6
_HILBERT_POINT_CAP = 2 * 10**6
SATURATION_RANK_LIMIT = 4


@dataclass(frozen=True)
class PolyCone:
    """A rational polyhedral cone with both V- and H-representations.

    ray_generators: primitive integer vectors; for a non-pointed cone the
    list contains a +/- basis of the lineality space next to one canonical
    representative per extreme ray of the pointed quotient.
    facet_normals: primitive integer covectors n with <n, x> >= 0 on the cone;
    the list is irredundant except that a non-solid cone carries +/- pairs
    cutting out its linear span.
    """

    ambient_rank: int
    ray_generators: tuple[Vec, ...]
    facet_normals: tuple[Vec, ...]

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            raise InvalidInputError(f"vector length {len(v)} != rank {self.ambient_rank}")
        return all(dot(n, v) >= 0 for n in self.facet_normals)

    def lineality_basis(self) -> list[Vec]:
        return integer_kernel(self.facet_normals, self.ambient_rank)


@dataclass(frozen=True)
class Face:
    """A face of a cone, identified by the ray generators lying on it."""

    generator_indices: tuple[int, ...]
    dim: int


@dataclass(frozen=True)
class AffineSemigroup:
    """Finitely generated subsemigroup of Z^rank (0 always counts as a member)."""

    rank: int
    generators: tuple[Vec, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidInputError("semigroup rank must be >= 1")
        if not self.generators:
            raise InvalidInputError("semigroup needs at least one generator")
        for g in self.generators:
            if len(g) != self.rank:
                raise InvalidInputError(f"generator {g} has length != rank {self.rank}")
        canon = tuple(sorted(set(tuple(g) for g in self.generators)))
        object.__setattr__(self, "generators", canon)


@dataclass(frozen=True)
class MembershipResult:
    status: str  # "yes" | "no" | "inconclusive"
    certificate: Optional[tuple[int, ...]]  # aligned with semigroup.generators


@dataclass(frozen=True)
class SaturationResult:
    status: str  # "saturated" | "not_saturated" | "inconclusive"
    witness: Optional[Vec]


@dataclass(frozen=True)
class GeneratedGroup:
    basis: tuple[Vec, ...]  # canonical HNF rows
    index: Optional[int]  # None encodes infinite index (rank deficient)


# ---------------------------------------------------------------------------
# double description


def _dd_vrep(constraints: Sequence[Vec], rank: int) -> tuple[list[Vec], list[Vec]]:
    """V-representation (lineality basis, extreme rays) of an H-cone.

    Incremental double description with the combinatorial adjacency test.
    All vectors stay integer primitive; tight-constraint bitmasks ride along
    with each ray and are exact (see the positivity argument in the combo
    step: a combined ray is tight exactly where both parents are).
    """
    cons = sorted(set(primitive(c) for c in constraints if not is_zero(c)))
    lin: list[Vec] = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    rays: list[tuple[Vec, int]] = []  # (vector, tight bitmask over processed cons)
    for idx, a in enumerate(cons):
        hit = next((k for k, b in enumerate(lin) if dot(a, b) != 0), None)
        if hit is not None:
            b0 = lin.pop(hit)
            if dot(a, b0) < 0:
                b0 = vec_neg(b0)
            s0 = dot(a, b0)
            lin = [primitive(vec_sub(tuple(s0 * x for x in b), tuple(dot(a, b) * x for x in b0))) for b in lin]
            new_rays = []
            for r, mask in rays:
                r2 = primitive(vec_sub(tuple(s0 * x for x in r), tuple(dot(a, r) * x for x in b0)))
                new_rays.append((r2, mask | (1 << idx)))
            # b0 was in the lineality so it is orthogonal to every processed
            # constraint; its mask is exact by direct evaluation
            b0_mask = 0
            for k in range(idx):
                if dot(cons[k], b0) == 0:
                    b0_mask |= 1 << k
            new_rays.append((b0, b0_mask))
            rays = _dedupe_rays(new_rays)
            continue
        plus = [(r, m) for r, m in rays if dot(a, r) > 0]
        zero = [(r, m | (1 << idx)) for r, m in rays if dot(a, r) == 0]
        minus = [(r, m) for r, m in rays if dot(a, r) < 0]
        if not minus:
            rays = _dedupe_rays(plus + zero)
            continue
        keep = plus + zero
        combos = []
        for rp, mp in plus:
            for rm, mm in minus:
                common = mp & mm
                if any(
                    (common & m3) == common
                    for r3, m3 in rays
                    if r3 != rp and r3 != rm
                ):
                    continue  # not adjacent
                sp, sm = dot(a, rp), dot(a, rm)
                w = primitive(vec_add(tuple(sp * x for x in rm), tuple(-sm * x for x in rp)))
                combos.append((w, (common | (1 << idx))))
        rays = _dedupe_rays(keep + combos)
    return [primitive(b) for b in lin], [r for r, _ in sorted(rays)]


def _dedupe_rays(entries):
    seen = {}
    for r, m in entries:
        if r in seen:
            seen[r] |= m
        else:
            seen[r] = m
    return [(r, seen[r]) for r in sorted(seen)]


def _orthogonalize(basis: Sequence[Vec]) -> list[tuple[Fraction, ...]]:
    out: list[tuple[Fraction, ...]] = []
    for b in basis:
        v = [Fraction(x) for x in b]
        for o in out:
            denom = dot(o, o)
            if denom:
                f = dot(v, o) / denom
                v = [a - f * c for a, c in zip(v, o)]
        out.append(tuple(v))
    return out


def _reduce_mod_span(v: Vec, ortho: Sequence[tuple[Fraction, ...]]) -> Vec:
    """Primitive representative of v modulo the span of `ortho` (orthogonal)."""
    w = [Fraction(x) for x in v]
    for o in ortho:
        denom = dot(o, o)
        if denom:
            f = dot(w, o) / denom
            w = [a - f * c for a, c in zip(w, o)]
    lcm = 1
    for a in w:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    return primitive(tuple(int(a * lcm) for a in w))


def cone_from_generators(generators: Sequence[Sequence[int]], rank: int) -> PolyCone:
    """Minimal V-representation plus facet normals of cone(generators).

    Zero generators are dropped; the zero cone (all generators zero) is legal
    and comes back with +/- unit normals and no rays.
    """
    if rank < 1:
        raise InvalidInputError("cone rank must be >= 1")
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise InvalidInputError("cone needs at least one generator")
    for g in gens:
        if len(g) != rank:
            raise InvalidInputError(f"generator {g} has length != rank {rank}")
    primitive_gens = sorted(set(primitive(g) for g in gens if not is_zero(g)))
    # H-representation: V-rep of the dual cone {y : <y, g> >= 0}
    lin_d, rays_d = _dd_vrep(primitive_gens, rank)
    normals = sorted(set(rays_d) | set(lin_d) | set(vec_neg(b) for b in lin_d))
    # minimal V-representation back from the facets
    lin_k, rays_k = _dd_vrep(normals, rank)
    lin_lattice = integer_kernel(normals, rank)
    ortho = _orthogonalize(lin_lattice)
    ray_reps = sorted(set(_reduce_mod_span(r, ortho) for r in rays_k))
    gens_out = sorted(set(ray_reps) | set(lin_lattice) | set(vec_neg(b) for b in lin_lattice))
    return PolyCone(rank, tuple(gens_out), tuple(normals))


def cone_from_constraints(normals: Sequence[Sequence[int]], rank: int) -> PolyCone:
    """The cone {v : <n, v> >= 0 for every n}, canonicalized.

    No constraints means the whole space.  Intersections come for free:
    concatenate the two constraint lists.
    """
    if rank < 1:
        raise InvalidInputError("cone rank must be >= 1")
    rows = []
    for n in normals:
        row = tuple(int(x) for x in n)
        if len(row) != rank:
            raise InvalidInputError(f"constraint {row} has length != rank {rank}")
        rows.append(row)
    lin, rays = _dd_vrep(rows, rank)
    gens = list(rays) + list(lin) + [vec_neg(b) for b in lin]
    if not gens:
        gens = [(0,) * rank]
    return cone_from_generators(gens, rank)


def is_pointed(cone: PolyCone) -> bool:
    """True when the cone contains no line."""
    return not cone.lineality_basis()


def face_lattice(cone: PolyCone) -> tuple[Face, ...]:
    """All faces, each as the set of ray generators lying on it.

    Faces are exactly the intersections of facets (the empty intersection
    being the cone itself), so closing the facet incidence sets under
    pairwise intersection enumerates them.  dim({0}) = 0.
    """
    gens = cone.ray_generators
    top = frozenset(range(len(gens)))
    incidences = set()
    for n in cone.facet_normals:
        incidences.add(frozenset(i for i, g in enumerate(gens) if dot(n, g) == 0))
    faces = {top} | incidences
    frontier = set(faces)
    while frontier:
        fresh = set()
        for f in frontier:
            for g in incidences:
                h = f & g
                if h not in faces:
                    fresh.add(h)
        faces |= fresh
        frontier = fresh
    out = []
    for f in faces:
        vecs = [gens[i] for i in sorted(f)]
        out.append(Face(tuple(sorted(f)), mat_rank(vecs) if vecs else 0))
    out.sort(key=lambda face: (face.dim, face.generator_indices))
    return tuple(out)


# ---------------------------------------------------------------------------
# semigroup membership


@lru_cache(maxsize=256)
def _cone_data(sg: AffineSemigroup):
    gens = [g for g in sg.generators if not is_zero(g)]
    cone = cone_from_generators(gens or [tuple(0 for _ in range(sg.rank))], sg.rank)
    lin = cone.lineality_basis()
    in_lineality = []
    transverse = []
    for g in gens:
        (in_lineality if all(dot(n, g) == 0 for n in cone.facet_normals) else transverse).append(g)
    phi = tuple(sum(n[i] for n in cone.facet_normals) for i in range(sg.rank))
    return gens, cone, lin, in_lineality, transverse, phi


def _negation_certificates(lineal_gens: list[Vec]) -> Optional[list[tuple[int, ...]]]:
    """For each b_j a nonneg integer combination of lineal_gens equal to -b_j.

    Exists because the lineality part of the generator set positively spans
    the lineality space.  Returns None only when the search is skipped for an
    oversized generator list.
    """
    if len(lineal_gens) > 14:
        return None
    certs = []
    for j, b in enumerate(lineal_gens):
        lam = nonneg_rational_combination(lineal_gens, vec_neg(b))
        if lam is None:
            return None  # should not happen; bail out honestly
        d = 1
        for f in lam:
            d = d * f.denominator // math.gcd(d, f.denominator)
        cert = [int(f * d) for f in lam]
        cert[j] += d - 1  # -d*b + (d-1)*b = -b
        certs.append(tuple(cert))
    return certs


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


class _SearchInconclusive(Exception):
    pass


def semigroup_member(
    sg: AffineSemigroup, v: Sequence[int], budget: int = DEFAULT_MEMBERSHIP_BUDGET
) -> MembershipResult:
    """Decide whether v is a non-negative integer combination of the generators.

    "no" is only returned when the bounded search provably covers all
    solutions: a strictly positive functional on the pointed quotient bounds
    every coefficient outside the lineality part, and inside the lineality
    the generated set is a full subgroup, so membership there is a lattice
    solve.  When the budget runs out first the verdict is "inconclusive".
    """
    v = tuple(int(x) for x in v)
    if len(v) != sg.rank:
        raise InvalidInputError(f"vector length {len(v)} != rank {sg.rank}")
    zeros = tuple(0 for _ in sg.generators)
    if is_zero(v):
        return MembershipResult("yes", zeros)
    gens, cone, lin, lineal_gens, transverse, phi = _cone_data(sg)
    if not gens:
        return MembershipResult("no", None)  # semigroup is {0}
    if lattice_solve(gens, v) is None:
        return MembershipResult("no", None)
    if not cone.contains(v):
        return MembershipResult("no", None)

    neg_certs = _negation_certificates(lineal_gens) if lineal_gens else []
    counter = _Budget(budget)
    phi_gens = [dot(phi, g) for g in transverse]
    assert all(p > 0 for p in phi_gens), "functional must be positive off the lineality"

    found: list[tuple[int, ...]] = []

    def leaf(residual: Vec, coeffs: list[int]) -> bool:
        if lineal_gens:
            z = lattice_solve(lineal_gens, residual)
            if z is None:
                return False
            z = list(z)
            if any(c < 0 for c in z):
                if neg_certs is None:
                    raise _SearchInconclusive
                while True:
                    j = next((i for i, c in enumerate(z) if c < 0), None)
                    if j is None:
                        break
                    k = -z[j]
                    cert = neg_certs[j]
                    z = [c + k * (cert[i] + (1 if i == j else 0)) for i, c in enumerate(z)]
            found.append(tuple(coeffs) + tuple(z))
            return True
        if is_zero(residual):
            found.append(tuple(coeffs))
            return True
        return False

    # Whether transverse[i:] plus the lineality part can absorb a residual
    # does not depend on how we got there, so failed states are cached.
    dead: set[tuple[int, Vec]] = set()

    def dfs(i: int, residual: Vec, coeffs: list[int]) -> bool:
        key = (i, residual)
        if key in dead:
            return False
        if not counter.spend():
            raise _SearchInconclusive
        if i == len(transverse):
            if leaf(residual, coeffs):
                return True
            dead.add(key)
            return False
        pr = dot(phi, residual)
        if pr < 0:
            dead.add(key)
            return False
        bound = pr // phi_gens[i]
        g = transverse[i]
        cur = residual
        for c in range(bound + 1):
            coeffs.append(c)
            if dfs(i + 1, cur, coeffs):
                return True
            coeffs.pop()
            cur = vec_sub(cur, g)
        dead.add(key)
        return False

    try:
        ok = dfs(0, v, [])
    except _SearchInconclusive:
        return MembershipResult("inconclusive", None)
    if not ok:
        return MembershipResult("no", None)
    # align the certificate with sg.generators (zero generators get 0)
    combo = found[0]
    order = transverse + lineal_gens
    cert = [0] * len(sg.generators)
    for g, c in zip(order, combo):
        cert[sg.generators.index(g)] += c
    total = tuple(0 for _ in range(sg.rank))
    for g, c in zip(sg.generators, cert):
        total = vec_add(total, tuple(c * x for x in g))
    assert total == v, "certificate failed exact re-evaluation"
    return MembershipResult("yes", tuple(cert))


def generated_group(sg: AffineSemigroup) -> GeneratedGroup:
    """Subgroup of Z^rank generated by the semigroup, with its index."""
    basis = lattice_basis([g for g in sg.generators if not is_zero(g)])
    return GeneratedGroup(tuple(basis), lattice_index(basis, sg.rank))


# ---------------------------------------------------------------------------
# Hilbert bases and saturation


class _EnumerationCapped(Exception):
    pass


def hilbert_basis_pointed(rays: Sequence[Vec], normals: Sequence[Vec], point_cap: int = _HILBERT_POINT_CAP) -> list[Vec]:
    """Hilbert basis of cone(rays) cap Z^n for a pointed cone.

    Every irreducible element lies in the zonotope sum of the extreme rays
    (Caratheodory plus the usual lambda < 1 reduction), so scanning the
    integer box around that zonotope is exhaustive.
    """
    rays = [primitive(r) for r in rays if not is_zero(r)]
    if not rays:
        return []
    n = len(rays[0])
    lo = [sum(min(0, r[i]) for r in rays) for i in range(n)]
    hi = [sum(max(0, r[i]) for r in rays) for i in range(n)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
        if size > point_cap:
            raise _EnumerationCapped
    phi = tuple(sum(nm[i] for nm in normals) for i in range(n))
    pool = []
    for pt in _cartesian(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if is_zero(pt):
            continue
        if all(dot(nm, pt) >= 0 for nm in normals):
            pool.append(pt)
    pool.sort(key=lambda p: (dot(phi, p), p))
    irreducible: list[Vec] = []
    for p in pool:
        reducible = False
        for q in irreducible:
            d = vec_sub(p, q)
            if is_zero(d):
                continue
            if all(dot(nm, d) >= 0 for nm in normals):
                reducible = True
                break
        if not reducible:
            irreducible.append(p)
    return sorted(irreducible)


def _babai_reduce(v: Vec, basis: Sequence[Vec]) -> Vec:
    """Shift v by lattice vectors to shrink coordinates (deterministic rounding)."""
    out = v
    for b in basis:
        denom = dot(b, b)
        if denom == 0:
            continue
        num = dot(out, b)
        # round half toward negative infinity, deterministically
        q = (2 * num + denom) // (2 * denom)
        if q:
            out = vec_sub(out, tuple(q * x for x in b))
    return out


def cone_lattice_monoid_generators(cone: PolyCone) -> list[Vec]:
    """Generators of the monoid cone cap Z^rank (Gordan's finite set).

    Splits off the lineality lattice (contributing a +/- basis), projects to
    the pointed quotient with a Smith-normal-form change of coordinates, and
    lifts the quotient Hilbert basis back.
    """
    n = cone.ambient_rank
    lin = cone.lineality_basis()
    s = len(lin)
    if s == 0:
        rays = [g for g in cone.ray_generators]
        return hilbert_basis_pointed(rays, cone.facet_normals)
    if s == n:
        units = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        return sorted(units + [vec_neg(u) for u in units])
    # columns of W^T span the lineality lattice; P * W^T * Q = D with unit
    # diagonal because the lattice is saturated
    wt = [tuple(b[i] for b in lin) for i in range(n)]
    d, p, _q = snf_with_transforms(wt)
    for k in range(s):
        assert abs(d[k][k]) == 1, "lineality lattice must be saturated"
    p_inv = inverse_unimodular(p)

    def project(x: Vec) -> Vec:
        y = tuple(dot(p[i], x) for i in range(n))
        return y[s:]

    quotient_rays = sorted(set(primitive(project(r)) for r in cone.ray_generators if not is_zero(project(r))))
    if not quotient_rays:
        quotient_hb: list[Vec] = []
    else:
        qcone = cone_from_generators(quotient_rays, n - s)
        quotient_hb = hilbert_basis_pointed(qcone.ray_generators, qcone.facet_normals)
    lifts = []
    for h in quotient_hb:
        y = tuple([0] * s) + h
        x = tuple(sum(p_inv[i][k] * y[k] for k in range(n)) for i in range(n))
        lifts.append(_babai_reduce(x, lin))
    out = set(lifts)
    for b in lin:
        out.add(b)
        out.add(vec_neg(b))
    return sorted(out)


def is_saturated(
    sg: AffineSemigroup, budget: int = DEFAULT_MEMBERSHIP_BUDGET
) -> SaturationResult:
    """Compare the semigroup with cone(sg) cap ZL, inside the group ZL it generates.

    A witness is a monoid generator of the saturation that fails membership.
    Linearly independent generator sets are saturated outright (coordinates
    in the generated lattice are unique, so rational membership forces
    integral membership); that fast path works at any rank.  The general
    path is limited to ambient rank 4.
    """
    gens = [g for g in sg.generators if not is_zero(g)]
    if not gens:
        return SaturationResult("saturated", None)
    if mat_rank(gens) == len(gens):
        return SaturationResult("saturated", None)
    if sg.rank > SATURATION_RANK_LIMIT:
        raise UnsupportedRankError(
            f"saturation test limited to rank {SATURATION_RANK_LIMIT} (got {sg.rank})"
        )
    basis = lattice_basis(gens)
    coords = []
    for g in gens:
        c = lattice_solve(basis, g)
        assert c is not None
        coords.append(c)
    inner_rank = len(basis)
    inner_cone = cone_from_generators(coords, inner_rank)
    try:
        monoid_gens = cone_lattice_monoid_generators(inner_cone)
    except _EnumerationCapped:
        return SaturationResult("inconclusive", None)
    saw_inconclusive = False
    for m in monoid_gens:
        ambient = tuple(0 for _ in range(sg.rank))
        for c, b in zip(m, basis):
            ambient = vec_add(ambient, tuple(c * x for x in b))
        res = semigroup_member(sg, ambient, budget=budget)
        if res.status == "no":
            return SaturationResult("not_saturated", ambient)
        if res.status == "inconclusive":
            saw_inconclusive = True
    if saw_inconclusive:
        return SaturationResult("inconclusive", None)
    return SaturationResult("saturated", None)
