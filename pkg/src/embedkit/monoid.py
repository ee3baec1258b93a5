"""Reductive monoid classification data: perfect semigroups and cone checks.

A finitely generated semigroup of dominant weights defines an algebraic
monoid when it is perfect (contains zero, closed under tensor-product
support) and generates the full character group.  The dual description is a
cone K that contains the negated simple roots and whose dominant part spans;
both screens live here, plus the bridge between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .lattice_cone import (
    DEFAULT_MEMBERSHIP_BUDGET,
    AffineSemigroup,
    PolyCone,
    cone_from_constraints,
    cone_lattice_monoid_generators,
    generated_group,
    semigroup_member,
)
from .linalg import Vec, mat_rank, vec_neg
from .rep_theory import xi_support
from .root_system import GroupType, check_weight, is_dominant, simple_roots

DEFAULT_MAX_NEW = 1000


@dataclass(frozen=True)
class PerfectClosureResult:
    group: GroupType
    closure_generators: tuple[Vec, ...]
    is_perfect: bool
    converged: bool
    generates_character_group: bool
    defines_monoid: bool
    is_trivial_monoid: str  # "yes" | "no" | "unknown"
    iterations_used: int


@dataclass(frozen=True)
class NormalMonoidVerdict:
    group: GroupType
    contains_neg_simple_roots: bool
    dominant_part_generates: bool
    is_normal_monoid: bool
    central_part_pointed: bool
    semisimple_dominant_trivial: bool
    has_zero: bool


def _dominance_rows(group: GroupType) -> list[Vec]:
    n = group.total_rank
    return [tuple(1 if k == i else 0 for k in range(n)) for i in range(group.semisimple_rank)]


def perfect_closure(
    group: GroupType,
    gens,
    max_new: int = DEFAULT_MAX_NEW,
    budget: int = DEFAULT_MEMBERSHIP_BUDGET,
) -> PerfectClosureResult:
    """Close a set of dominant weights under tensor-product support.

    Rounds process only pairs touching weights added in the previous round,
    in lexicographic order, so the run is deterministic.  A weight from some
    support is adjoined as soon as membership in the current semigroup fails
    or comes back inconclusive (adjoining is always sound: the closure must
    contain it either way).  `is_perfect` means verified at a fixpoint; when
    the addition budget runs out it is reported False with converged False.
    """
    if max_new <= 0:
        raise InvalidInputError("max_new must be positive")
    n = group.total_rank
    zero = (0,) * n
    current: set[Vec] = {zero}
    for w in gens:
        w = check_weight(group, w)
        if not is_dominant(group, w):
            raise InvalidInputError(f"weight {list(w)} is not dominant for {group.describe()}")
        current.add(w)

    sg = AffineSemigroup(n, tuple(current))
    # Membership is monotone in the generator set, so a "yes" stays valid
    # across additions; a weight that fails is adjoined on the spot and is
    # then trivially a member.  Each candidate weight therefore costs one
    # search over the whole run.
    known: set[Vec] = set(current)

    def member_status(v: Vec) -> str:
        if v in known:
            return "yes"
        status = semigroup_member(sg, v, budget=budget).status
        if status == "yes":
            known.add(v)
        return status

    additions = 0
    iterations = 0
    converged = True
    fresh = set(current)
    while fresh and converged:
        iterations += 1
        snapshot = sorted(current)
        pairs = [
            (a, b)
            for i, a in enumerate(snapshot)
            for b in snapshot[i:]
            if a in fresh or b in fresh
        ]
        fresh = set()
        for a, b in pairs:
            for nu in xi_support(group, a, b):
                if nu in current:
                    continue
                if member_status(nu) == "yes":
                    continue
                current.add(nu)
                known.add(nu)
                sg = AffineSemigroup(n, tuple(current))
                fresh.add(nu)
                additions += 1
                if additions > max_new:
                    converged = False
                    break
            if not converged:
                break

    closure = tuple(sorted(current))
    is_perfect = converged
    group_of = generated_group(sg)
    generates = group_of.index == 1
    defines = is_perfect and generates

    dominant_cone = cone_from_constraints(_dominance_rows(group), n)
    trivial = "yes"
    for g in cone_lattice_monoid_generators(dominant_cone):
        status = member_status(g)
        if status == "yes":
            continue
        if status == "no" and converged:
            trivial = "no"
        else:
            trivial = "unknown"
        break

    return PerfectClosureResult(
        group=group,
        closure_generators=closure,
        is_perfect=is_perfect,
        converged=converged,
        generates_character_group=generates,
        defines_monoid=defines,
        is_trivial_monoid=trivial,
        iterations_used=iterations,
    )


def normal_monoid_check(group: GroupType, cone: PolyCone) -> NormalMonoidVerdict:
    """Evaluate the four cone conditions for a normal reductive monoid.

    (1) every negated simple root lies in K; (2) the dominant part of K
    spans the whole weight space; (3) the central slice of K is pointed;
    (4) K meets the zero-central dominant cone only at the origin.  The
    first two make K a monoid cone, the last two put zero in the monoid.
    """
    n = group.total_rank
    if cone.ambient_rank != n:
        raise InvalidInputError(
            f"cone lives in rank {cone.ambient_rank}, group needs {n}"
        )
    neg_ok = all(cone.contains(vec_neg(a)) for a in simple_roots(group))

    dominance = _dominance_rows(group)
    dominant_part = cone_from_constraints(list(cone.facet_normals) + dominance, n)
    spans = mat_rank(dominant_part.ray_generators) == n

    central_eq = []
    for row in dominance:
        central_eq.append(row)
        central_eq.append(vec_neg(row))
    central_slice = cone_from_constraints(list(cone.facet_normals) + central_eq, n)
    pointed = not central_slice.lineality_basis()

    zero_central = []
    for j in range(group.semisimple_rank, n):
        e = tuple(1 if k == j else 0 for k in range(n))
        zero_central.append(e)
        zero_central.append(vec_neg(e))
    ss_dominant = cone_from_constraints(
        list(cone.facet_normals) + dominance + zero_central, n
    )
    trivial = not ss_dominant.ray_generators

    is_normal = neg_ok and spans
    return NormalMonoidVerdict(
        group=group,
        contains_neg_simple_roots=neg_ok,
        dominant_part_generates=spans,
        is_normal_monoid=is_normal,
        central_part_pointed=pointed,
        semisimple_dominant_trivial=trivial,
        has_zero=is_normal and pointed and trivial,
    )


def induced_dominant_semigroup(group: GroupType, cone: PolyCone) -> tuple[Vec, ...]:
    """Monoid generators of the lattice points of K cap the dominant cone."""
    n = group.total_rank
    if cone.ambient_rank != n:
        raise InvalidInputError(
            f"cone lives in rank {cone.ambient_rank}, group needs {n}"
        )
    dominant_part = cone_from_constraints(
        list(cone.facet_normals) + _dominance_rows(group), n
    )
    return tuple(sorted(cone_lattice_monoid_generators(dominant_part)))
