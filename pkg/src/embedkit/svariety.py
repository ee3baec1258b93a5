"""S-varieties: orbit closures of sums of highest weight vectors.

An S-variety is cut out by a finite list of dominant weights; its orbits
match the faces of the cone K they span, its normality is the saturation of
the weight semigroup inside the group it generates, and for semisimple
simply connected groups factoriality means the semigroup is generated by
fundamental weights.  HV-varieties are the single-weight case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .lattice_cone import (
    DEFAULT_MEMBERSHIP_BUDGET,
    AffineSemigroup,
    PolyCone,
    _EnumerationCapped,
    cone_from_constraints,
    cone_from_generators,
    cone_lattice_monoid_generators,
    face_lattice,
    is_saturated,
    semigroup_member,
)
from .linalg import Vec, is_zero, lattice_basis, primitive
from .root_system import GroupType, check_weight, is_dominant


@dataclass(frozen=True)
class SVarietyData:
    group: GroupType
    generators: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise InvalidInputError("need at least one weight")
        checked = []
        for w in self.generators:
            w = check_weight(self.group, w)
            if not is_dominant(self.group, w):
                raise InvalidInputError(
                    f"weight {list(w)} is not dominant for {self.group.describe()}"
                )
            checked.append(w)
        object.__setattr__(self, "generators", tuple(checked))


@dataclass(frozen=True)
class SVarietyReport:
    data: SVarietyData
    cone_K: PolyCone
    orbit_count: int
    normal: str  # "yes" | "no" | "inconclusive"
    normal_witness: Vec | None
    small_boundary: bool | None  # None = enumeration capped out
    factorial: str  # "true" | "false" | "not_applicable" | "unknown"
    type_hv: bool


@dataclass(frozen=True)
class HVReport:
    group: GroupType
    weight: Vec
    orbits: tuple[str, str]
    factorial: bool


def _small_boundary(group: GroupType, gens: tuple[Vec, ...], cone_K: PolyCone) -> bool | None:
    """Whether ZL cap dominant-cone sits inside the rational cone of L.

    Works in coordinates on ZL: pull the dominance constraints back through
    a lattice basis, list the monoid generators of the resulting cone's
    lattice points, and push each one forward into the ambient weight space
    for a cone test.
    """
    basis = lattice_basis([g for g in gens if not is_zero(g)])
    if not basis:
        return True
    r = len(basis)
    ss = group.semisimple_rank
    constraints = [tuple(b[i] for b in basis) for i in range(ss)]
    pulled = cone_from_constraints(constraints, r)
    try:
        monoid_gens = cone_lattice_monoid_generators(pulled)
    except _EnumerationCapped:
        return None
    n = group.total_rank
    for y in monoid_gens:
        x = tuple(sum(y[k] * basis[k][i] for k in range(r)) for i in range(n))
        if not cone_K.contains(x):
            return False
    return True


def _factorial(group: GroupType, gens: tuple[Vec, ...], budget: int) -> str:
    if group.torus_rank > 0 or group.semisimple_rank == 0:
        return "not_applicable"
    n = group.total_rank
    sg = AffineSemigroup(n, gens)
    fundamental_in_l: set[int] = set()
    needed = set()
    for g in gens:
        needed.update(i for i, c in enumerate(g) if c)
    for i in sorted(needed):
        e_i = tuple(1 if k == i else 0 for k in range(n))
        res = semigroup_member(sg, e_i, budget=budget)
        if res.status == "inconclusive":
            return "unknown"
        if res.status == "yes":
            fundamental_in_l.add(i)
    for g in gens:
        if any(c and i not in fundamental_in_l for i, c in enumerate(g)):
            return "false"
    return "true"


def is_type_hv(data: SVarietyData) -> bool:
    """True when every generator sits on one ray through a dominant weight."""
    nonzero = [primitive(g) for g in data.generators if not is_zero(g)]
    return len(set(nonzero)) <= 1


def analyze_svariety(
    data: SVarietyData, budget: int = DEFAULT_MEMBERSHIP_BUDGET
) -> SVarietyReport:
    n = data.group.total_rank
    gens = data.generators
    cone_K = cone_from_generators(gens, n)
    orbit_count = len(face_lattice(cone_K))
    sat = is_saturated(AffineSemigroup(n, gens), budget=budget)
    normal = {"saturated": "yes", "not_saturated": "no", "inconclusive": "inconclusive"}[
        sat.status
    ]
    return SVarietyReport(
        data=data,
        cone_K=cone_K,
        orbit_count=orbit_count,
        normal=normal,
        normal_witness=sat.witness,
        small_boundary=_small_boundary(data.group, gens, cone_K),
        factorial=_factorial(data.group, gens, budget),
        type_hv=is_type_hv(data),
    )


def hv_report(group: GroupType, weight) -> HVReport:
    """Two-orbit structure and factoriality of a highest-weight-vector closure."""
    if not group.is_semisimple:
        raise InvalidInputError("HV-varieties are defined for semisimple groups")
    w = check_weight(group, weight)
    if not is_dominant(group, w):
        raise InvalidInputError(f"weight {list(w)} is not dominant for {group.describe()}")
    if is_zero(w):
        raise InvalidInputError("weight must be nonzero")
    factorial = sorted(w) == [0] * (len(w) - 1) + [1]
    return HVReport(
        group=group,
        weight=w,
        orbits=("orbit of the highest weight vector (open)", "fixed point 0"),
        factorial=factorial,
    )
