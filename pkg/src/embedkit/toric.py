"""Affine toric analysis: effectiveness, normality, and face correspondences.

The variety Spec K[S] for a character semigroup S of a rank-n torus is an
effective T-action iff S generates the full character lattice, normal iff S
is saturated, and in the normal case the torus orbits and the T-invariant
radical ideals are both indexed by the faces of the cone spanned by S.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .lattice_cone import (
    DEFAULT_MEMBERSHIP_BUDGET,
    AffineSemigroup,
    Face,
    PolyCone,
    cone_from_generators,
    face_lattice,
    generated_group,
    is_saturated,
)
from .linalg import Vec


@dataclass(frozen=True)
class ToricReport:
    rank: int
    generators: tuple[Vec, ...]
    effective: bool
    solid: bool
    note: str | None
    normal: str  # "yes" | "no" | "inconclusive"
    normal_witness: Vec | None
    cone: PolyCone
    orbit_faces: tuple[Face, ...] | None  # present only when normal
    ideal_faces: tuple[tuple[Face, str], ...] | None

    @property
    def orbit_count(self) -> int | None:
        return None if self.orbit_faces is None else len(self.orbit_faces)


def _ideal_label(face: Face) -> str:
    if not face.generator_indices:
        return "characters outside the origin face (the irrelevant maximal ideal)"
    idx = ",".join(str(i) for i in face.generator_indices)
    return f"characters outside the dim-{face.dim} face on generators [{idx}]"


def analyze_toric(
    rank: int, generators: list[Vec], budget: int = DEFAULT_MEMBERSHIP_BUDGET
) -> ToricReport:
    if rank < 1:
        raise InvalidInputError(f"torus rank must be >= 1, got {rank}")
    gens = tuple(tuple(int(x) for x in g) for g in generators)
    if not gens:
        raise InvalidInputError("need at least one character")
    for g in gens:
        if len(g) != rank:
            raise InvalidInputError(f"character {list(g)} has length != rank {rank}")
    sg = AffineSemigroup(rank, gens)
    group = generated_group(sg)
    effective = group.index == 1
    cone = cone_from_generators(gens, rank)
    solid = len(group.basis) == rank
    note = None if solid else "torus acts with smaller effective quotient"
    sat = is_saturated(sg, budget=budget)
    normal = {"saturated": "yes", "not_saturated": "no", "inconclusive": "inconclusive"}[
        sat.status
    ]
    orbit_faces = None
    ideal_faces = None
    if normal == "yes":
        orbit_faces = face_lattice(cone)
        ideal_faces = tuple((f, _ideal_label(f)) for f in orbit_faces)
    return ToricReport(
        rank=rank,
        generators=sg.generators,
        effective=effective,
        solid=solid,
        note=note,
        normal=normal,
        normal_witness=sat.witness,
        cone=cone,
        orbit_faces=orbit_faces,
        ideal_faces=ideal_faces,
    )
