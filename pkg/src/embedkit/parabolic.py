"""Canonical embeddings of G/P^u: orbit combinatorics on the Dynkin diagram.

For a semisimple group and a parabolic P with Levi part L, the (G x L)-orbits
of the canonical embedding are indexed by subdiagrams none of whose connected
components sits inside the diagram of L.  Smoothness singles out the
hyperplane parabolic in type A, and finiteness of the plain G-orbit count
needs P to restrict to the whole group or to the Borel on every simple
factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, OrbitTooLargeError
from .lattice_cone import PolyCone, cone_from_generators
from .linalg import Vec
from .root_system import DEFAULT_ORBIT_CAP, GroupType, cartan_data

LEVI_WEYL_CAP = 10**5


@dataclass(frozen=True)
class ParabolicData:
    group: GroupType
    levi_nodes: frozenset[int]  # 1-based Dynkin node indices

    def __post_init__(self) -> None:
        if not self.group.is_semisimple:
            raise InvalidInputError("parabolic data needs a semisimple group")
        nodes = set(range(1, self.group.semisimple_rank + 1))
        levi = frozenset(self.levi_nodes)
        if not levi <= nodes:
            raise InvalidInputError(f"levi nodes {sorted(levi)} outside {sorted(nodes)}")
        object.__setattr__(self, "levi_nodes", levi)


def _edges(group: GroupType) -> dict[int, set[int]]:
    matrix = cartan_data(group).matrix
    n = group.semisimple_rank
    adj: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for i in range(n):
        for j in range(n):
            if i != j and matrix[i][j] != 0:
                adj[i + 1].add(j + 1)
    return adj


def _components(nodes: frozenset[int], adj: dict[int, set[int]]) -> list[frozenset[int]]:
    left = set(nodes)
    comps = []
    while left:
        seed = left.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for y in adj[x] & left:
                left.discard(y)
                comp.add(y)
                frontier.append(y)
        comps.append(frozenset(comp))
    return comps


def ce_orbit_subdiagrams(data: ParabolicData) -> list[tuple[int, ...]]:
    """Subdiagrams indexing (G x L)-orbits, smallest first.

    A subset survives iff none of its connected components is contained in
    the Levi subdiagram; the empty subset always survives.
    """
    adj = _edges(data.group)
    n = data.group.semisimple_rank
    out = []
    universe = list(range(1, n + 1))
    for mask in range(1 << n):
        subset = frozenset(universe[i] for i in range(n) if mask >> i & 1)
        if all(not comp <= data.levi_nodes for comp in _components(subset, adj)):
            out.append(tuple(sorted(subset)))
    out.sort(key=lambda s: (len(s), s))
    return out


def sigma_cone(data: ParabolicData, cap: int = LEVI_WEYL_CAP) -> PolyCone:
    """Cone spanned by the Levi-Weyl-group sweep of the dominant chamber."""
    group = data.group
    matrix = cartan_data(group).matrix
    n = group.semisimple_rank
    levi0 = [i - 1 for i in sorted(data.levi_nodes)]

    def reflect(w: Vec, i: int) -> Vec:
        c = w[i]
        return w if c == 0 else tuple(w[k] - c * matrix[k][i] for k in range(n))

    gens: set[Vec] = set()
    for i in range(n):
        omega = tuple(1 if k == i else 0 for k in range(n))
        seen = {omega}
        frontier = [omega]
        while frontier:
            nxt = []
            for v in frontier:
                for j in levi0:
                    r = reflect(v, j)
                    if r not in seen:
                        if len(seen) >= cap:
                            raise OrbitTooLargeError(f"Levi orbit exceeded cap {cap}")
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        gens |= seen
    cone = cone_from_generators(sorted(gens), n)
    # the swept union of chambers really is this convex cone
    assert all(cone.contains(g) for g in gens)
    return cone


def _a_chain_order(nodes: tuple[int, ...], adj: dict[int, set[int]]) -> list[int]:
    """Nodes of a path graph in end-to-end order."""
    if len(nodes) == 1:
        return list(nodes)
    inside = set(nodes)
    degree = {x: len(adj[x] & inside) for x in nodes}
    ends = sorted(x for x in nodes if degree[x] == 1)
    order = [ends[0]]
    prev = None
    while len(order) < len(nodes):
        nxt = (adj[order[-1]] & inside) - ({prev} if prev is not None else set())
        prev = order[-1]
        order.append(min(nxt))
    return order


def ce_smooth(data: ParabolicData) -> bool:
    """Whether the canonical embedding of G/P^u is smooth.

    Per simple factor: either the factor lies inside the Levi (nothing
    happens there) or the factor has type A and the Levi deletes exactly
    one end node of its chain (the hyperplane stabilizer, giving matrices).
    """
    adj = _edges(data.group)
    for (family, rank), (lo, hi) in zip(
        data.group.factors, data.group.factor_node_ranges()
    ):
        nodes = tuple(range(lo, hi + 1))
        levi_here = data.levi_nodes & set(nodes)
        if len(levi_here) == rank:
            continue
        if family != "A":
            return False
        chain = _a_chain_order(nodes, adj)
        if levi_here not in (set(chain[1:]), set(chain[:-1])):
            return False
    return True


def ce_finite_g_orbits(data: ParabolicData) -> bool:
    """Whether the canonical embedding has finitely many plain G-orbits.

    Needs P to be everything or a Borel on each simple factor: the Levi
    must contain all of the factor's nodes or none of them.
    """
    for _, (lo, hi) in zip(data.group.factors, data.group.factor_node_ranges()):
        nodes = set(range(lo, hi + 1))
        inside = len(data.levi_nodes & nodes)
        if inside not in (0, len(nodes)):
            return False
    return True
