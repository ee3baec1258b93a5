"""Orbit combinatorics of canonical embeddings CE(G/P^-_u)."""

import pytest

from embedkit.errors import InvalidInputError, OrbitTooLargeError
from embedkit.parabolic import (
    ParabolicData,
    ce_finite_g_orbits,
    ce_orbit_subdiagrams,
    ce_smooth,
    sigma_cone,
)
from embedkit.root_system import GroupType

A1 = GroupType.parse("A1")
A2 = GroupType.parse("A2")
A3 = GroupType.parse("A3")
B2 = GroupType.parse("B2")


def all_levis(rank):
    nodes = list(range(1, rank + 1))
    for mask in range(2**rank):
        yield frozenset(n for i, n in enumerate(nodes) if mask >> i & 1)


def test_subdiagram_counts():
    assert len(ce_orbit_subdiagrams(ParabolicData(A1, frozenset()))) == 2
    assert len(ce_orbit_subdiagrams(ParabolicData(A2, frozenset()))) == 4
    assert len(ce_orbit_subdiagrams(ParabolicData(A2, frozenset({1})))) == 3
    assert len(ce_orbit_subdiagrams(ParabolicData(A3, frozenset({2})))) == 7


def test_subdiagrams_drop_components_inside_levi():
    subs = ce_orbit_subdiagrams(ParabolicData(A2, frozenset({1})))
    assert list(subs) == [(), (2,), (1, 2)]
    # {1} is a connected subset lying inside the Levi, so it is not an orbit
    assert (1,) not in subs


def test_subdiagrams_disconnected_components_checked_separately():
    subs = ce_orbit_subdiagrams(ParabolicData(A3, frozenset({1})))
    # {1,3} has components {1} and {3}; {1} sits in the Levi, so out
    assert (1, 3) not in subs
    assert (3,) in subs
    assert (2, 3) in subs


def test_full_levi_collapses_to_a_point():
    # every nonempty subset has all its components inside the full Levi
    subs = ce_orbit_subdiagrams(ParabolicData(A2, frozenset({1, 2})))
    assert list(subs) == [()]


def test_sigma_cone_borel_case_is_dominant_cone():
    cone = sigma_cone(ParabolicData(A2, frozenset()))
    assert sorted(cone.ray_generators) == [(0, 1), (1, 0)]


def test_sigma_cone_one_levi_node():
    cone = sigma_cone(ParabolicData(A2, frozenset({1})))
    assert sorted(cone.ray_generators) == [(-1, 1), (1, 0)]
    assert cone.contains((0, 1))


def test_sigma_cone_full_levi_spans_space():
    cone = sigma_cone(ParabolicData(A2, frozenset({1, 2})))
    assert len(cone.lineality_basis()) == 2


def test_sigma_cone_cap():
    with pytest.raises(OrbitTooLargeError):
        sigma_cone(ParabolicData(A3, frozenset({1, 2, 3})), cap=2)


def test_smoothness_hyperplane_pattern_a2():
    verdicts = {
        frozenset(): False,
        frozenset({1}): True,
        frozenset({2}): True,
        frozenset({1, 2}): True,
    }
    for levi, want in verdicts.items():
        assert ce_smooth(ParabolicData(A2, levi)) is want


def test_smoothness_a1_both_choices():
    assert ce_smooth(ParabolicData(A1, frozenset()))
    assert ce_smooth(ParabolicData(A1, frozenset({1})))


def test_smoothness_a3_interior_gaps_fail():
    assert ce_smooth(ParabolicData(A3, frozenset({1, 2})))
    assert ce_smooth(ParabolicData(A3, frozenset({2, 3})))
    assert not ce_smooth(ParabolicData(A3, frozenset({1, 3})))
    assert not ce_smooth(ParabolicData(A3, frozenset({2})))


def test_smoothness_outside_type_a_needs_full_levi():
    for levi in all_levis(2):
        want = levi == {1, 2}
        assert ce_smooth(ParabolicData(B2, levi)) is want


def test_smoothness_product_group_factorwise():
    g = GroupType.parse("A1xB2")
    assert ce_smooth(ParabolicData(g, frozenset({2, 3})))  # A1 end chop, B2 full
    assert not ce_smooth(ParabolicData(g, frozenset({1})))  # B2 partial


def test_finite_orbits_all_or_nothing_per_factor():
    for group, rank in ((A2, 2), (B2, 2), (A3, 3)):
        for levi in all_levis(rank):
            want = levi in (frozenset(), frozenset(range(1, rank + 1)))
            assert ce_finite_g_orbits(ParabolicData(group, levi)) is want


def test_finite_orbits_product_group():
    g = GroupType.parse("A1xA1")
    assert ce_finite_g_orbits(ParabolicData(g, frozenset()))
    assert ce_finite_g_orbits(ParabolicData(g, frozenset({1, 2})))
    assert ce_finite_g_orbits(ParabolicData(g, frozenset({1})))
    assert not ce_finite_g_orbits(ParabolicData(GroupType.parse("A2"), frozenset({1})))


def test_parabolic_data_validation():
    with pytest.raises(InvalidInputError):
        ParabolicData(GroupType.parse("A1+T1"), frozenset())
    with pytest.raises(InvalidInputError):
        ParabolicData(A2, frozenset({3}))
    with pytest.raises(InvalidInputError):
        ParabolicData(A2, frozenset({0}))
