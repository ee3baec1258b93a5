"""Affine toric reports: effectiveness, normality, orbit-face correspondence."""

import pytest

from embedkit.errors import InvalidInputError
from embedkit.toric import analyze_toric


def units(n):
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]


def test_orthant_is_normal_with_full_face_lattice():
    for n in (1, 2, 3):
        rep = analyze_toric(n, units(n))
        assert rep.effective
        assert rep.solid
        assert rep.note is None
        assert rep.normal == "yes"
        assert rep.normal_witness is None
        assert rep.orbit_count == 2**n
        assert len(rep.ideal_faces) == 2**n


def test_cusp_semigroup_not_normal():
    rep = analyze_toric(1, [(2,), (3,)])
    assert rep.effective  # 2 and 3 generate Z
    assert rep.normal == "no"
    assert rep.normal_witness == (1,)
    assert rep.orbit_faces is None
    assert rep.orbit_count is None


def test_doubled_line_is_normal_but_not_effective():
    rep = analyze_toric(1, [(2,)])
    assert not rep.effective
    assert rep.solid
    assert rep.normal == "yes"


def test_non_solid_action_gets_note():
    rep = analyze_toric(2, [(1, 0)])
    assert not rep.solid
    assert rep.note == "torus acts with smaller effective quotient"
    assert rep.normal == "yes"
    assert rep.orbit_count == 2


def test_whitney_umbrella_semigroup():
    # (1,0), (1,1), (1,2) span a smooth-looking cone but miss no points:
    # saturated, 4 faces
    rep = analyze_toric(2, [(1, 0), (1, 1), (1, 2)])
    assert rep.normal == "yes"
    assert rep.orbit_count == 4


def test_gapped_staircase_not_saturated():
    # (1,2) lies in the cone and in the full lattice the generators span,
    # but no nonnegative combination reaches it
    rep = analyze_toric(2, [(1, 0), (1, 1), (1, 3)])
    assert rep.effective
    assert rep.normal == "no"
    assert rep.normal_witness == (1, 2)


def test_index_two_sublattice_is_saturated_in_itself():
    # (1,0) and (1,2) are independent, so S equals cone cap ZL even though
    # ZL has index 2; the defect shows up as a non-effective action instead
    rep = analyze_toric(2, [(1, 0), (1, 2)])
    assert not rep.effective
    assert rep.normal == "yes"


def test_ideal_labels_name_faces():
    rep = analyze_toric(1, units(1))
    labels = [label for _, label in rep.ideal_faces]
    assert any("irrelevant maximal ideal" in s for s in labels)
    assert any("dim-1 face" in s for s in labels)


def test_generators_are_canonicalized():
    rep = analyze_toric(1, [(3,), (2,), (3,)])
    assert rep.generators == ((2,), (3,))


def test_low_budget_reports_inconclusive():
    rep = analyze_toric(2, [(1, 0), (1, 5), (2, 3), (1, 7)], budget=5)
    assert rep.normal == "inconclusive"
    assert rep.orbit_faces is None


def test_input_validation():
    with pytest.raises(InvalidInputError):
        analyze_toric(0, [(1,)])
    with pytest.raises(InvalidInputError):
        analyze_toric(2, [])
    with pytest.raises(InvalidInputError):
        analyze_toric(2, [(1,)])
