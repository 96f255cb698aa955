import pytest

from knotsym import (
    DomainError,
    KnotLabel,
    LabeledEmbedding,
    PermGroup,
    PrimeKnot,
    complete_graph,
)
from knotsym.dihedral import dihedral_group
from knotsym.labels import MINUS, PLUS

from conftest import gen

TREFOIL = PrimeKnot("3_1", True)
EIGHT17 = PrimeKnot("8_17", False)
NINE32 = PrimeKnot("9_32", False)


def test_label_normalization_sorts_and_fixes_invertible_signs():
    lbl = KnotLabel.of([(TREFOIL, MINUS), (EIGHT17, MINUS)])
    assert lbl.factors == ((TREFOIL, PLUS), (EIGHT17, MINUS))


def test_label_invertible_iff_all_factors_invertible():
    assert KnotLabel.of([(TREFOIL, PLUS)]).invertible
    assert not KnotLabel.of([(TREFOIL, PLUS), (EIGHT17, PLUS)]).invertible
    assert KnotLabel.EMPTY.invertible


def test_flipped_negates_non_invertible_only():
    lbl = KnotLabel.of([(TREFOIL, PLUS), (EIGHT17, PLUS)])
    assert lbl.flipped() == KnotLabel.of([(TREFOIL, PLUS), (EIGHT17, MINUS)])
    assert lbl.flipped().flipped() == lbl


def test_bad_sign_rejected():
    with pytest.raises(DomainError):
        KnotLabel.of([(TREFOIL, 0)])


def test_construction_requires_orientation_exactly_for_non_invertible():
    g = complete_graph(4)
    base = PermGroup.trivial(4)
    noninv = KnotLabel.of([(EIGHT17, PLUS)])
    inv = KnotLabel.of([(TREFOIL, PLUS)])
    with pytest.raises(DomainError) as exc:
        LabeledEmbedding(g, base, {(0, 1): noninv})
    assert exc.value.code == "missing_orientation"
    with pytest.raises(DomainError) as exc:
        LabeledEmbedding(g, base, {(0, 1): inv}, {(0, 1): (0, 1)})
    assert exc.value.code == "bad_orientation"
    LabeledEmbedding(g, base, {(0, 1): noninv}, {(0, 1): (1, 0)})  # ok either direction


def test_triangle_cyclic_noninvertible_refines_to_rotations():
    d3 = dihedral_group(3)
    tri = complete_graph(3)
    lbl = KnotLabel.of([(EIGHT17, PLUS)])
    emb = LabeledEmbedding(
        tri,
        d3,
        {(0, 1): lbl, (1, 2): lbl, (0, 2): lbl},
        {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (2, 0)},
    )
    refined = emb.refine()
    assert refined.order == 3
    assert all(p.is_identity() or p.order() == 3 for p in refined.elements)
    conflicts = emb.inversion_conflicts()
    assert len(conflicts) == 3 and all(p.order() == 2 for p in conflicts)


def test_admissible_rejects_label_mismatch():
    g = complete_graph(4)
    base = gen(4, "(1 2)")
    emb = LabeledEmbedding(g, base, {(0, 2): KnotLabel.of([(TREFOIL, PLUS)])})
    swap = base.sorted_elements()[-1]
    assert not swap.is_identity()
    assert not emb.admissible(swap)  # (0,2) maps to (1,2) which is unlabeled


def test_admissible_requires_base_group_membership():
    g = complete_graph(4)
    emb = LabeledEmbedding(g, PermGroup.trivial(4))
    import knotsym

    with pytest.raises(DomainError):
        emb.admissible(knotsym.parse_cycles("(1 2)", 4))


def test_with_added_knots_labels_whole_orbit():
    g = complete_graph(7)
    base = gen(7, "(1 2 3 4 5 6 7)")
    emb = LabeledEmbedding(g, base)
    out = emb.with_added_knots(base, [((0, 1), EIGHT17)])
    assert len(out.labeled_edges) == 7
    assert out.refine().same_elements(base)


def test_with_added_knots_trivial_subgroup_single_edge():
    g = complete_graph(7)
    base = gen(7, "(1 2 3 4 5 6 7)")
    emb = LabeledEmbedding(g, base)
    out = emb.with_added_knots(PermGroup.trivial(7), [((0, 1), EIGHT17)])
    assert out.labeled_edges == [(0, 1)]
    assert out.refine().order == 1


def test_with_added_knots_invertibility_rule():
    g = complete_graph(7)
    d7 = dihedral_group(7)
    emb = LabeledEmbedding(g, d7)
    # D_7 inverts every edge in the rotation orbit of (0,1): invertible knot required.
    with pytest.raises(DomainError) as exc:
        emb.with_added_knots(d7, [((0, 1), EIGHT17)])
    assert exc.value.code == "invertibility_mismatch"
    out = emb.with_added_knots(d7, [((0, 1), TREFOIL)])
    assert out.refine().same_elements(d7)


def test_with_added_knots_errors():
    g = complete_graph(7)
    base = gen(7, "(1 2 3 4 5 6 7)")
    emb = LabeledEmbedding(g, base)
    with pytest.raises(DomainError) as exc:
        emb.with_added_knots(base, [((0, 1), EIGHT17), ((1, 2), NINE32)])
    assert exc.value.code == "duplicate_orbit"
    first = emb.with_added_knots(base, [((0, 1), EIGHT17)])
    with pytest.raises(DomainError) as exc:
        first.with_added_knots(base, [((0, 2), EIGHT17)])
    assert exc.value.code == "knot_reuse"
    other = gen(7, "(1 2)")
    with pytest.raises(DomainError) as exc:
        emb.with_added_knots(other, [((0, 1), EIGHT17)])
    assert exc.value.code == "not_subgroup"


def test_with_added_knots_requires_admissible_h():
    g = complete_graph(7)
    base = gen(7, "(1 2 3 4 5 6 7)")
    emb = LabeledEmbedding(g, base)
    labeled = emb.with_added_knots(PermGroup.trivial(7), [((0, 1), EIGHT17)])
    with pytest.raises(DomainError) as exc:
        labeled.with_added_knots(base, [((2, 4), NINE32)])
    assert exc.value.code == "h_not_admissible"


def test_with_added_knots_monotone_and_orbit_preserving():
    g = complete_graph(7)
    d7 = dihedral_group(7)
    emb = LabeledEmbedding(g, d7)
    rot = gen(7, "(1 2 3 4 5 6 7)")
    out = emb.with_added_knots(rot, [((0, 1), EIGHT17)])
    refined = out.refine()
    # sandwiched between h and the base refinement
    assert rot.is_subgroup_of(refined)
    assert refined.is_subgroup_of(emb.refine())
    # picked-edge orbits agree between h and the refinement
    assert rot.orbit_edge((0, 1)) == refined.orbit_edge((0, 1))
    # inversion in the refinement implies inversion in h
    assert (not refined.inverts_edge((0, 1))) or rot.inverts_edge((0, 1))


def test_orientation_choice_does_not_change_refinement():
    g = complete_graph(7)
    base = gen(7, "(1 2 3 4 5 6 7)")
    emb = LabeledEmbedding(g, base)
    a = emb.with_added_knots(base, [((0, 1), EIGHT17)], reverse_orientation_choice=False)
    b = emb.with_added_knots(base, [((0, 1), EIGHT17)], reverse_orientation_choice=True)
    assert a.refine().same_elements(b.refine())


def test_with_added_knots_rejects_non_three_connected():
    cycle = complete_graph(3)
    base = gen(3, "(1 2 3)")
    emb = LabeledEmbedding(cycle, base)
    with pytest.raises(DomainError) as exc:
        emb.with_added_knots(base, [((0, 1), EIGHT17)])
    assert exc.value.code == "not_three_connected"
