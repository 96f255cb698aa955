from itertools import combinations

import pytest

from knotsym import DomainError, PermGroup, enumerate_subgroups, fingerprint, isomorphic, parse_cycles
from knotsym.dihedral import cyclic_group, dihedral_group
from knotsym.groups import _CayleyTable, assert_closed

from conftest import gen


def test_generate_symmetric_group_order():
    s3 = gen(3, "(1 2 3)", "(1 2)")
    assert s3.order == 6


def test_generate_cap():
    with pytest.raises(DomainError) as exc:
        gen5 = PermGroup.generate([parse_cycles("(1 2 3 4 5)", 5)], cap=3)
    assert exc.value.code == "cap_exceeded"


def test_trivial_group():
    t = PermGroup.trivial(4)
    assert t.order == 1 and t.degree == 4


def test_orbits():
    g = gen(6, "(1 2 3)", "(4 5)")
    assert g.orbit_point(0) == frozenset({0, 1, 2})
    assert g.orbit_point(4) == frozenset({3, 4})
    assert g.orbit_point(5) == frozenset({5})
    assert g.orbit((0, 3)) == frozenset({(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)})


def test_edge_pointwise_stabilizer_excludes_inverters():
    g = gen(4, "(1 2)", "(3 4)")
    stab = g.edge_pointwise_stabilizer((0, 1))
    assert stab.order == 2  # only identity and (3 4)
    assert g.inverts_edge((0, 1))


def test_from_elements_finds_generators():
    z6 = cyclic_group(6)
    rebuilt = PermGroup.from_elements(6, z6.elements)
    assert rebuilt.same_elements(z6)
    assert PermGroup.generate(rebuilt.generators, degree=6).order == 6


def _subgroups_by_subset_closure(g: PermGroup, max_seed: int) -> set[frozenset]:
    """Independent oracle: close every element subset of size <= max_seed."""
    ct = _CayleyTable(g)
    found = set()
    for size in range(0, max_seed + 1):
        for combo in combinations(range(len(ct.elems)), size):
            idxs = ct.closure(frozenset(combo))
            found.add(frozenset(ct.elems[i] for i in idxs))
    return found


@pytest.mark.parametrize(
    "group,max_seed,count",
    [
        (dihedral_group(3), 2, 6),
        (cyclic_group(6), 2, 4),
        (dihedral_group(5), 2, 8),
        (gen(9, "(1 2 3)", "(4 5 6)"), 2, 6),
    ],
    ids=["D3", "Z6", "D5", "Z3xZ3"],
)
def test_enumerate_subgroups_against_subset_closure(group, max_seed, count):
    fast = {s.elements for s in enumerate_subgroups(group)}
    slow = _subgroups_by_subset_closure(group, max_seed)
    assert fast == slow
    assert len(fast) == count


def test_enumerate_subgroups_all_are_subgroups():
    for sub in enumerate_subgroups(dihedral_group(5)):
        assert_closed(sub.elements, sub.degree)


def test_enumerate_guard():
    with pytest.raises(DomainError):
        enumerate_subgroups(cyclic_group(6), cap=3)


def test_fingerprint_basic():
    fp = fingerprint(dihedral_group(3))
    assert fp.order == 6 and not fp.abelian
    assert fp.order_histogram == ((1, 1), (2, 3), (3, 2))
    assert fp.center_order == 1 and fp.derived_order == 3
    fp6 = fingerprint(cyclic_group(6))
    assert fp6.abelian and fp6.center_order == 6 and fp6.derived_order == 1


def test_isomorphic_distinguishes_z6_d3():
    assert not isomorphic(cyclic_group(6), dihedral_group(3))


def test_isomorphic_z6_z2xz3():
    z2xz3 = gen(5, "(1 2)", "(3 4 5)")
    assert isomorphic(cyclic_group(6), z2xz3)


def test_isomorphic_same_fingerprint_different_groups():
    # D_12 vs D_6 x Z_2 share order 24; fingerprints already differ, but the
    # search must also handle groups needing the generator-image stage.
    d4a = dihedral_group(4)
    d4b = dihedral_group(4, offset=2)
    assert isomorphic(d4a, d4b)


def test_isomorphic_guard():
    with pytest.raises(DomainError):
        isomorphic(cyclic_group(6), cyclic_group(6), cap=2)


def test_assert_closed_rejects_non_subgroup():
    p = parse_cycles("(1 2 3)", 3)
    from knotsym import VerificationError

    with pytest.raises(VerificationError):
        assert_closed({p.identity(3), p}, 3)
