from itertools import combinations
from math import lcm

import pytest

from vkrew.orbits import orbit_cycles
from vkrew.poset import Poset, linear_extensions, make_v, product_with_chain
from vkrew.pstrict import enumerate_labelings, promote_pstrict
from vkrew.rowmotion import PosetAutomorphism, PPartition, \
    apply_automorphism, enumerate_ppartitions, flip_automorphism, rowmotion, \
    toggle, togpro


def pp(values, ell=1, poset=None):
    return PPartition(poset or make_v(), ell, tuple(values))


def test_ppartition_validation():
    pp((0, 1, 1))
    with pytest.raises(ValueError):
        pp((1, 0, 1))  # decreases across A < B
    with pytest.raises(ValueError):
        pp((0, 2, 0))  # above ell
    with pytest.raises(ValueError):
        PPartition(make_v(), -1, (0, 0, 0))


def test_ppartition_json_roundtrip():
    poset = product_with_chain(make_v(), 2)
    f = PPartition(poset, 2, (0, 1, 1, 2, 0, 1))
    data = f.to_json()
    assert data["poset"] == "VxK" and data["k"] == 2
    assert PPartition.from_json(data) == f
    with pytest.raises(ValueError):
        pp((0, 0, 0)).to_json()  # bare V has no layer coordinate


def test_enumerate_ppartitions_counts():
    v = make_v()
    fives = list(enumerate_ppartitions(v, 1))
    assert [f.values for f in fives] == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 1)]
    assert sum(1 for _ in enumerate_ppartitions(v, 2)) == 14
    assert sum(1 for _ in enumerate_ppartitions(
        product_with_chain(v, 2), 1)) == 14
    assert [f.values for f in enumerate_ppartitions(v, 0)] == [(0, 0, 0)]


def test_enumerate_ppartitions_canonical_order():
    poset = product_with_chain(make_v(), 2)
    seen = [f.values for f in enumerate_ppartitions(poset, 2)]
    assert seen == sorted(seen)


def test_toggle_examples():
    assert toggle("A", pp((0, 1, 1))).values == (1, 1, 1)
    assert toggle("B", pp((0, 0, 0))).values == (0, 1, 0)


def test_toggle_involution():
    for f in enumerate_ppartitions(make_v(), 2):
        for p in "ABC":
            assert toggle(p, toggle(p, f)) == f


def test_toggle_unknown_element():
    with pytest.raises(ValueError):
        toggle("Z", pp((0, 0, 0)))


@pytest.mark.parametrize("ell", [1, 2])
def test_toggles_commute_iff_no_shared_cover(ell):
    poset = product_with_chain(make_v(), 2)
    partitions = list(enumerate_ppartitions(poset, ell))
    for x, y in combinations(poset.elements, 2):
        shares_cover = (x, y) in poset.covers or (y, x) in poset.covers
        always_commute = all(
            toggle(x, toggle(y, f)) == toggle(y, toggle(x, f))
            for f in partitions)
        assert always_commute == (not shares_cover), (x, y)


def test_rowmotion_examples():
    assert rowmotion(pp((0, 0, 0))).values == (1, 1, 1)
    assert rowmotion(pp((0, 0, 1))).values == (0, 1, 0)


def test_rowmotion_order_six_on_v():
    cycles = orbit_cycles(rowmotion, list(enumerate_ppartitions(make_v(), 1)))
    sizes = sorted((len(c) for c in cycles), reverse=True)
    assert sizes == [3, 2]
    assert lcm(*sizes) == 6


@pytest.mark.parametrize("ell,k", [(1, 2), (2, 1)])
def test_rowmotion_extension_independent(ell, k):
    poset = product_with_chain(make_v(), k)
    exts = list(linear_extensions(poset))
    for f in enumerate_ppartitions(poset, ell):
        images = {rowmotion(f, ext) for ext in exts}
        assert len(images) == 1


def test_rowmotion_rejects_foreign_extension():
    poset = product_with_chain(make_v(), 2)
    ext = next(iter(linear_extensions(make_v())))
    f = next(iter(enumerate_ppartitions(poset, 1)))
    with pytest.raises(ValueError):
        rowmotion(f, ext)


def test_togpro_examples():
    poset = product_with_chain(make_v(), 1)
    assert togpro(PPartition(poset, 1, (0, 0, 0)), 3).values == (0, 1, 1)
    assert togpro(PPartition(poset, 2, (0, 0, 0)), 3).values == (0, 2, 2)


def test_togpro_rejects_wrong_poset():
    poset = product_with_chain(make_v(), 2)
    f = next(iter(enumerate_ppartitions(poset, 1)))
    with pytest.raises(ValueError):
        togpro(f, 3)
    with pytest.raises(ValueError):
        togpro(pp((0, 0, 0)), 3)


def test_togpro_orbits_match_promotion():
    poset = product_with_chain(make_v(), 1)
    partitions = list(enumerate_ppartitions(poset, 1))
    tp_sizes = sorted(len(c) for c in orbit_cycles(
        lambda f: togpro(f, 3), partitions))
    pro_sizes = sorted(len(c) for c in orbit_cycles(
        promote_pstrict, list(enumerate_labelings(1, 3))))
    assert tp_sizes == pro_sizes == [2, 3]


def test_flip_examples():
    flip = flip_automorphism(make_v())
    f = pp((0, 1, 0))
    assert apply_automorphism(flip, f).values == (0, 0, 1)
    assert apply_automorphism(flip, apply_automorphism(flip, f)) == f


def test_row_cubed_is_flip_on_smallest_case():
    poset = product_with_chain(make_v(), 1)
    flip = flip_automorphism(poset)
    for f in enumerate_ppartitions(poset, 1):
        current = f
        for _ in range(3):
            current = rowmotion(current)
        assert current == apply_automorphism(flip, f)


def test_toggle_conjugation_by_automorphism():
    poset = product_with_chain(make_v(), 2)
    flip = flip_automorphism(poset)
    for f in enumerate_ppartitions(poset, 1):
        g = apply_automorphism(flip, f)
        for p in poset.elements:
            assert toggle(p, g) == apply_automorphism(flip, toggle(flip(p), f))


def test_row_and_togpro_commute_with_flip():
    poset = product_with_chain(make_v(), 2)
    flip = flip_automorphism(poset)
    for f in enumerate_ppartitions(poset, 2):
        assert rowmotion(apply_automorphism(flip, f)) \
            == apply_automorphism(flip, rowmotion(f))
        assert togpro(apply_automorphism(flip, f), 4) \
            == apply_automorphism(flip, togpro(f, 4))


def test_automorphism_validation():
    v = make_v()
    with pytest.raises(ValueError):
        PosetAutomorphism(v, ("A", "A", "C"))
    with pytest.raises(ValueError):
        PosetAutomorphism(v, ("B", "A", "C"))  # sends cover (A,B) to (B,A)
    chain = Poset(("a", "b"), (("a", "b"),))
    with pytest.raises(ValueError):
        flip_automorphism(chain)


def test_apply_automorphism_rejects_mismatch():
    flip = flip_automorphism(make_v())
    poset = product_with_chain(make_v(), 2)
    f = next(iter(enumerate_ppartitions(poset, 1)))
    with pytest.raises(ValueError):
        apply_automorphism(flip, f)


def test_automorphism_inverse():
    poset = product_with_chain(make_v(), 2)
    flip = flip_automorphism(poset)
    assert flip.inverse() == flip  # an involution is its own inverse
    identity = PosetAutomorphism(poset, poset.elements)
    assert identity.inverse() == identity


def test_flip_action_is_involution_on_partitions():
    poset = product_with_chain(make_v(), 2)
    flip = flip_automorphism(poset)
    cycles = orbit_cycles(lambda f: apply_automorphism(flip, f),
                          list(enumerate_ppartitions(poset, 2)))
    assert all(len(c) in (1, 2) for c in cycles)
