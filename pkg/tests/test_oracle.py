import numpy as np
import pytest

from sylowtab.perm import (CapExceeded, PermGroup, index_p_normal_subgroups,
                           perm_from_cycles, subgroup_invariants)

# frozen brute-force ground truth: (sylow, |P:P'|, |P:Z|, maximal_class, abelian)
EXPECTED_TRUTH = {
    ("S4", 2): (8, 4, 4, True, False),
    ("S4", 3): (3, 3, 1, False, True),
    ("S7", 2): (16, 8, 4, False, False),
    ("S8", 2): (128, 8, 64, False, False),
    ("S9", 2): (128, 8, 64, False, False),
    ("S9", 3): (81, 9, 27, True, False),
    ("A5", 2): (4, 4, 1, False, True),
    ("A8", 2): (64, 8, 32, False, False),
    ("GL(2,3)", 2): (16, 4, 8, True, False),
    ("SL(2,9)", 2): (16, 4, 8, True, False),
    ("M11", 2): (16, 4, 8, True, False),
    ("Q16", 2): (16, 4, 8, True, False),
    ("SD16", 2): (16, 4, 8, True, False),
    ("C3wrC3", 3): (81, 9, 27, True, False),
    ("A5xQ8", 2): (32, 16, 4, False, False),
}


@pytest.mark.parametrize("name,p", sorted(EXPECTED_TRUTH), ids=str)
def test_ground_truth_pinned(corpus, name, p):
    gt = corpus.truth(name, p)
    assert (gt.sylow_order, gt.commutator_index, gt.center_index,
            gt.maximal_class, gt.abelian) == EXPECTED_TRUTH[name, p]


def test_enumeration_deterministic_and_identity_first():
    g = PermGroup(4, [perm_from_cycles(4, [(0, 1, 2, 3)]),
                     perm_from_cycles(4, [(0, 1)])])
    E = g.elements()
    assert g.order == 24
    assert list(E[0]) == [0, 1, 2, 3]
    g2 = PermGroup(4, [perm_from_cycles(4, [(0, 1, 2, 3)]),
                      perm_from_cycles(4, [(0, 1)])])
    assert np.array_equal(E, g2.elements())


def test_conjugacy_s3_s4(corpus):
    g = PermGroup(3, [perm_from_cycles(3, [(0, 1, 2)]),
                     perm_from_cycles(3, [(0, 1)])])
    cd = g.conjugacy_data()
    assert sorted(cd.sizes) == [1, 2, 3]
    cd4 = corpus.group("S4").conjugacy_data()
    assert sorted(cd4.sizes) == [1, 3, 6, 6, 8]
    assert sorted(cd4.orders) == [1, 2, 2, 3, 4]


def test_power_map_consistency(corpus):
    g = corpus.group("S4")
    cd = g.conjugacy_data()
    for p, pm in cd.power_maps.items():
        for c, rep in enumerate(cd.reps):
            assert cd.class_of[g.pow_index(rep, p)] == pm[c]


def test_sylow_2_of_sl29_is_generalized_quaternion(corpus):
    P = corpus.group("SL(2,9)").sylow_p(2)
    assert P.order == 16
    involutions = [i for i in range(P.order) if P.element_order(i) == 2]
    assert len(involutions) == 1


def test_sylow_2_of_s4_is_dihedral(corpus):
    P = corpus.group("S4").sylow_p(2)
    assert P.order == 8
    assert P.exponent() == 4
    gt = subgroup_invariants(P, 2)
    assert gt.center_index == 4 and gt.maximal_class


def test_cap_exceeded():
    g = PermGroup(7, [perm_from_cycles(7, [tuple(range(7))]),
                     perm_from_cycles(7, [(0, 1)])], cap=100)
    with pytest.raises(CapExceeded):
        g.elements()


def test_index_p_normal_subgroups_d8():
    P = PermGroup(4, [perm_from_cycles(4, [(0, 1, 2, 3)]),
                     perm_from_cycles(4, [(1, 3)])])
    subs = index_p_normal_subgroups(P, 2)
    assert len(subs) == 3  # D8 has three maximal subgroups
    assert all(len(s) == 4 for s in subs)


def test_index_p_normal_subgroups_q8(corpus):
    P = corpus.group("Q8")
    subs = index_p_normal_subgroups(P, 2)
    assert len(subs) == 3
    # each is cyclic of order 4
    for s in subs:
        assert sorted(P.element_order(int(i)) for i in s) == [1, 2, 4, 4]


def test_derived_and_center_of_sylows(corpus):
    P = corpus.group("C3wrC3")
    assert len(P.derived_indices()) == 9
    assert len(P.center_indices()) == 3
