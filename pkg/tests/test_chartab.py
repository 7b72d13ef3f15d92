from fractions import Fraction

import pytest

from sylowtab.chartab import (CharTable, centralizer_order, core_subgroups,
                              derived_subgroup, has_cyclic_sylow, is_p_element,
                              is_nilpotent_normal, kernel_of, minimal_normals,
                              normal_lattice, power_class, quotient_table,
                              validate)
from sylowtab.cyclo import Cyc


def test_s4_normal_lattice(corpus):
    t = corpus.table("S4")
    orders = sorted(ns.order for ns in normal_lattice(t))
    assert orders == [1, 4, 12, 24]
    assert [ns.order for ns in minimal_normals(t)] == [4]


def test_derived_subgroup_and_kernels(corpus):
    t = corpus.table("S4")
    assert derived_subgroup(t).order == 12
    t = corpus.table("SL(2,5)")
    assert derived_subgroup(t).order == 120  # perfect
    assert [ns.order for ns in minimal_normals(t)] == [2]


def test_quotient_s4_mod_v4_is_s3(corpus):
    t = corpus.table("S4")
    v4 = next(ns for ns in normal_lattice(t) if ns.order == 4)
    q = quotient_table(t, v4)
    assert q.group_order == 6 and q.k == 3
    assert validate(q) == []
    assert sorted(q.degree(i) for i in range(3)) == [1, 1, 2]


def test_quotient_chain_gl23(corpus):
    t = corpus.table("GL(2,3)")
    z = next(ns for ns in normal_lattice(t) if ns.order == 2)
    q = quotient_table(t, z)
    assert q.group_order == 24 and validate(q) == []
    assert sorted(ns.order for ns in normal_lattice(q)) == [1, 4, 12, 24]


def test_core_subgroups(corpus):
    t = corpus.table("C12")
    opp, op, oup = core_subgroups(t, 2)
    assert (opp.order, op.order, oup.order) == (3, 4, 4)
    t = corpus.table("S5")
    opp, op, oup = core_subgroups(t, 2)
    assert (opp.order, op.order, oup.order) == (1, 1, 120)
    t = corpus.table("A4xC3")
    opp, op, oup = core_subgroups(t, 3)
    assert (opp.order, op.order, oup.order) == (4, 3, 36)


def test_power_class_and_p_elements(corpus):
    t = corpus.table("S4")
    for c in range(t.k):
        o = t.classes[c].element_order
        assert power_class(t, c, o) == 0
        assert is_p_element(t, c, 2) == (o in (1, 2, 4))


def test_nilpotent_normal(corpus):
    t = corpus.table("SL(2,3)")
    q8 = next(ns for ns in normal_lattice(t) if ns.order == 8)
    assert is_nilpotent_normal(t, q8)
    t = corpus.table("S5")
    a5 = next(ns for ns in normal_lattice(t) if ns.order == 60)
    assert not is_nilpotent_normal(t, a5)
    t = corpus.table("C12")
    assert is_nilpotent_normal(t, t.whole_group())


def test_has_cyclic_sylow(corpus):
    assert has_cyclic_sylow(corpus.table("C12"), 2)
    assert has_cyclic_sylow(corpus.table("S5"), 5)
    assert not has_cyclic_sylow(corpus.table("S4"), 2)
    assert has_cyclic_sylow(corpus.table("Q16"), 2) is False


def test_validate_catches_corruption(corpus):
    t = corpus.table("S4")
    rows = [list(r) for r in t.chars]
    rows[1][2] = rows[1][2] + Cyc.one()
    bad = CharTable(t.group_order, t.classes, t.power_maps, rows)
    assert validate(bad)  # orthogonality must fail


def test_validate_catches_bad_power_map(corpus):
    t = corpus.table("S4")
    pm = {p: list(m) for p, m in t.power_maps.items()}
    pm[2][1] = 1  # involution class mapping to itself under squaring
    bad = CharTable(t.group_order, t.classes, pm, t.chars)
    assert any("power map" in msg for msg in validate(bad))


def test_centralizer_order_identity(corpus):
    t = corpus.table("M11")
    assert centralizer_order(t, 0) == 7920
