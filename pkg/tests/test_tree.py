import json

import pytest

from kunzsg import (
    Mult3Class,
    build_tree,
    children,
    children_in_mult_tree,
    classify_mult3,
    count_mult3_closed,
    enumerate_kunz,
    export_tree,
    level,
    semigroup_from_generators as sg,
    semigroup_from_kunz,
)
from kunzsg.core import NATURALS
from kunzsg.tree import levels
from oracles import all_gap_sets


def gens(lst):
    return [S.minimal_generators for S in lst]


def test_children_examples():
    assert children(NATURALS) == [sg([2, 3])]
    assert gens(children(sg([4, 5, 6, 7]))) == [(5, 6, 7, 8, 9), (4, 6, 7, 9), (4, 5, 7), (4, 5, 6)]
    assert children(sg([3, 4])) == []


def test_children_in_mult_tree_examples():
    assert gens(children_in_mult_tree(sg([3, 4, 5]), 3)) == [(3, 5, 7), (3, 4)]
    assert gens(children_in_mult_tree(sg([3, 7, 11]), 3)) == [(3, 7)]
    assert gens(children_in_mult_tree(sg([2, 3]), 2)) == [(2, 5)]
    with pytest.raises(ValueError):
        children_in_mult_tree(sg([3, 4]), 4)


def test_levels_small():
    assert level(0) == [NATURALS]
    assert len(level(5)) == 12
    assert set(gens(level(4, 4))) == {(4, 6, 7, 9), (4, 5, 7), (4, 5, 6)}
    assert level(2, 4) == [] and level(-1) == []
    assert level(0, 1) == [NATURALS] and level(3, 1) == []


def test_unrestricted_levels_match_gap_sets():
    for g, lv in levels(10):
        assert {frozenset(S.gaps()) for S in lv} == set(all_gap_sets(g))
        assert len(lv) == len(set(lv))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_restricted_levels_match_kunz(m):
    for g, lv in levels(20 if m < 6 else 14, m):
        assert set(lv) == {semigroup_from_kunz(k) for k in enumerate_kunz(m, g)} if g >= m - 1 else lv == []


def test_tree_soundness():
    root = build_tree(9)
    for parent, child in root.edges():
        T, S = parent.semigroup, child.semigroup
        x = child.removed_generator
        assert child.genus == parent.genus + 1 == S.genus
        assert x in T.minimal_generators and x > T.frobenius
        assert S.frobenius == x and x not in S
        assert set(T.small_elements() + (T.conductor + 1,)) - set(S.small_elements()) <= {x}
        assert all(n in T for n in S.small_elements())
    for node in root.walk():
        xs = [c.removed_generator for c in node.children]
        assert xs == sorted(xs)


def test_classify_examples():
    assert classify_mult3(sg([3, 4])) is Mult3Class.Leaf
    assert classify_mult3(sg([3, 4, 5])) is Mult3Class.TwoChildren
    assert classify_mult3(sg([3, 7, 11])) is Mult3Class.OneChild
    with pytest.raises(ValueError):
        classify_mult3(sg([4, 5]))


def test_export_root_only():
    dot = export_tree(build_tree(0), "dot")
    assert dot.count("label=") == 1 and '"⟨1⟩"' in dot and "->" not in dot


def test_export_genus_two():
    dot = export_tree(build_tree(2), "dot")
    assert dot.count("->") == 3
    assert dot.count("[label=") == 4 + 3
    data = json.loads(export_tree(build_tree(2), "json"))
    assert data["generators"] == [1] and data["removed"] is None and data["frobenius"] == -1
    assert data["children"][0]["generators"] == [2, 3]
    assert [c["removed"] for c in data["children"][0]["children"]] == [2, 3]


def test_export_mult3_to_seven():
    root = build_tree(7, 3)
    nodes = {n.semigroup for n in root.walk()}
    assert nodes == {S for g in range(8) for S in level(g, 3)}
    assert len(nodes) == sum(count_mult3_closed(g) for g in range(2, 8)) == 13


def test_export_deterministic_and_bad_format():
    assert export_tree(build_tree(6), "dot") == export_tree(build_tree(6), "dot")
    with pytest.raises(ValueError):
        export_tree(build_tree(1), "svg")
    assert build_tree(1, 4) is None
    assert export_tree(None, "dot") == "digraph semigroups {\n}\n"
