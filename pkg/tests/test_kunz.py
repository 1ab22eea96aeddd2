import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kunzsg import (
    KunzCoordinates,
    NotKunzVectorError,
    enumerate_kunz,
    enumerate_kunz_case,
    kunz_coordinates,
    kunz_polytope,
    reduced_system,
    semigroup_from_generators,
    semigroup_from_kunz,
)
from kunzsg.core import ordinary
from kunzsg.kunz import count_kunz, count_lattice_points, lattice_points
from oracles import kunz_points_brute

GAP_KUNZ4 = [
    [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1], [2, -1, 0, 0],
    [1, 1, -1, 0], [1, 1, -1, 0], [-1, 1, 1, 1], [-1, 1, 1, 1],
    [0, -1, 2, 1],
]


def test_polytope_m4_verbatim():
    assert [list(r) for r in kunz_polytope(4, verbatim=True).rows] == GAP_KUNZ4


def test_polytope_m4_canonical_is_deduplicated():
    rows = kunz_polytope(4).rows
    assert len(rows) == 7
    assert set(rows) == {tuple(r) for r in GAP_KUNZ4}


def test_polytope_small():
    assert kunz_polytope(2).rows == ((1, -1),)
    assert kunz_polytope(3).rows == ((1, 0, -1), (0, 1, -1), (2, -1, 0), (-1, 2, 1))
    with pytest.raises(ValueError):
        kunz_polytope(1)


@pytest.mark.parametrize("m", range(2, 9))
def test_polytope_row_count(m):
    # m-1 positivity rows, one row per unordered pair i <= j with i + j != m
    pairs = sum(1 for i in range(1, m) for j in range(i, m) if i + j != m)
    verbatim = sum(1 for i in range(1, m) for j in range(1, m) if i + j != m)
    assert len(kunz_polytope(m).rows) == m - 1 + pairs
    assert len(kunz_polytope(m, verbatim=True).rows) == m - 1 + verbatim


def test_gap_text():
    text = kunz_polytope(4, verbatim=True).to_gap()
    assert text.startswith("[ [ 1, 0, 0, -1 ], [ 0, 1, 0, -1 ]")
    assert text.endswith("[ 0, -1, 2, 1 ] ]")


@pytest.mark.parametrize(
    "gens, k", [([4, 5, 7], (1, 2, 1)), ([4, 6, 7, 9], (2, 1, 1)), ([4, 5, 6], (1, 1, 2))]
)
def test_kunz_coordinates(gens, k):
    kc = kunz_coordinates(semigroup_from_generators(gens))
    assert kc.k == k and kc.genus == 4
    assert semigroup_from_kunz(kc).minimal_generators == tuple(gens)


def test_ordinary_is_all_ones():
    for m in range(2, 10):
        kc = kunz_coordinates(ordinary(m))
        assert kc.k == (1,) * (m - 1) and kc.genus == m - 1


def test_all_ones_three():
    S = semigroup_from_kunz(KunzCoordinates(3, (1, 1)))
    assert S.minimal_generators == (3, 4, 5) and S.genus == 2


def test_kunz_errors():
    with pytest.raises(ValueError):
        kunz_coordinates(semigroup_from_generators([1]))
    with pytest.raises(NotKunzVectorError) as exc:
        semigroup_from_kunz(KunzCoordinates(4, (1, 3, 1)))
    # 2*k1 - k2 >= 0 fails first
    assert exc.value.row == (2, -1, 0, 0)
    with pytest.raises(NotKunzVectorError) as exc:
        semigroup_from_kunz(KunzCoordinates(3, (0, 1)))
    assert exc.value.row == (1, 0, -1)
    with pytest.raises(ValueError):
        KunzCoordinates(4, (1, 1))


def test_reduced_systems_m4():
    # (k1, k2, k3, const) rows, matching the three case systems for multiplicity four
    assert set(reduced_system(4, 1).rows) == {
        (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1),
        (-1, 1, 1, 1), (0, -1, 2, 1),
        (1, -1, 0, -1), (1, 0, -1, -1),
    }
    assert set(reduced_system(4, 2).rows) == {
        (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1),
        (2, -1, 0, 0), (0, -1, 2, 1),
        (-1, 1, 0, 0), (0, 1, -1, -1),
    }
    assert set(reduced_system(4, 3).rows) == {
        (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1),
        (1, 1, -1, 0), (2, -1, 0, 0),
        (-1, 0, 1, 0), (0, -1, 1, 0),
    }
    with pytest.raises(ValueError):
        reduced_system(4, 4)


def test_enumerate_examples():
    assert [kc.k for kc in enumerate_kunz(4, 4)] == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(enumerate_kunz(4, 204)) == 3570
    for m in range(2, 8):
        assert enumerate_kunz(m, m - 2) == []
    assert [kc.k for kc in enumerate_kunz(2, 7)] == [(7,)]


def test_enumerate_case_examples():
    assert len(enumerate_kunz_case(9, 1)) == 5
    assert len(enumerate_kunz_case(4, 3)) == 1
    assert [kc.k for kc in enumerate_kunz_case(4, 1)] == [(2, 1, 1)]


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_enumeration_matches_raw_scan(m):
    top = {2: 30, 3: 30, 4: 22, 5: 14}[m]
    for g in range(top + 1):
        pts = [kc.k for kc in enumerate_kunz(m, g)]
        assert pts == kunz_points_brute(m, g)
        assert count_kunz(m, g) == len(pts)


def test_enumeration_m6_raw_scan():
    for g in range(5, 12):
        assert [kc.k for kc in enumerate_kunz(6, g)] == kunz_points_brute(6, g)


def test_enumerated_points_are_valid():
    for m in (3, 4, 5, 6):
        poly = kunz_polytope(m)
        for g in range(m - 1, 16):
            for kc in enumerate_kunz(m, g):
                assert poly.contains(kc.k) and sum(kc.k) == g
                S = semigroup_from_kunz(kc)
                assert S.multiplicity == m and S.genus == g
                assert kunz_coordinates(S) == kc


def test_cases_partition_full_set():
    for g in range(0, 80):
        full = {kc.k for kc in enumerate_kunz(4, g)}
        parts = [{kc.k for kc in enumerate_kunz_case(g, r)} for r in (1, 2, 3)]
        assert sum(len(p) for p in parts) == len(full)
        assert set().union(*parts) == full
        for r, part in zip((1, 2, 3), parts):
            for k in part:
                F = max(4 * ki + i for i, ki in enumerate(k, 1)) - 4
                assert F % 4 == r
                assert semigroup_from_kunz(KunzCoordinates(4, k)).frobenius == F


def test_lattice_engine_generic_rows():
    # x1 + x2 = total with x1 >= x2 + 2
    from kunzsg.kunz import KunzPolytope

    poly = KunzPolytope(3, ((1, 0, -1), (0, 1, -1), (1, -1, -2)))
    assert lattice_points(poly, 8) == [(5, 3), (6, 2), (7, 1)]
    assert count_lattice_points(poly, 8) == 3
    # a constant row that can never hold
    empty = KunzPolytope(3, ((0, 0, -1),))
    assert lattice_points(empty, 5) == [] and count_lattice_points(empty, 5) == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 7).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(1, 6), min_size=m - 1, max_size=m - 1))))
def test_bijection_on_random_vectors(mk):
    m, k = mk
    kc = KunzCoordinates(m, tuple(k))
    if kc.is_valid():
        S = semigroup_from_kunz(kc)
        assert kunz_coordinates(S) == kc and S.genus == sum(k)
    else:
        with pytest.raises(NotKunzVectorError):
            semigroup_from_kunz(kc)
