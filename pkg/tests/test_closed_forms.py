import itertools
from math import comb

import pytest

from orderpoly import closed_forms as cf
from orderpoly import oracles as orc
from orderpoly.engine import count_order_maps, ehr_series
from orderpoly.exact import EhrSeries, Polynomial, series_coefficient
from orderpoly.poset import CapExceeded, Partition, antichain, bar_kk, chain, direct_sum, ferrers, ordinal_sum, partitions_of


def shapes(max_size, min_size=1):
    return [lam for m in range(min_size, max_size + 1) for lam in partitions_of(m)]


# -- multiset descents ----------------------------------------------------------


def test_multiset_examples():
    assert cf.multiset_descent_poly((2, 2)).terms == (1, 4, 1)
    for k in range(1, 7):
        assert cf.multiset_descent_poly((k, k)).terms == tuple(comb(k, i) ** 2 for i in range(k + 1))
    assert cf.multiset_descent_poly((1, 1, 1, 1)).terms == (1, 11, 11, 1)


def compositions(total, max_parts):
    for parts in range(1, max_parts + 1):
        for cut in itertools.combinations(range(1, total), parts - 1):
            bounds = (0,) + cut + (total,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def test_multiset_formula_equals_enumeration_up_to_10():
    seen = 0
    for N in range(1, 11):
        for mults in compositions(N, N):
            if tuple(sorted(mults, reverse=True)) != mults:
                continue  # the distribution only depends on the multiset of multiplicities
            assert cf.multiset_descent_formula(mults) == Polynomial(orc.multiset_descents_enumerate(mults)), mults
            seen += 1
    assert seen == sum(len(partitions_of(N)) for N in range(1, 11))


@pytest.mark.parametrize("mults", [(1, 2), (2, 1), (1, 1, 2), (3, 1, 1), (2, 2, 1), (1, 3)])
def test_multiset_enumeration_against_bruteforce(mults):
    assert orc.multiset_descents_enumerate(mults) == orc.multiset_descents_bruteforce(mults)
    assert cf.multiset_descent_poly(mults) == cf.multiset_descent_poly(mults[::-1])


def test_multiset_bad_method():
    with pytest.raises(ValueError):
        cf.multiset_descent_poly((1, 1), method="guess")


def test_sandwich_examples():
    one = chain(1)
    s = cf.sandwich_series((1, 1))
    assert s == EhrSeries.of([1, 1], 5)
    assert s == ehr_series(ordinal_sum(ordinal_sum(one, antichain(2)), one))
    for k in range(1, 5):
        s = cf.sandwich_series((k, k), topped=False)
        want = [sum(comb(k + i, k) ** 2 for i in range(n + 1)) for n in range(10)]
        assert s.coefficients(10) == want
        assert s == ehr_series(ordinal_sum(one, direct_sum(chain(k), chain(k))))
    for ell in range(4):
        assert cf.sandwich_series((1, 1), topped=False, bottom=ell + 1) == EhrSeries.of([1, 1], ell + 4)


# -- Ferrers determinants ----------------------------------------------------------


def test_ferrers_det_examples():
    assert cf.ferrers_det((2, 2), 1) == 6
    assert cf.ferrers_det((2, 1), 2) == 14
    assert all(cf.ferrers_det((1,), n) == n + 1 for n in range(10))


def test_plane_partition_examples():
    assert orc.plane_partition_count((2, 1), 1) == 5
    assert all(orc.plane_partition_count((k,), n) == comb(n + k, k) for k in range(1, 5) for n in range(5))
    assert orc.plane_partition_count((2, 2), 2) == 20 == cf.macmahon_box(2, 2, 2)
    with pytest.raises(CapExceeded):
        orc.plane_partition_count((6, 5), 1)


def test_lgv_examples():
    assert orc.path_count((0, 0), (2, 2)) == 6
    assert orc.lgv_count(orc.PathSystem(((0, 0),), ((2, 2),))) == 6
    assert orc.lgv_count(orc.second_proof_paths((2, 2), 1)) == 6
    assert orc.lgv_count(orc.first_proof_paths((2, 1), 1)) == 5


def test_lgv_matrix_determinant_is_det_form():
    for lam in shapes(5):
        for n in range(4):
            from orderpoly.exact import int_matrix_det
            assert int_matrix_det(orc.lgv_matrix(orc.second_proof_paths(lam, n))) == cf.ferrers_det(lam, n)


@pytest.mark.parametrize("lam", shapes(6), ids=str)
def test_determinant_tower_small(lam):
    P = ferrers(lam)
    series = ehr_series(P)
    for n in range(5):
        value = cf.ferrers_det(lam, n)
        assert value == orc.plane_partition_count(lam, n)
        assert value == orc.lgv_count(orc.first_proof_paths(lam, n))
        assert value == orc.lgv_count(orc.second_proof_paths(lam, n))
        assert value == series_coefficient(series, n)


# -- Schur layer --------------------------------------------------------------------


def test_schur_examples():
    assert cf.schur_principal((2, 1), 3) == 8 == cf.jacobi_trudi((2, 1), 3) == orc.rssyt_count((2, 1), 3)
    assert all(cf.schur_principal((1,), n) == n for n in range(8))
    assert cf.schur_principal((2, 2), 1) == 0
    assert all(cf.jacobi_trudi((k,), n) == comb(n + k - 1, k) for k in range(1, 5) for n in range(1, 6))
    assert cf.jacobi_trudi((2, 2), 5) == cf.schur_principal((2, 2), 5)
    assert cf.syt_descent_count((1, 1), 2) == 1 == cf.schur_principal((1, 1), 2)
    assert cf.syt_descent_count((2,), 2) == 3


@pytest.mark.parametrize("lam", shapes(8), ids=str)
def test_schur_equals_jacobi_trudi(lam):
    for n in range(9):
        assert cf.schur_principal(lam, n) == cf.jacobi_trudi(lam, n)


def test_non_rectangle_counterexample():
    assert orc.plane_partition_count((2, 1), 1) == 5
    assert cf.schur_principal((2, 1), 3) == 8
    with pytest.raises(ValueError):
        cf.shifted_hook_content((2, 1), 1)


# -- rectangles -----------------------------------------------------------------------


def test_rectangle_examples():
    assert cf.rect_hook_content(2, 2, 1) == 6
    assert cf.rect_hook_content(2, 3, 1) == cf.macmahon_box(2, 3, 1)
    assert all(cf.rect_hook_content(1, 1, n) == n + 1 for n in range(8))
    assert all(cf.macmahon_box(t, k, 0) == 1 for t in range(1, 5) for k in range(1, 5))
    assert cf.rect_product_1409(2, 2, 1) == 6
    assert all(cf.rect_product_1409(t, 1, n) == comb(n + t, n) for t in range(1, 5) for n in range(6))
    nar = cf.narayana_series(11)
    assert all(cf.rect_product_1409(2, 11, n) == series_coefficient(nar, n) for n in range(11))


def test_rectangle_grid():
    for t in range(1, 5):
        for k in range(1, 5):
            for n in range(7):
                value = cf.macmahon_box(t, k, n)
                assert value == cf.rect_hook_content(t, k, n) == cf.rect_product_1409(t, k, n)
                assert value == cf.ferrers_det((k,) * t, n)


def test_hexagon_product():
    for k in range(1, 5):
        for n in range(7):
            assert cf.hexagon_tilings(k, n) == cf.macmahon_box(k, k, n)


# -- Narayana, Catalan, staircases ---------------------------------------------------------


def test_narayana_examples():
    assert cf.narayana_hstar(2).terms == (1, 1)
    assert cf.narayana_hstar(3).terms == (1, 3, 1)
    assert cf.narayana_hstar(11).terms == (1, 55, 825, 4950, 13860, 19404, 13860, 4950, 825, 55, 1)
    for k in range(1, 6):
        assert ehr_series(ferrers((k, k))).hstar == cf.narayana_hstar(k)


def test_a140934_forms():
    want = [1, 78, 2366, 41405, 496860]
    assert [cf.a140934_formula(n) for n in range(5)] == want
    assert [cf.a140934_oblong(n) for n in range(5)] == want
    assert [cf.ladder_ehr(11, n) for n in range(5)] == want


def test_catalan_examples():
    assert cf.catalan_hankel(1, 2) == 3
    assert cf.catalan_hankel(2, 2) == 14
    assert all(cf.catalan_hankel(k, 0) == 1 for k in range(1, 6))
    for k in range(1, 5):
        stair = tuple(range(k, 0, -1))
        for n in range(9):
            assert cf.catalan_hankel(k, n) == cf.ferrers_det(stair, n) == cf.cigler_product(k, n)


def test_staircase_indexing():
    checked = 0
    for d in range(1, 3):
        for t in range(1, 5):
            for k in range(t * d + 1, t * d + 4):
                for n in range(6):
                    lam = cf.staircase_partition(k, d, t)
                    assert cf.staircase_product(k, d, t, n) == cf.staircase_det(k, d, t, n) == cf.ferrers_det(lam, n)
                    checked += 1
    assert checked == 144


def test_staircase_single_row_and_catalan():
    for k in range(2, 6):
        assert all(cf.staircase_product(k, 1, 1, n) == comb(n + k - 1, k - 1) for n in range(6))
    for k in range(1, 4):
        assert all(cf.staircase_product(k + 1, 1, k, n) == cf.catalan_hankel(k, n) for n in range(7))
    with pytest.raises(ValueError):
        cf.staircase_partition(3, 1, 3)


# -- Stirling, second-order Eulerian ----------------------------------------------------------


def test_stirling_examples():
    assert all(cf.stirling_bar(1, n) == comb(n + 2, 2) for n in range(8))
    assert cf.stirling_bar(2, 1) == 7
    assert cf.stirling_bar(2, 2) == 25


def test_stirling_bar_against_oracle():
    for k in range(1, 5):
        for n in range(7):
            assert cf.stirling_bar(k, n) == count_order_maps(bar_kk(k), n)


def test_second_order_eulerian():
    assert [cf.second_order_eulerian_hstar(k).terms for k in (1, 2, 3)] == [(1,), (1, 2), (1, 8, 6)]
    for k in range(1, 8):
        assert cf.gessel_identity_holds(k, terms=11)
        assert sum(cf.second_order_eulerian_row(k)) == _double_factorial(2 * k - 1)
    for k in range(1, 6):
        assert ehr_series(bar_kk(k)).hstar == cf.second_order_eulerian_hstar(k)


def _double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


# -- grids, M_k ---------------------------------------------------------------------------------


def test_grid_examples():
    assert cf.grid_square_count(2, 2) == 43
    assert cf.grid_square_count(3, 2) == 88
    assert all(cf.grid_square_count(0, n) == 1 for n in range(6))


def test_grid_recursion_matches_series():
    for m in range(6):
        s = EhrSeries(Polynomial([1, 1]) ** m, 3 * m + 1)
        assert [cf.grid_square_count(m, n) for n in range(11)] == s.coefficients(11)


def test_mk_examples():
    from orderpoly.poset import direct_product, ordinal_product, v_poset
    assert cf.mk_formula(1, 1) == 5 and cf.mk_formula(1, 2) == 14
    assert all(cf.mk_formula(0, n) == 1 for n in range(6))
    for k in range(1, 4):
        s = ehr_series(direct_product(chain(k), v_poset()))
        assert s.coefficients(8) == [cf.mk_formula(k, n) for n in range(8)]
        s = ehr_series(ordinal_product(v_poset(), chain(k)))
        assert s.coefficients(8) == [cf.v_otimes_chain_ehr(k, n) for n in range(8)]


def test_integrality_guard():
    with pytest.raises(cf.InvariantViolation):
        cf._integral(__import__("fractions").Fraction(1, 2), "half")
