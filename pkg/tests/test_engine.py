import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from conftest import posets, random_poset
from orderpoly import closed_forms as cf
from orderpoly.config import DEFAULT_CAPS, Caps, load_config
from orderpoly.engine import (
    count_order_maps,
    crosscheck,
    descents,
    ehr_polynomial,
    ehr_series,
    extension_stats,
    linear_extensions,
)
from orderpoly.exact import EhrSeries, Polynomial, series_hadamard, series_mul
from orderpoly.poset import (
    CapExceeded,
    Poset,
    antichain,
    bar_kk,
    boolean,
    chain,
    diamond,
    direct_product,
    direct_sum,
    dual,
    ferrers,
    glue,
    ordinal_sum,
    poset_from_covers,
    v_poset,
)


@pytest.mark.parametrize(
    "P, total, tally",
    [(antichain(2), 2, (1, 1)), (boolean(3), 48, (1, 11, 24, 11, 1)), (chain(5), 1, (1,)), (Poset(0, []), 1, (1,))],
)
def test_extension_stats_examples(P, total, tally):
    st = extension_stats(P)
    assert (st.total, st.by_descents) == (total, tally)


def test_jordan_holder_list_and_descents():
    # 1-based: 1<2, 1<3, 2<4, 2<5, 3<5, 4<6, 5<6
    P = poset_from_covers(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)])
    words = ["".join(str(v + 1) for v in w) for w in linear_extensions(P)]
    assert words == ["123456", "123546", "124356", "132456", "132546"]
    assert [descents(w) for w in linear_extensions(P)] == [0, 1, 1, 1, 2]
    assert ehr_series(P) == EhrSeries.of([1, 3, 1], 7)


def test_series_examples():
    assert ehr_series(v_poset()) == EhrSeries.of([1, 1], 4)
    assert ehr_series(v_poset()).coefficients(8) == [sum((c + 1) ** 2 for c in range(n + 1)) for n in range(8)]
    assert ehr_series(direct_product(chain(1), diamond())) == EhrSeries.of([1, 1], 5)
    assert ehr_series(direct_product(chain(2), diamond())) == EhrSeries.of([1, 11, 24, 11, 1], 9)


def test_chain_times_diamond_k3():
    s = ehr_series(direct_product(chain(3), diamond()))
    assert s == EhrSeries.of([1, 37, 315, 873, 873, 315, 37, 1], 13)


def test_count_order_maps_examples():
    assert [count_order_maps(chain(3), n) for n in range(6)] == [comb(n + 3, 3) for n in range(6)]
    assert count_order_maps(ferrers((2, 1)), 1) == 5
    assert count_order_maps(Poset(0, []), 4) == 1
    assert count_order_maps(chain(2), -1) == 0


def test_polynomial_examples():
    p = ehr_polynomial(direct_product(chain(1), v_poset()))
    assert all(p(n) == Fraction((n + 1) * (n + 2) * (2 * n + 3), 6) for n in range(15))
    p = ehr_polynomial(ferrers((2, 2)))
    assert all(p(n) == Fraction(comb(n + 3, 3) * comb(n + 3, 2), n + 3) for n in range(15))
    assert all(p(n) == cf.macmahon_box(2, 2, n) for n in range(11))
    assert ehr_polynomial(antichain(2)).terms == (1, 2, 1)


def test_polynomial_22_points_matches_closed_form():
    caps = DEFAULT_CAPS.with_overrides(max_elements=22)
    p = ehr_polynomial(ferrers((11, 11)), caps)
    assert p.degree == 22
    for n in range(23, 53):
        assert p(n) == cf.a140934_formula(n)


def test_caps_refuse():
    with pytest.raises(CapExceeded, match="max-elements"):
        extension_stats(chain(21))
    with pytest.raises(CapExceeded):
        count_order_maps(chain(13), 1)
    with pytest.raises(CapExceeded):
        count_order_maps(chain(2), 13)
    assert extension_stats(chain(21), Caps(max_elements=21)).total == 1


def test_workers_give_same_result():
    P = boolean(3)
    assert extension_stats(P, Caps(workers=2)) == extension_stats(P)


def test_load_config(tmp_path):
    f = tmp_path / "caps.conf"
    f.write_text("# caps\nmax_elements = 9\nworkers=2\n")
    assert load_config(f) == {"max_elements": 9, "workers": 2}
    f.write_text("colour=blue\n")
    with pytest.raises(ValueError):
        load_config(f)


# -- crosscheck ----------------------------------------------------------------


@pytest.mark.parametrize("P, nmax", [(boolean(3), 4), (chain(5), 8)])
def test_crosscheck_examples(P, nmax):
    report = crosscheck(P, nmax)
    assert report.ok and len(report.rows) == nmax + 1


def test_crosscheck_random_six_element_posets():
    rng = random.Random(6)
    for _ in range(50):
        P = random_poset(rng, max_size=6, min_size=6)
        assert crosscheck(P, 5).ok


NAMED_SMALL = [chain(1), chain(4), antichain(3), boolean(2), boolean(3), ferrers((3, 2)), ferrers((2, 2, 1)),
               v_poset(), diamond(), bar_kk(2), bar_kk(3), bar_kk(4), ferrers((4, 3, 2, 1))]


@pytest.mark.parametrize("P", NAMED_SMALL, ids=lambda P: P.dump().replace("\n", ","))
def test_crosscheck_named_builders(P):
    assert P.p <= 10
    assert crosscheck(P, 6).ok


def test_crosscheck_render_flags_mismatch():
    report = crosscheck(chain(2), 2)
    report.rows.append((3, 1, 2))
    assert not report.ok and report.mismatches == [3]
    assert report.render().splitlines()[-1] == "3 1 2 MISMATCH"


# -- algebra laws and invariants -------------------------------------------------


@given(posets(max_size=7))
def test_hstar_at_one_counts_extensions(P):
    st = extension_stats(P)
    assert all(c >= 0 for c in st.by_descents)
    assert sum(st.by_descents) == st.total == sum(1 for _ in linear_extensions(P))


@given(posets(max_size=7))
def test_dual_invariance(P):
    assert ehr_series(P) == ehr_series(dual(P))


@settings(max_examples=30)
@given(posets(max_size=4), posets(max_size=4))
def test_direct_sum_law(P, Q):
    assert ehr_series(direct_sum(P, Q)) == series_hadamard(ehr_series(P), ehr_series(Q))


@settings(max_examples=30)
@given(posets(max_size=4, min_size=1), posets(max_size=4, min_size=1))
def test_ordinal_sum_law(P, Q):
    assert ehr_series(ordinal_sum(P, Q)) == series_mul(ehr_series(P), ehr_series(Q), 1)


@settings(max_examples=30)
@given(posets(max_size=4, min_size=1), posets(max_size=4, min_size=1))
def test_glue_law(P, Q):
    P = ordinal_sum(P, chain(1))
    Q = ordinal_sum(chain(1), Q)
    assert ehr_series(glue(P, Q)) == series_mul(ehr_series(P), ehr_series(Q), 2)


@settings(max_examples=20)
@given(posets(max_size=4))
def test_engine_matches_oracle_random(P):
    assert crosscheck(P, 4).ok


def test_series_coefficients_are_lattice_counts_bar():
    for k in range(1, 5):
        s = ehr_series(bar_kk(k))
        assert s.hstar == Polynomial(cf.second_order_eulerian_row(k))
