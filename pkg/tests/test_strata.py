from collections import Counter

import pytest

from btstrata.coxeter import FrobEigenvalue, coxeter_cohomology
from btstrata.qpoly import ONE, ZERO, Q, eval_at
from btstrata.strata import (
    ab_split,
    cohomology_from_e1,
    cohomology_of_S,
    e1_closed_form,
    e1_grid,
    e1_page,
    lagrangian_count,
    point_count_S,
    point_count_stratum,
)
from btstrata.symbols import Symbol, UnipotentLabel, label_to_symbol, trivial_symbol

E = ()


def rho(delta, alpha, beta):
    return label_to_symbol(UnipotentLabel(delta, (alpha, beta)))


def test_e1_examples():
    page = e1_page(2)
    assert page[(1, 0)].A == Counter({rho(0, E, (2,)): 1, rho(0, E, (1, 1)): 1, rho(0, (1,), (1,)): 1})
    assert page[(1, 0)].A == Counter({Symbol((0, 1), (2,)): 1, Symbol((0, 1, 2), (1, 2)): 1, Symbol((0, 2), (1,)): 1})
    assert not page[(1, 0)].B
    assert page[(2, 0)].B == Counter({Symbol((0, 1, 2), ()): 1})
    assert e1_closed_form(2, 1, 0) == page[(1, 0)]


@pytest.mark.parametrize("theta", range(1, 6))
def test_top_row_is_coxeter(theta):
    page = e1_page(theta)
    table = coxeter_cohomology(theta)
    for i in range(theta + 1):
        term = page[(theta, i)]
        assert term.A == Counter(s for s, ev in table[theta + i] if ev.sign > 0)
        assert term.B == Counter(s for s, ev in table[theta + i] if ev.sign < 0)
        assert e1_closed_form(theta, theta, i).A == Counter({s: 1 for s in term.A})
        split = ab_split(theta, theta, i, page)
        assert not split.A1 and not split.B1


def test_closed_form_frozen_cell():
    term = e1_closed_form(3, 1, 1)
    expected = [((1,), (2,)), ((2,), (1,)), ((1, 1), (1,)), ((3,), E), ((2, 1), E)]
    assert term.A == Counter(rho(0, a, b) for a, b in expected)
    assert not term.B


@pytest.mark.parametrize("theta", range(1, 6))
def test_closed_form_matches_induction(theta):
    page = e1_page(theta)
    for (tp, i), term in page.terms.items():
        assert e1_closed_form(theta, tp, i) == term


def test_ab_split_example():
    split = ab_split(2, 1, 0)
    assert split.A0 == Counter({rho(0, E, (2,)): 1, rho(0, (1,), (1,)): 1})
    assert split.A1 == Counter({rho(0, E, (1, 1)): 1})
    assert not split.B0 and not split.B1


@pytest.mark.parametrize("theta", range(1, 6))
def test_ladders(theta):
    page = e1_page(theta)
    for tp in range(theta):
        for i in range(tp + 1):
            assert ab_split(theta, tp, i, page).A1 == ab_split(theta, tp + 1, i, page).A0
            if i <= tp - 2:
                assert ab_split(theta, tp, i, page).B1 == ab_split(theta, tp + 1, i, page).B0


def test_cohomology_examples():
    h1 = cohomology_of_S(1).graded()
    assert h1 == {0: [(trivial_symbol(1), FrobEigenvalue(1, 0))], 2: [(trivial_symbol(1), FrobEigenvalue(1, 1))]}
    h2 = cohomology_of_S(2).graded()[2]
    assert Counter(h2) == Counter({
        (rho(0, (2,), E), FrobEigenvalue(1, 1)): 1,
        (rho(0, (1, 1), E), FrobEigenvalue(1, 1)): 1,
        (rho(1, E, E), FrobEigenvalue(-1, 1)): 1,
    })


@pytest.mark.parametrize("theta", range(0, 9))
def test_cohomology_shape(theta):
    coh = cohomology_of_S(theta)
    graded = coh.graded()
    assert all(k % 2 == 0 for k in graded)
    assert all(not coh.symbols_in_degree(k) for k in range(1, 2 * theta, 2))
    for i in range(theta + 1):
        assert coh.symbols_in_degree(2 * i) == coh.symbols_in_degree(2 * (theta - i))
        assert all(ev.exp == i for _, ev in graded[2 * i])
        assert all(s.rank == theta for s, _ in graded[2 * i])
    for i in {0, theta}:
        plus, minus = coh.even[i]
        assert plus == Counter({trivial_symbol(theta): 1}) and not minus


@pytest.mark.parametrize("theta", range(0, 7))
def test_cohomology_from_e1_page(theta):
    assert cohomology_from_e1(theta).even == cohomology_of_S(theta).even


def test_point_count_examples():
    for n in range(1, 5):
        assert point_count_S(1, n) == Q ** n + 1
    assert point_count_S(2, 2) == Q ** 5 + Q ** 3 + Q ** 2 + 1
    assert eval_at(point_count_S(2, 2), 3) == 280
    assert point_count_stratum(1, 1, 1) == ZERO
    assert point_count_stratum(1, 1, 2) == Q ** 2 - Q


@pytest.mark.parametrize("theta", range(0, 5))
def test_euler_characteristic(theta):
    assert point_count_S(theta, 1) == lagrangian_count(theta)
    assert point_count_stratum(theta, 0, 1) == lagrangian_count(theta)


@pytest.mark.parametrize("theta", range(1, 5))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_strata_partition_points(theta, n):
    page = e1_page(theta)
    total = sum((point_count_stratum(theta, tp, n, page) for tp in range(theta + 1)), ZERO)
    assert total == point_count_S(theta, n)
    assert point_count_stratum(theta, 0, n, page) == lagrangian_count(theta)


def test_point_counts_are_integral():
    for theta in range(1, 5):
        for n in (1, 2):
            assert point_count_S(theta, n).has_integer_coeffs()


def test_grid_rows():
    rows = e1_grid(2)
    assert len(rows) == 6
    assert {(r["i"], r["theta_prime"]) for r in rows} == {(i, tp) for tp in range(3) for i in range(tp + 1)}
    assert all(r["degree"] == r["i"] + r["theta_prime"] for r in rows)


def test_bad_indices():
    with pytest.raises(ValueError):
        e1_closed_form(2, 1, 2)
    with pytest.raises(ValueError):
        point_count_S(2, 0)
    with pytest.raises(ValueError):
        point_count_stratum(2, 3, 1)
