from collections import Counter
from fractions import Fraction

import pytest

from btstrata.coxeter import (
    FrobEigenvalue,
    coxeter_cohomology,
    lusztig_degree_S,
    lusztig_degree_T,
    restriction_identity_sides,
    s_symbol,
    t_symbol,
    verify_restriction_identity,
)
from btstrata.qpoly import ONE, Q, exact_div
from btstrata.symbols import Symbol, UnipotentLabel, degree, steinberg_symbol, symbol_to_label, trivial_symbol


def test_theta_one():
    table = coxeter_cohomology(1)
    assert table == {
        1: [(Symbol((0, 1), (1,)), FrobEigenvalue(1, 0))],
        2: [(Symbol((1,), ()), FrobEigenvalue(1, 1))],
    }


def test_theta_two_cuspidal_in_degree_two():
    table = coxeter_cohomology(2)
    assert (Symbol((0, 1, 2), ()), FrobEigenvalue(-1, 1)) in table[2]


@pytest.mark.parametrize("theta", range(1, 9))
def test_shape(theta):
    table = coxeter_cohomology(theta)
    assert sorted(table) == list(range(theta, 2 * theta + 1))
    assert table[2 * theta] == [(trivial_symbol(theta), FrobEigenvalue(1, theta))]
    assert table[theta][0][0] == steinberg_symbol(theta)
    everything = [s for terms in table.values() for s, _ in terms]
    assert len(everything) == len(set(everything)) == 2 * theta
    assert all(s.rank == theta for s in everything)


def test_empty_variety_of_rank_zero():
    assert coxeter_cohomology(0) == {0: [(Symbol((0,), ()), FrobEigenvalue(1, 0))]}


@pytest.mark.parametrize("theta", range(1, 8))
def test_labels(theta):
    for i in range(theta + 1):
        assert symbol_to_label(s_symbol(theta, i)) == UnipotentLabel(0, ((i,) if i else (), (1,) * (theta - i)))
    for j in range(theta - 1):
        lab = UnipotentLabel(1, ((j,) if j else (), (1,) * (theta - 2 - j)))
        assert symbol_to_label(t_symbol(theta, j)) == lab


def test_lusztig_examples():
    for theta in range(5):
        assert lusztig_degree_S(theta, theta) == ONE
    assert lusztig_degree_S(1, 0) == Q
    expected = exact_div(Q ** 4 * (Q ** 2 - 1) * (Q ** 3 - 1), 2 * (Q + 1))
    assert lusztig_degree_T(3, 0) == expected
    assert lusztig_degree_T(2, 0) == Q * (Q - 1) ** 2 * Fraction(1, 2)


@pytest.mark.parametrize("theta", range(1, 8))
def test_hook_degrees_match_closed_forms(theta):
    for i in range(theta + 1):
        assert degree(s_symbol(theta, i)) == lusztig_degree_S(theta, i)
    for j in range(theta - 1):
        assert degree(t_symbol(theta, j)) == lusztig_degree_T(theta, j)
    assert lusztig_degree_S(theta, 0) == Q ** (theta * theta)


def test_index_errors():
    for bad in [lambda: s_symbol(2, 3), lambda: t_symbol(2, 1), lambda: lusztig_degree_T(1, 0)]:
        with pytest.raises(ValueError):
            bad()
    with pytest.raises(ValueError):
        verify_restriction_identity(1)


@pytest.mark.parametrize("theta", range(2, 8))
def test_restriction_identity(theta):
    assert verify_restriction_identity(theta)


def test_restriction_identity_degree_two():
    lhs, rhs = restriction_identity_sides(2)[2]
    # Steinberg restricts to Steinberg; the cuspidal restricts to nothing
    assert lhs == rhs == Counter({(Symbol((0, 1), (1,)), FrobEigenvalue(1, 0)): 1})


def test_twist():
    assert FrobEigenvalue(-1, 2).twist() == FrobEigenvalue(-1, 3)
    assert str(FrobEigenvalue(-1, 2)) == "-q^2"
