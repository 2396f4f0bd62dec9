import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import series
from moncurve.series import MultiSeries, divides
from moncurve.principalize import (
    BudgetExceeded,
    MonomialIdeal,
    expand_chart,
    is_principal,
    minimalize,
    principalize_all_leaves,
    principalize_search,
    regularize_tuple,
    select_center,
    support_ideal,
)
from oracles import pullback_terms

x, y = MultiSeries.variable(2, 0), MultiSeries.variable(2, 1)


@st.composite
def monomial_ideals(draw, max_n=4, max_gens=5, max_exp=4):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.lists(st.integers(0, max_exp), min_size=n, max_size=n), min_size=1, max_size=max_gens))
    return minimalize(gens)


def test_minimalize_examples():
    assert minimalize([(2, 0), (1, 1), (0, 2), (2, 2)]).gens == ((0, 2), (1, 1), (2, 0))
    assert minimalize([(0, 0)]).is_unit()
    assert minimalize([(1, 0), (1, 0)]).gens == ((1, 0),)
    with pytest.raises(ValueError):
        minimalize([])


def test_is_principal_examples():
    assert is_principal(minimalize([(0, 2)])) == (0, 2)
    assert is_principal(minimalize([(2, 0), (0, 3)])) is None
    assert is_principal(minimalize([(1, 1), (0, 1)])) == (0, 1)


def test_select_center_examples():
    assert select_center(minimalize([(2, 0), (0, 3)])) == (0, 1)
    assert select_center(minimalize([(1, 1), (2, 0), (0, 2)])) == (0, 1)
    assert select_center(minimalize([(3, 0, 0), (0, 0, 2)])) == (0, 2)
    with pytest.raises(ValueError):
        select_center(minimalize([(1, 1)]))


def test_expand_chart_examples():
    (_, a), (_, b) = expand_chart(minimalize([(1, 0), (0, 1)]), (0, 1))
    assert a.gens == ((0, 1),) and b.gens == ((1, 0),)
    (mv, a), _ = expand_chart(minimalize([(2, 0), (0, 3)]), (0, 1))
    assert mv.matrix.matrix == ((1, 1), (0, 1))
    assert a.gens == ((0, 3), (2, 2))
    for _, c in expand_chart(minimalize([(0, 0)]), (0, 1)):
        assert c.is_unit()


def test_principalize_examples():
    r = principalize_search(minimalize([(1, 0), (0, 1)]))
    assert len(r.path) == 1 and r.M == (0, 1)
    r = principalize_search(minimalize([(2, 0), (0, 3)]))
    assert len(r.path) == 2
    assert r.path.composite.matrix == ((1, 2), (0, 1))
    assert r.M == (0, 3)
    r = principalize_search(minimalize([(2, 1)]))
    assert len(r.path) == 0 and r.M == (2, 1)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        principalize_search(minimalize([(4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1)]), budget=1)


def test_support_ideal_examples():
    assert support_ideal([x * y, x * x + y * y]).gens == ((0, 2), (1, 1), (2, 0))
    assert support_ideal([1 + x]).is_unit()
    assert support_ideal([x ** 3]).gens == ((3, 0),)
    with pytest.raises(ValueError):
        support_ideal([MultiSeries.zero(2)])


def test_regularize_examples():
    reg = regularize_tuple([x * y, x * x + y * y])
    assert len(reg.path) == 1 and reg.M == (0, 2)
    assert reg.reduced[0] == x and reg.reduced[1] == 1 + x * x
    assert reg.unit_index == 1
    reg = regularize_tuple([MultiSeries.constant(2, 1), x])
    assert len(reg.path) == 0 and reg.M == (0, 0) and reg.unit_index == 0
    reg = regularize_tuple([x * x, x * y])
    assert len(reg.path) >= 1 and reg.reduced[reg.unit_index].constant_term() != 0


@given(monomial_ideals())
def test_principalization_sound(I):
    r = principalize_search(I, budget=10_000)
    r.check()
    E = r.path.composite
    pulled = [E.pull_exponent(g) for g in I.gens]
    assert r.M in pulled
    assert all(divides(r.M, p) for p in pulled)
    assert abs(E.det()) == 1


@given(monomial_ideals(max_n=3, max_gens=4, max_exp=3))
def test_every_leaf_is_principal(I):
    leaves = list(principalize_all_leaves(I, budget=20_000))
    assert leaves
    for r in leaves:
        r.check()
    # the leaves are distinct charts
    assert len({r.path.to_list().__repr__() for r in leaves}) == len(leaves)


@given(st.integers(1, 3).flatmap(lambda n: st.lists(series(n, max_deg=4), min_size=1, max_size=3)))
def test_regularize_postconditions(hs):
    if all(h.is_zero() for h in hs):
        return
    reg = regularize_tuple(hs)
    E = reg.path.composite
    for h, ht in zip(hs, reg.reduced):
        # independent pullback by symbolic substitution, then divide by z^M
        pulled = pullback_terms(h.terms, h.n, E.matrix)
        assert all(divides(reg.M, a) for a in pulled)
        assert ht.terms == {tuple(p - q for p, q in zip(a, reg.M)): c for a, c in pulled.items()}
    assert reg.reduced[reg.unit_index].constant_term() != 0
