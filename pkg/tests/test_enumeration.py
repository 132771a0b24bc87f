import math

import pytest
from hypothesis import given, strategies as st

from cominuscule import weyl
from cominuscule.enumeration import (
    CapExceeded,
    QPolynomial,
    XYPolynomial,
    T_poly,
    b_staircase_q,
    bhat_gf,
    bhat_q,
    big_B,
    big_B_sum,
    census,
    decorated_signed_count,
    dhat_gf,
    dhat_q,
    preference_count,
    q_int,
    tableau_census,
)
from cominuscule.posets import build_poset
from cominuscule.preference import atomic_preference_functions, preference_functions

Q = QPolynomial


def test_paper_seeds():
    assert bhat_q(0) == Q([1])
    assert bhat_q(1) == q_int(2)
    assert str(bhat_q(2)) == "1+2q+2q^2+q^3"
    assert dhat_q(2) == q_int(2) ** 2
    assert dhat_q(3) == q_int(2) ** 4 - Q.q(2) * q_int(2)
    assert big_B(0) == 1 and big_B(1) == 3 and big_B(2) == 13
    assert T_poly(1) == XYPolynomial({(0, 1): 1, (0, 0): 1})
    assert b_staircase_q(1) == Q([1, 1])
    with pytest.raises(ValueError):
        bhat_q(-1)
    with pytest.raises(ValueError):
        T_poly(0)


@pytest.mark.parametrize("n", range(4, 9))
def test_shared_recurrence(n):
    two = Q([1, 1])
    for f in (bhat_q, dhat_q):
        assert f(n) == (1 + Q.q()) ** 2 * f(n - 1) - two * Q.q(2) * f(n - 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_bhat_census(n):
    assert census("B", n, 1, method="pattern") == bhat_q(n)


@pytest.mark.parametrize("n", range(3, 6))
def test_dhat_census(n):
    assert census("D", n, 1) == dhat_q(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_generating_functions_at_one(n):
    assert bhat_gf(n) == bhat_q(n)(1)
    assert dhat_gf(n) == dhat_q(n)(1)


@pytest.mark.parametrize("n", range(0, 5))
def test_big_B_oracles(n):
    assert big_B(n) == big_B_sum(n) == decorated_signed_count(n)
    if n:
        assert census("B", n, n, scope="all", grading="count") == big_B(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_T_poly_census(n):
    assert tableau_census(n) == T_poly(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_T_poly_total(n):
    assert T_poly(n)(1, 1) == 2**n * math.factorial(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_staircase_census(n):
    assert census("B", n, n, method="dfs") == b_staircase_q(n)
    assert b_staircase_q(n)(1) == 2 * len(list(preference_functions(n))) == 2 * preference_count(n)


def test_census_cross_checks():
    p = build_poset("A", 2, 1)
    want = Q()
    for o in p.ideals:
        w = o.element
        coeffs = [0] * (w.length + 1)
        for x in weyl.bruhat_interval_below(w):
            coeffs[w.length - x.length] += 1
        want = want + Q(coeffs)
    assert census("A", 2, 1, scope="all") == want
    assert census("D", 4, 4, grading="count") == len(list(atomic_preference_functions(4)))
    assert census("B", 3, 1, grading="count") == bhat_q(3)(1)


def test_census_methods_and_workers_agree():
    for args in [("A", 4, 2), ("B", 3, 3), ("D", 4, 1)]:
        ref = census(*args, scope="all")
        assert census(*args, scope="all", method="pattern") == ref
        assert census(*args, scope="all", method="dfs") == ref
    assert census("B", 3, 3, scope="all", jobs=2) == census("B", 3, 3, scope="all")


def test_census_guards():
    with pytest.raises(CapExceeded):
        census("B", 4, 4, scope="all", cap=100)
    with pytest.raises(ValueError):
        census("E6", None, 1, method="pattern")
    with pytest.raises(ValueError):
        census("A", 3, 2, scope="some")


def test_polynomial_text():
    assert str(Q()) == "0"
    assert str(Q([0, -1, 0, 3])) == "-q+3q^3"
    assert Q.parse("1+2q+2q^2+q^3") == bhat_q(2)
    with pytest.raises(ValueError):
        Q.parse("1+x")
    with pytest.raises(ValueError):
        Q.parse("")
    assert str(T_poly(2)) == "1+2y+y^2+x+2xy+xy^2"


def test_exact_division():
    assert q_int(4).derivative(2).exact_div(2) == Q([1, 3])
    with pytest.raises(ArithmeticError):
        Q([1, 2]).exact_div(2)


polys = st.lists(st.integers(-20, 20), max_size=7).map(Q)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Q()
    assert (a * b)(2) == a(2) * b(2)
    assert Q.parse(str(a)) == a
