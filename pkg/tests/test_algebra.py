from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from macmahon.algebra import (
    BinomialProduct,
    NotPolynomialAtQ0,
    Poly,
    QTSeries,
    TruncatedSeries,
    binomial_power,
    bp_eval_q0,
    bp_expand,
    bp_mul,
    pochhammer_ratio,
    series_product,
)
from macmahon.genfun import f_factor

from oracles import q_sym, t_sym

BP = BinomialProduct

small_int = st.integers(-5, 5)
polys = st.lists(small_int, max_size=5).map(lambda cs: Poly(tuple(cs)))
M_QT = 4
qt_series = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small_int, max_size=6).map(
    lambda d: QTSeries(M_QT, d))
binomial_products = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda ab: ab != (0, 0)),
    st.integers(-2, 2), max_size=4).map(BP)


def series_over(ring, N=4):
    return st.lists(ring, min_size=N + 1, max_size=N + 1).map(lambda cs: TruncatedSeries(tuple(cs)))


def qt_to_sympy(x: QTSeries):
    return sum(c * q_sym**a * t_sym**b for (a, b), c in x.terms)


def truncate_sympy(expr, M):
    """Drop monomials of total (q,t)-degree above M from a polynomial."""
    poly = sympy.Poly(sympy.expand(expr), q_sym, t_sym)
    return sum(c * q_sym**a * t_sym**b for (a, b), c in poly.terms() if a + b <= M)


# --- ring axioms -------------------------------------------------------------

RINGS = {
    "int": st.integers(-20, 20),
    "poly": polys,
    "qt": qt_series,
    "series-int": series_over(st.integers(-5, 5)),
    "series-poly": series_over(polys, 3),
    "series-qt": series_over(qt_series, 2),
}


@pytest.mark.parametrize("ring", sorted(RINGS))
def test_ring_axioms(ring):
    strategy = RINGS[ring]

    @given(strategy, strategy, strategy)
    def check(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == a * 0
        assert a + (b - b) == a

    check()


@given(binomial_products, binomial_products, binomial_products)
def test_binomial_product_group_laws(x, y, z):
    assert bp_mul(x, y) == bp_mul(y, x)
    assert bp_mul(bp_mul(x, y), z) == bp_mul(x, bp_mul(y, z))
    assert bp_mul(x, BP()) == x
    assert (x / x).is_one()


# --- Poly --------------------------------------------------------------------

def test_poly_strips_trailing_zeros():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)) == 0


def test_poly_from_factors_and_display():
    p = Poly.from_factors({1: 1, 2: 1})
    assert p.coeffs == (1, -1, -1, 1)
    assert p.factored() == "(1-t)^1 (1-t^2)^1"
    assert Poly.from_factors({}) == 1


def test_poly_evaluation_exact():
    p = Poly((1, -3, 2))
    assert p(2) == 3
    assert p(Fraction(1, 2)) == 0


@given(polys, st.integers(-3, 3))
def test_poly_evaluation_matches_sympy(p, x):
    assert p(x) == sum(c * x**i for i, c in enumerate(p.coeffs))


def test_poly_big_integers_stay_exact():
    p = Poly((1, 1)) ** 80
    assert p.coeff(40) == sympy.binomial(80, 40)


# --- QTSeries ----------------------------------------------------------------

def test_qt_truncates_on_construction():
    x = QTSeries(2, {(1, 1): 3, (2, 1): 5})
    assert x.as_dict == {(1, 1): 3}


@given(qt_series, qt_series)
def test_qt_product_matches_sympy(x, y):
    expected = truncate_sympy(qt_to_sympy(x) * qt_to_sympy(y), M_QT)
    assert sympy.expand(qt_to_sympy(x * y) - expected) == 0


def test_qt_specialisations():
    x = QTSeries(3, {(0, 0): 1, (1, 0): 2, (0, 2): -1, (1, 1): 4})
    assert x.at_q0() == Poly((1, 0, -1))
    assert x.at_t_equals_q() == Poly((1, 2, 3), "q")


# --- BinomialProduct ---------------------------------------------------------

def test_bp_cancellation():
    assert bp_mul(BP({(0, 1): 1}), BP({(0, 1): -1})).is_one()


def test_bp_square_of_f10():
    assert bp_mul(f_factor(1, 0), f_factor(1, 0)).as_dict == {(0, 1): 2, (1, 0): -2}


def test_bp_identity():
    x = BP({(2, 1): 3})
    assert bp_mul(BP(), x) == x


def test_bp_rejects_zero_binomial():
    with pytest.raises(ValueError):
        BP({(0, 0): 1})


def test_bp_text_form_sorted():
    assert str(BP({(1, 0): -1, (0, 1): 1})) == "(1-t)^1 (1-q)^-1"
    assert str(BP({(2, 3): 1})) == "(1-q^2*t^3)^1"
    assert str(BP()) == "1"


def test_bp_eval_q0_examples():
    assert bp_eval_q0(f_factor(1, 0)) == Poly((1, -1))
    assert bp_eval_q0(BP({(1, 2): 5, (2, 3): -7})) == 1
    with pytest.raises(NotPolynomialAtQ0):
        bp_eval_q0(BP({(0, 1): -1}))


def test_bp_expand_examples():
    assert bp_expand(BP({(0, 1): 1}), 3) == QTSeries(3, {(0, 0): 1, (0, 1): -1})
    assert bp_expand(BP({(1, 0): -1}), 2) == QTSeries(2, {(0, 0): 1, (1, 0): 1, (2, 0): 1})
    assert bp_expand(f_factor(1, 0), 2) == QTSeries(2, {(0, 0): 1, (1, 0): 1, (2, 0): 1, (0, 1): -1, (1, 1): -1})


@given(binomial_products, binomial_products, st.integers(0, 5))
def test_bp_expand_is_multiplicative(x, y, M):
    assert bp_expand(bp_mul(x, y), M) == bp_expand(x, M) * bp_expand(y, M)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 6))
def test_binomial_power_matches_sympy(a, b, e, M):
    if (a, b) == (0, 0):
        return
    expected = truncate_sympy((1 - q_sym**a * t_sym**b) ** e, M)
    assert sympy.expand(qt_to_sympy(binomial_power(a, b, e, M)) - expected) == 0


@given(st.integers(0, 3), st.integers(0, 3), st.integers(1, 3), st.integers(0, 6))
def test_negative_binomial_power_is_inverse(a, b, e, M):
    if (a, b) == (0, 0):
        return
    assert binomial_power(a, b, -e, M) * binomial_power(a, b, e, M) == QTSeries.const(1, M)


def test_bp_eval_q0_agrees_with_expand():
    for n in range(5):
        for m in range(5):
            x = f_factor(n, m)
            p = bp_eval_q0(x)
            M = p.degree + 2
            assert bp_expand(x, M).at_q0() == p.truncate(M)


# --- TruncatedSeries and the Pochhammer ratio -------------------------------

def test_series_never_exceeds_truncation():
    a = TruncatedSeries((1, 1, 1))
    b = TruncatedSeries((1, 2, 3, 4))
    assert (a * b).N == 2
    assert (a * b).coeffs == (1, 3, 6)


def test_series_json_form():
    assert TruncatedSeries((1, 2)).to_json() == {"var": "s", "trunc": 1, "coeffs": [1, 2]}


def test_pochhammer_first_coefficient():
    ratio = pochhammer_ratio(1, 1, 1)
    assert ratio.coeff(1) == QTSeries(1, {(0, 0): 1, (1, 0): 1, (0, 1): -1})


def test_pochhammer_degree_zero():
    assert pochhammer_ratio(1, 0, 3).coeffs == (QTSeries.const(1, 3),)


@pytest.mark.parametrize("k", [1, 2])
def test_pochhammer_at_t_equals_q_is_geometric(k):
    # (q s^k; q)_inf / (s^k; q)_inf telescopes to 1 / (1 - s^k)
    for M in range(5):
        ratio = pochhammer_ratio(k, 6, M)
        for n in range(7):
            expected = Poly.const(1 if n % k == 0 else 0, "q")
            assert ratio.coeff(n).at_t_equals_q() == expected


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pochhammer_matches_f_d0(k):
    N, M = 4 * k, 5
    ratio = pochhammer_ratio(k, N, M)
    for n in range(N + 1):
        if n % k:
            assert ratio.coeff(n) == QTSeries(M)
        else:
            assert ratio.coeff(n) == bp_expand(f_factor(n // k, 0), M)


def test_pochhammer_times_denominator_is_numerator():
    """(t s; q)_inf / (s; q)_inf times (s; q)_inf, both truncated, is (t s; q)_inf."""
    N, M = 5, 4
    s_sym = sympy.Symbol("s")
    ratio = sum(qt_to_sympy(pochhammer_ratio(1, N, M).coeff(n)) * s_sym**n for n in range(N + 1))
    denominator = sympy.prod([1 - q_sym**n * s_sym for n in range(M + 1)])
    numerator = sympy.prod([1 - t_sym * q_sym**n * s_sym for n in range(M + 1)])
    lhs = sympy.Poly(sympy.expand(ratio * denominator), s_sym)
    rhs = sympy.Poly(sympy.expand(numerator), s_sym)
    for n in range(N + 1):
        diff = lhs.coeff_monomial(s_sym**n) - rhs.coeff_monomial(s_sym**n)
        assert truncate_sympy(diff, M) == 0


def test_series_product_of_nothing_is_one():
    assert series_product([], 3, 1) == TruncatedSeries((1, 0, 0, 0))
