from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import assert_same_value, nonzero_rationals, primes
from padic import (
    DivisionByZero,
    ExtVal,
    Form,
    IndeterminateValuation,
    InsufficientPrecision,
    NotAnInteger,
    PadicNumber,
    ZeroHasNoExpansion,
    padic_norm_rat,
    padic_val_rat,
    rational_residue,
)

F = Fraction


def test_from_rational_minus_one():
    x = PadicNumber.from_rational(5, -1, 7)
    assert (x.v, x.unit, x.prec) == (0, 5**7 - 1, 7)
    assert x.digits().digits == (4,) * 7


def test_from_rational_zero():
    assert PadicNumber.from_rational(5, 0, 3).form is Form.EXACT_ZERO


def test_from_rational_one_third():
    x = PadicNumber.from_rational(5, F(1, 3), 6)
    assert (x.v, x.prec) == (0, 6)
    assert x.unit * 3 % 5**6 == 1
    assert x.digits().digits == (2, 3, 1, 3, 1, 3)
    assert str(x.digits()) == "...313132"


@given(primes, nonzero_rationals(), st.integers(1, 40))
def test_norm_extension(p, q, n):
    x = PadicNumber.from_rational(p, q, n)
    assert x.norm() == ExtVal.finite(padic_val_rat(p, q))
    assert x.norm().norm_fraction(p) == padic_norm_rat(p, q)


def test_add_full_cancellation():
    x = PadicNumber.from_rational(5, -1, 7)
    y = PadicNumber.from_rational(5, 1, 7)
    s = x + y
    assert s.form is Form.ZERO_AT_LEAST and s.v == 7
    assert s.reduce_mod(7) == 0


def test_add_third_panel():
    s = PadicNumber.from_rational(5, F(1, 3), 7) + PadicNumber.from_rational(5, -1, 7)
    assert s.digits().digits == (1, 3, 1, 3, 1, 3, 1)
    assert s.reduce_mod(7) == rational_residue(F(-2, 3), 5**7)


def test_add_exact_zero_identity():
    x = PadicNumber.from_rational(7, F(3, 2), 4)
    assert x + PadicNumber.exact_zero(7) == x
    assert PadicNumber.exact_zero(7) + x == x


def test_mul_one_third_times_three():
    x = PadicNumber.from_rational(5, F(1, 3), 6)
    y = PadicNumber.from_rational(5, 3, 6)
    assert x * y == PadicNumber(5, Form.UNIT, 0, 1, 6)


def test_inverse_of_p():
    x = PadicNumber.from_rational(7, 7, 4)
    assert x.inverse() == PadicNumber(7, Form.UNIT, -1, 1, 4)


@given(primes, nonzero_rationals(), st.integers(2, 24))
def test_self_division_is_one(p, q, n):
    x = PadicNumber.from_rational(p, q, n)
    assert x / x == PadicNumber(p, Form.UNIT, 0, 1, n)


def test_inverse_errors():
    with pytest.raises(DivisionByZero):
        PadicNumber.exact_zero(5).inverse()
    with pytest.raises(IndeterminateValuation):
        PadicNumber.zero_at_least(5, 3).inverse()


def test_prime_mixing_rejected():
    x = PadicNumber.from_rational(5, 1, 4)
    y = PadicNumber.from_rational(7, 1, 4)
    with pytest.raises(ValueError):
        x + y
    with pytest.raises(ValueError):
        x * y


def test_is_integer():
    assert PadicNumber.from_rational(5, F(1, 3), 4).is_integer()
    assert not PadicNumber.from_rational(2, F(3, 8), 4).is_integer()
    assert PadicNumber.exact_zero(3).is_integer()
    assert PadicNumber.zero_at_least(3, 2).is_integer()
    assert not PadicNumber.zero_at_least(3, -1).is_integer()


def test_digits_examples():
    x = PadicNumber.from_rational(5, -1, 6)
    assert (x.digits().start, x.digits().digits) == (0, (4,) * 6)
    y = PadicNumber.from_rational(3, 9, 3)
    assert (y.digits().start, y.digits().digits) == (2, (1, 0, 0))
    with pytest.raises(ZeroHasNoExpansion):
        PadicNumber.exact_zero(5).digits()
    with pytest.raises(ZeroHasNoExpansion):
        PadicNumber.zero_at_least(5, 4).digits()


@given(primes, nonzero_rationals(), st.integers(1, 30))
def test_digit_round_trip(p, q, n):
    x = PadicNumber.from_rational(p, q, n)
    expansion = x.digits()
    assert expansion.to_number() == x
    # re-embedding the truncated series value reproduces x to its precision
    y = PadicNumber.from_rational(p, expansion.value(), n)
    assert y.eq_to_precision(x, x.abs_prec)


def test_reduce_mod_examples():
    assert PadicNumber.from_rational(5, -1, 6).reduce_mod(2) == 24
    assert PadicNumber.exact_zero(5).reduce_mod(3) == 0
    assert PadicNumber.from_rational(5, F(1, 3), 6).reduce_mod(2) == 17


def test_reduce_mod_errors():
    with pytest.raises(InsufficientPrecision):
        PadicNumber.from_rational(5, 1, 3).reduce_mod(4)
    with pytest.raises(NotAnInteger):
        PadicNumber.from_rational(5, F(1, 5), 6).reduce_mod(2)
    with pytest.raises(InsufficientPrecision):
        PadicNumber.zero_at_least(5, 2).reduce_mod(3)


@given(primes, nonzero_rationals(), nonzero_rationals(),
       st.integers(2, 20))
def test_precision_contract(p, q, r, n):
    x = PadicNumber.from_rational(p, q, n)
    y = PadicNumber.from_rational(p, r, n + 3)
    prod = x * y
    assert prod.form is Form.UNIT and prod.prec == min(x.prec, y.prec)
    total = x + y
    assert total.abs_prec == min(x.abs_prec, y.abs_prec)


@settings(max_examples=200)
@given(primes, st.integers(-99, 99), st.integers(1, 99),
       st.integers(-99, 99), st.integers(1, 99), st.integers(1, 8))
def test_arithmetic_matches_rationals(p, qn, qd, rn, rd, k):
    """Ring ops on integral values agree with rational arithmetic mod p^k."""
    if qd % p == 0 or rd % p == 0:
        return
    q, r = F(qn, qd), F(rn, rd)
    x = PadicNumber.from_rational(p, q, k + 10)
    y = PadicNumber.from_rational(p, r, k + 10)
    pairs = [(x + y, q + r), (x - y, q - r), (x * y, q * r)]
    if r != 0 and padic_val_rat(p, q) >= padic_val_rat(p, r):
        pairs.append((x / y, q / r))
    for got, exact in pairs:
        assert got.reduce_mod(k) == rational_residue(exact, p**k)


@given(primes, nonzero_rationals(), nonzero_rationals(), st.integers(1, 16))
def test_valuation_nonarchimedean(p, q, r, n):
    x = PadicNumber.from_rational(p, q, n)
    y = PadicNumber.from_rational(p, r, n)
    s = x + y
    if s.form is Form.UNIT:
        assert s.v >= min(x.v, y.v)
        if x.v != y.v:
            assert s.v == min(x.v, y.v)
    assert (x * y).v == x.v + y.v or (x * y).form is not Form.UNIT


@given(primes, st.integers(-500, 500), st.integers(-500, 500),
       st.integers(1, 200), st.integers(1, 200))
def test_integer_closure(p, a, c, b, d):
    if b % p == 0 or d % p == 0:
        return
    x = PadicNumber.from_rational(p, F(a, b), 12)
    y = PadicNumber.from_rational(p, F(c, d), 12)
    assert x.is_integer() and y.is_integer()
    assert (x + y).is_integer()
    assert (x * y).is_integer()


def test_eq_to_precision():
    x = PadicNumber.from_rational(5, 1, 4)
    y = PadicNumber.from_rational(5, 1 + 5**3, 4)
    assert x.eq_to_precision(y, 3)
    assert not x.eq_to_precision(y, 4)
    with pytest.raises(InsufficientPrecision):
        x.eq_to_precision(y, 5)


def test_coercion_matches_explicit_embedding():
    x = PadicNumber.from_rational(5, F(2, 3), 6)
    assert_same_value(x + 1, x + PadicNumber.from_rational(5, 1, 6))
    assert_same_value(3 * x, PadicNumber.from_rational(5, 3, 6) * x)
    assert_same_value(x - F(1, 2), x - PadicNumber.from_rational(5, F(1, 2), 6))
    assert_same_value(1 / x, PadicNumber.from_rational(5, F(3, 2), 6))
    # an exact operand must not cost precision
    assert (x + 1).abs_prec == x.abs_prec
    assert (x * 3).prec == x.prec


def test_pow():
    x = PadicNumber.from_rational(5, F(2, 3), 6)
    assert_same_value(x**3, x * x * x)
    assert x**0 == PadicNumber(5, Form.UNIT, 0, 1, 6)
    assert_same_value(x**-2, (x * x).inverse())


def test_record_round_trip():
    for x in (
        PadicNumber.from_rational(5, F(-7, 3), 9),
        PadicNumber.exact_zero(5),
        PadicNumber.zero_at_least(5, 4),
    ):
        assert PadicNumber.from_record(x.to_record()) == x


def test_str_forms():
    assert str(PadicNumber.exact_zero(5)) == "0"
    assert str(PadicNumber.zero_at_least(5, 3)) == "O(5^3)"
    assert str(PadicNumber.from_rational(5, -1, 6)) == "...444444"
    assert str(PadicNumber.from_rational(3, 9, 3)) == "...001 × 3^2"


def test_unit_form_validation():
    with pytest.raises(ValueError):
        PadicNumber(5, Form.UNIT, 0, 10, 2)  # 10 = 2*5 not a unit
    with pytest.raises(ValueError):
        PadicNumber(5, Form.UNIT, 0, 26, 2)  # out of range mod 25
    with pytest.raises(ValueError):
        PadicNumber(5, Form.UNIT, 0, 3, 0)  # no precision
