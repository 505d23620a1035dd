from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihom.errors import (
    BadScalar,
    DivisionByZero,
    MixedFields,
    ZeroDenominator,
)
from bihom.exactnum import (
    QQ,
    QQ_Q,
    PrimeField,
    RationalFunction,
    field_from_tag,
    field_tag,
    format_qq_scalar,
    parse_qq_scalar,
    q_integer,
    rf_normalize,
    scalar_arith,
)

RF = RationalFunction
F7 = PrimeField(7)
F2 = PrimeField(2)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)


def rf(num, den=(1,)):
    return RationalFunction(num, den)


class TestScalarArith:
    def test_rational_addition(self):
        assert scalar_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)

    def test_inverse_of_q_minus_qinv(self):
        # 1/(q - q^-1) written as q/(q^2 - 1)
        x = scalar_arith(QQ_Q.one(), RF.q_power(1) - RF.q_power(-1), "div")
        assert x.num == (0, 1)
        assert x.den == (-1, 0, 1)  # monic q^2 - 1

    def test_char_two(self):
        assert scalar_arith(F2.one(), F2.one(), "add") == F2.zero()

    def test_mixed_fields_rejected(self):
        with pytest.raises(MixedFields):
            scalar_arith(Fraction(1), F7.one(), "add")
        with pytest.raises(MixedFields):
            F7.one() + PrimeField(5).one()

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            scalar_arith(Fraction(1), Fraction(0), "div")
        with pytest.raises(DivisionByZero):
            QQ_Q.one() / QQ_Q.zero()
        with pytest.raises(DivisionByZero):
            F7.one() / F7.zero()


class TestRfNormalize:
    def test_factor_cancellation(self):
        x = rf_normalize((-1, 0, 1), (-1, 1))  # (q^2-1)/(q-1)
        assert x == rf((1, 1))  # q + 1

    def test_unit_cancellation_monic(self):
        x = rf_normalize((0, 2), (2,))  # 2q / 2
        assert x == rf((0, 1))

    def test_gcd_reduction(self):
        # (q^2-1)(q^3+q) / (q^2-1) -> q^3 + q
        num = RationalFunction((-1, 0, 1)) * RationalFunction((0, 1, 0, 1))
        x = rf_normalize(num.num, (-1, 0, 1))
        assert x == rf((0, 1, 0, 1))

    def test_idempotent(self):
        x = rf_normalize((2, 4), (4, 2))
        y = rf_normalize(x.num, x.den)
        assert x.num == y.num and x.den == y.den

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            rf_normalize((1,), ())

    def test_equality_decision(self):
        # q/(q^2-1) and (2q)/(2q^2-2) get identical canonical forms
        a = rf_normalize((0, 1), (-1, 0, 1))
        b = rf_normalize((0, 2), (-2, 0, 2))
        assert a.num == b.num and a.den == b.den


class TestQIntegers:
    def test_identity_up_to_eight(self):
        q = RF.q_power(1)
        qinv = RF.q_power(-1)
        for n in range(1, 9):
            assert q_integer(n) * (q - qinv) == RF.q_power(n) - RF.q_power(-n)

    def test_zero_and_one(self):
        assert not q_integer(0)
        assert q_integer(1) == QQ_Q.one()


class TestFieldAxioms:
    @given(rationals, rationals, rationals)
    @settings(max_examples=60, deadline=None)
    def test_rationals(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * (Fraction(1) / a) == 1

    @given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
    @settings(max_examples=60, deadline=None)
    def test_prime_field(self, a, b, c):
        x, y, z = F7.from_int(a), F7.from_int(b), F7.from_int(c)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * (F7.one() / x) == F7.one()

    @given(
        st.lists(st.integers(-3, 3), min_size=1, max_size=3),
        st.lists(st.integers(-3, 3), min_size=1, max_size=3),
        st.lists(st.integers(-3, 3), min_size=1, max_size=3),
    )
    @settings(max_examples=40, deadline=None)
    def test_function_field(self, a, b, c):
        x, y, z = rf(tuple(a)), rf(tuple(b)), rf(tuple(c))
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)
        if x:
            assert x * (QQ_Q.one() / x) == QQ_Q.one()


class TestLiterals:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-2", Fraction(-2)),
            (" 5 / 6 ", Fraction(5, 6)),
        ],
    )
    def test_rational_literals(self, text, expected):
        assert QQ.parse(text) == expected

    def test_prime_field_literals(self):
        assert F7.parse("5 mod 7") == F7.from_int(5)
        assert F7.parse("12") == F7.from_int(5)
        with pytest.raises(BadScalar):
            F7.parse("5 mod 11")

    def test_qq_literal_single_slash(self):
        x = parse_qq_scalar("q^2 - 1 / q")
        assert x.num == (-1, 0, 1)
        assert x.den == (0, 1)

    def test_qq_literal_parenthesized(self):
        assert parse_qq_scalar("(q^2 - 1)/(q - 1)") == rf((1, 1))

    def test_qq_plain_rational(self):
        assert parse_qq_scalar("3/4") == RF.from_fraction(Fraction(3, 4))

    def test_two_slashes_rejected(self):
        with pytest.raises(BadScalar):
            parse_qq_scalar("1/2/3")

    @pytest.mark.parametrize(
        "x",
        [
            rf((0, 1), (-1, 0, 1)),
            rf((Fraction(1, 2), Fraction(3, 4))),
            rf((-2, 0, 5)),
            RationalFunction(()),
            rf((1,), (Fraction(1, 3), 1)),
        ],
    )
    def test_format_round_trip(self, x):
        assert parse_qq_scalar(format_qq_scalar(x)) == x

    def test_field_tags(self):
        assert field_tag(field_from_tag("Q")) == "Q"
        assert field_tag(field_from_tag("Fp:7")) == "Fp:7"
        assert field_tag(field_from_tag("Q(q)")) == "Q(q)"
        with pytest.raises(BadScalar):
            field_from_tag("R")

    def test_prime_validation(self):
        with pytest.raises(ValueError):
            PrimeField(6)


class TestNegativePowers:
    def test_q_inverse_is_fraction(self):
        x = RF.q_power(-1)
        assert x.num == (1,)
        assert x.den == (0, 1)

    def test_power_arithmetic(self):
        assert RF.q_power(3) * RF.q_power(-3) == QQ_Q.one()
        assert RF.q_power(1) ** -2 == RF.q_power(-2)
