"""Parsers, serializers, and their round-trips."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from statesurf.errors import (
    ArcCount,
    EmptyInput,
    IndexOutOfRange,
    IntegerSlope,
    LengthTooSmall,
    MissingStrandCount,
    ParseError,
    ZeroDenominator,
    ZeroExponent,
)
from statesurf.notation import (
    BraidWord,
    MontesinosVector,
    cf_value,
    continued_fraction,
    parse_braid,
    parse_montesinos,
    parse_pd,
    serialize_braid,
    serialize_montesinos,
    serialize_pd,
)

from conftest import FIG8_PD, TREFOIL_PD


class TestPD:
    def test_parse_canonical(self):
        pd = parse_pd(TREFOIL_PD)
        assert pd.crossings == ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))

    def test_parse_knotinfo_brackets(self):
        # KnotInfo exports PD[X[a,b,c,d],...]; commas between terms optional
        pd = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")
        assert serialize_pd(pd) == TREFOIL_PD

    def test_whitespace_tolerated(self):
        pd = parse_pd("  X( 4 ,2, 5 ,1 )\n X(8,6,1,5) X(6,3,7,4)\tX(2,7,3,8) ")
        assert serialize_pd(pd) == FIG8_PD

    def test_round_trip(self):
        for text in (TREFOIL_PD, FIG8_PD, "X(1,2,2,1)"):
            assert serialize_pd(parse_pd(text)) == text

    def test_empty(self):
        with pytest.raises(EmptyInput):
            parse_pd("   ")

    def test_garbage_has_position(self):
        with pytest.raises(ParseError) as exc:
            parse_pd("X(1,4,2,5) Y(3,6,4,1)")
        assert exc.value.position == 10

    def test_three_entry_term_rejected(self):
        with pytest.raises(ParseError):
            parse_pd("X(1,2,3)")

    def test_arc_count_enforced(self):
        with pytest.raises(ArcCount):
            parse_pd("X(1,2,3,4)")
        with pytest.raises(ArcCount):
            parse_pd("X(1,1,1,2) X(2,3,3,4) X(4,5,5,6)")


class TestBraid:
    def test_parse(self):
        b = parse_braid("B3: s1^3 s2^-2 s1")
        assert b.strand_count == 3
        assert b.letters == ((1, 3), (2, -2), (1, 1))
        assert not b.is_positive
        assert b.crossing_count == 6

    def test_adjacent_letters_merge(self):
        assert parse_braid("B2: s1 s1^2").letters == ((1, 3),)
        # full cancellation drops the letter
        assert parse_braid("B3: s1 s2^2 s2^-2 s1").letters == ((1, 2),)

    def test_round_trip(self):
        for text in ("B2: s1^3", "B3: s1^3 s2^-3", "B4: s1 s2^-1 s3^5"):
            assert serialize_braid(parse_braid(text)) == text

    def test_missing_strand_count(self):
        with pytest.raises(MissingStrandCount):
            parse_braid("s1^3 s2^3")

    def test_zero_exponent(self):
        with pytest.raises(ZeroExponent):
            parse_braid("B2: s1^0")

    def test_generator_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_braid("B2: s2")
        with pytest.raises(IndexOutOfRange):
            BraidWord(1, ())

    def test_empty_word(self):
        with pytest.raises(EmptyInput):
            parse_braid("")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError) as exc:
            parse_braid("B3: s1^3 t2")
        assert exc.value.position is not None


class TestMontesinos:
    def test_parse(self):
        v = parse_montesinos("M(4/3, 1/2, -1/3)")
        assert v.slopes == (Fraction(4, 3), Fraction(1, 2), Fraction(-1, 3))

    def test_outer_wrapper_optional(self):
        assert parse_montesinos("1/2, 1/3, 1/7") == parse_montesinos("M(1/2,1/3,1/7)")

    def test_round_trip(self):
        text = "M(4/3, 1/2, -1/3)"
        assert serialize_montesinos(parse_montesinos(text)) == text

    def test_too_short(self):
        with pytest.raises(LengthTooSmall):
            parse_montesinos("M(1/2, 1/3)")

    def test_integer_slope_rejected(self):
        with pytest.raises(IntegerSlope):
            parse_montesinos("M(2, 1/2, 1/3)")

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            parse_montesinos("M(1/0, 1/2, 1/3)")

    def test_malformed_entry(self):
        with pytest.raises(ParseError):
            parse_montesinos("M(1/2, x, 1/3)")
        with pytest.raises(ParseError):
            parse_montesinos("M(1/2,, 1/3)")

    def test_vector_validates_directly(self):
        with pytest.raises(IntegerSlope):
            MontesinosVector((Fraction(1, 2), Fraction(1, 3), Fraction(3)))


class TestContinuedFraction:
    def test_known_expansions(self):
        assert continued_fraction(Fraction(4, 3)).terms == (1, 3)
        assert continued_fraction(Fraction(-4, 3)).terms == (-1, -3)
        assert continued_fraction(Fraction(1, 2)).terms == (0, 2)
        assert continued_fraction(5).terms == (5,)

    def test_constant_sign(self):
        terms = continued_fraction(Fraction(-7, 5)).terms
        assert all(a <= 0 for a in terms)

    def test_cf_value_errors(self):
        with pytest.raises(EmptyInput):
            cf_value(())
        with pytest.raises(ZeroDenominator):
            cf_value((1, 1, -1))

    @given(
        num=st.integers(min_value=-400, max_value=400),
        den=st.integers(min_value=1, max_value=97),
    )
    def test_reconstructs_input(self, num, den):
        q = Fraction(num, den)
        cf = continued_fraction(q)
        assert cf.value == q
        if q.denominator > 1:
            sign = 1 if q > 0 else -1
            assert all(a * sign >= 0 for a in cf.terms)


@given(
    st.integers(min_value=2, max_value=5).flatmap(
        lambda n: st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n - 1),
                st.integers(min_value=-4, max_value=4).filter(lambda e: e != 0),
            ),
            min_size=1,
            max_size=8,
        ).map(lambda letters: (n, letters))
    )
)
def test_braid_round_trip(word):
    n, letters = word
    text = f"B{n}: " + " ".join(f"s{g}^{e}" for g, e in letters)
    parsed = parse_braid(text)
    assert parse_braid(serialize_braid(parsed)) == parsed
    assert parsed.crossing_count <= sum(abs(e) for _, e in letters)
