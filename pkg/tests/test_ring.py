import pytest
from hypothesis import given
from hypothesis import strategies as st

from garside_cells.errors import PolyParseError
from garside_cells.ring import LaurentPoly, ONE, V, VINV, ZERO, format_poly, parse_poly


def polys():
    return st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


class TestLaurentPoly:
    def test_zero_coefficients_are_dropped(self):
        p = LaurentPoly({1: 0, 2: 3})
        assert p.exponents() == [2]
        assert LaurentPoly({0: 0}) == ZERO

    def test_int_comparison(self):
        assert ONE == 1
        assert ZERO == 0
        assert V + 1 == LaurentPoly({1: 1, 0: 1})

    @pytest.mark.parametrize("c", [0, 1, -1, 7])
    def test_constants_hash_like_ints(self, c):
        p = LaurentPoly.constant(c)
        assert hash(p) == hash(c)
        assert {c: "found"}.get(p) == "found"
        assert {p: "found"}.get(c) == "found"

    def test_quadratic_relation_coefficient(self):
        assert (V + VINV) * (V + VINV) == LaurentPoly({2: 1, 0: 2, -2: 1})

    def test_inverse_of_unit(self):
        assert V ** -1 == VINV
        assert LaurentPoly.monomial(2, -1) ** -1 == LaurentPoly.monomial(-2, -1)
        with pytest.raises(ValueError):
            (V + 1) ** -1

    def test_bar_and_shift(self):
        p = LaurentPoly({3: 2, -1: 1})
        assert p.bar() == LaurentPoly({-3: 2, 1: 1})
        assert p.shift(2) == LaurentPoly({5: 2, 1: 1})

    def test_degrees(self):
        p = LaurentPoly({3: 2, -1: 1})
        assert (p.min_degree(), p.max_degree()) == (-1, 3)
        assert ZERO.min_degree() is None

    @given(polys(), polys(), polys())
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == ZERO

    @given(polys(), polys())
    def test_bar_is_a_ring_morphism(self, a, b):
        assert (a * b).bar() == a.bar() * b.bar()
        assert a.bar().bar() == a

    @given(polys())
    def test_hash_agrees_with_eq(self, a):
        assert hash(a) == hash(LaurentPoly(a.coeffs))


class TestTextFormat:
    @pytest.mark.parametrize("poly, text", [
        (ZERO, "0"),
        (ONE, "1"),
        (V, "v"),
        (-V, "-v"),
        (LaurentPoly({2: 3, 1: -1, 0: 1}), "3*v^2 - v + 1"),
        (LaurentPoly({-2: 1}), "v^-2"),
        (LaurentPoly({3: 1, 1: 1}), "v^3 + v"),
    ])
    def test_format(self, poly, text):
        assert format_poly(poly) == text
        assert str(poly) == text

    @given(polys())
    def test_parse_reads_format(self, p):
        assert parse_poly(format_poly(p)) == p

    def test_parse_accepts_spacing_and_repeats(self):
        assert parse_poly(" v + v - 2 ") == LaurentPoly({1: 2, 0: -2})
        assert parse_poly("-v^-1") == -VINV

    @pytest.mark.parametrize("text", ["", "v^", "3*", "2v3", "x", "^2"])
    def test_parse_errors(self, text):
        with pytest.raises(PolyParseError):
            parse_poly(text)
