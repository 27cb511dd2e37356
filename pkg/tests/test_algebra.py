import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chordsl2.algebra import C, X, EvenSeries, Poly, lagrange_interpolate, rebase_even_to_casimir

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(Poly)


class TestLagrange:
    def test_line_through_origin(self):
        assert lagrange_interpolate([(0, 0), (Fraction(3, 2), Fraction(3, 2))]) == C

    def test_constant(self):
        assert lagrange_interpolate([(0, 5)]) == Poly.const(5)

    def test_square(self):
        pts = [(0, 0), (Fraction(3, 2), Fraction(9, 4)), (4, 16)]
        assert lagrange_interpolate(pts) == C * C

    def test_duplicate_nodes_rejected(self):
        with pytest.raises(ValueError):
            lagrange_interpolate([(1, 2), (1, 3)])

    @given(polys, st.lists(fractions, min_size=7, max_size=7, unique=True))
    def test_recovers_polynomial_from_enough_samples(self, p, xs):
        assert lagrange_interpolate([(x, p(x)) for x in xs]) == p

    @given(st.lists(st.tuples(fractions, fractions), min_size=1, max_size=5, unique_by=lambda t: t[0]))
    def test_passes_through_nodes(self, pts):
        p = lagrange_interpolate(pts)
        assert all(p(x) == y for x, y in pts)
        assert p.degree < len(pts)


class TestRebase:
    def test_x_squared_minus_one(self):
        assert rebase_even_to_casimir(X * X - 1) == 2 * C

    def test_x_fourth(self):
        assert rebase_even_to_casimir(X**4) == 4 * C * C + 4 * C + 1

    def test_constant(self):
        assert rebase_even_to_casimir(Poly.const(1, "x")) == Poly.const(1)

    def test_odd_term_rejected(self):
        with pytest.raises(ValueError):
            rebase_even_to_casimir(X**3 + 1)

    @given(st.lists(fractions, max_size=4), st.lists(fractions, max_size=4))
    def test_ring_homomorphism(self, a, b):
        def even(cs):
            return Poly([v for k in cs for v in (k, 0)], "x")

        p, q = even(a), even(b)
        assert rebase_even_to_casimir(p * q) == rebase_even_to_casimir(p) * rebase_even_to_casimir(q)
        assert rebase_even_to_casimir(p + q) == rebase_even_to_casimir(p) + rebase_even_to_casimir(q)

    @given(st.lists(fractions, max_size=4), fractions)
    def test_agrees_pointwise(self, cs, x):
        p = Poly([v for k in cs for v in (k, 0)], "x")
        assert rebase_even_to_casimir(p)((x * x - 1) / 2) == p(x)


class TestPoly:
    def test_zero_has_no_coefficients(self):
        assert Poly([0, 0]).coeffs == ()
        assert (C - C) == 0

    @pytest.mark.parametrize("p, text", [
        (Poly([0, Fraction(-1, 720), Fraction(1, 480)]), "c^2/480 - c/720"),
        (24 * C * C - 16 * C, "24c^2 - 16c"),
        (16 * C * C - C * Fraction(32, 3), "16c^2 - 32c/3"),
        (X - Fraction(1, 2), "x - 1/2"),
        (2 * C, "2c"),
        (Poly(()), "0"),
        (Poly.const(1), "1"),
    ])
    def test_rendering(self, p, text):
        assert str(p) == text

    def test_variables_do_not_mix(self):
        with pytest.raises((TypeError, ValueError)):
            C + X

    @given(polys, polys, fractions)
    def test_evaluation_is_a_homomorphism(self, p, q, t):
        assert (p * q)(t) == p(t) * q(t)
        assert (p - q)(t) == p(t) - q(t)

    @given(polys, fractions, fractions)
    def test_affine_substitution(self, p, a, b):
        p = p.with_var("x")
        assert p.substitute_affine(a, b)(Fraction(3, 7)) == p(a * Fraction(3, 7) + b)

    @given(polys)
    def test_divmod_by_var(self, p):
        q, r = p.divmod_by_var()
        assert q * Poly.gen(p.var) + r == p

    @given(polys)
    def test_json_round_trip(self, p):
        data = json.loads(json.dumps(p.to_json()))
        assert Poly.from_json(data) == p
        assert all(isinstance(s, str) for pair in data["coeffs"] for s in pair)

    def test_json_schema(self):
        assert (24 * C * C - 16 * C).to_json() == {"coeffs": [["0", "1"], ["-16", "1"], ["24", "1"]]}

    def test_shape_queries(self):
        p = C**3 - 6 * C**2 + 8 * C
        assert p.degree == 3 and p.leading == 1 and p.is_monic and p[0] == 0


class TestEvenSeries:
    def test_truncation_and_padding(self):
        s = EvenSeries([Poly.const(1), C], 3)
        assert len(s) == 4 and s[3] == 0

    def test_product_keeps_smaller_order(self):
        a = EvenSeries([Poly.const(1), C, C * C], 2)
        b = EvenSeries([Poly.const(1), Poly.const(2)], 1)
        prod = a * b
        assert prod.order == 1
        assert prod[1] == C + 2

    def test_equality_up_to_common_order(self):
        assert EvenSeries([Poly.const(1), C]) == EvenSeries([Poly.const(1), C, C * C])
        assert EvenSeries([Poly.const(1), C]) != EvenSeries([Poly.const(1), 2 * C])

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            EvenSeries([], -1)
