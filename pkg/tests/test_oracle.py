import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chordsl2.algebra import C, Poly
from chordsl2.diagram import EMPTY, parse_dow
from chordsl2.oracle import (
    ALTERNATE_BASES,
    PRIMARY_BASES,
    OracleError,
    casimir_value,
    check_dual_bases,
    eval_oracle,
    irrep_action,
    matmul,
    trace_form,
    word_operator,
    word_scalar,
)

from conftest import diagrams


def mat(rows):
    return [list(r) for r in rows]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scaled(a, k):
    return [[k * x for x in r] for r in a]


class TestIrrep:
    def test_trivial(self):
        rho = irrep_action(0)
        assert mat(rho.e) == mat(rho.f) == mat(rho.h) == [[0]]

    def test_standard(self):
        assert mat(irrep_action(1).h) == [[1, 0], [0, -1]]

    @pytest.mark.parametrize("lam", range(0, 7))
    def test_bracket_relations(self, lam):
        rho = irrep_action(lam)
        e, f, h = mat(rho.e), mat(rho.f), mat(rho.h)
        assert sub(matmul(e, f), matmul(f, e)) == h
        assert sub(matmul(h, e), matmul(e, h)) == scaled(e, 2)
        assert sub(matmul(h, f), matmul(f, h)) == scaled(f, -2)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            irrep_action(-1)


class TestCasimir:
    @pytest.mark.parametrize("lam, value", [(0, 0), (1, Fraction(3, 2)), (2, 4)])
    def test_examples(self, lam, value):
        assert casimir_value(lam) == value

    @pytest.mark.parametrize("lam", range(0, 7))
    def test_matches_ef_plus_fe_plus_half_h_squared(self, lam):
        rho = irrep_action(lam)
        e, f, h = mat(rho.e), mat(rho.f), mat(rho.h)
        cas = matmul(e, f)
        for term in (matmul(f, e), scaled(matmul(h, h), Fraction(1, 2))):
            cas = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(cas, term)]
        ident = [[casimir_value(lam) * (i == j) for j in range(lam + 1)] for i in range(lam + 1)]
        assert cas == ident


class TestDualBases:
    @pytest.mark.parametrize("bases", [PRIMARY_BASES, ALTERNATE_BASES])
    def test_dual_under_trace_form(self, bases):
        check_dual_bases(bases)
        a, b = bases
        for i, j in itertools.product(range(3), repeat=2):
            assert trace_form(a[i], b[j]) == (i == j)

    def test_non_dual_pair_detected(self):
        a, b = PRIMARY_BASES
        with pytest.raises(OracleError):
            check_dual_bases((a, (b[1], b[0], b[2])))


class TestWordScalar:
    def test_single_chord_standard_rep(self):
        assert word_scalar(parse_dow("1 1"), 1) == Fraction(3, 2)

    @given(diagrams(min_n=1, max_n=3))
    def test_trivial_rep_kills_everything(self, d):
        assert word_scalar(d, 0) == 0

    def test_crossing_pair_standard_rep(self):
        assert word_scalar(parse_dow("1 2 1 2"), 1) == Fraction(-3, 4)

    def test_crossing_pair_by_hand(self):
        # sum_{i,j} a_i a_j b_i b_j with explicit 2x2 matrices
        e = [[0, 1], [0, 0]]
        f = [[0, 0], [1, 0]]
        h = [[1, 0], [0, -1]]
        a = [e, f, h]
        b = [f, e, scaled(h, Fraction(1, 2))]
        total = [[0, 0], [0, 0]]
        for i, j in itertools.product(range(3), repeat=2):
            m = matmul(matmul(matmul(a[i], a[j]), b[i]), b[j])
            total = [[x + y for x, y in zip(r, s)] for r, s in zip(total, m)]
        assert total == [[Fraction(-3, 4), 0], [0, Fraction(-3, 4)]]

    @given(diagrams(min_n=1, max_n=3), st.integers(0, 3), st.integers(0, 8))
    def test_base_point_independent(self, d, lam, k):
        assert word_scalar(d.rotate(k), lam) == word_scalar(d, lam)

    @given(diagrams(min_n=1, max_n=3), st.integers(1, 3))
    def test_dual_basis_independent(self, d, lam):
        assert word_scalar(d, lam, ALTERNATE_BASES) == word_scalar(d, lam)

    @given(diagrams(min_n=1, max_n=3), st.integers(1, 3))
    def test_operator_is_central(self, d, lam):
        op = word_operator(d, lam)
        rho = irrep_action(lam)
        for x in (rho.e, rho.f, rho.h):
            x = mat(x)
            assert matmul(op, x) == matmul(x, op)


class TestEvalOracle:
    def test_single_chord(self):
        assert eval_oracle(parse_dow("1 1")) == C

    def test_empty(self):
        assert eval_oracle(EMPTY) == Poly.const(1)

    def test_crossing_pair(self):
        assert eval_oracle(parse_dow("1 2 1 2")) == C * C - 2 * C

    def test_three_crossing_chords(self):
        assert eval_oracle(parse_dow("1 2 3 1 2 3")) == C**3 - 6 * C**2 + 8 * C

    @given(diagrams(max_n=3))
    def test_interpolant_fits_extra_sample(self, d):
        # one more node than needed: the degree-n interpolant must still agree
        p = eval_oracle(d)
        lam = d.n + 1
        assert p(casimir_value(lam)) == word_scalar(d, lam)

    @given(diagrams(max_n=3))
    def test_monic_shape(self, d):
        p = eval_oracle(d)
        assert p.degree == d.n and p.leading == 1
        assert d.n == 0 or p[0] == 0
