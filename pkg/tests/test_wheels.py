from fractions import Fraction
from math import factorial

import pytest

from chordsl2.algebra import C, Poly
from chordsl2.bernoulli import q_poly
from chordsl2.diagram import enumerate_matchings
from chordsl2.oracle import eval_oracle
from chordsl2.weight import SL2WeightSystem
from chordsl2.wheels import WheelMonomial, eval_sigma, eval_sigma_permutations, eval_wheel_union, matching_sum


class TestSigma:
    def test_zero(self):
        assert eval_sigma(0) == Poly.const(1)

    def test_one(self):
        assert eval_sigma(1) == 2 * C

    def test_two(self):
        assert eval_sigma(2) == 24 * C * C - 16 * C

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_permutation_brute_force(self, n):
        assert eval_sigma_permutations(n) == eval_sigma(n)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_oracle_weighted_sum(self, n):
        total = sum((eval_oracle(d) * k for d, k in enumerate_matchings(n)), Poly(()))
        assert eval_sigma(n) == total * (2**n * factorial(n))

    @pytest.mark.parametrize("threads", [2, 3, 8])
    def test_thread_count_irrelevant(self, threads):
        w = SL2WeightSystem()
        assert matching_sum(5, threads, w) == matching_sum(5, 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_shape(self, n):
        s = eval_sigma(n)
        assert s.degree == n and s.leading == factorial(2 * n) and s[0] == 0

    def test_negative(self):
        with pytest.raises(ValueError):
            eval_sigma(-1)


class TestWheels:
    def test_w2(self):
        assert eval_wheel_union(WheelMonomial((1,))) == 4 * C

    def test_w4(self):
        assert eval_wheel_union(WheelMonomial((2,))) == 8 * C * C - Fraction(16, 3) * C

    def test_w2_w2(self):
        assert eval_wheel_union(WheelMonomial((1, 1))) == 16 * C * C - Fraction(32, 3) * C

    def test_parts_are_a_multiset(self):
        assert WheelMonomial((1, 2)) == WheelMonomial((2, 1))
        assert eval_wheel_union(WheelMonomial((1, 2))) == eval_wheel_union(WheelMonomial((2, 1)))

    @pytest.mark.parametrize("parts", [(), (0,), (2, -1)])
    def test_invalid(self, parts):
        with pytest.raises(ValueError):
            WheelMonomial(parts)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_single_wheel_is_scaled_q(self, n):
        w = eval_wheel_union(WheelMonomial((n,)))
        assert w == q_poly(n) * (2 ** (2 * n + 1) * factorial(2 * n + 1))

    @pytest.mark.parametrize("parts", [(1, 1, 1), (2, 1), (3,)])
    def test_value_depends_on_total_and_count_only(self, parts):
        m = WheelMonomial(parts)
        expected = eval_sigma(m.total) * Fraction(2 ** (m.total + m.count), factorial(2 * m.total))
        assert eval_wheel_union(m) == expected
