"""Bernoulli polynomials, modified Bernoulli numbers, shifted Bernoulli polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import Poly, rebase_even_to_casimir


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    """B_n(x) from z e^{zx}/(e^z - 1) = sum B_n(x) z^n/n!.

    Multiplying through by e^z - 1 and comparing z^{n+1} gives
    B_n(x) = x^n - 1/(n+1) sum_{k<n} C(n+1, k) B_k(x).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = Poly.monomial(n, 1, "x")
    for k in range(n):
        p = p - bernoulli_poly(k) * Fraction(comb(n + 1, k), n + 1)
    return p


def _mul_trunc(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += x * b[j]
    return out


def log_sinhc_series(order: int) -> list[Fraction]:
    """Coefficients of ln(sinh(x/2)/(x/2)) up to and including x^order."""
    # sinh(x/2)/(x/2) = sum_k (x/2)^{2k} / (2k+1)!  = 1 + u
    u = [Fraction(0)] * (order + 1)
    for k in range(1, order // 2 + 1):
        u[2 * k] = Fraction(1, 4**k * factorial(2 * k + 1))
    result = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    # u = O(x^2), so u^j only matters for 2j <= order
    for j in range(1, order // 2 + 1):
        power = _mul_trunc(power, u, order)
        sign = 1 if j % 2 else -1
        for i, a in enumerate(power):
            result[i] += sign * a / j
    return result


def modified_bernoulli(two_n: int, guard: int = 0) -> Fraction:
    """b_{2n}: coefficient of x^{2n} in (1/2) ln(sinh(x/2)/(x/2)).

    ``guard`` extends the truncation order by that many extra even degrees;
    the result must not depend on it.
    """
    if two_n < 2 or two_n % 2:
        raise ValueError(f"modified Bernoulli numbers need an even index >= 2, got {two_n}")
    series = log_sinhc_series(two_n + 2 * guard)
    return series[two_n] / 2


def q_poly(n: int) -> Poly:
    """Shifted Bernoulli polynomial q_n in c.

    q_n((x^2-1)/2) = 2/(2n+1)! * B_{2n+1}((1+x)/2) / x.
    """
    if n < 1:
        raise ValueError("q_n is defined for n >= 1")
    shifted = bernoulli_poly(2 * n + 1).substitute_affine(Fraction(1, 2), Fraction(1, 2))
    quotient, remainder = shifted.divmod_by_var()
    if remainder != 0:
        raise ArithmeticError(f"B_{2 * n + 1}((1+x)/2) is not divisible by x")
    try:
        in_c = rebase_even_to_casimir(quotient)
    except ValueError as exc:
        raise ArithmeticError(f"B_{2 * n + 1}((1+x)/2)/x is not even") from exc
    return in_c * Fraction(2, factorial(2 * n + 1))
