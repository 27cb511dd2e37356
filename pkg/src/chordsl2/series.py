"""The three even series for the unknot and their term-by-term comparison."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Callable, Iterator

from .algebra import EvenSeries, Poly
from .bernoulli import modified_bernoulli, q_poly
from .wheels import WheelMonomial, eval_sigma, eval_wheel_union

ONE = Poly.const(1)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def symmetry_factor(parts: tuple[int, ...]) -> int:
    """Product of (multiplicity)! over the distinct parts."""
    return prod(factorial(parts.count(p)) for p in set(parts))


def sigma_normalizer(n: int) -> int:
    return 2**n * factorial(2 * n) * factorial(2 * n + 1)


def main_series(N: int, threads: int = 1) -> EvenSeries:
    """1 + sum_n W(Sigma_n)/(2^n (2n)! (2n+1)!) h^{2n}, truncated at h^{2N}."""
    terms = [ONE] + [eval_sigma(n, threads) / sigma_normalizer(n) for n in range(1, N + 1)]
    return EvenSeries(terms, N)


def q_series(N: int) -> EvenSeries:
    return EvenSeries([ONE] + [q_poly(n) for n in range(1, N + 1)], N)


def wheels_exp_term(n: int, b: Callable[[int], Fraction] = modified_bernoulli, threads: int = 1) -> Poly:
    """Coefficient of h^{2n} in W(exp(sum_m b_{2m} h^{2m} w_{2m}))."""
    total = Poly((), "c")
    for parts in partitions(n):
        weight = prod((b(2 * p) for p in parts), start=Fraction(1)) / symmetry_factor(parts)
        total = total + eval_wheel_union(WheelMonomial(parts), threads) * weight
    return total


def wheels_exp_series(N: int, b: Callable[[int], Fraction] = modified_bernoulli, threads: int = 1) -> EvenSeries:
    return EvenSeries([ONE] + [wheels_exp_term(n, b, threads) for n in range(1, N + 1)], N)


@dataclass
class TermReport:
    n: int
    main: Poly
    q: Poly
    wheels: Poly
    equal: bool
    theorem4: bool
    shape: bool
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.equal and self.theorem4 and self.shape

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "main": self.main.to_json(),
            "q": self.q.to_json(),
            "wheels": self.wheels.to_json(),
            "equal": self.equal,
            "theorem4": self.theorem4,
            "shape": self.shape,
        }


@dataclass
class VerifyReport:
    order: int
    terms: list[TermReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.terms)

    def first_failure(self) -> TermReport | None:
        return next((t for t in self.terms if not t.passed), None)

    def to_json(self) -> dict:
        return {"order": self.order, "terms": [t.to_json() for t in self.terms], "pass": self.passed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def to_text(self) -> str:
        lines = [f"order {self.order}"]
        for t in self.terms:
            flag = "ok" if t.passed else "FAIL"
            lines.append(f"n={t.n} [{flag}] equal={t.equal} theorem4={t.theorem4} shape={t.shape}")
            lines.append(f"  main   = {t.main}")
            lines.append(f"  q      = {t.q}")
            lines.append(f"  wheels = {t.wheels}")
        lines.append("pass" if self.passed else "FAIL")
        return "\n".join(lines)


def check_order(n: int, b: Callable[[int], Fraction] = modified_bernoulli, threads: int = 1) -> TermReport:
    start = time.perf_counter()
    sigma = eval_sigma(n, threads)
    qn = q_poly(n)
    main = sigma / sigma_normalizer(n)
    wheels = wheels_exp_term(n, b, threads)
    equal = main == qn == wheels

    w2n = eval_wheel_union(WheelMonomial((n,)), threads)
    theorem4 = (
        w2n == qn * (2 ** (2 * n + 1) * factorial(2 * n + 1))
        and sigma == qn * sigma_normalizer(n)
    )
    top = Fraction(1, 2**n * factorial(2 * n + 1))
    shape = (
        sigma.degree == n and sigma.leading == factorial(2 * n)
        and qn.degree == n and qn.leading == top and qn[0] == 0
        and wheels.degree == n and wheels.leading == top
    )
    return TermReport(n, main, qn, wheels, equal, theorem4, shape, time.perf_counter() - start)


def verify(N: int, b: Callable[[int], Fraction] = modified_bernoulli, threads: int = 1,
           progress: Callable[[TermReport], None] | None = None) -> VerifyReport:
    """Check main = q = wheels termwise, the wheel identities and shapes, n = 1..N.

    Failures are recorded in the report, never raised. ``b`` replaces the
    modified Bernoulli numbers (used for mutation testing).
    """
    if N < 1:
        raise ValueError("verify needs N >= 1")
    report = VerifyReport(N)
    for n in range(1, N + 1):
        term = check_order(n, b, threads)
        report.terms.append(term)
        if progress is not None:
            progress(term)
    return report
