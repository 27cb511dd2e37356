"""W on the symmetrized sums Sigma_n and on disjoint unions of wheels.

Sigma_n sums D(sigma) over all (2n)! permutations. Every perfect matching of
the 2n points arises from exactly 2^n n! permutations, so

    W(Sigma_n) = 2^n n! * sum over matchings of W(matching).

A union of wheels w_{2n_1} + ... + w_{2n_k} with n = sum n_i evaluates to
2^{n+k}/(2n)! * W(Sigma_n).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import Poly
from .diagram import diagram_from_permutation, enumerate_matchings
from .weight import SL2WeightSystem, default_weight_system


@dataclass(frozen=True)
class WheelMonomial:
    """Multiset {n_1, ..., n_k} standing for w_{2n_1} + ... + w_{2n_k}."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"wheel parts must be a non-empty list of positive integers: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def count(self) -> int:
        return len(self.parts)

    def __str__(self):
        return " + ".join(f"w{2 * p}" for p in self.parts)


def _weighted_sum(classes, weight: SL2WeightSystem) -> Poly:
    total = Poly((), "c")
    for d, mult in classes:
        total = total + weight(d) * mult
    return total


def matching_sum(n: int, threads: int = 1, weight: SL2WeightSystem | None = None) -> Poly:
    """Sum of W over all (2n-1)!! perfect matchings of 2n points."""
    weight = weight or default_weight_system()
    if n == 0:
        return Poly.const(1)
    classes = enumerate_matchings(n)
    if threads <= 1:
        return _weighted_sum(classes, weight)
    # strided chunks, summed back in chunk order
    chunks = [classes[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda chunk: _weighted_sum(chunk, weight), chunks))
    total = Poly((), "c")
    for p in parts:
        total = total + p
    return total


def eval_sigma(n: int, threads: int = 1, weight: SL2WeightSystem | None = None) -> Poly:
    """W(Sigma_n); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Poly.const(1)
    return matching_sum(n, threads, weight) * (2**n * factorial(n))


def eval_sigma_permutations(n: int, weight: SL2WeightSystem | None = None) -> Poly:
    """W(Sigma_n) by brute force over all (2n)! permutations. Slow; n <= 4."""
    weight = weight or default_weight_system()
    total = Poly((), "c")
    if n == 0:
        return Poly.const(1)
    for sigma in itertools.permutations(range(1, 2 * n + 1)):
        total = total + weight(diagram_from_permutation(n, sigma))
    return total


def eval_wheel_union(m: WheelMonomial, threads: int = 1, weight: SL2WeightSystem | None = None) -> Poly:
    """W(w_{2n_1} + ... + w_{2n_k}) = 2^{n+k}/(2n)! W(Sigma_n)."""
    n, k = m.total, m.count
    return eval_sigma(n, threads, weight) * Fraction(2 ** (n + k), factorial(2 * n))
