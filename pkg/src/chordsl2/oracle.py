"""Brute-force W straight from the Lie-algebra definition.

Each chord carries a dual pair (a_i, b_i); the word of a diagram is summed
over all labelings and applied in the irreducible sl2-module of highest
weight lambda, where it must act as a scalar. Sampling lambda = 0..n and
interpolating in c = lambda(lambda+2)/2 recovers W(D) in Q[c].

This module shares nothing with the recurrence in :mod:`chordsl2.weight`
beyond the diagram type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, lagrange_interpolate
from .diagram import ChordDiagram

# An element of sl2 as coefficients (of e, of f, of h).
Element = tuple[Fraction, Fraction, Fraction]

E: Element = (Fraction(1), Fraction(0), Fraction(0))
F: Element = (Fraction(0), Fraction(1), Fraction(0))
H: Element = (Fraction(0), Fraction(0), Fraction(1))


def _lin(*terms) -> Element:
    out = [Fraction(0)] * 3
    for coeff, elt in terms:
        for k in range(3):
            out[k] += Fraction(coeff) * elt[k]
    return tuple(out)


# Dual under the trace form of the 2-dim representation.
PRIMARY_BASES = ((E, F, H), (F, E, _lin((Fraction(1, 2), H))))
ALTERNATE_BASES = (
    (_lin((1, E), (1, F)), _lin((1, E), (-1, F)), H),
    (_lin((Fraction(1, 2), E), (Fraction(1, 2), F)),
     _lin((Fraction(-1, 2), E), (Fraction(1, 2), F)),
     _lin((Fraction(1, 2), H))),
)


class OracleError(AssertionError):
    """An invariant of the brute-force evaluation failed (non-central word sum etc.)."""


@dataclass(frozen=True)
class IrrepAction:
    """Matrices of e, f, h on V(lambda) in the basis v_0..v_lambda.

    f v_j = v_{j+1}, e v_j = j(lambda-j+1) v_{j-1}, h v_j = (lambda-2j) v_j.
    """

    highest_weight: int
    e: tuple
    f: tuple
    h: tuple

    @property
    def dim(self) -> int:
        return self.highest_weight + 1

    def matrix(self, x: Element) -> list[list[Fraction]]:
        d = self.dim
        return [
            [x[0] * self.e[i][j] + x[1] * self.f[i][j] + x[2] * self.h[i][j] for j in range(d)]
            for i in range(d)
        ]


def irrep_action(lam: int) -> IrrepAction:
    if lam < 0:
        raise ValueError("highest weight must be >= 0")
    d = lam + 1
    zero = lambda: [[Fraction(0)] * d for _ in range(d)]  # noqa: E731
    e, f, h = zero(), zero(), zero()
    for j in range(d):
        h[j][j] = Fraction(lam - 2 * j)
        if j + 1 < d:
            f[j + 1][j] = Fraction(1)
        if j >= 1:
            e[j - 1][j] = Fraction(j * (lam - j + 1))
    freeze = lambda m: tuple(tuple(row) for row in m)  # noqa: E731
    return IrrepAction(lam, freeze(e), freeze(f), freeze(h))


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]


def trace_form(x: Element, y: Element) -> Fraction:
    """Tr(xy) in the standard 2-dimensional representation."""
    rep = irrep_action(1)
    prod = matmul(rep.matrix(x), rep.matrix(y))
    return prod[0][0] + prod[1][1]


def check_dual_bases(bases=PRIMARY_BASES) -> None:
    a, b = bases
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if trace_form(ai, bj) != (1 if i == j else 0):
                raise OracleError(f"bases not dual at ({i}, {j})")


check_dual_bases(PRIMARY_BASES)


def casimir_value(lam: int) -> Fraction:
    """Scalar of c = ef + fe + h^2/2 on V(lambda)."""
    return Fraction(lam * (lam + 2), 2)


def _apply(x: Element, lam: int, vec: list) -> list:
    """x . vec on V(lambda) using the sparse action."""
    d = lam + 1
    out = [Fraction(0)] * d
    ce, cf, ch = x
    for j, a in enumerate(vec):
        if a == 0:
            continue
        if ch:
            out[j] += ch * (lam - 2 * j) * a
        if cf and j + 1 < d:
            out[j + 1] += cf * a
        if ce and j >= 1:
            out[j - 1] += ce * (j * (lam - j + 1)) * a
    return out


def word_operator(d: ChordDiagram, lam: int, bases=PRIMARY_BASES) -> list[list[Fraction]]:
    """Matrix of the summed word of d on V(lambda), column by column."""
    a, b = bases
    pos = d.positions()
    first = {p[0] for p in pos.values()}
    dim = lam + 1
    columns = []
    for j in range(dim):
        total = [Fraction(0)] * dim
        for labels in itertools.product(range(len(a)), repeat=d.n):
            vec = [Fraction(0)] * dim
            vec[j] = Fraction(1)
            # the word acts right to left
            for p in range(len(d.word) - 1, -1, -1):
                i = labels[d.word[p] - 1]
                vec = _apply(a[i] if p in first else b[i], lam, vec)
                if not any(vec):
                    break
            total = [s + t for s, t in zip(total, vec)]
        columns.append(total)
    return [[columns[j][i] for j in range(dim)] for i in range(dim)]


def word_scalar(d: ChordDiagram, lam: int, bases=PRIMARY_BASES) -> Fraction:
    """The scalar by which the word sum of d acts on V(lambda).

    Raises OracleError if the operator is not scalar.
    """
    m = word_operator(d, lam, bases)
    s = m[0][0]
    for i, row in enumerate(m):
        for j, entry in enumerate(row):
            if entry != (s if i == j else 0):
                raise OracleError(f"word sum of {d} is not central on V({lam})")
    return s


def eval_oracle(d: ChordDiagram, bases=PRIMARY_BASES) -> Poly:
    """W(d) by interpolation through lambda = 0..n."""
    points = [(casimir_value(lam), word_scalar(d, lam, bases)) for lam in range(d.n + 1)]
    return lagrange_interpolate(points)
