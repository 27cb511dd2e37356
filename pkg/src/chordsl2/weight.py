"""The sl2 weight system W: A -> Q[c] by the six-term recurrence.

Notation for the six-term relations. Let v be a chord with endpoints T and B,
let x be a chord with an endpoint x_n adjacent to T, and y a chord with an
endpoint y_n adjacent to B, such that x and y are distinct and both cross v.
Write x_f, y_f for the far endpoints. Sliding x_n past T, y_n past B, or both
gives A2, A3, A4 (A1 is the diagram itself). Removing v and reconnecting the
four remaining points of x and y gives two diagrams with one chord less:

    N  chords (x_n, y_n) and (x_f, y_f)
    S  chords (x_n, y_f) and (y_n, x_f)

A chord enclosing a single endpoint (see :func:`tight_leaf`) is removed at
the cost of a factor c - 2 when no six-term configuration exists.

The four relations differ in where x_n and y_n sit (T+ means immediately
after T in counterclockwise order):

    relation 1: x_n = T+, y_n = B-, x and y do not cross
    relation 2: x_n = T+, y_n = B-, x and y cross
    relation 3: x_n = T-, y_n = B-
    relation 4: x_n = T+, y_n = B+

and each states W(A1) - W(A2) - W(A3) + W(A4) = 2 W(D5) - 2 W(D6) with
(D5, D6) = (N, S) for relations 1, 2 and (S, N) for relations 3, 4. Choosing
the other endpoint of v as T covers the mirror-image placement x_n = T-,
y_n = B+ with relations 1 and 2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .algebra import C, Poly
from .diagram import (
    ChordDiagram,
    DiagramError,
    DiagramSum,
    _positions,
    canonical_word,
    chords_cross,
    components,
    crossing_counts,
)

ONE = Poly.const(1)
CROSSING_PAIR = (1, 2, 1, 2)
# (crossing pair) + 2 (chord) - (chord)(chord) is in the kernel of W.
CROSSING_PAIR_VALUE = C * C - 2 * C

SIX_TERM_COEFFS = (1, -1, -1, 1, -2, 2)


class RecursionGuardError(RuntimeError):
    """The recurrence failed to terminate within its step budget."""


@dataclass(frozen=True)
class SixTermSpec:
    """Relation index 1..4, working chord label, and which of its endpoints is T."""

    relation: int
    chord: int
    end: int = 0


def _swap(word: list, i: int, j: int) -> list:
    w = list(word)
    w[i], w[j] = w[j], w[i]
    return w


def _drop(word: list, *idx: int) -> list:
    skip = set(idx)
    return [a for k, a in enumerate(word) if k not in skip]


def six_term_words(word: tuple, spec: SixTermSpec) -> list[list[int]]:
    """The six words [A1, A2, A3, A4, D5, D6] of ``spec`` applied to ``word``.

    Raises DiagramError if the configuration is not present.
    """
    if spec.relation not in (1, 2, 3, 4):
        raise DiagramError(f"relation index must be 1..4, got {spec.relation}")
    pos = _positions(tuple(word))
    if spec.chord not in pos or spec.end not in (0, 1):
        raise DiagramError(f"six-term spec {spec} out of range")
    size = len(word)
    v = spec.chord
    t, b = pos[v][spec.end], pos[v][1 - spec.end]
    if spec.relation == 3:
        xn, yn = (t - 1) % size, (b - 1) % size
    elif spec.relation == 4:
        xn, yn = (t + 1) % size, (b + 1) % size
    else:
        xn, yn = (t + 1) % size, (b - 1) % size
    x, y = word[xn], word[yn]
    if v in (x, y) or x == y:
        raise DiagramError(f"no six-term configuration {spec} in {word}")
    if not (chords_cross(pos[v], pos[x]) and chords_cross(pos[v], pos[y])):
        raise DiagramError(f"six-term spec {spec}: neighbours do not cross chord {v}")
    xy = chords_cross(pos[x], pos[y])
    if (spec.relation == 1 and xy) or (spec.relation == 2 and not xy):
        raise DiagramError(f"six-term spec {spec}: wrong crossing pattern of neighbours")
    xf = pos[x][0] if pos[x][1] == xn else pos[x][1]
    yf = pos[y][0] if pos[y][1] == yn else pos[y][1]

    a1 = list(word)
    a2 = _swap(a1, t, xn)
    a3 = _swap(a1, b, yn)
    a4 = _swap(a2, b, yn)
    near = list(word)
    near[yn], near[xf] = x, y
    swapped = list(word)
    swapped[xf], swapped[yf] = y, x
    near, swapped = _drop(near, t, b), _drop(swapped, t, b)
    if spec.relation in (1, 2):
        return [a1, a2, a3, a4, near, swapped]
    return [a1, a2, a3, a4, swapped, near]


def six_term_specs(d: ChordDiagram) -> list[SixTermSpec]:
    """Every spec whose configuration is present in d."""
    out = []
    for v in range(1, d.n + 1):
        for end in (0, 1):
            for rel in (1, 2, 3, 4):
                spec = SixTermSpec(rel, v, end)
                try:
                    six_term_words(d.word, spec)
                except DiagramError:
                    continue
                out.append(spec)
    return out


def six_term_element(d: ChordDiagram, spec: SixTermSpec) -> DiagramSum:
    """D1 - D2 - D3 + D4 - 2 D5 + 2 D6, an element of the kernel of W."""
    words = six_term_words(d.word, spec)
    return DiagramSum([(ChordDiagram.from_word(w), k) for w, k in zip(words, SIX_TERM_COEFFS)])


def select_spec(word: tuple) -> SixTermSpec:
    """Working chord: fewest crossings among crossed chords, then smallest label.

    Falls through to the next chord in that order if a chord admits no
    configuration.
    """
    counts = crossing_counts(word)
    order = sorted((k, label) for label, k in counts.items() if k > 0)
    for _, v in order:
        for end in (0, 1):
            for rel in (1, 2, 3, 4):
                spec = SixTermSpec(rel, v, end)
                try:
                    six_term_words(word, spec)
                except DiagramError:
                    continue
                return spec
    raise DiagramError(f"no six-term configuration applies to {' '.join(map(str, word))}")


def tight_leaf(word: tuple) -> int | None:
    """Label of a chord whose endpoints enclose exactly one other endpoint.

    For such a chord x around an endpoint carrying y in sl2, the labelled sum
    is sum_i a_i y b_i = (c - C_ad/2) y, and the adjoint Casimir is 4 for the
    trace form, so W(D) = (c - 2) W(D without x). Used only when no six-term
    configuration exists.
    """
    size = len(word)
    for label, (p, q) in sorted(_positions(tuple(word)).items()):
        if q - p == 2 or (p + size) - q == 2:
            return label
    return None


class SL2WeightSystem:
    """Memoized evaluator for W; one instance can be shared by threads.

    Values are cached by canonical word. Two threads racing on the same key
    compute the same polynomial, so the unsynchronized read is harmless and
    writes go through a lock.
    """

    #: memo misses allowed per top-level call, times n 2^n
    budget_factor = 10

    def __init__(self):
        self._memo: dict[tuple, Poly] = {(): ONE}
        self._lock = threading.Lock()
        self.relation_uses = {1: 0, 2: 0, 3: 0, 4: 0, "leaf": 0}

    def __len__(self):
        return len(self._memo)

    def clear(self):
        with self._lock:
            self._memo = {(): ONE}

    def __call__(self, d: ChordDiagram) -> Poly:
        return self.eval_word(d.word)

    def eval_word(self, word) -> Poly:
        key = canonical_word(word)
        n = len(key) // 2
        budget = [self.budget_factor * max(n, 1) * 2**n]
        return self._eval(key, budget)

    def _store(self, key, value):
        with self._lock:
            return self._memo.setdefault(key, value)

    def _eval(self, key: tuple, budget: list) -> Poly:
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        budget[0] -= 1
        if budget[0] < 0:
            raise RecursionGuardError(f"recurrence step budget exhausted at {key}")

        comps = components(key)
        if len(comps) > 1:
            value = ONE
            for comp in comps:
                keep = set(comp)
                value = value * self._eval(canonical_word([a for a in key if a in keep]), budget)
            return self._store(key, value)
        if len(key) == 2:
            return self._store(key, C)
        if key == CROSSING_PAIR:
            return self._store(key, CROSSING_PAIR_VALUE)

        try:
            spec = select_spec(key)
        except DiagramError:
            leaf = tight_leaf(key)
            if leaf is None:
                raise
            self.relation_uses["leaf"] += 1
            rest = [a for a in key if a != leaf]
            return self._store(key, (C - 2) * self._eval(canonical_word(rest), budget))
        self.relation_uses[spec.relation] += 1
        a1, a2, a3, a4, d5, d6 = six_term_words(key, spec)
        ev = lambda w: self._eval(canonical_word(w), budget)  # noqa: E731
        value = ev(a2) + ev(a3) - ev(a4) + 2 * ev(d5) - 2 * ev(d6)
        return self._store(key, value)


_default = SL2WeightSystem()


def default_weight_system() -> SL2WeightSystem:
    return _default


def eval_cv(d: ChordDiagram) -> Poly:
    """W(d) as an exact polynomial in c (shared memo table)."""
    return _default(d)


def eval_sum(s: DiagramSum, weight: SL2WeightSystem | None = None) -> Poly:
    weight = weight or _default
    total = Poly((), "c")
    for d, coeff in s.items():
        total = total + weight(d) * Fraction(coeff)
    return total


def kernel_witness() -> DiagramSum:
    """(1 2 1 2) + 2 (1 1) - (1 1 2 2)."""
    return DiagramSum([
        (ChordDiagram((1, 2, 1, 2)), 1),
        (ChordDiagram((1, 1)), 2),
        (ChordDiagram((1, 1, 2, 2)), -1),
    ])
