"""Chord diagrams as double-occurrence words.

A diagram with n chords is a word of length 2n in which every label occurs
exactly twice, read counterclockwise from the base point. Words are kept
normalized: labels are 1..n in order of first occurrence. Diagrams are
identified up to rotation of the circle only (never reflection).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Malformed diagram input or an inapplicable relation spec."""


def normalize_word(word: Sequence) -> tuple[int, ...]:
    """Relabel ``word`` so labels are 1..n by first occurrence."""
    relabel = {}
    out = []
    for token in word:
        if token not in relabel:
            relabel[token] = len(relabel) + 1
        out.append(relabel[token])
    return tuple(out)


def _check_double_occurrence(word: Sequence) -> None:
    counts: dict = {}
    for token in word:
        counts[token] = counts.get(token, 0) + 1
    for token, k in counts.items():
        if k != 2:
            raise DiagramError(f"label {token} occurs {k} time{'s' if k != 1 else ''}, expected 2")
    if len(word) % 2:
        raise DiagramError(f"word has odd length {len(word)}")


@dataclass(frozen=True, order=True)
class ChordDiagram:
    """A chord diagram stored as a normalized double-occurrence word."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        _check_double_occurrence(word)
        if word != normalize_word(word):
            raise DiagramError(f"word {word} is not normalized; use ChordDiagram.from_word")
        object.__setattr__(self, "word", word)

    @classmethod
    def from_word(cls, word: Iterable) -> ChordDiagram:
        word = list(word)
        _check_double_occurrence(word)
        return cls(normalize_word(word))

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return " ".join(map(str, self.word))

    def __repr__(self):
        return f"ChordDiagram({self})"

    def positions(self) -> dict[int, tuple[int, int]]:
        """Map label -> (first position, second position)."""
        return _positions(self.word)

    def rotate(self, k: int) -> ChordDiagram:
        if not self.word:
            return self
        k %= len(self.word)
        return ChordDiagram.from_word(self.word[k:] + self.word[:k])

    def mirror(self) -> ChordDiagram:
        return ChordDiagram.from_word(reversed(self.word))

    def canonical(self) -> ChordDiagram:
        return canonicalize(self)


EMPTY = ChordDiagram(())


@lru_cache(maxsize=1 << 16)
def _positions(word: tuple) -> dict:
    pos: dict = {}
    for i, label in enumerate(word):
        pos.setdefault(label, []).append(i)
    return {label: (p[0], p[1]) for label, p in pos.items()}


def parse_dow(text: str) -> ChordDiagram:
    """Parse whitespace-separated tokens into a diagram.

    Tokens are arbitrary strings; ``"a b b a"`` parses to ``1 2 2 1``.
    Empty input is the empty diagram.
    """
    tokens = text.split()
    return ChordDiagram.from_word(tokens)


def _least_rotation(word: tuple) -> tuple:
    if not word:
        return word
    return min(normalize_word(word[k:] + word[:k]) for k in range(len(word)))


_canonical_word = lru_cache(maxsize=1 << 16)(_least_rotation)


def canonicalize(d: ChordDiagram) -> ChordDiagram:
    """Lexicographically least normalized word over all rotations."""
    return ChordDiagram(_canonical_word(d.word))


def canonical_word(word: Sequence) -> tuple[int, ...]:
    """Canonical word of an arbitrary (unnormalized) double-occurrence word."""
    return _canonical_word(normalize_word(word))


def diagram_from_permutation(n: int, sigma: Sequence[int]) -> ChordDiagram:
    """D(sigma): chords join points sigma(2i-1) and sigma(2i), i = 1..n.

    ``sigma`` is given one-line, ``sigma[k-1] = sigma(k)``, on {1..2n}.
    """
    sigma = list(sigma)
    if len(sigma) != 2 * n or sorted(sigma) != list(range(1, 2 * n + 1)):
        raise DiagramError(f"not a permutation of 1..{2 * n}: {sigma}")
    word = [0] * (2 * n)
    for i in range(n):
        word[sigma[2 * i] - 1] = i + 1
        word[sigma[2 * i + 1] - 1] = i + 1
    return ChordDiagram.from_word(word)


def iter_matchings(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield perfect matchings of 2n points as words, in a fixed order.

    The smallest unmatched point is paired with each larger unmatched point
    in turn. ``first`` restricts the partner of point 0, which lets callers
    split the enumeration into independent chunks.
    """
    word = [0] * (2 * n)

    def rec(label):
        try:
            i = word.index(0)
        except ValueError:
            yield tuple(word)
            return
        word[i] = label
        for j in range(i + 1, 2 * n):
            if word[j] == 0 and (label > 1 or first is None or j == first):
                word[j] = label
                yield from rec(label + 1)
                word[j] = 0
        word[i] = 0

    if n == 0:
        yield ()
        return
    yield from rec(1)


def _rotation_cmp(word: tuple, k: int) -> int:
    """Compare the normalized rotation of ``word`` by k against ``word``.

    ``word`` must be normalized. Stops at the first differing token.
    """
    size = len(word)
    relabel: dict = {}
    for i in range(size):
        a = word[(k + i) % size]
        r = relabel.get(a)
        if r is None:
            r = relabel[a] = len(relabel) + 1
        if r != word[i]:
            return -1 if r < word[i] else 1
    return 0


def rotation_orbit(word: tuple) -> int | None:
    """Orbit size under rotation if ``word`` is its own canonical form, else None."""
    size = len(word)
    period = size
    for k in range(1, size):
        cmp = _rotation_cmp(word, k)
        if cmp < 0:
            return None
        if cmp == 0 and k < period:
            period = k
    return period if size else 1


def enumerate_matchings(n: int, first: int | None = None) -> list[tuple[ChordDiagram, int]]:
    """All (2n-1)!! matchings grouped by canonical form.

    Returns ``[(canonical diagram, number of matchings), ...]`` in the order
    the canonical representatives are met by :func:`iter_matchings`. With
    ``first`` set, only the matchings pairing point 0 with ``first`` are
    counted, grouped the same way.
    """
    if first is None:
        out = []
        for word in iter_matchings(n):
            orbit = rotation_orbit(word)
            if orbit is not None:
                out.append((ChordDiagram(word), orbit))
        return out
    counts: dict[tuple, int] = {}
    for word in iter_matchings(n, first):
        key = _least_rotation(word)
        counts[key] = counts.get(key, 0) + 1
    return [(ChordDiagram(w), k) for w, k in counts.items()]


def chords_cross(pa: tuple[int, int], pb: tuple[int, int]) -> bool:
    a0, a1 = pa
    return (a0 < pb[0] < a1) != (a0 < pb[1] < a1)


def crossings(d: ChordDiagram) -> set[frozenset[int]]:
    """Pairs of labels whose chords interleave."""
    pos = d.positions()
    labels = sorted(pos)
    return {
        frozenset((a, b))
        for i, a in enumerate(labels)
        for b in labels[i + 1:]
        if chords_cross(pos[a], pos[b])
    }


def crossing_counts(word: Sequence) -> dict[int, int]:
    pos = _positions(tuple(word))
    counts = {label: 0 for label in pos}
    labels = list(pos)
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if chords_cross(pos[a], pos[b]):
                counts[a] += 1
                counts[b] += 1
    return counts


def connected_sum(d1: ChordDiagram, d2: ChordDiagram, at: int = 0) -> ChordDiagram:
    """Insert the word of d2 into d1 at position ``at`` (0 = the base point)."""
    if not 0 <= at <= len(d1.word):
        raise DiagramError(f"insertion point {at} out of range for {d1}")
    shift = d1.n
    inner = tuple(a + shift for a in d2.word)
    return ChordDiagram.from_word(d1.word[:at] + inner + d1.word[at:])


def product(factors: Iterable[ChordDiagram]) -> ChordDiagram:
    result = EMPTY
    for f in factors:
        result = connected_sum(result, f)
    return result


def components(word: Sequence) -> list[list[int]]:
    """Connected components of the intersection graph, as label lists.

    Components are ordered by the first position at which they occur.
    """
    word = tuple(word)
    pos = _positions(word)
    parent = {label: label for label in pos}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    labels = list(pos)
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if chords_cross(pos[a], pos[b]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for label in word:
        groups.setdefault(find(label), [])
        if label not in groups[find(label)]:
            groups[find(label)].append(label)
    return list(groups.values())


def split_factors(d: ChordDiagram) -> list[ChordDiagram]:
    """Indecomposable connected-sum factors of d.

    Each factor is the restriction of d to one component of its intersection
    graph, read from d's base point. Components never interleave, so d is the
    connected sum of its factors (modulo the four-term relation; up to
    rotation when every component sits on a contiguous arc).
    """
    out = []
    for comp in components(d.word):
        keep = set(comp)
        out.append(ChordDiagram.from_word(a for a in d.word if a in keep))
    return out


class DiagramSum:
    """Finite Q-linear combination of chord diagrams, keyed by canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[ChordDiagram, object]] | dict = ()):
        acc: dict[ChordDiagram, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for d, coeff in items:
            key = canonicalize(d)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        object.__setattr__(self, "terms", {d: a for d, a in acc.items() if a != 0})

    def __setattr__(self, name, value):
        raise AttributeError("DiagramSum is immutable")

    @classmethod
    def of(cls, d: ChordDiagram, coeff=1) -> DiagramSum:
        return cls([(d, coeff)])

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].n, kv[0].word))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def __eq__(self, other):
        if not isinstance(other, DiagramSum):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: DiagramSum) -> DiagramSum:
        return DiagramSum(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return DiagramSum([(d, -a) for d, a in self.terms.items()])

    def __sub__(self, other: DiagramSum) -> DiagramSum:
        return self + (-other)

    def __mul__(self, scalar):
        return DiagramSum([(d, a * scalar) for d, a in self.terms.items()])

    __rmul__ = __mul__

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "DiagramSum(0)"
        return "DiagramSum(" + " + ".join(f"{a}*[{d}]" for d, a in self.items()) + ")"


@dataclass(frozen=True)
class FourTermSpec:
    """Slide endpoint ``end`` (0 or 1) of chord ``moving`` around chord ``fixed``."""

    moving: int
    end: int
    fixed: int


def four_term_specs(d: ChordDiagram) -> list[FourTermSpec]:
    labels = range(1, d.n + 1)
    return [FourTermSpec(m, e, f) for m in labels for f in labels if m != f for e in (0, 1)]


def four_term_words(d: ChordDiagram, spec: FourTermSpec) -> list[list[int]]:
    """The words [D1, D2, D3, D4] of the 4T relation for ``spec``.

    The moving endpoint is lifted off the circle and put back immediately
    after (D1) and before (D2) the first endpoint of the fixed chord, then
    after (D3) and before (D4) its second endpoint.
    """
    n = d.n
    if not (1 <= spec.moving <= n and 1 <= spec.fixed <= n) or spec.moving == spec.fixed:
        raise DiagramError(f"4T spec {spec} out of range for {d}")
    if spec.end not in (0, 1):
        raise DiagramError(f"endpoint index must be 0 or 1, got {spec.end}")
    word = list(d.word)
    del word[d.positions()[spec.moving][spec.end]]
    f1, f2 = (i for i, a in enumerate(word) if a == spec.fixed)
    return [word[:i] + [spec.moving] + word[i:] for i in (f1 + 1, f1, f2 + 1, f2)]


FOUR_TERM_COEFFS = (1, -1, 1, -1)


def four_term_element(d: ChordDiagram, spec: FourTermSpec) -> DiagramSum:
    """The 4T combination D1 - D2 + D3 - D4 for ``spec``."""
    words = four_term_words(d, spec)
    return DiagramSum([(ChordDiagram.from_word(w), k) for w, k in zip(words, FOUR_TERM_COEFFS)])
