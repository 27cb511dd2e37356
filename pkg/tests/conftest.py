from functools import lru_cache

from hypothesis import settings, strategies as st

from chordsl2.diagram import ChordDiagram, normalize_word
from chordsl2.oracle import eval_oracle

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def diagrams(draw, min_n=0, max_n=4):
    """Uniform-ish random chord diagram: shuffle the multiset {1,1,...,n,n}."""
    n = draw(st.integers(min_n, max_n))
    word = draw(st.permutations([k for k in range(1, n + 1) for _ in range(2)]))
    return ChordDiagram(normalize_word(word))


def oracle_word(word):
    """Oracle value keyed by the exact normalized word, never by canonical form."""
    return _oracle_normalized(normalize_word(word))


@lru_cache(maxsize=None)
def _oracle_normalized(word: tuple):
    return eval_oracle(ChordDiagram(word))
