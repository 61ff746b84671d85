"""Word combinatorics checked against a braid-rewriting oracle that never
looks at matrices."""
from collections import deque
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kla2.coxeter import (
    GENS,
    BoundError,
    Element,
    bruhat_leq,
    descents,
    enumerate_elements,
    has_unique_reduced_word,
    parse,
    reduced_words,
    star,
)

BRAIDS = [("rsr", "srs"), ("sts", "tst"), ("rtr", "trt")]


def braid_class(word):
    """All words reachable by braid moves (for a reduced word: all reduced words)."""
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        for a, b in BRAIDS:
            for x, y in ((a, b), (b, a)):
                i = cur.find(x)
                while i != -1:
                    nxt = cur[:i] + y + cur[i + 3:]
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
                    i = cur.find(x, i + 1)
    return seen


def is_reduced(word):
    # a word is reduced iff no braid-equivalent word has a repeated letter
    return not any(w[i] == w[i + 1] for w in braid_class(word) for i in range(len(w) - 1))


def reduced_oracle(max_len):
    """Elements as frozensets of reduced words, built by extending words."""
    classes = {frozenset([""])}
    layers = [[""]]
    for n in range(1, max_len + 1):
        layer = {}
        for w in layers[-1]:
            for g in GENS:
                cand = w + g
                if is_reduced(cand):
                    cls = frozenset(braid_class(cand))
                    layer[cls] = min(cls)
        layers.append(sorted(layer.values()))
        classes.update(layer)
    return classes


def subwords(word):
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        out.add("".join(c for c, keep in zip(word, mask) if keep))
    return out


def test_length_profile():
    els = enumerate_elements(9)
    counts = [sum(1 for w in els if w.length == n) for n in range(10)]
    assert counts == [1] + [3 * n for n in range(1, 10)]


def test_enumeration_matches_braid_oracle():
    oracle = reduced_oracle(7)
    mine = {frozenset(reduced_words(w)) for w in enumerate_elements(7)}
    assert mine == oracle


def test_canonical_word_is_shortlex_least():
    for w in enumerate_elements(8):
        words = reduced_words(w)
        assert str(w) == (min(words) if w.length else "e")
        assert all(len(x) == w.length for x in words)


def test_bruhat_matches_subword_property():
    els = enumerate_elements(6)
    for w in els:
        below = set()
        word = str(w) if w.length else ""
        for sub in subwords(word):
            below.add(Element.from_word(sub))
        for u in els:
            assert bruhat_leq(u, w) == (u in below), (u, w)


def test_descents_and_parse():
    w = parse("rstr")
    assert descents(w, "left") == {"r"}
    assert descents(w, "right") == {"r"}
    assert descents(parse("sts"), "left") == {"s", "t"}
    assert parse("srs") == parse("rsr")
    assert parse("rr").is_identity()
    with pytest.raises(ValueError):
        parse("rxq")


def test_unique_reduced_word():
    assert has_unique_reduced_word(parse("rstrst"))
    assert not has_unique_reduced_word(parse("sts"))


def test_star_involution():
    for w in enumerate_elements(8):
        for pair in (("r", "s"), ("s", "t"), ("r", "t")):
            for side in ("left", "right"):
                v = star(w, pair, side)
                if v is None:
                    continue
                assert star(v, pair, side) == w
                assert abs(v.length - w.length) == 1


def test_bound():
    with pytest.raises(BoundError):
        enumerate_elements(21)


words = st.text(alphabet=GENS, max_size=14)


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_group_laws(a, b):
    x, y = Element.from_word(a), Element.from_word(b)
    assert (x * y).inverse() == y.inverse() * x.inverse()
    assert (x * x.inverse()).is_identity()
    assert (x * y).length <= x.length + y.length
    assert (x * y).length % 2 == (len(a) + len(b)) % 2


@settings(max_examples=100, deadline=None)
@given(words)
def test_canonical_word_round_trip(a):
    x = Element.from_word(a)
    assert Element.from_word(x.word) == x
    assert len(x.word) == x.length
    assert x.word in braid_class(x.word)
