"""The Coxeter system of type affine A2.

Generators are ``r``, ``s``, ``t`` with every pair braiding with exponent 3.
An :class:`Element` is stored as its matrix in the geometric representation
(acting on the simple roots ``a_r, a_s, a_t``) together with the matrix of its
inverse, so both left and right descents are read off by root signs.
"""
from __future__ import annotations

from functools import lru_cache

GENS = "rst"
MAX_ENUM_LEN = 20

_IDENT = (1, 0, 0, 0, 1, 0, 0, 0, 1)


class BoundError(ValueError):
    """A requested length exceeds a configured resource ceiling."""


def _matmul(a, b):
    return (
        a[0] * b[0] + a[1] * b[3] + a[2] * b[6],
        a[0] * b[1] + a[1] * b[4] + a[2] * b[7],
        a[0] * b[2] + a[1] * b[5] + a[2] * b[8],
        a[3] * b[0] + a[4] * b[3] + a[5] * b[6],
        a[3] * b[1] + a[4] * b[4] + a[5] * b[7],
        a[3] * b[2] + a[4] * b[5] + a[5] * b[8],
        a[6] * b[0] + a[7] * b[3] + a[8] * b[6],
        a[6] * b[1] + a[7] * b[4] + a[8] * b[7],
        a[6] * b[2] + a[7] * b[5] + a[8] * b[8],
    )


def _reflect_row(m, i):
    # S_i @ m: row i becomes -row_i + (sum of the other two rows)
    rows = [list(m[0:3]), list(m[3:6]), list(m[6:9])]
    j, k = (i + 1) % 3, (i + 2) % 3
    rows[i] = [-rows[i][c] + rows[j][c] + rows[k][c] for c in range(3)]
    return tuple(rows[0] + rows[1] + rows[2])


def _reflect_col(m, i):
    # m @ S_i: column i is negated, column i is added to the other two
    out = list(m)
    j, k = (i + 1) % 3, (i + 2) % 3
    for row in range(3):
        b = 3 * row
        ci = m[b + i]
        out[b + i] = -ci
        out[b + j] = m[b + j] + ci
        out[b + k] = m[b + k] + ci
    return tuple(out)


def _rotate(m, k):
    # conjugate by the root permutation a_i -> a_{i+k}
    out = [0] * 9
    for i in range(3):
        for j in range(3):
            out[3 * ((i + k) % 3) + (j + k) % 3] = m[3 * i + j]
    return tuple(out)


def _negative_column(m, i):
    return m[i] <= 0 and m[3 + i] <= 0 and m[6 + i] <= 0


def _gen_index(g):
    try:
        return GENS.index(g)
    except ValueError:
        raise ValueError(f"unknown generator {g!r}") from None


class Element:
    """An element of W, compared by its geometric-representation matrix."""

    __slots__ = ("_m", "_minv", "_word")

    def __init__(self, m=_IDENT, minv=_IDENT):
        self._m = m
        self._minv = minv
        self._word = None

    # construction -----------------------------------------------------

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def gen(cls, g):
        return cls.identity().rmul(g)

    @classmethod
    def from_word(cls, word):
        w = cls.identity()
        for g in word:
            w = w.rmul(g)
        return w

    @classmethod
    def parse(cls, text):
        """Parse a word over ``r, s, t`` (``e`` or empty for the identity)."""
        text = text.strip()
        if text in ("", "e", "1"):
            return cls.identity()
        for ch in text:
            if ch not in GENS:
                raise ValueError(f"cannot parse element {text!r}")
        return cls.from_word(text)

    # group operations ---------------------------------------------------

    def lmul(self, g):
        """Return ``g * self`` for a generator letter or index."""
        i = g if isinstance(g, int) else _gen_index(g)
        return Element(_reflect_row(self._m, i), _reflect_col(self._minv, i))

    def rmul(self, g):
        """Return ``self * g`` for a generator letter or index."""
        i = g if isinstance(g, int) else _gen_index(g)
        return Element(_reflect_col(self._m, i), _reflect_row(self._minv, i))

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return Element(_matmul(self._m, other._m), _matmul(other._minv, self._minv))

    def inverse(self):
        return Element(self._minv, self._m)

    def twist(self, k=1):
        """Apply the diagram rotation r->s->t->r ``k`` times letterwise."""
        k %= 3
        if k == 0:
            return self
        return Element(_rotate(self._m, k), _rotate(self._minv, k))

    # invariants ---------------------------------------------------------

    @property
    def matrix(self):
        return self._m

    def has_left_descent(self, g):
        i = g if isinstance(g, int) else _gen_index(g)
        return _negative_column(self._minv, i)

    def has_right_descent(self, g):
        i = g if isinstance(g, int) else _gen_index(g)
        return _negative_column(self._m, i)

    @property
    def word(self):
        """ShortLex-least reduced word, by stripping the least left descent."""
        if self._word is None:
            letters = []
            m, minv = self._m, self._minv
            while m != _IDENT:
                for i in range(3):
                    if _negative_column(minv, i):
                        break
                else:  # pragma: no cover - faithful representation
                    raise RuntimeError("non-identity element without descent")
                letters.append(GENS[i])
                m, minv = _reflect_row(m, i), _reflect_col(minv, i)
            self._word = "".join(letters)
        return self._word

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return self._m == _IDENT

    def __eq__(self, other):
        return isinstance(other, Element) and self._m == other._m

    def __hash__(self):
        return hash(self._m)

    def __repr__(self):
        return f"Element({str(self)!r})"

    def __str__(self):
        return self.word or "e"


E = Element.identity()
R, S, T = (Element.gen(g) for g in GENS)


def parse(text):
    return Element.parse(text)


def mul(a, b):
    return a * b


def length(w):
    return w.length


def descents(w, side="left"):
    """Set of generator letters ``g`` with ``l(gw) < l(w)`` (or ``l(wg)``)."""
    if side in ("left", "L"):
        return frozenset(g for g in GENS if w.has_left_descent(g))
    if side in ("right", "R"):
        return frozenset(g for g in GENS if w.has_right_descent(g))
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def left_descents(w):
    return descents(w, "left")


def right_descents(w):
    return descents(w, "right")


@lru_cache(maxsize=None)
def bruhat_leq(u, w):
    """Bruhat order by the lifting property on the least left descent of w."""
    lu, lw = u.length, w.length
    if lu > lw:
        return False
    if lu == lw:
        return u == w
    if u.is_identity():
        return True
    g = w.word[0]
    gw = w.lmul(g)
    if u.has_left_descent(g):
        return bruhat_leq(u.lmul(g), gw)
    return bruhat_leq(u, gw)


@lru_cache(maxsize=None)
def reduced_word_count(w):
    if w.is_identity():
        return 1
    return sum(reduced_word_count(w.lmul(g)) for g in GENS if w.has_left_descent(g))


@lru_cache(maxsize=None)
def _reduced_words(w):
    if w.is_identity():
        return ("",)
    out = []
    for g in GENS:
        if w.has_left_descent(g):
            out.extend(g + rest for rest in _reduced_words(w.lmul(g)))
    return tuple(sorted(out))


def reduced_words(w):
    """All reduced words of ``w`` in ShortLex order."""
    return list(_reduced_words(w))


def has_unique_reduced_word(w):
    if w.is_identity():
        return True
    while not w.is_identity():
        ds = [g for g in GENS if w.has_left_descent(g)]
        if len(ds) != 1:
            return False
        w = w.lmul(ds[0])
    return True


def star(w, pair, side="left"):
    """Kazhdan-Lusztig star operation for a braid-3 pair, or ``None``."""
    g, h = sorted(pair)
    if g == h:
        raise ValueError("star needs two distinct generators")
    ds = descents(w, side)
    if (g in ds) == (h in ds):
        return None
    for k in (g, h):
        cand = w.lmul(k) if side in ("left", "L") else w.rmul(k)
        cd = descents(cand, side)
        if (g in cd) != (h in cd):
            return cand
    raise RuntimeError("star string has no partner")  # pragma: no cover


def enumerate_elements(max_len, ceiling=MAX_ENUM_LEN):
    """All elements of length at most ``max_len``, by length then ShortLex."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if max_len > ceiling:
        raise BoundError(f"max_len {max_len} exceeds ceiling {ceiling}")
    out = [E]
    layer = [E]
    for _ in range(max_len):
        seen = {}
        for w in layer:
            for g in GENS:
                if not w.has_right_descent(g):
                    x = w.rmul(g)
                    seen.setdefault(x, x)
        layer = sorted(seen, key=lambda x: x.word)
        out.extend(layer)
    return out
