"""The extended affine Weyl group ``Omega x| W`` with ``Omega = <omega>``, order 3.

Elements are kept in omega-left normal form ``omega**k * body``.  Moving omega
past a generator rotates it: ``g * omega = omega * sigma(g)`` with
``sigma: r -> s -> t -> r``.
"""
from __future__ import annotations

from functools import lru_cache

from .coxeter import GENS, Element, bruhat_leq
from .lattice import Weight


class ExtElement:
    __slots__ = ("omega", "body")

    def __init__(self, omega=0, body=None):
        self.omega = omega % 3
        self.body = Element() if body is None else body

    @classmethod
    def lift(cls, x):
        """Coerce an :class:`Element` (or an ExtElement) to an ExtElement."""
        if isinstance(x, ExtElement):
            return x
        if isinstance(x, Element):
            return cls(0, x)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot lift {type(x).__name__} to ExtElement")

    @classmethod
    def parse(cls, text):
        """Parse ``o<k>:<word>`` or a word over ``r, s, t, o`` (``o`` = omega).

        The second form is multiplied out letter by letter, so an
        operand ``w0 r omega`` is written ``stsro``.
        """
        text = text.strip()
        if ":" in text:
            head, word = text.split(":", 1)
            if not head.startswith("o"):
                raise ValueError(f"cannot parse extended element {text!r}")
            return cls(int(head[1:]), Element.parse(word))
        if text in ("", "e", "1"):
            return cls()
        out = cls()
        for ch in text:
            if ch == "o":
                out = out * OMEGA
            elif ch in GENS:
                out = out.rmul(ch)
            else:
                raise ValueError(f"cannot parse extended element {text!r}")
        return out

    def __mul__(self, other):
        if isinstance(other, Element):
            other = ExtElement(0, other)
        if not isinstance(other, ExtElement):
            return NotImplemented
        return ExtElement(self.omega + other.omega, self.body.twist(other.omega) * other.body)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return ExtElement(0, other) * self
        return NotImplemented

    def inverse(self):
        return ExtElement(-self.omega, self.body.inverse().twist(-self.omega))

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = ExtElement()
        for _ in range(abs(n)):
            out = out * base
        return out

    def lmul(self, g):
        # g * omega^k = omega^k * sigma^k(g)
        i = GENS.index(g)
        return ExtElement(self.omega, self.body.lmul((i + self.omega) % 3))

    def rmul(self, g):
        return ExtElement(self.omega, self.body.rmul(g))

    def has_left_descent(self, g):
        return self.body.has_left_descent((GENS.index(g) + self.omega) % 3)

    def has_right_descent(self, g):
        return self.body.has_right_descent(g)

    @property
    def length(self):
        return self.body.length

    def __eq__(self, other):
        if isinstance(other, Element):
            other = ExtElement(0, other)
        return (
            isinstance(other, ExtElement)
            and self.omega == other.omega
            and self.body == other.body
        )

    def __hash__(self):
        return hash((self.omega, self.body))

    def sort_key(self):
        return (self.length, self.omega, self.body.word)

    def __str__(self):
        return f"o{self.omega}:{self.body.word}"

    def __repr__(self):
        return f"ExtElement({str(self)!r})"


OMEGA = ExtElement(1)
IDENT = ExtElement()


def ext_mul(a, b):
    return ExtElement.lift(a) * ExtElement.lift(b)


def ext_leq(u, w):
    """Bruhat order on the extended group: equal omega parts and bodies comparable."""
    u, w = ExtElement.lift(u), ExtElement.lift(w)
    return u.omega == w.omega and bruhat_leq(u.body, w.body)


# the finite Weyl group W0 = <s, t>
W0_WORDS = ("e", "s", "t", "st", "ts", "sts")
W0 = {name: Element.parse(name) for name in W0_WORDS}
W0_LONGEST = W0["sts"]
_W0_NAMES = {el: name for name, el in W0.items()}

X_ELEM = ExtElement(1, Element.parse("tr"))
Y_ELEM = ExtElement(2, Element.parse("sr"))


def w0_name(u):
    """Name of a W0 element (accepts names, Elements or omega-free ExtElements)."""
    if isinstance(u, str):
        if u in W0:
            return u
        u = Element.parse(u)
    if isinstance(u, ExtElement):
        if u.omega:
            raise ValueError(f"{u} is not in W0")
        u = u.body
    try:
        return _W0_NAMES[u]
    except KeyError:
        raise ValueError(f"{u} is not in W0") from None


@lru_cache(maxsize=None)
def weight_elem(lam):
    """The translation ``x**m * y**n`` for ``lam = m*x + n*y``."""
    return (X_ELEM ** lam.m) * (Y_ELEM ** lam.n)


D_TABLE = {
    "e": ExtElement(0, Element.parse("e")),
    "s": ExtElement(1, Element.parse("r")),
    "t": ExtElement(2, Element.parse("r")),
    "st": ExtElement(2, Element.parse("e")),
    "ts": ExtElement(1, Element.parse("e")),
    "sts": ExtElement(0, Element.parse("r")),
}


def d_elem(u):
    """The element ``d_u`` attached to ``u`` in W0."""
    return D_TABLE[w0_name(u)]


def _z(k):
    return {0: Weight(0, 0), 1: Weight(1, 0), 2: Weight(0, 1)}[k]


def _ext(text):
    return ExtElement.parse(text)


def _triples(rows):
    return frozenset((_ext(a), _ext(b), _z(k)) for a, b, k in rows)


# triples (d_u, d_u', z) for which the coefficient of v**2 in
# h_{w0 d_u^-1, d_u' w0, z w0} equals 1; z in {0, x, y}
USET = _triples([
    ("e", "r", 0), ("e", "or", 1), ("e", "oor", 2),
    ("r", "e", 0), ("r", "o", 1), ("r", "oo", 2),
    ("o", "r", 2), ("o", "or", 0), ("o", "oor", 1),
    ("oo", "r", 1), ("oo", "or", 2), ("oo", "oor", 0),
    ("or", "e", 2), ("or", "o", 0), ("or", "oo", 1),
    ("oor", "e", 1), ("oor", "o", 2), ("oor", "oo", 0),
])

# The commonly quoted form of the table.  It differs from USET in the twelve
# rows where d_u carries an omega-power: there z is moved back by that power
# in Lambda/Q (0 -> y -> x -> 0 per power).  Kept for comparison only.
USET_LISTED = _triples([
    ("e", "r", 0), ("e", "or", 1), ("e", "oor", 2),
    ("r", "e", 0), ("r", "o", 1), ("r", "oo", 2),
    ("o", "r", 1), ("o", "or", 2), ("o", "oor", 0),
    ("oo", "r", 2), ("oo", "or", 0), ("oo", "oor", 1),
    ("or", "e", 1), ("or", "o", 2), ("or", "oo", 0),
    ("oor", "e", 2), ("oor", "o", 0), ("oor", "oo", 1),
])


def uset_lookup(d, d2):
    """The ``z`` with ``(d, d2, z)`` in USET, or ``None``."""
    for a, b, z in USET:
        if a == d and b == d2:
            return z
    return None


def _strip(z, gens, descend):
    moved = True
    while moved:
        moved = False
        for side in ("left", "right"):
            for g in gens:
                if side == "left":
                    if z.has_left_descent(g) == descend:
                        z = z.lmul(g)
                        moved = True
                elif z.has_right_descent(g) == descend:
                    z = z.rmul(g)
                    moved = True
    return z


@lru_cache(maxsize=None)
def min_rep(lam):
    """Minimal-length element of the double coset ``W0 * lam * W0``."""
    return _strip(weight_elem(lam), "st", True)


@lru_cache(maxsize=None)
def max_rep(lam):
    """Maximal-length element of the double coset ``W0 * lam * W0``."""
    return _strip(weight_elem(lam), "st", False)


def eps(lam):
    """``(-1) ** (l(m_lam) - l(M_lam))``."""
    return -1 if (min_rep(lam).length - max_rep(lam).length) % 2 else 1


def double_coset(lam):
    """All elements of ``W0 * lam * W0``, sorted by length."""
    mid = weight_elem(lam)
    out = {ExtElement(0, a) * mid * ExtElement(0, b) for a in W0.values() for b in W0.values()}
    return sorted(out, key=ExtElement.sort_key)


def translation_weight(z):
    """The dominant ``lam`` with ``weight_elem(lam) == z``, else ``None``.

    A dominant translation ``m*x + n*y`` has length ``2*(m + n)``, which bounds
    the search.
    """
    z = ExtElement.lift(z)
    if z.length % 2:
        return None
    half = z.length // 2
    for m in range(half + 1):
        lam = Weight(m, half - m)
        if weight_elem(lam) == z:
            return lam
    return None


@lru_cache(maxsize=None)
def _factor_c0(z):
    for u in W0_WORDS:
        du_inv = D_TABLE[u].inverse()
        for v in W0_WORDS:
            mid = du_inv * z * D_TABLE[v] * ExtElement(0, W0_LONGEST)
            lam = translation_weight(mid)
            if lam is not None:
                return u, lam, v
    return None


def factor_c0(z):
    """``(u, lam, v)`` with ``z = d_u * lam * w0 * d_v**-1`` and ``lam`` dominant.

    Returns ``None`` when ``z`` is not in the lowest two-sided cell.
    """
    return _factor_c0(ExtElement.lift(z))


def assemble_c0(u, lam, v):
    return d_elem(u) * weight_elem(lam) * ExtElement(0, W0_LONGEST) * d_elem(v).inverse()
