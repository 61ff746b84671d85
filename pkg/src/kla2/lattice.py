"""The weight lattice ``Z x + Z y`` of SL3 and its Weyl group action."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class Weight:
    """The weight ``m*x + n*y`` in fundamental-weight coordinates."""

    m: int
    n: int

    @classmethod
    def parse(cls, text):
        m, n = (int(p) for p in text.split(","))
        return cls(m, n)

    def __add__(self, other):
        return Weight(self.m + other.m, self.n + other.n)

    def __sub__(self, other):
        return Weight(self.m - other.m, self.n - other.n)

    def __neg__(self):
        return Weight(-self.m, -self.n)

    def __mul__(self, k):
        return Weight(k * self.m, k * self.n)

    __rmul__ = __mul__

    def root_coords(self):
        """Coordinates ``(i, j)`` with ``self = i*alpha + j*beta``."""
        return Fraction(2 * self.m + self.n, 3), Fraction(self.m + 2 * self.n, 3)

    def in_root_lattice(self):
        return (2 * self.m + self.n) % 3 == 0

    def is_dominant(self):
        return self.m >= 0 and self.n >= 0

    def dual(self):
        """``-w0(self)``: swaps the two fundamental weights."""
        return Weight(self.n, self.m)

    def __str__(self):
        return f"{self.m},{self.n}"


ZERO_W = Weight(0, 0)
X = Weight(1, 0)
Y = Weight(0, 1)
ALPHA = Weight(2, -1)
BETA = Weight(-1, 2)
RHO = Weight(1, 1)
POSITIVE_ROOTS = (ALPHA, BETA, ALPHA + BETA)


def from_roots(i, j):
    """The weight ``i*alpha + j*beta``."""
    return ALPHA * i + BETA * j


def dom_leq(lam, lam2):
    """``lam <= lam2`` in dominance order: the difference is in N alpha + N beta."""
    i, j = (lam2 - lam).root_coords()
    return i.denominator == 1 and j.denominator == 1 and i >= 0 and j >= 0


def height_gap(lam, lam2):
    """Sum of the root coordinates of ``lam2 - lam`` (assumes ``lam <= lam2``)."""
    i, j = (lam2 - lam).root_coords()
    return int(i + j)


def _s(lam):
    return Weight(-lam.m, lam.m + lam.n)


def _t(lam):
    return Weight(lam.m + lam.n, -lam.n)


_ACTIONS = {"s": _s, "t": _t}


def w0_act(word, lam):
    """Act on ``lam`` by the finite Weyl group element spelled by ``word``."""
    word = "" if word in ("e", None) else str(word)
    for g in reversed(word):
        lam = _ACTIONS[g](lam)
    return lam


def dominant_conjugate(lam):
    """The dominant weight in the W0-orbit of ``lam`` and the length of a
    shortest ``w`` with ``w(lam)`` dominant."""
    steps = 0
    while not lam.is_dominant():
        lam = _s(lam) if lam.m < 0 else _t(lam)
        steps += 1
    return lam, steps
