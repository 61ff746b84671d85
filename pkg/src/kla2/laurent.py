"""Integer Laurent polynomials in ``v`` (with ``q = v**2``)."""
from __future__ import annotations


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``{exponent: coefficient}``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(coeffs)
        self._c = {int(k): int(c) for k, c in coeffs.items() if c}
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def mono(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def from_q(cls, coeffs):
        """Polynomial in ``q`` (low-to-high coefficients) as a Laurent poly in ``v``."""
        return cls({2 * k: c for k, c in enumerate(coeffs)})

    @classmethod
    def parse(cls, text):
        """Inverse of :meth:`serialize`."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        out = {}
        for item in text.split():
            e, c = item.split(":")
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)

    # access -------------------------------------------------------------

    def coeff(self, exp):
        return self._c.get(exp, 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    @property
    def degree(self):
        return max(self._c) if self._c else None

    @property
    def valuation(self):
        return min(self._c) if self._c else None

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for a, ca in self._c.items():
            for b, cb in other._c.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by ``v**k``."""
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def bar(self):
        """The involution ``v -> v**-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def negative_part(self):
        return LaurentPoly({e: c for e, c in self._c.items() if e < 0})

    def positive_part(self):
        return LaurentPoly({e: c for e, c in self._c.items() if e > 0})

    def divmod(self, other):
        """Quotient and remainder of Laurent-polynomial long division.

        Both operands are shifted to ordinary polynomials; the remainder is
        zero exactly when the division is exact in ``Z[v, 1/v]`` (given the
        divisor's leading coefficient divides each step).
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO, ZERO
        num = self.shift(-self.valuation)
        den = other.shift(-other.valuation)
        offset = self.valuation - other.valuation
        rem = dict(num._c)
        dlead_e = den.degree
        dlead_c = den.coeff(dlead_e)
        quot = {}
        while rem:
            top = max(rem)
            if top < dlead_e:
                break
            c = rem[top]
            if c % dlead_c:
                break
            qc = c // dlead_c
            qe = top - dlead_e
            quot[qe] = qc
            for e, dc in den._c.items():
                k = e + qe
                rem[k] = rem.get(k, 0) - qc * dc
                if rem[k] == 0:
                    del rem[k]
        q = LaurentPoly(quot).shift(offset)
        r = LaurentPoly(rem).shift(self.valuation)
        return q, r

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division: ({self}) / ({other})")
        return q

    # comparison / display -----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    def serialize(self):
        """``exp:coeff`` pairs sorted by exponent, space separated; ``0`` if zero."""
        if not self._c:
            return "0"
        return " ".join(f"{e}:{c}" for e, c in self.items())

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "v" if e == 1 else f"v^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.mono(1)
VINV = LaurentPoly.mono(-1)
# the quantum integer [2] = v + 1/v
XI = V + VINV
