"""Kazhdan-Lusztig polynomials and products in the (extended) Hecke algebra.

``C_w = v**-l(w) * sum_{y <= w} P_{y,w}(v**2) T_y`` with ``q = v**2``.  KL
polynomials are computed for every pair in a length ball at once by the
table kernel (see :mod:`kla2.kernel`) and looked up afterwards.  Extended
elements ``omega**k * w`` use ``C_{omega w} = T_omega C_w``.
"""
from __future__ import annotations

import threading
from functools import lru_cache

import numpy as np

from . import kernel
from .cells import a_fn
from .coxeter import GENS, MAX_ENUM_LEN, BoundError, Element, enumerate_elements
from .extended import ExtElement
from .laurent import ONE, XI, ZERO, LaurentPoly

KLPoly = tuple  # coefficients low-to-high in q; () is the zero polynomial

_Q = LaurentPoly.mono(2)
_Q_MINUS_1 = _Q - ONE


class KLTable:
    """All ``P_{u,w}`` with ``l(w) <= max_len``.

    ``coeffs[i, j, k]`` is the coefficient of ``q**k`` in
    ``P_{elements[i], elements[j]}``; ``bruhat[i, j]`` is ``elements[i] <= elements[j]``.
    """

    def __init__(self, max_len, backend=None, _arrays=None):
        if max_len > MAX_ENUM_LEN:
            raise BoundError(f"max_len {max_len} exceeds ceiling {MAX_ENUM_LEN}")
        self.max_len = max_len
        self.elements = enumerate_elements(max_len)
        self.index = {w: i for i, w in enumerate(self.elements)}
        n = len(self.elements)
        self.lengths = np.array([w.length for w in self.elements], dtype=np.int64)
        self.lmul = np.full((3, n), -1, dtype=np.int64)
        self.ldesc = np.zeros(n, dtype=np.int64)
        for i, w in enumerate(self.elements):
            for g in range(3):
                self.lmul[g, i] = self.index.get(w.lmul(g), -1)
                if w.has_left_descent(g):
                    self.ldesc[i] |= 1 << g
        self.depth = max_len // 2 + 1
        if _arrays is not None:
            self.bruhat, self.coeffs = _arrays
            return
        impl = kernel.backends()[backend] if backend else kernel
        self.bruhat = impl.bruhat_matrix(self.lengths, self.lmul, self.ldesc)
        self.coeffs = impl.kl_coefficients(
            self.lengths, self.lmul, self.ldesc, self.bruhat, self.depth
        )

    def __len__(self):
        return len(self.elements)

    def idx(self, w):
        try:
            return self.index[w]
        except KeyError:
            raise BoundError(f"{w} is outside the length-{self.max_len} table") from None

    def leq(self, u, w):
        return bool(self.bruhat[self.idx(u), self.idx(w)])

    def poly_at(self, i, j):
        row = self.coeffs[i, j]
        nz = np.flatnonzero(row)
        if not len(nz):
            return ()
        return tuple(int(c) for c in row[: nz[-1] + 1])

    def poly(self, u, w):
        return self.poly_at(self.idx(u), self.idx(w))

    def mu_at(self, i, j):
        gap = int(self.lengths[j] - self.lengths[i])
        if gap <= 0 or gap % 2 == 0:
            return 0
        return int(self.coeffs[i, j, (gap - 1) // 2])

    def lower(self, w):
        """Indices of all ``u <= w``."""
        return np.flatnonzero(self.bruhat[:, self.idx(w)])

    def mu_pairs(self):
        """Iterate ``(i, j, mu)`` over all pairs with ``mu(elements[i], elements[j]) != 0``."""
        for j in range(len(self.elements)):
            for i in np.flatnonzero(self.bruhat[:, j]):
                m = self.mu_at(int(i), j)
                if m:
                    yield int(i), j, m

    # persistence ----------------------------------------------------------

    def save(self, path):
        """One line per Bruhat pair: ``u<TAB>w<TAB>c0,c1,...`` (low-to-high in q)."""
        with open(path, "w") as fh:
            for j, w in enumerate(self.elements):
                for i in np.flatnonzero(self.bruhat[:, j]):
                    u = self.elements[int(i)]
                    coeffs = ",".join(str(c) for c in self.poly_at(int(i), j))
                    fh.write(f"{u}\t{w}\t{coeffs}\n")

    @classmethod
    def load(cls, path):
        records = []
        max_len = 0
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                u_s, w_s, c_s = line.split("\t")
                coeffs = tuple(int(c) for c in c_s.split(","))
                if not coeffs or coeffs[0] != 1:
                    raise ValueError(f"{path}:{lineno}: constant term must be 1")
                u, w = Element.parse(u_s), Element.parse(w_s)
                max_len = max(max_len, w.length)
                records.append((u, w, coeffs))
        n_tab = cls.__new__(cls)
        elements = enumerate_elements(max_len)
        n = len(elements)
        depth = max_len // 2 + 1
        bruhat = np.zeros((n, n), dtype=np.uint8)
        coeffs_arr = np.zeros((n, n, depth), dtype=np.int64)
        index = {w: i for i, w in enumerate(elements)}
        for u, w, coeffs in records:
            i, j = index[u], index[w]
            bruhat[i, j] = 1
            coeffs_arr[i, j, : len(coeffs)] = coeffs
        KLTable.__init__(n_tab, max_len, _arrays=(bruhat, coeffs_arr))
        return n_tab


_TABLES = {}
_LOCK = threading.Lock()


def get_table(max_len):
    """A KL table covering lengths up to ``max_len`` (built once, then reused)."""
    for m in sorted(_TABLES):
        if m >= max_len:
            return _TABLES[m]
    with _LOCK:
        for m in sorted(_TABLES):
            if m >= max_len:
                return _TABLES[m]
        table = KLTable(max(max_len, 6))
        _TABLES[table.max_len] = table
        return table


def register_table(table):
    """Make a (for example loaded) table available to :func:`get_table`."""
    with _LOCK:
        _TABLES[table.max_len] = table


def _bodies(u, w):
    u, w = ExtElement.lift(u), ExtElement.lift(w)
    if u.omega != w.omega:
        return None
    return u.body, w.body


def kl_poly(u, w):
    """``P_{u,w}`` as a coefficient tuple in ``q``; ``()`` when ``u`` is not below ``w``."""
    pair = _bodies(u, w)
    if pair is None:
        return ()
    u, w = pair
    if u.length > w.length:
        return ()
    return get_table(w.length).poly(u, w)


def mu_direct(u, w):
    """Leading coefficient ``mu(u, w)`` read off the KL polynomial."""
    pair = _bodies(u, w)
    if pair is None:
        return 0
    u, w = pair
    gap = w.length - u.length
    if gap <= 0 or gap % 2 == 0:
        return 0
    p = get_table(w.length).poly(u, w)
    top = (gap - 1) // 2
    return p[top] if top < len(p) else 0


def mu_tilde(u, w):
    """Symmetrised leading coefficient."""
    pu, pw = ExtElement.lift(u), ExtElement.lift(w)
    if pu.length > pw.length:
        return mu_direct(w, u)
    return mu_direct(u, w)


def normalized_p(u, w):
    """``v**(l(u) - l(w)) * P_{u,w}(v**2)``; zero unless ``u <= w``."""
    pair = _bodies(u, w)
    if pair is None:
        return ZERO
    p = kl_poly(u, w)
    if not p:
        return ZERO
    return LaurentPoly.from_q(p).shift(pair[0].length - pair[1].length)


# T-basis machinery ----------------------------------------------------------


def _acc(out, key, c):
    prev = out.get(key)
    s = c if prev is None else prev + c
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


@lru_cache(maxsize=4096)
def _c_in_t(w):
    table = get_table(w.length)
    j = table.idx(w)
    out = {}
    for i in np.flatnonzero(table.bruhat[:, j]):
        p = LaurentPoly.from_q(table.poly_at(int(i), j)).shift(-w.length)
        out[table.elements[int(i)]] = p
    return out


def c_in_t(w):
    """T-basis expansion ``{y: coefficient}`` of ``C_w`` (``w`` in W)."""
    return dict(_c_in_t(w))


def t_lmul(expansion, g):
    """Left multiply a T-expansion by ``T_g``."""
    out = {}
    for x, c in expansion.items():
        gx = x.lmul(g)
        if x.has_left_descent(g):
            _acc(out, x, c * _Q_MINUS_1)
            _acc(out, gx, c * _Q)
        else:
            _acc(out, gx, c)
    return out


_TINV_A = LaurentPoly.mono(-2)
_TINV_B = LaurentPoly.mono(-2) - ONE


def _t_lmul_inverse(expansion, g):
    # T_g^-1 = q^-1 T_g + (q^-1 - 1)
    out = {}
    for x, c in t_lmul(expansion, g).items():
        _acc(out, x, c * _TINV_A)
    for x, c in expansion.items():
        _acc(out, x, c * _TINV_B)
    return out


def t_bar(expansion):
    """Bar involution on a T-expansion: ``T_x -> T_{x^-1}^-1``, ``v -> 1/v``."""
    out = {}
    for x, c in expansion.items():
        term = {Element(): c.bar()}
        # T_{x^-1}^-1 = T_{g1}^-1 ... T_{gk}^-1 for x = g1 ... gk
        for g in reversed(x.word):
            term = _t_lmul_inverse(term, g)
        for y, d in term.items():
            _acc(out, y, d)
    return out


def t_product(left, right):
    """Product of two T-expansions."""
    memo = {Element(): right}
    out = {}
    for y in sorted(left, key=lambda z: z.length):
        for x, c in _ty_times(memo, y, right).items():
            _acc(out, x, c * left[y])
    return out


def _ty_times(memo, y, right):
    if y not in memo:
        # T_y = T_g T_{gy} with g the first letter of y
        g = y.word[0]
        memo[y] = t_lmul(_ty_times(memo, y.lmul(g), right), g)
    return memo[y]


def t_to_c(expansion):
    """Rewrite a T-expansion in the C-basis by unitriangular elimination."""
    rest = dict(expansion)
    out = {}
    while rest:
        top = max(x.length for x in rest)
        layer = sorted((x for x in rest if x.length == top), key=lambda x: x.word)
        for x in layer:
            c = rest.get(x)
            if c is None:
                continue
            h = c.shift(top)
            out[x] = h
            for y, d in _c_in_t(x).items():
                _acc(rest, y, -(h * d))
            if x in rest:  # pragma: no cover - the leading term cancels exactly
                raise ArithmeticError(f"triangular elimination failed at {x}")
    return out


def _c_product_w(u, w):
    get_table(u.length + w.length)
    prod = t_product(_c_in_t(u), _c_in_t(w))
    out = t_to_c(prod)
    for z, h in out.items():
        if h.bar() != h:
            raise ArithmeticError(f"structure constant at {z} is not bar-invariant: {h}")
    return out


def c_product(u, w):
    """Structure constants ``{z: h_{u,w,z}}`` of ``C_u C_w`` (extended elements)."""
    u, w = ExtElement.lift(u), ExtElement.lift(w)
    if u.length + w.length > MAX_ENUM_LEN:
        raise BoundError("product exceeds the length ceiling")
    # C_{o^a u} C_{o^b w} = T_{o^(a+b)} C_{sigma^b(u)} C_w
    body = _c_product_w(u.body.twist(w.omega), w.body)
    k = u.omega + w.omega
    return {ExtElement(k, z): h for z, h in body.items()}


def gamma_delta(u, w, z):
    """Coefficients of ``v**a(z)`` and ``v**(a(z)-1)`` in ``h_{u,w,z}``."""
    z = ExtElement.lift(z)
    h = c_product(u, w).get(z, ZERO)
    a = a_fn(z)
    if not h.is_zero() and h.degree > a:
        raise ArithmeticError(f"deg h_({u},{w},{z}) = {h.degree} exceeds a(z) = {a}")
    return h.coeff(a), h.coeff(a - 1)


def c_generator_product(g, w):
    """``C_g C_w`` from the multiplication rule for a simple reflection."""
    w = ExtElement.lift(w)
    # C_g T_{omega^k} = T_{omega^k} C_{sigma^k(g)}
    gi = (GENS.index(g) + w.omega) % 3
    body = w.body
    if body.has_left_descent(gi):
        return {w: XI}
    out = {ExtElement(w.omega, body.lmul(gi)): ONE}
    table = get_table(body.length)
    j = table.idx(body)
    for i in np.flatnonzero(table.bruhat[:, j]):
        m = table.mu_at(int(i), j)
        x = table.elements[int(i)]
        if m and x.has_left_descent(gi):
            out[ExtElement(w.omega, x)] = LaurentPoly.const(m)
    return out
