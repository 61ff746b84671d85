"""Weight-lattice machinery for SL3: the partition function ``Phi``,
stabilisers, the triangular coefficients ``a`` and ``b`` attached to
``W0``-double cosets, and tensor-product multiplicities.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .extended import W0_WORDS, double_coset, eps, min_rep
from .hecke import normalized_p
from .lattice import (
    ALPHA,
    BETA,
    POSITIVE_ROOTS,
    RHO,
    ZERO_W,
    Weight,
    dom_leq,
    dominant_conjugate,
    from_roots,
    height_gap,
    w0_act,
)
from .laurent import ONE, ZERO, LaurentPoly

__all__ = [
    "Weight", "dom_leq", "w0_act", "phi", "stab_data", "region", "a_coeff",
    "b_direct", "b_table", "res0", "weight_mult", "tensor_mult",
    "minuscule_mult", "dim_V", "weights_below",
]

_REFLECTIONS = ("s", "t", "sts")


def _wlen(word):
    return 0 if word == "e" else len(word)


@lru_cache(maxsize=None)
def phi(lam):
    """Signed subset count: ``sum (-v**2)**-|i|`` over subsets ``i`` of the
    positive roots summing to ``lam``."""
    out = ZERO
    for k in range(len(POSITIVE_ROOTS) + 1):
        for subset in combinations(POSITIVE_ROOTS, k):
            total = ZERO_W
            for root in subset:
                total = total + root
            if total == lam:
                out = out + LaurentPoly.mono(-2 * k, (-1) ** k)
    return out


def region(lam):
    """Region tag of a dominant weight: X1, X2, Y1, Y2, Z1, Z2 or other."""
    m, n = lam.m, lam.n
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if m == 0 and n == 0:
        return "other"
    if n == 0:
        return "X1"
    if m == 0:
        return "X2"
    if n == 1:
        return "Y1"  # x + y lies in both Y families; it is tagged Y1
    if m == 1:
        return "Y2"
    return "Z1" if n >= m else "Z2"


@lru_cache(maxsize=None)
def stab_data(lam):
    """``(nu, pi, region)`` for a dominant weight."""
    stab = [w for w in W0_WORDS if w0_act(w, lam) == lam]
    nu = sum(1 for w in stab if w in _REFLECTIONS)
    pi = ZERO
    for w in stab:
        pi = pi + LaurentPoly.mono(2 * _wlen(w))
    return nu, pi.shift(-nu), region(lam)


@lru_cache(maxsize=None)
def a_coeff(lam, lam2):
    """``a_{lam, lam2}``; the division by ``pi_{lam2}`` must be exact."""
    nu, pi, _ = stab_data(lam2)
    total = ZERO
    shifted = lam + RHO
    for w in W0_WORDS:
        term = phi(lam2 + RHO - w0_act(w, shifted))
        if _wlen(w) % 2:
            term = -term
        total = total + term
    return total.shift(nu).exact_div(pi)


def weights_below(lam2):
    """Dominant ``lam <= lam2``, sorted by height gap then coordinates."""
    # dominant weights have non-negative root coordinates
    i_max, j_max = (int(c) for c in lam2.root_coords())
    out = []
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            lam = lam2 - from_roots(i, j)
            if lam.is_dominant():
                out.append(lam)
    out.sort(key=lambda lam: (height_gap(lam, lam2), lam.m, lam.n))
    return out


def _signed_v_power(k):
    # (-v)**k
    return LaurentPoly.mono(k, -1 if k % 2 else 1)


def b_direct(lam, lam2):
    """``sum_{z in W0 lam W0} (-v)**(l(m_lam) - l(z)) p_{z, m_lam2}``."""
    if not dom_leq(lam, lam2):
        return ZERO
    target = min_rep(lam2)
    base = min_rep(lam).length
    out = ZERO
    for z in double_coset(lam):
        if z.length > target.length:
            continue
        p = normalized_p(z, target)
        if not p.is_zero():
            out = out + _signed_v_power(base - z.length) * p
    return out


@lru_cache(maxsize=None)
def b_table(lam2):
    """All ``b_{lam, lam2}`` for dominant ``lam <= lam2`` from the semilinear
    system, solved from ``lam2`` downwards."""
    if not lam2.is_dominant():
        raise ValueError(f"{lam2} is not dominant")
    solved = {}
    weights = {}
    for lam in weights_below(lam2):
        if lam == lam2:
            solved[lam] = ONE
            weights[lam] = eps(lam) * stab_data(lam)[1]
            continue
        rhs = ZERO
        for lp, b in solved.items():
            if not dom_leq(lam, lp):
                continue
            a = a_coeff(lam, lp)
            if a.is_zero():
                continue
            w = weights[lp]
            rhs = rhs + a.bar() * w * b - a * w * b.bar()
        weights[lam] = eps(lam) * stab_data(lam)[1]
        g = rhs.exact_div(weights[lam])
        if g.coeff(0) != 0 or g.bar() != -g:
            raise ArithmeticError(f"b-system at {lam} gave a non-antisymmetric {g}")
        solved[lam] = -g.negative_part()
    return dict(solved)


def res0(f):
    """Coefficient of ``v**-1``."""
    return f.coeff(-1)


# representation theory --------------------------------------------------


def _form(a, b):
    # three times the invariant form with (alpha, alpha) = 2
    return 2 * a.m * b.m + a.m * b.n + a.n * b.m + 2 * a.n * b.n


@lru_cache(maxsize=None)
def _mult_dominant(lam, mu):
    if mu == lam:
        return 1
    if not dom_leq(mu, lam):
        return 0
    lr = lam + RHO
    denom = _form(lr, lr) - _form(mu + RHO, mu + RHO)
    total = 0
    for root in POSITIVE_ROOTS:
        k = 1
        while True:
            nu = mu + root * k
            c = weight_mult(lam, nu)
            if c == 0:
                break
            total += _form(nu, root) * c
            k += 1
    total *= 2
    if total % denom:
        raise ArithmeticError(f"Freudenthal step not integral at {lam}, {mu}")
    return total // denom


def weight_mult(lam, mu):
    """Multiplicity of the weight ``mu`` in the irreducible module ``V(lam)``."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    dom, _ = dominant_conjugate(mu)
    return _mult_dominant(lam, dom)


def _reflect_to_dominant(gamma):
    sign = 1
    while True:
        if gamma.m == 0 or gamma.n == 0:
            return None, 0
        if gamma.m < 0:
            gamma = Weight(-gamma.m, gamma.m + gamma.n)
        elif gamma.n < 0:
            gamma = Weight(gamma.m + gamma.n, -gamma.n)
        else:
            return gamma, sign
        sign = -sign


@lru_cache(maxsize=None)
def _tensor_decomposition(lam, lam2):
    out = {}
    bound = lam.m + lam.n
    for i in range(bound + 1):
        for j in range(bound + 1):
            mu = lam - ALPHA * i - BETA * j
            k = weight_mult(lam, mu)
            if not k:
                continue
            gamma, sign = _reflect_to_dominant(mu + lam2 + RHO)
            if gamma is None:
                continue
            nu = gamma - RHO
            out[nu] = out.get(nu, 0) + sign * k
    return {nu: c for nu, c in out.items() if c}


def tensor_mult(lam, lam2, nu):
    """Multiplicity of ``V(nu)`` in ``V(lam) (x) V(lam2)``."""
    return _tensor_decomposition(lam, lam2).get(nu, 0)


_MINUSCULE = {
    Weight(0, 0): (Weight(0, 0),),
    Weight(1, 0): (Weight(1, 0), Weight(-1, 1), Weight(0, -1)),
    Weight(0, 1): (Weight(0, 1), Weight(1, -1), Weight(-1, 0)),
}


def minuscule_mult(z1, lam2, lam):
    """``V(lam)`` in ``V(z1) (x) V(lam2)`` for ``z1`` in ``{0, x, y}``: 1 iff
    ``lam - lam2`` is a weight of ``V(z1)`` and ``lam`` is dominant."""
    try:
        wts = _MINUSCULE[z1]
    except KeyError:
        raise ValueError(f"{z1} is not one of 0, x, y") from None
    return int(lam.is_dominant() and (lam - lam2) in wts)


def dim_V(lam):
    """Weyl dimension formula."""
    m, n = lam.m, lam.n
    return (m + 1) * (n + 1) * (m + n + 2) // 2
