"""Closed-form leading coefficients ``mu(u, w)`` for affine A2.

:func:`predict` never touches a KL polynomial: it decides ``mu`` from lengths,
descent sets, cell membership, the lowest-cell factorisation and minuscule
tensor multiplicities, and reports which rule decided.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cells import cond54, two_sided
from .coxeter import GENS, bruhat_leq, descents
from .extended import ExtElement, d_elem, factor_c0, uset_lookup
from .weights import minuscule_mult

RULES = (
    "E-CASE", "PARITY", "LEN1", "L3.1a", "L3.1b", "T4.8", "T4.6",
    "C4.7-ZERO", "T5.12", "T6.11", "CELL-ZERO",
)


class Unreachable(RuntimeError):
    """No rule applied; the cell classification is inconsistent."""


@dataclass(frozen=True)
class MuVerdict:
    value: int
    rule: str


def _bodies(u, w):
    if isinstance(u, ExtElement) or isinstance(w, ExtElement):
        u, w = ExtElement.lift(u), ExtElement.lift(w)
        if u.omega != w.omega:
            raise ValueError(f"{u} and {w} lie in different omega-components")
        return u.body, w.body
    return u, w


def _lowest_cell_mu(u, w):
    """``mu`` for ``u < w`` in the lowest cell sharing the right factor ``d_v``."""
    a, lam, v = factor_c0(u)
    a2, lam2, v2 = factor_c0(w)
    if v != v2:
        return None
    z1 = uset_lookup(d_elem(a), d_elem(a2))
    if z1 is None:
        return 0
    return minuscule_mult(z1, lam2, lam)


def predict(u, w):
    """Closed-form ``mu(u, w)`` for ``u < w``, with the deciding rule."""
    u, w = _bodies(u, w)
    if u == w or not bruhat_leq(u, w):
        raise ValueError(f"predict needs u < w, got ({u}, {w})")
    gap = w.length - u.length
    if gap % 2 == 0:
        return MuVerdict(0, "PARITY")
    if gap == 1:
        return MuVerdict(1, "LEN1")
    if u.is_identity():
        return MuVerdict(int(w.length == 1 and str(w) in GENS), "E-CASE")
    cu, cw = two_sided(u), two_sided(w)
    if cu == "c_1" and cw == "c_1":
        if descents(u, "left") != descents(w, "left") or descents(u, "right") != descents(w, "right"):
            return MuVerdict(0, "L3.1a")
        return MuVerdict(int(gap == 3), "L3.1b")
    if cu == "c_1" and cw == "c_0":
        return MuVerdict(0, "T4.8")
    if cu == "c_0" and cw == "c_0":
        if gap not in (1, 3):
            return MuVerdict(0, "C4.7-ZERO")
        value = _lowest_cell_mu(u, w)
        if value is None:
            value = _lowest_cell_mu(u.inverse(), w.inverse())
        if value is None:
            return MuVerdict(0, "CELL-ZERO")
        return MuVerdict(value, "T4.6")
    if cu == "c_0" and cw == "c_1":
        if gap == 3:
            return MuVerdict(int(cond54(u, w)), "T5.12")
        return MuVerdict(0, "T6.11")
    raise Unreachable(f"no rule applies to ({u}, {w}) in cells {cu}, {cw}")
