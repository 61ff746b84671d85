"""Cells of the affine Weyl group of type A2 and the a-function.

Two-sided cells: ``c_e = {e}``, ``c_1`` (elements with a unique reduced word)
and the lowest cell ``c_0``.  Left cells are labelled by right descent sets:
``B_g`` in ``c_1``, ``A_g`` / ``A_gh`` in ``c_0``, and ``C_empty`` for ``e``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coxeter import descents, has_unique_reduced_word
from .extended import ExtElement, factor_c0

TWO_SIDED = ("c_e", "c_1", "c_0")
A_VALUE = {"c_e": 0, "c_1": 1, "c_0": 3}


@dataclass(frozen=True)
class CellLabel:
    two_sided: str
    left: str


def _body(w):
    return w.body if isinstance(w, ExtElement) else w


def two_sided(w):
    w = _body(w)
    if w.is_identity():
        return "c_e"
    return "c_1" if has_unique_reduced_word(w) else "c_0"


def a_fn(w):
    return A_VALUE[two_sided(w)]


def _subscript(ds):
    return "".join(sorted(ds))


def left_cell(w):
    w = _body(w)
    cell = two_sided(w)
    if cell == "c_e":
        return CellLabel(cell, "C_empty")
    rd = descents(w, "right")
    if len(rd) == 2:
        return CellLabel(cell, "A_" + _subscript(rd))
    if len(rd) == 1:
        prefix = "B_" if cell == "c_1" else "A_"
        return CellLabel(cell, prefix + _subscript(rd))
    # |R(w)| = 3 never happens in an infinite group; fall back to the c_0
    # parametrisation if it ever does
    fac = factor_c0(w)  # pragma: no cover
    return CellLabel(cell, f"A[v={fac[2]}]")  # pragma: no cover


def same_cell(u, w, side="left"):
    u, w = _body(u), _body(w)
    if side in ("right", "R"):
        u, w = u.inverse(), w.inverse()
    elif side not in ("left", "L"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return left_cell(u) == left_cell(w)


def cond54(u, w):
    """Descent condition singling out the unique ``u`` of colength 3 below
    ``w`` in ``c_1`` that can have non-zero leading coefficient."""
    u, w = _body(u), _body(w)
    if two_sided(w) != "c_1":
        raise ValueError(f"{w} is not in c_1")
    if w.length - u.length != 3:
        raise ValueError(f"length gap of ({u}, {w}) is not 3")
    word = w.word
    s1, s2, sm, sn = word[0], word[1], word[-2], word[-1]
    lu, ru = descents(u, "left"), descents(u, "right")
    return (
        len(lu) == 2
        and len(ru) == 2
        and s1 in lu
        and sn in ru
        and s2 not in lu
        and sm not in ru
    )
