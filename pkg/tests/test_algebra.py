"""Laurent polynomials, the weight lattice and the extended group."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kla2.cells import two_sided
from kla2.coxeter import enumerate_elements
from kla2.extended import (
    OMEGA,
    W0_LONGEST,
    ExtElement,
    assemble_c0,
    factor_c0,
    translation_weight,
    weight_elem,
)
from kla2.lattice import ALPHA, BETA, X, Y, Weight, dom_leq, dominant_conjugate, w0_act
from kla2.laurent import ONE, V, VINV, XI, ZERO, LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a
    assert LaurentPoly.parse(a.serialize()) == a
    assert a.negative_part() + a.positive_part() + LaurentPoly.const(a.coeff(0)) == a


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_exact_division(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_laurent_basics():
    assert XI == V + VINV
    assert str(ZERO) == "0" and ZERO.serialize() == "0"
    assert LaurentPoly.from_q((1, 1)) == ONE + LaurentPoly.mono(2)
    with pytest.raises(ArithmeticError):
        XI.exact_div(LaurentPoly.const(2))


def test_weights():
    assert ALPHA == Weight(2, -1) and BETA == Weight(-1, 2)
    assert X.root_coords() == (pytest.approx(2 / 3), pytest.approx(1 / 3))
    assert dom_leq(Weight(1, 2), Weight(0, 4))
    assert not dom_leq(Weight(0, 3), Weight(0, 4))
    assert Weight.parse("3,4") == Weight(3, 4)
    for lam in (Weight(2, 5), Weight(-3, 1), Weight(0, -2)):
        dom, steps = dominant_conjugate(lam)
        assert dom.is_dominant() and steps <= 3
        assert any(w0_act(w, lam) == dom for w in ("e", "s", "t", "st", "ts", "sts"))


def test_twist():
    for w in enumerate_elements(4):
        # g * omega = omega * sigma(g) with sigma: r -> s -> t -> r
        left = ExtElement(0, w) * OMEGA
        right = OMEGA * ExtElement(0, w.twist())
        assert left == right


def test_translations():
    assert weight_elem(X) == ExtElement.parse("otr")
    assert weight_elem(Y) == ExtElement.parse("oosr")
    assert weight_elem(X) * weight_elem(Y) == weight_elem(Y) * weight_elem(X)
    for m in range(4):
        for n in range(4):
            lam = Weight(m, n)
            assert weight_elem(lam).length == 2 * (m + n)
            assert translation_weight(weight_elem(lam)) == lam


def test_factor_round_trip():
    for w in enumerate_elements(10):
        if two_sided(w) != "c_0":
            assert factor_c0(w) is None or w.length == 0
            continue
        ext = ExtElement(0, w)
        u, lam, v = factor_c0(ext)
        assert assemble_c0(u, lam, v) == ext
    assert factor_c0(ExtElement(0, W0_LONGEST)) == ("e", Weight(0, 0), "e")
