import pytest

from qkeypoly import symgroup as sg
from qkeypoly.heckealg import (
    HeckeElt,
    T,
    bilinear,
    closed_form_Y_omega,
    closed_form_Yhat_omega,
    mul,
    mul_by_Ti,
    phi,
    verify_flag_duality,
    yang_baxter,
    yb_factors,
)
from qkeypoly.qcoeff import ONE, Q, ZERO


def all_reduced_words(sigma):
    """Every reduced word, by peeling off right descents."""
    if sigma == sg.identity(len(sigma)):
        return [()]
    out = []
    for i in range(1, len(sigma)):
        if sigma[i - 1] > sigma[i]:
            for w in all_reduced_words(sg.right_mul_simple(sigma, i)):
                out.append(w + (i,))
    return out


def test_all_reduced_words_helper():
    assert len(all_reduced_words(sg.longest(3))) == 2
    assert len(all_reduced_words(sg.longest(4))) == 16


@pytest.mark.parametrize("variant", ["plain", "hat"])
def test_word_independence_S4(variant):
    for s in sg.all_perms(4):
        ref = yang_baxter(s, variant)
        for w in all_reduced_words(s):
            assert yang_baxter(s, variant, word=w) == ref


def test_generator_relations():
    e = HeckeElt.one(3)
    t1 = mul_by_Ti(e, 1)
    assert mul_by_Ti(t1, 1) == t1.scale(Q - 1) + e.scale(Q)
    lhs = mul_by_Ti(mul_by_Ti(t1, 2), 1)
    rhs = mul_by_Ti(mul_by_Ti(mul_by_Ti(e, 2), 1), 2)
    assert lhs == rhs


def test_product_associative_and_phi_antimorphism():
    a = yang_baxter((2, 3, 1))
    b = yang_baxter((3, 1, 2), "hat")
    c = T((2, 1, 3)) + T((1, 3, 2)).scale(Q)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert phi(mul(a, b)) == mul(phi(b), phi(a))


def test_unitriangular_in_T_basis():
    for s in sg.all_perms(4):
        for variant in ("plain", "hat"):
            y = yang_baxter(s, variant)
            assert y.coeff(s) == ONE
            assert all(sg.length(r) < sg.length(s) for r in y.terms if r != s)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_forms(n):
    w = sg.longest(n)
    assert yang_baxter(w) == closed_form_Y_omega(n)
    assert yang_baxter(w, "hat") == closed_form_Yhat_omega(n)


def test_flag_duality_report():
    r = verify_flag_duality(3)
    assert r["pass"] and r["pairs"] == 36


def test_bilinear_on_basis():
    w = sg.longest(3)
    assert bilinear(T(w), T(sg.identity(3))) == ONE
    assert bilinear(T(sg.identity(3)), T(sg.identity(3))) == ZERO


def test_factors_and_errors():
    assert yb_factors((2, 1, 3), "plain") == [(1, ONE)]
    assert yb_factors((2, 1, 3), "hat") == [(1, -Q)]
    with pytest.raises(ValueError):
        yang_baxter((2, 1, 3), word=(1, 1, 1))
    with pytest.raises(ValueError):
        yang_baxter((2, 1, 3), word=(2,))
    with pytest.raises(ValueError):
        mul(T((1, 2)), T((1, 2, 3)))
    with pytest.raises(IndexError):
        mul_by_Ti(HeckeElt.one(3), 3)


def test_json_round_trip():
    y = yang_baxter((3, 1, 2), "hat")
    assert HeckeElt.from_json(y.to_json()) == y
