"""Acceptance criteria 1-16, one test each (criterion 10 split in two).

Every test records ``(passed, detail)`` in :data:`RESULTS`; the pytest
terminal summary and ``python3 tests/test_acceptance.py`` print one line per
criterion.  All comparisons are exact.
"""

import random
import sys
import time
from itertools import product
from pathlib import Path


sys.path.insert(0, str(Path(__file__).parent))  # golden, oracles

import golden as g
from oracles import raising_Q, schur_ssyt, monomial_symmetric, symmetrized_P_times_vandermonde, vandermonde

from qkeypoly import symgroup as sg
from qkeypoly.ctscalar import (
    ct_oracle,
    scalar_q,
    verify_adjoint_ops,
    verify_cauchy,
    verify_duality,
    verify_weight_duality,
)
from qkeypoly.demazure import apply_T, apply_partial_omega, q_vandermonde, verify_operator_identities
from qkeypoly.hall import (
    HLExpansion,
    MINUS_INFINITY,
    check_top_term,
    hl_P,
    p_of,
    partitions,
    pad,
    predicted_top_term,
    straighten_Q,
    top_term,
)
from qkeypoly.heckealg import HeckeElt, bilinear, yang_baxter, yb_transition_matrix
from qkeypoly.multipoly import LaurentPoly, monomial
from qkeypoly.qcoeff import ONE, Q, ZERO
from qkeypoly.qkey import key_poly, transition_matrix, u_poly, uhat_poly, weights

RESULTS: dict = {}


def record(key, ok, t0, limit, extra=""):
    dt = time.perf_counter() - t0
    ok = bool(ok) and dt < limit
    RESULTS[key] = (ok, f"{dt:.2f}s (limit {limit}s){'; ' + extra if extra else ''}")
    return ok, dt


def test_criterion_01_h3_matrix():
    t0 = time.perf_counter()
    m = yb_transition_matrix(3, "plain")
    ok = sg.all_perms(3) == tuple(g.PERMS3) and all(
        m[r][c] == g.as_qrat(g.H3_MATRIX[r][c]) for r in range(6) for c in range(6)
    )
    ok, dt = record("1", ok, t0, 1)
    assert ok


def test_criterion_02_maximal_elements():
    t0 = time.perf_counter()
    ok = True
    for n in (2, 3, 4):
        w = sg.longest(n)
        plain = HeckeElt(n, {s: ONE for s in sg.all_perms(n)})
        hat = HeckeElt(n, {s: (-Q) ** sg.length(sg.compose(s, w)) for s in sg.all_perms(n)})
        ok &= yang_baxter(w, "plain") == plain
        ok &= yang_baxter(w, "hat") == hat
    ok, dt = record("2", ok, t0, 5)
    assert ok


def test_criterion_03_flag_duality():
    t0 = time.perf_counter()
    bad = 0
    pairs = 0
    for n in (1, 2, 3, 4):
        w = sg.longest(n)
        perms = sg.all_perms(n)
        for s in perms:
            ys = yang_baxter(s, "plain")
            for nu in perms:
                pairs += 1
                want = ONE if s == sg.compose(w, nu) else ZERO
                bad += bilinear(ys, yang_baxter(nu, "hat")) != want
    ok, dt = record("3", bad == 0, t0, 60, f"{pairs} pairs, {bad} failures")
    assert ok


def test_criterion_04_operator_identities():
    t0 = time.perf_counter()
    reports = [verify_operator_identities(n, trials=100, seed=42, lo=-3, hi=3) for n in (3, 4)]
    ok = all(r["pass"] for r in reports)
    ok, dt = record("4", ok, t0, 60, "; ".join(f"n={r['n']} {r['failures']}" for r in reports if not r["pass"]))
    assert ok


def test_criterion_05_maximal_factorization():
    t0 = time.perf_counter()
    n = 3
    ok = True
    for d in range(5):
        for lam in partitions(d, n):
            xl = monomial(pad(lam, n))
            lhs = apply_partial_omega(xl * q_vandermonde(n))
            # x^lam Y_omega with Y_omega = sum_sigma T_sigma, acting along reduced words
            rhs = LaurentPoly.zero(n)
            for s in sg.all_perms(n):
                f = xl
                for i in sg.reduced_word(s):
                    f = apply_T(f, i)
                rhs = rhs + f
            ok &= lhs == rhs
    ok, dt = record("5", ok, t0, 10)
    assert ok


def test_criterion_06_x210_families():
    t0 = time.perf_counter()
    ok = all(u_poly(v) == p for v, p in g.X210_U.items())
    ok &= all(uhat_poly(v) == p for v, p in g.X210_UHAT.items())
    # U_012 and Uhat_012 are illegible in print; rebuild them from the matrix columns
    c = g.WEIGHT3.index((0, 1, 2))
    via_u = LaurentPoly.zero(3)
    via_uhat = LaurentPoly.zero(3)
    for r, v in enumerate(g.WEIGHT3):
        via_u = via_u + key_poly(v, "plain").scale(g.as_qrat(g.U_TO_K[r][c]))
        via_uhat = via_uhat + key_poly(v, "hat").scale(g.as_qrat(g.UHAT_TO_KHAT[r][c]))
    ok &= u_poly((0, 1, 2)) == via_u
    ok &= uhat_poly((0, 1, 2)) == via_uhat
    ok, dt = record("6", ok, t0, 1)
    assert ok


def test_criterion_07_weight3_matrices():
    t0 = time.perf_counter()
    ok = True
    for src, dst, printed in (("U", "K", g.U_TO_K), ("Uhat", "Khat", g.UHAT_TO_KHAT)):
        m = transition_matrix(src, dst, 3, 3)
        ok &= m.rows == g.WEIGHT3 and m.cols == g.WEIGHT3
        ok &= all(m.entries[r][c] == g.as_qrat(printed[r][c]) for r in range(10) for c in range(10))
    ok, dt = record("7", ok, t0, 5)
    assert ok


def test_criterion_08_x200_label_swap():
    t0 = time.perf_counter()
    ok = u_poly((0, 2, 0)) == g.X200_LABELLED_UHAT[(0, 2, 0)]
    ok &= uhat_poly((0, 2, 0)) == g.X200_LABELLED_U[(0, 2, 0)]
    ok &= u_poly((0, 0, 2)) == g.X200_LABELLED_UHAT[(0, 0, 2)]
    ok &= uhat_poly((0, 0, 2)) == g.X200_LABELLED_U[(0, 0, 2)]
    ok &= u_poly((0, 0, 2)) == hl_P((2,), 3)
    ok &= u_poly((2, 0, 0)) == g.X200_LABELLED_U[(2, 0, 0)] == uhat_poly((2, 0, 0))
    ok, dt = record("8", ok, t0, 1)
    assert ok


def test_criterion_09_hall_littlewood():
    t0 = time.perf_counter()
    ok = True
    for n in (1, 2, 3):
        for d in range(5):
            for lam in partitions(d, n):
                P = hl_P(lam, n)
                ok &= P.specialize_q(0) == schur_ssyt(lam, n)
                ok &= P.specialize_q(1) == monomial_symmetric(lam, n)
                ok &= P * vandermonde(n) == symmetrized_P_times_vandermonde(lam, n)
    ok, dt = record("9", ok, t0, 30)
    assert ok


def test_criterion_10a_straightening_printed_expansion():
    """Fails: the printed Q_21 coefficient ends in +q; the value is +1 (see README)."""
    t0 = time.perf_counter()
    got = straighten_Q((-2, 3, 2))
    ok = got == HLExpansion(g.STRAIGHTEN_PRINTED)
    ok, dt = record("10a", ok, t0, 1, f"got {got}")
    assert ok, f"straighten_Q((-2,3,2)) = {got}"


def test_criterion_10b_straightening_top_term():
    t0 = time.perf_counter()
    got = straighten_Q((-2, 3, 2))
    ok = top_term(got) == ((1, 1, 1), Q**4)
    # the computed expansion agrees with the raising-operator definition
    ok &= got.evaluate(3) == raising_Q((-2, 3, 2), 3)
    ok, dt = record("10b", ok, t0, 1)
    assert ok


def test_criterion_11_lemma_top_term():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for u in product(range(-2, 4), repeat=3):
        count += 1
        if not check_top_term(u):
            bad.append(u)
        vanish = not straighten_Q(u)
        if vanish != (p_of(u) is MINUS_INFINITY):
            bad.append(u)
    rng = random.Random(42)
    for _ in range(500):
        u = tuple(rng.randint(-3, 4) for _ in range(4))
        count += 1
        if not check_top_term(u):
            bad.append(u)
        if (not straighten_Q(u)) != (predicted_top_term(u) is MINUS_INFINITY):
            bad.append(u)
    ok, dt = record("11", not bad, t0, 120, f"{count} vectors, failures {bad[:5]}")
    assert ok


def test_criterion_12_scalar_golden():
    t0 = time.perf_counter()
    a, b = monomial((1, 0, 3)), monomial((0, 1, 3))
    ok = scalar_q(a, b) == g.SCALAR_103_013
    ok &= ct_oracle(a, b, 6) == g.SCALAR_103_013
    ok, dt = record("12", ok, t0, 1)
    assert ok


def test_criterion_13_adjointness():
    t0 = time.perf_counter()
    r = verify_adjoint_ops(3, trials=100, degree=2, seed=42)
    ok, dt = record("13", r["pass"], t0, 60, f"{len(r['failures'])} failures")
    assert ok


def test_criterion_14_duality():
    t0 = time.perf_counter()
    reports = []
    for d in range(5):
        for lam in partitions(d, 3):
            reports.append(verify_duality(lam, 3))
    for lam in ((1,), (1, 1), (2, 1)):
        reports.append(verify_duality(lam, 4))
    reports.append(verify_weight_duality(3, 3))
    bad = [(r.lam, r.n) for r in reports if not r.passed]
    ok, dt = record("14", not bad, t0, 300, f"{len(reports)} Gram matrices, failing {bad}")
    assert ok


def test_criterion_15_q0_and_cauchy():
    t0 = time.perf_counter()
    ok = True
    for d in range(5):
        for v in weights(3, d):
            ok &= u_poly(v).specialize_q(0) == key_poly(v, "plain")
            ok &= uhat_poly(v).specialize_q(0) == key_poly(v, "hat")
    for n in (2, 3):
        ok &= verify_cauchy(n, 4)["pass"]
    ok, dt = record("15", ok, t0, 60)
    assert ok


def test_criterion_16_oracle_agreement():
    t0 = time.perf_counter()
    rng = random.Random(16)
    qcap = 8
    bad = []
    for _ in range(200):
        u = tuple(rng.randint(-2, 3) for _ in range(3))
        v = tuple(rng.randint(-2, 3) for _ in range(3))
        exact = scalar_q(monomial(u), monomial(v))
        series = ct_oracle(monomial(u), monomial(v), qcap)
        if not truncate_equal(exact, series, qcap):
            bad.append((u, v))
    ok, dt = record("16", not bad, t0, 120, f"200 pairs, failures {bad[:3]}")
    assert ok


def truncate_equal(exact, series, qcap) -> bool:
    from qkeypoly.ctscalar import _series_coeffs

    a = _series_coeffs(exact, qcap)
    b = _series_coeffs(series, qcap)
    return a == b


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for key in sorted(RESULTS, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        ok, detail = RESULTS[key]
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
