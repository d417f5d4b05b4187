"""The constant-term scalar product ``(f, g)_q`` and the duality checks built on it.

``(f, g)_q = CT(f · g^♣ · Θ)`` with ``Θ = prod_{i<j} (1 - x_i/x_j)/(1 - q x_i/x_j)``
and ``♣ : x_i -> 1/x_{n+1-i}``.  On monomials ``(x^u, x^v)_q = (x^{u - v.ω}, 1)_q``
and ``(x^w, 1)_q = Q_w(0)``, so the exact product is a finite sum of
straightening constants.  :func:`ct_oracle` instead expands Θ as a power
series in ``q`` and reads off the constant term directly; it only ever serves
as an independent check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import symgroup as sg
from .demazure import apply_box, apply_nabla
from .hall import as_partition, pad, q_at_zero
from .multipoly import LaurentPoly
from .qcoeff import ONE, ZERO, QRat, eval_q
from .qkey import key_poly, u_poly, uhat_poly, weights

__all__ = [
    "scalar_q",
    "scalar_0",
    "ct_oracle",
    "ct_oracle_stable",
    "ScalarReport",
    "verify_duality",
    "verify_weight_duality",
    "verify_monomial_duality",
    "verify_adjoint_ops",
    "verify_cauchy",
    "random_laurent",
]


def scalar_q(f: LaurentPoly, g: LaurentPoly) -> QRat:
    if f.n != g.n:
        raise ValueError("scalar product of polynomials in different variable counts")
    acc = ZERO
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = tuple(x - y for x, y in zip(u, reversed(v)))
            if sum(w):
                continue
            c = q_at_zero(w)
            if c:
                acc = acc + a * b * c
    return acc


def scalar_0(f: LaurentPoly, g: LaurentPoly) -> QRat:
    """``(f, g)_q`` at ``q = 0``."""
    return QRat(eval_q(scalar_q(f, g), 0))


# -- truncated series oracle ---------------------------------------------------


def _series_coeffs(c: QRat, cap: int) -> list[Fraction]:
    """Power series of ``c`` in ``q`` up to ``q^cap`` (needs ``den(0) != 0``)."""
    num = c.num_coeffs()
    den = c.den_coeffs()
    if not den or den[0] == 0:
        raise ValueError(f"{c} has no power series expansion at q=0")
    out = []
    for k in range(cap + 1):
        s = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            s -= den[j] * out[k - j]
        out.append(s / den[0])
    return out


def ct_oracle(f: LaurentPoly, g: LaurentPoly, qcap: int) -> QRat:
    """``CT(f g^♣ Θ)`` modulo ``q^(qcap+1)``, as a polynomial of degree ``<= qcap``."""
    if qcap < 0:
        raise ValueError("qcap must be >= 0")
    n = f.n
    # (exponent, q-degree) -> rational
    cur: dict = {}
    for e, c in (f * g.club()).terms.items():
        for k, a in enumerate(_series_coeffs(c, qcap)):
            if a:
                cur[e, k] = cur.get((e, k), 0) + a
    for i in range(n):
        for j in range(i + 1, n):
            step = [0] * n
            step[i], step[j] = 1, -1
            # times (1 - x_i/x_j)
            nxt: dict = dict(cur)
            for (e, k), a in cur.items():
                key = (tuple(x + s for x, s in zip(e, step)), k)
                nxt[key] = nxt.get(key, 0) - a
            cur = {key: a for key, a in nxt.items() if a}
            # times sum_m q^m (x_i/x_j)^m, truncated
            nxt = {}
            for (e, k), a in cur.items():
                for m in range(qcap - k + 1):
                    key = (tuple(x + m * s for x, s in zip(e, step)), k + m)
                    nxt[key] = nxt.get(key, 0) + a
            cur = {key: a for key, a in nxt.items() if a}
    zero = (0,) * n
    coeffs = [Fraction(0)] * (qcap + 1)
    for (e, k), a in cur.items():
        if e == zero:
            coeffs[k] += a
    den = 1
    for c in coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    return QRat.from_coeffs([int(c * den) for c in coeffs]) / den


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def ct_oracle_stable(f: LaurentPoly, g: LaurentPoly, start: int | None = None, max_cap: int = 40) -> tuple[QRat, int]:
    """Raise ``qcap`` until two consecutive truncations agree; returns ``(value, cap)``.

    The search starts at the l1 norm of the largest exponent of ``f g^♣``,
    which bounds the series exponents that can reach the constant term.
    """
    if start is None:
        start = max((sum(abs(a) for a in e) for e in (f * g.club()).terms), default=0)
    prev = ct_oracle(f, g, start)
    for cap in range(start + 1, max(max_cap, start + 1) + 1):
        cur = ct_oracle(f, g, cap)
        if cur == prev:
            return cur, cap
        prev = cur
    raise ArithmeticError(f"constant term did not stabilise below q^{max_cap}")


# -- verification suites -------------------------------------------------------


def _qjson(c: QRat) -> dict:
    return c.to_json()


@dataclass
class ScalarReport:
    """Gram matrix ``gram[r][c] = (left[r], right[c])_q`` and whether it is as expected."""

    lam: tuple
    n: int
    left: list
    right: list
    gram: list
    passed: bool
    kind: str = "duality"
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lambda": list(self.lam),
            "n": self.n,
            "left": [list(v) for v in self.left],
            "right": [list(v) for v in self.right],
            "gram": [[_qjson(c) for c in row] for row in self.gram],
            "pass": self.passed,
        }


def _gram(lefts, rights, left_poly, right_poly):
    gram = []
    for v in lefts:
        f = left_poly(v)
        gram.append([scalar_q(f, right_poly(u)) for u in rights])
    return gram


def verify_duality(lam, n: int) -> ScalarReport:
    """Gram matrix ``(U_v, Û_{u.ω})_q`` over ``v, u`` in the orbit of ``lam``; passes iff identity."""
    lam = pad(as_partition(lam), n)
    orb = sg.orbit(lam)
    w = sg.longest(n)
    gram = _gram(orb, orb, u_poly, lambda u: uhat_poly(sg.act_weight(u, w)))
    fails = [
        (v, u, gram[r][c])
        for r, v in enumerate(orb)
        for c, u in enumerate(orb)
        if gram[r][c] != (ONE if r == c else ZERO)
    ]
    return ScalarReport(lam, n, orb, orb, gram, not fails, "duality", fails)


def verify_weight_duality(n: int, degree: int) -> ScalarReport:
    """Same as :func:`verify_duality` but over every weight of total ``degree`` at once."""
    ws = weights(n, degree)
    w = sg.longest(n)
    gram = _gram(ws, ws, u_poly, lambda u: uhat_poly(sg.act_weight(u, w)))
    fails = [
        (v, u, gram[r][c])
        for r, v in enumerate(ws)
        for c, u in enumerate(ws)
        if gram[r][c] != (ONE if r == c else ZERO)
    ]
    return ScalarReport((degree,), n, ws, ws, gram, not fails, "weight-duality", fails)


def verify_monomial_duality(lam, n: int) -> ScalarReport:
    """Row ``(U_v, x^lam)_q`` over ``v`` in the orbit; passes iff it is the indicator of ``lam.ω``."""
    lam = pad(as_partition(lam), n)
    orb = sg.orbit(lam)
    target = sg.act_weight(lam, sg.longest(n))
    xl = LaurentPoly(n, {lam: ONE})
    gram = [[scalar_q(u_poly(v), xl)] for v in orb]
    fails = [(v, gram[r][0]) for r, v in enumerate(orb) if gram[r][0] != (ONE if v == target else ZERO)]
    return ScalarReport(lam, n, orb, [lam], gram, not fails, "monomial-duality", fails)


def random_laurent(rng: random.Random, n: int, degree: int, terms: int = 4, q_coeffs: bool = True) -> LaurentPoly:
    """Random Laurent polynomial, exponents in ``[-degree, degree]``, small integer-polynomial coefficients."""
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(-degree, degree) for _ in range(n))
        if q_coeffs:
            c = QRat.from_coeffs([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
        else:
            c = QRat(rng.choice([-3, -2, -1, 1, 2, 3]))
        out[e] = out.get(e, ZERO) + c
    return LaurentPoly(n, out)


def verify_adjoint_ops(n: int, trials: int = 100, degree: int = 2, seed: int = 42) -> dict:
    """Random checks of ``(f □_i, g)_q = (f, g □_{n-i})_q`` and the ∇ analogue."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        f = random_laurent(rng, n, degree, rng.randint(1, 4))
        g = random_laurent(rng, n, degree, rng.randint(1, 4))
        i = rng.randint(1, n - 1)
        for name, op in (("box", apply_box), ("nabla", apply_nabla)):
            if scalar_q(op(f, i), g) != scalar_q(f, op(g, n - i)):
                failures.append((t, name, i))
    return {"n": n, "trials": trials, "failures": failures, "pass": not failures}


def _int_poly(f: LaurentPoly) -> dict:
    out = {}
    for e, c in f.terms.items():
        val = c.constant_value()
        if val.denominator != 1:
            raise ValueError("Key polynomial with non-integer coefficient")
        out[e] = int(val)
    return out


def verify_cauchy(n: int, degree_cap: int) -> dict:
    """Compare ``sum_u K_u(x) K̂_{u.ω}(y)`` with ``prod_{i+j<=n+1} 1/(1 - x_i y_j)`` up to x-degree ``degree_cap``."""
    w = sg.longest(n)
    lhs: dict = {}
    for d in range(degree_cap + 1):
        for u in weights(n, d):
            kx = _int_poly(key_poly(u, "plain"))
            ky = _int_poly(key_poly(sg.act_weight(u, w), "hat"))
            for ex, a in kx.items():
                for ey, b in ky.items():
                    key = ex + ey
                    lhs[key] = lhs.get(key, 0) + a * b
    lhs = {k: v for k, v in lhs.items() if v}

    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n + 1]
    rhs: dict = {(0,) * (2 * n): 1}
    for i, j in pairs:
        nxt: dict = {}
        for e, a in rhs.items():
            room = degree_cap - sum(e[:n])
            for m in range(room + 1):
                k = list(e)
                k[i - 1] += m
                k[n + j - 1] += m
                k = tuple(k)
                nxt[k] = nxt.get(k, 0) + a
        rhs = nxt
    diff = {k for k in set(lhs) | set(rhs) if lhs.get(k, 0) != rhs.get(k, 0)}
    return {"n": n, "degree_cap": degree_cap, "terms": len(rhs), "mismatches": sorted(diff)[:10], "pass": not diff}
