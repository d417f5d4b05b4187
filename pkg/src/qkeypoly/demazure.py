"""Operators of H_n acting on Laurent polynomials (written on the right).

    f ∂_i = (f - f^{s_i}) / (x_i - x_{i+1})
    f π_i = (x_i f - x_{i+1} f^{s_i}) / (x_i - x_{i+1})
    f π̂_i = f π_i - f
    f □_i = (f (x_i - q x_{i+1})) ∂_i          (multiply, then difference)
    f ∇_i = (f ∂_i) (x_{i+1} - q x_i)          (difference, then multiply)
    f T_i = f □_i - f

so that ``1 □_i = 1 + q`` and ``1 ∇_i = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import symgroup as sg
from .heckealg import HeckeElt
from .multipoly import LaurentPoly
from .qcoeff import ONE, Q, ZERO, QRat, q_int

__all__ = [
    "apply_partial",
    "apply_pi",
    "apply_pihat",
    "apply_box",
    "apply_nabla",
    "apply_T",
    "OpFactor",
    "apply_factor",
    "apply_word",
    "apply_partial_omega",
    "act_hecke",
    "yang_baxter_factor",
    "yang_baxter_word",
    "R_factor",
    "S_factor",
    "q_vandermonde",
    "word_to_json",
    "word_from_json",
    "verify_operator_identities",
]

KINDS = ("partial", "pi", "pihat", "T", "box", "nabla")


def _check_index(f: LaurentPoly, i: int):
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"operator index {i} out of range for n={f.n}")


def apply_partial(f: LaurentPoly, i: int) -> LaurentPoly:
    """Divided difference ∂_i, monomial by monomial.

    For ``x_i^a x_{i+1}^b`` with ``a > b`` the quotient is the geometric sum
    ``sum_{j<a-b} x_i^{a-1-j} x_{i+1}^{b+j}``; ``a < b`` is the negative of the
    swapped case.  Valid for negative exponents as well.
    """
    _check_index(f, i)
    out: dict = {}
    p = i - 1
    for e, c in f.terms.items():
        a, b = e[p], e[p + 1]
        if a == b:
            continue
        if a > b:
            lo, hi, cc = b, a, c
        else:
            lo, hi, cc = a, b, -c
        base = list(e)
        for j in range(hi - lo):
            base[p] = hi - 1 - j
            base[p + 1] = lo + j
            key = tuple(base)
            s = out.get(key)
            out[key] = cc if s is None else s + cc
    return LaurentPoly._raw(f.n, {k: v for k, v in out.items() if v})


def _linear(n: int, i: int, a, b) -> LaurentPoly:
    """``a x_i + b x_{i+1}``."""
    e1 = [0] * n
    e1[i - 1] = 1
    e2 = [0] * n
    e2[i] = 1
    return LaurentPoly(n, {tuple(e1): a, tuple(e2): b})


def apply_pi(f: LaurentPoly, i: int) -> LaurentPoly:
    _check_index(f, i)
    return apply_partial(f * _linear(f.n, i, ONE, ZERO), i)


def apply_pihat(f: LaurentPoly, i: int) -> LaurentPoly:
    _check_index(f, i)
    return apply_partial(f, i) * _linear(f.n, i, ZERO, ONE)


def apply_box(f: LaurentPoly, i: int) -> LaurentPoly:
    _check_index(f, i)
    return apply_partial(f * _linear(f.n, i, ONE, -Q), i)


def apply_nabla(f: LaurentPoly, i: int) -> LaurentPoly:
    _check_index(f, i)
    return apply_partial(f, i) * _linear(f.n, i, -Q, ONE)


def apply_T(f: LaurentPoly, i: int) -> LaurentPoly:
    return apply_box(f, i) - f


_APPLY = {
    "partial": apply_partial,
    "pi": apply_pi,
    "pihat": apply_pihat,
    "T": apply_T,
    "box": apply_box,
    "nabla": apply_nabla,
}


@dataclass(frozen=True)
class OpFactor:
    """The operator ``Op_i + shift`` for ``Op`` one of :data:`KINDS`."""

    kind: str
    i: int
    shift: QRat = field(default=ZERO)

    def __post_init__(self):
        if self.kind not in _APPLY:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.i < 1:
            raise IndexError(f"operator index {self.i} must be >= 1")
        if not isinstance(self.shift, QRat):
            object.__setattr__(self, "shift", QRat(self.shift))

    def __str__(self):
        sym = {"partial": "∂", "pi": "π", "pihat": "π̂", "T": "T", "box": "□", "nabla": "∇"}[self.kind]
        if not self.shift:
            return f"{sym}{self.i}"
        return f"({sym}{self.i} + {self.shift})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "i": self.i, "shift": self.shift.to_json()}

    @classmethod
    def from_json(cls, data) -> "OpFactor":
        shift = QRat.from_json(data["shift"]) if "shift" in data else ZERO
        return cls(data["kind"], int(data["i"]), shift)


def apply_factor(f: LaurentPoly, op: OpFactor) -> LaurentPoly:
    out = _APPLY[op.kind](f, op.i)
    if op.shift:
        out = out + f.scale(op.shift)
    return out


def apply_word(f: LaurentPoly, word) -> LaurentPoly:
    """Apply the factors of ``word`` one after another, left to right."""
    for op in word:
        f = apply_factor(f, op)
    return f


def apply_partial_omega(f: LaurentPoly, word=None) -> LaurentPoly:
    """∂_ω along ``word`` (default: the canonical reduced word of ω)."""
    if word is None:
        word = sg.reduced_word(sg.longest(f.n))
    for i in word:
        f = apply_partial(f, i)
    return f


def act_hecke(f: LaurentPoly, h: HeckeElt) -> LaurentPoly:
    """``f · h`` computed termwise from the T-expansion of ``h``."""
    if h.n != f.n:
        raise ValueError("Hecke element and polynomial have different n")
    out = LaurentPoly.zero(f.n)
    for sigma, c in h.terms.items():
        g = f
        for i in sg.reduced_word(sigma):
            g = apply_T(g, i)
        out = out + g.scale(c)
    return out


def _yb_shift(k: int) -> QRat:
    if k < 1:
        raise ValueError(f"Yang-Baxter parameter k must be >= 1, got {k}")
    return Q * q_int(k - 1) / q_int(k)


def yang_baxter_factor(kind: str, i: int, k: int) -> OpFactor:
    """``□_i - q[k-1]/[k]`` (``"plain"``) or ``∇_i + q[k-1]/[k]`` (``"hat"``)."""
    if kind == "plain":
        return OpFactor("box", i, -_yb_shift(k))
    if kind == "hat":
        return OpFactor("nabla", i, _yb_shift(k))
    raise ValueError(f"unknown Yang-Baxter variant {kind!r}")


def R_factor(i: int, a: int, b: int) -> OpFactor:
    """``R_i(a, b) = □_i - q[b-a-1]/[b-a]``."""
    return yang_baxter_factor("plain", i, b - a)


def S_factor(i: int, a: int, b: int) -> OpFactor:
    """``S_i(a, b) = ∇_i + q[b-a-1]/[b-a]``."""
    return yang_baxter_factor("hat", i, b - a)


def yang_baxter_word(sigma, variant: str = "plain", word=None) -> list[OpFactor]:
    """Operator factorization of ``Y_sigma`` / ``Yhat_sigma`` along a reduced word."""
    sigma = tuple(sigma)
    word = sg.reduced_word(sigma) if word is None else tuple(word)
    cur = sg.identity(len(sigma))
    out = []
    for i in word:
        k = cur[i] - cur[i - 1]
        if k < 1:
            raise ValueError(f"word {word} is not reduced")
        out.append(yang_baxter_factor(variant, i, k))
        cur = sg.right_mul_simple(cur, i)
    if cur != sigma:
        raise ValueError(f"word {word} does not spell {sigma}")
    return out


def q_vandermonde(n: int, reverse: bool = False) -> LaurentPoly:
    """``prod_{i<j} (x_i - q x_j)``, or ``prod_{i<j} (x_j - q x_i)`` if ``reverse``."""
    out = LaurentPoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            xi, xj = LaurentPoly.x(i, n), LaurentPoly.x(j, n)
            out = out * ((xj - xi.scale(Q)) if reverse else (xi - xj.scale(Q)))
    return out


def word_to_json(word) -> list:
    return [op.to_json() for op in word]


def word_from_json(data) -> list[OpFactor]:
    return [OpFactor.from_json(d) for d in data]


def _random_poly(rng, n: int, lo: int, hi: int, terms: int) -> LaurentPoly:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(lo, hi) for _ in range(n))
        c = QRat.from_coeffs([rng.randint(-2, 2) for _ in range(rng.randint(1, 3))])
        out[e] = out.get(e, ZERO) + c
    return LaurentPoly(n, out)


def verify_operator_identities(n: int, trials: int = 100, seed: int = 42, lo: int = -3, hi: int = 3) -> dict:
    """Random-input checks of the Hecke relations realized by the operators.

    Returns ``{check_name: number_of_failures}`` plus a ``"pass"`` flag.
    """
    import random

    rng = random.Random(seed)
    fails = {
        "braid": 0,
        "commute": 0,
        "hecke-quadratic": 0,
        "box-square": 0,
        "nabla-square": 0,
        "box-nabla": 0,
        "yang-baxter": 0,
        "q0-degeneration": 0,
    }
    one_q = 1 + Q
    for _ in range(trials):
        f = _random_poly(rng, n, lo, hi, rng.randint(1, 4))
        i = rng.randint(1, n - 1)
        fb = apply_box(f, i)
        fn = apply_nabla(f, i)
        if apply_box(fb, i) != fb.scale(one_q):
            fails["box-square"] += 1
        if apply_nabla(fn, i) != fn.scale(-one_q):
            fails["nabla-square"] += 1
        if apply_nabla(fb, i) or apply_box(fn, i):
            fails["box-nabla"] += 1
        # (T_i + 1)(T_i - q) = 0
        g = apply_T(f, i) + f
        if apply_T(g, i) - g.scale(Q):
            fails["hecke-quadratic"] += 1
        if n >= 3:
            j = rng.randint(1, n - 2)
            w1 = apply_T(apply_T(apply_T(f, j), j + 1), j)
            w2 = apply_T(apply_T(apply_T(f, j + 1), j), j + 1)
            if w1 != w2:
                fails["braid"] += 1
            a = rng.randint(-3, 3)
            b = a + rng.randint(1, 3)
            c = b + rng.randint(1, 3)
            lhs = apply_word(f, [R_factor(j, a, b), R_factor(j + 1, a, c), R_factor(j, b, c)])
            rhs = apply_word(f, [R_factor(j + 1, b, c), R_factor(j, a, c), R_factor(j + 1, a, b)])
            if lhs != rhs:
                fails["yang-baxter"] += 1
        if n >= 4:
            j, k = 1, rng.randint(3, n - 1)
            if apply_T(apply_T(f, j), k) != apply_T(apply_T(f, k), j):
                fails["commute"] += 1
        f0 = f.specialize_q(0)
        if fb.specialize_q(0) != apply_pi(f0, i) or fn.specialize_q(0) != apply_pihat(f0, i):
            fails["q0-degeneration"] += 1
    return {"n": n, "trials": trials, "failures": fails, "pass": not any(fails.values())}
