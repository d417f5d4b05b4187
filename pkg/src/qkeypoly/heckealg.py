"""The Hecke algebra H_n(q) in the ``T_sigma`` basis, with its Yang-Baxter bases.

Generators satisfy the braid relations and ``(T_i + 1)(T_i - q) = 0``.  The two
Yang-Baxter bases are taken at the spectral parameters ``(1, q, ..., q^{n-1})``:

    Y_{sigma s_i}    = Y_sigma    (T_i + 1/[k]_q)
    Yhat_{sigma s_i} = Yhat_sigma (T_i - q^k/[k]_q)

whenever ``l(sigma s_i) > l(sigma)``, with ``k = sigma(i+1) - sigma(i)``.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from . import symgroup as sg
from .qcoeff import ONE, Q, ZERO, QRat, q_int

__all__ = [
    "HeckeElt",
    "T",
    "mul_by_Ti",
    "mul",
    "phi",
    "bilinear",
    "yang_baxter",
    "yb_step",
    "yb_transition_matrix",
    "closed_form_Y_omega",
    "closed_form_Yhat_omega",
    "verify_flag_duality",
]


class HeckeElt:
    """Finite combination ``sum c_sigma T_sigma`` with :class:`QRat` coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for sigma, c in (terms or {}).items():
            sigma = tuple(sigma)
            if len(sigma) != n or not sg.is_permutation(sigma):
                raise ValueError(f"{sigma} is not an element of S_{n}")
            c = c if isinstance(c, QRat) else QRat(c)
            if c:
                clean[sigma] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, n: int) -> "HeckeElt":
        return cls._raw(n, {sg.identity(n): ONE})

    def coeff(self, sigma) -> QRat:
        return self.terms.get(tuple(sigma), ZERO)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        _same_n(self, other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            t = out.get(s, ZERO) + c
            if t:
                out[s] = t
            else:
                out.pop(s, None)
        return HeckeElt._raw(self.n, out)

    def __neg__(self):
        return HeckeElt._raw(self.n, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        c = c if isinstance(c, QRat) else QRat(c)
        if not c:
            return HeckeElt._raw(self.n, {})
        return HeckeElt._raw(self.n, {s: a * c for s, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items())
        return " + ".join(f"({c})·T{''.join(map(str, s))}" for s, c in items)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": list(s), "coeff": c.to_json()} for s, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data) -> "HeckeElt":
        return cls(data["n"], {tuple(t["perm"]): QRat.from_json(t["coeff"]) for t in data["terms"]})


def _same_n(a: HeckeElt, b: HeckeElt):
    if a.n != b.n:
        raise ValueError(f"Hecke elements of H_{a.n} and H_{b.n}")


def T(sigma) -> HeckeElt:
    sigma = tuple(sigma)
    return HeckeElt(len(sigma), {sigma: ONE})


def mul_by_Ti(h: HeckeElt, i: int) -> HeckeElt:
    """Right multiplication by the generator ``T_i``."""
    if not 1 <= i <= h.n - 1:
        raise IndexError(f"T_{i} does not exist in H_{h.n}")
    out: dict = {}
    qm1 = Q - 1
    for sigma, c in h.terms.items():
        up = sg.right_mul_simple(sigma, i)
        if sigma[i - 1] < sigma[i]:
            out[up] = out.get(up, ZERO) + c
        else:
            out[up] = out.get(up, ZERO) + Q * c
            out[sigma] = out.get(sigma, ZERO) + qm1 * c
    return HeckeElt._raw(h.n, {s: c for s, c in out.items() if c})


@lru_cache(maxsize=None)
def _basis_product(sigma, tau) -> HeckeElt:
    h = T(sigma)
    for i in sg.reduced_word(tau):
        h = mul_by_Ti(h, i)
    return h


def mul(h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
    """Product in H_n, expanding each ``T_tau`` of ``h2`` along a reduced word."""
    _same_n(h1, h2)
    out: dict = {}
    for tau, b in h2.terms.items():
        for sigma, a in h1.terms.items():
            ab = a * b
            for rho, c in _basis_product(sigma, tau).terms.items():
                out[rho] = out.get(rho, ZERO) + ab * c
    return HeckeElt._raw(h1.n, {s: c for s, c in out.items() if c})


def phi(h: HeckeElt) -> HeckeElt:
    """Anti-automorphism ``T_sigma -> T_{sigma^-1}`` (coefficients fixed)."""
    return HeckeElt._raw(h.n, {sg.inverse(s): c for s, c in h.terms.items()})


@lru_cache(maxsize=None)
def _omega_coeff_table(n: int) -> dict:
    """``(sigma, rho) -> [T_omega](T_sigma T_rho)`` for all pairs, nonzero entries only."""
    w = sg.longest(n)
    table = {}
    for sigma in sg.all_perms(n):
        for rho in sg.all_perms(n):
            c = _basis_product(sigma, rho).coeff(w)
            if c:
                table[sigma, rho] = c
    return table


def bilinear(h1: HeckeElt, h2: HeckeElt) -> QRat:
    """Coefficient of ``T_omega`` in ``h1 * phi(h2)``."""
    _same_n(h1, h2)
    table = _omega_coeff_table(h1.n)
    acc = ZERO
    h2p = phi(h2).terms
    for sigma, a in h1.terms.items():
        for rho, b in h2p.items():
            c = table.get((sigma, rho))
            if c is not None:
                acc = acc + a * b * c
    return acc


def yb_step(variant: str, k: int) -> QRat:
    """Constant ``c`` in the factor ``T_i + c`` for a step with parameter ``k``."""
    if k < 1:
        raise ValueError(f"Yang-Baxter step parameter must be >= 1, got {k}")
    if variant == "plain":
        return ONE / q_int(k)
    if variant == "hat":
        return -(Q**k) / q_int(k)
    raise ValueError(f"unknown Yang-Baxter variant {variant!r}")


def yb_factors(sigma, variant: str, word=None):
    """``[(i, c), ...]`` such that ``Y_sigma = prod (T_i + c)`` left to right."""
    sigma = tuple(sigma)
    word = sg.reduced_word(sigma) if word is None else tuple(word)
    cur = sg.identity(len(sigma))
    out = []
    for i in word:
        if cur[i - 1] > cur[i]:
            raise ValueError(f"word {word} is not reduced")
        out.append((i, yb_step(variant, cur[i] - cur[i - 1])))
        cur = sg.right_mul_simple(cur, i)
    if cur != sigma:
        raise ValueError(f"word {word} does not spell {sigma}")
    return out


_yb_lock = threading.Lock()
_yb_cache: dict = {}


def yang_baxter(sigma, variant: str = "plain", word=None) -> HeckeElt:
    """``Y_sigma`` (``variant="plain"``) or ``Yhat_sigma`` (``"hat"``) in the T basis.

    With the default reduced word the result is memoized; passing an explicit
    ``word`` recomputes along that word (used to test word independence).
    """
    sigma = tuple(sigma)
    key = (sigma, variant)
    if word is None:
        with _yb_lock:
            hit = _yb_cache.get(key)
        if hit is not None:
            return hit
    h = HeckeElt.one(len(sigma))
    for i, c in yb_factors(sigma, variant, word):
        h = mul_by_Ti(h, i) + h.scale(c)
    if word is None:
        with _yb_lock:
            _yb_cache.setdefault(key, h)
    return h


def yb_transition_matrix(n: int, variant: str = "plain") -> list[list[QRat]]:
    """Rows/columns indexed by ``all_perms(n)``; column ``sigma`` is the T-expansion of ``Y_sigma``."""
    perms = sg.all_perms(n)
    cols = [yang_baxter(s, variant) for s in perms]
    return [[col.coeff(r) for col in cols] for r in perms]


def closed_form_Y_omega(n: int) -> HeckeElt:
    return HeckeElt(n, {s: ONE for s in sg.all_perms(n)})


def closed_form_Yhat_omega(n: int) -> HeckeElt:
    w = sg.longest(n)
    return HeckeElt(n, {s: (-Q) ** sg.length(sg.compose(s, w)) for s in sg.all_perms(n)})


def verify_flag_duality(n: int) -> dict:
    """Check ``<Y_sigma, Yhat_nu> = 1`` exactly when ``sigma = omega o nu``, else 0.

    With ``compose`` as defined in :mod:`symgroup` the partner of ``Y_sigma``
    is ``Yhat_{omega o sigma}``; written with left-to-right products this is
    the usual ``nu omega``.
    """
    perms = sg.all_perms(n)
    w = sg.longest(n)
    bad = []
    for s in perms:
        ys = yang_baxter(s, "plain")
        for nu in perms:
            val = bilinear(ys, yang_baxter(nu, "hat"))
            want = ONE if s == sg.compose(w, nu) else ZERO
            if val != want:
                bad.append((s, nu, val))
    return {"n": n, "pairs": len(perms) ** 2, "failures": bad, "pass": not bad}
