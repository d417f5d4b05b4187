"""The q-Key polynomials ``U_v``, ``Û_v`` and the Key polynomials ``K_v``, ``K̂_v``.

For ``v`` in N^n with decreasing reordering ``lam``::

    U_v = (x^lam / d_lam(q)) · Y_zeta(v)        Û_v = x^lam · Ŷ_eta(v)

Both families are unitriangular against monomials: the largest exponent of
``U_v`` and ``Û_v`` in right-to-left lexicographic order is ``v``, with
coefficient 1.  At ``q = 0`` they become ``K_v`` and ``K̂_v``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product

from . import symgroup as sg
from .demazure import apply_pi, apply_pihat, apply_word, yang_baxter_word
from .hall import hl_P, pad, partitions
from .multipoly import LaurentPoly, monomial
from .qcoeff import ONE, QRat, d_lambda

__all__ = [
    "FAMILIES",
    "u_poly",
    "uhat_poly",
    "key_poly",
    "family_poly",
    "weights",
    "family_indices",
    "expand_in_family",
    "TransitionMatrix",
    "transition_matrix",
]

FAMILIES = ("U", "Uhat", "K", "Khat", "Monomial", "HL_P")

_lock = threading.Lock()
_cache: dict = {}


def _weight(v) -> tuple[int, ...]:
    v = tuple(int(a) for a in v)
    if any(a < 0 for a in v):
        raise ValueError(f"q-Key index {v} has a negative component")
    return v


def _cached(key, compute):
    with _lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    val = compute()
    with _lock:
        return _cache.setdefault(key, val)


def u_poly(v, word=None) -> LaurentPoly:
    """``U_v``.  An explicit reduced ``word`` for ``zeta(v)`` bypasses the cache."""
    v = _weight(v)
    lam = sg.dominant(v)

    def compute():
        seed = monomial(lam, ONE / d_lambda(lam, len(v)))
        return apply_word(seed, yang_baxter_word(sg.zeta(v), "plain", word))

    if word is not None:
        return compute()
    return _cached(("U", v), compute)


def uhat_poly(v, word=None) -> LaurentPoly:
    """``Û_v``.  An explicit reduced ``word`` for ``eta(v)`` bypasses the cache."""
    v = _weight(v)
    lam = sg.dominant(v)

    def compute():
        return apply_word(monomial(lam), yang_baxter_word(sg.eta(v), "hat", word))

    if word is not None:
        return compute()
    return _cached(("Uhat", v), compute)


def key_poly(v, variant: str = "plain", chain: str = "rightmost") -> LaurentPoly:
    """Key polynomial ``K_v`` (``variant="plain"``) or ``K̂_v`` (``"hat"``).

    ``K_v = x^v`` for dominant ``v``; otherwise pick an ascent ``v_i < v_{i+1}``
    and use ``K_v = K_{v s_i} π_i`` (``π̂_i`` for the hat family).  ``chain``
    selects the ascent (``"rightmost"`` or ``"leftmost"``); the value does
    not depend on it.
    """
    if variant not in ("plain", "hat"):
        raise ValueError(f"unknown Key variant {variant!r}")
    v = _weight(v)
    if chain == "rightmost":
        return _cached((f"K-{variant}", v), lambda: _key(v, variant, chain))
    return _key(v, variant, chain)


def _key(v, variant, chain):
    asc = [p for p in range(len(v) - 1) if v[p] < v[p + 1]]
    if not asc:
        return monomial(v)
    p = asc[-1] if chain == "rightmost" else asc[0]
    w = list(v)
    w[p], w[p + 1] = w[p + 1], w[p]
    op = apply_pi if variant == "plain" else apply_pihat
    return op(key_poly(tuple(w), variant, chain), p + 1)


def family_poly(family: str, v) -> LaurentPoly:
    """Member of ``family`` indexed by ``v`` (for ``HL_P``, ``v`` is a padded partition)."""
    v = tuple(v)
    if family == "U":
        return u_poly(v)
    if family == "Uhat":
        return uhat_poly(v)
    if family == "K":
        return key_poly(v, "plain")
    if family == "Khat":
        return key_poly(v, "hat")
    if family == "Monomial":
        return monomial(v)
    if family == "HL_P":
        return _cached(("HL_P", v), lambda: hl_P(v, len(v)))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def weights(n: int, degree: int) -> list[tuple[int, ...]]:
    """All ``v`` in N^n with ``|v| = degree``, descending lexicographic."""
    return sorted(
        (v for v in product(range(degree + 1), repeat=n) if sum(v) == degree),
        reverse=True,
    )


def family_indices(family: str, n: int, degree: int) -> list[tuple[int, ...]]:
    if family == "HL_P":
        return [pad(lam, n) for lam in partitions(degree, n)]
    return weights(n, degree)


def _leading_index(family: str, e):
    if any(a < 0 for a in e):
        raise ValueError(f"monomial x^{e} is outside the span of {family}")
    if family == "HL_P":
        if any(a > b for a, b in zip(e, e[1:])):
            raise ValueError(f"polynomial is not symmetric (leading exponent {e})")
        return tuple(reversed(e))
    return e


def expand_in_family(f: LaurentPoly, target: str, n: int | None = None, degree: int | None = None) -> dict:
    """Coefficients of ``f`` in the ``target`` basis, by triangular elimination.

    Repeatedly removes the largest monomial (right-to-left lexicographic) of
    the residual using the family member led by it.
    """
    if target not in FAMILIES:
        raise ValueError(f"unknown family {target!r}")
    if n is not None and f.n != n:
        raise ValueError(f"polynomial has {f.n} variables, expected {n}")
    if not f.is_homogeneous(degree):
        raise ValueError("expand_in_family needs a homogeneous polynomial of the given degree")
    out: dict = {}
    residual = f
    guard = 0
    while residual:
        guard += 1
        e = residual.max_rtl()
        idx = _leading_index(target, e)
        member = family_poly(target, idx)
        lead = member.coeff(e)
        if not lead or member.max_rtl() != e:
            raise ArithmeticError(f"{target}{idx} is not led by x^{e}")
        c = residual.coeff(e) / lead
        out[idx] = out.get(idx, QRat(0)) + c
        residual = residual - member.scale(c)
        if guard > 10**5:
            raise ArithmeticError("triangular elimination did not terminate")
    return {k: c for k, c in sorted(out.items(), reverse=True) if c}


@dataclass
class TransitionMatrix:
    """``entries[r][c]`` is the coefficient of ``rows[r]`` in the member ``cols[c]``."""

    source: str
    target: str
    rows: list
    cols: list
    entries: list

    def __str__(self):
        lab = lambda v: "".join(map(str, v)) if all(0 <= a <= 9 for a in v) else ",".join(map(str, v))
        cells = [[("·" if not c else str(c)) for c in row] for row in self.entries]
        width = max([len(c) for row in cells for c in row] + [len(lab(v)) for v in self.cols])
        head = " " * (len(lab(self.rows[0])) + 2) + " ".join(lab(v).rjust(width) for v in self.cols)
        lines = [head]
        for v, row in zip(self.rows, cells):
            lines.append(f"{lab(v)} |" + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "from": self.source,
            "to": self.target,
            "rows": [list(v) for v in self.rows],
            "cols": [list(v) for v in self.cols],
            "matrix": [[c.to_json() for c in row] for row in self.entries],
        }


def transition_matrix(source: str, target: str, n: int, degree: int) -> TransitionMatrix:
    """Columns are the ``target`` expansions of the ``source`` members of degree ``degree``."""
    cols = family_indices(source, n, degree)
    rows = family_indices(target, n, degree)
    pos = {v: r for r, v in enumerate(rows)}
    entries = [[QRat(0) for _ in cols] for _ in rows]
    for c, v in enumerate(cols):
        for idx, coeff in expand_in_family(family_poly(source, v), target, n, degree).items():
            if idx not in pos:
                raise ArithmeticError(f"{target}{idx} outside the index set")
            entries[pos[idx]][c] = coeff
    return TransitionMatrix(source, target, rows, cols, entries)
