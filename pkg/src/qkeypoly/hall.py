"""Hall-Littlewood polynomials and Littlewood straightening of ``Q_u``, ``u`` in Z^n.

``P_lambda`` is obtained from the maximal Yang-Baxter operator:
``P_lambda = x^lambda Y_omega / d_lambda(q)``.  For arbitrary integer vectors
``u``, ``Q_u`` is reduced to the partition basis with

    Q_(..a,b..) = -Q_(..b-1,a+1..) + q Q_(..b,a..) + q Q_(..a+1,b-1..)   (a < b)
    Q_(u_1..u_n) = 0                                                    (u_n < 0)

Termination: a rewrite at positions ``(i, i+1)`` keeps both entries inside
``[a, b]``, leaves everything right of ``i+1`` alone and strictly lowers the
entry at ``i+1``.  The weight is fixed and entries stay inside the initial
bounds, so the reachable set is finite and each rewrite moves strictly down in
right-to-left lexicographic order.  Processing vectors largest-first therefore
visits each vector once, after all its contributions have been collected.
"""

from __future__ import annotations

import heapq
import os
import random
from functools import lru_cache
from typing import Iterator

from . import symgroup as sg
from .demazure import apply_word, yang_baxter_word
from .multipoly import LaurentPoly, compare_order, monomial, n_stat, rtl_key, suffix_sums
from .qcoeff import ONE, Q, ZERO, QRat, d_lambda

__all__ = [
    "Partition",
    "MINUS_INFINITY",
    "HLExpansion",
    "as_partition",
    "pad",
    "partitions",
    "hl_P",
    "hl_Q",
    "q_factor",
    "straighten_Q",
    "p_of",
    "max_partition_below",
    "max_partition_below_bruteforce",
    "top_terms",
    "top_term",
    "q_at_zero",
    "predicted_top_term",
    "DEFAULT_FUEL",
    "check_top_term",
    "verify_lemma_top_term",
]

Partition = tuple[int, ...]

DEFAULT_FUEL = 10**6


class _MinusInfinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "-inf"

    def __bool__(self):
        return False


MINUS_INFINITY = _MinusInfinity()


def as_partition(v) -> Partition:
    """Validate a weakly decreasing nonnegative vector and drop trailing zeros."""
    v = tuple(v)
    if any(a < b for a, b in zip(v, v[1:])) or any(a < 0 for a in v):
        raise ValueError(f"{v} is not a partition")
    while v and v[-1] == 0:
        v = v[:-1]
    return v


def pad(lam, n: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"partition {lam} has more than {n} parts")
        return lam[:n]
    return lam + (0,) * (n - len(lam))


def partitions(w: int, max_len: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``w`` with at most ``max_len`` parts, in reverse lexicographic order."""
    if max_part is None:
        max_part = w
    if w == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(w, max_part), 0, -1):
        for rest in partitions(w - first, max_len - 1, first):
            yield (first,) + rest


# -- symmetric polynomials ---------------------------------------------------


def hl_P(lam, n: int) -> LaurentPoly:
    """Hall-Littlewood ``P_lambda(x_1..x_n; q)`` as ``x^lambda Y_omega / d_lambda``."""
    lam = pad(as_partition(lam), n)
    seed = monomial(lam, ONE / d_lambda(lam, n))
    return apply_word(seed, yang_baxter_word(sg.longest(n), "plain"))


def q_factor(lam) -> QRat:
    """``prod_{i>=1} prod_{j<=m_i} (1 - q^j)``: the ratio ``Q_lambda / P_lambda``."""
    lam = as_partition(lam)
    out = ONE
    for part in set(lam):
        for j in range(1, lam.count(part) + 1):
            out = out * (1 - Q**j)
    return out


def hl_Q(lam, n: int) -> LaurentPoly:
    return hl_P(lam, n).scale(q_factor(lam))


# -- expansions in the Q_lambda basis ------------------------------------------


class HLExpansion:
    """Finite combination ``sum c_lambda Q_lambda`` keyed by partitions (trailing zeros dropped)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            c = c if isinstance(c, QRat) else QRat(c)
            if c:
                clean[as_partition(lam)] = c
        self.terms = clean

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, HLExpansion):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self == HLExpansion(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, lam) -> QRat:
        return self.terms.get(as_partition(lam), ZERO)

    def ordered(self) -> list[tuple[Partition, QRat]]:
        """Terms in descending partition order (most balanced first)."""
        if not self.terms:
            return []
        L = max(len(p) for p in self.terms) or 1
        return sorted(self.terms.items(), key=lambda t: rtl_key(pad(t[0], L)), reverse=True)

    def evaluate(self, n: int) -> LaurentPoly:
        out = LaurentPoly.zero(n)
        for lam, c in self.terms.items():
            out = out + hl_Q(lam, n).scale(c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·Q_{{{','.join(map(str, lam))}}}" for lam, c in self.ordered())

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"terms": [{"partition": list(lam), "coeff": c.to_json()} for lam, c in self.ordered()]}

    @classmethod
    def from_json(cls, data) -> "HLExpansion":
        return cls({tuple(t["partition"]): QRat.from_json(t["coeff"]) for t in data["terms"]})


def _fuel() -> int:
    env = os.environ.get("QKEY_FUEL")
    return int(env) if env else DEFAULT_FUEL


def _ascents(u) -> list[int]:
    return [p for p in range(len(u) - 1) if u[p] < u[p + 1]]


def _straighten(u: tuple[int, ...], pick, fuel: int) -> HLExpansion:
    result: dict[Partition, QRat] = {}
    pending: dict[tuple[int, ...], QRat] = {u: ONE}
    heap = [tuple(-a for a in rtl_key(u))]
    steps = 0
    while heap:
        key = heapq.heappop(heap)
        v = tuple(-a for a in reversed(key))
        c = pending.pop(v)
        if not c:
            continue
        steps += 1
        if steps > fuel:
            raise RuntimeError(f"straightening of {u} exceeded fuel {fuel}")
        if v[-1] < 0:
            continue
        asc = _ascents(v)
        if not asc:
            lam = as_partition(v)
            result[lam] = result.get(lam, ZERO) + c
            continue
        p = pick(asc)
        a, b = v[p], v[p + 1]
        if b == a + 1:
            # rule's first term equals the left side, second equals third
            children = [((a + 1, a), Q * c)]
        else:
            qc = Q * c
            children = [((b - 1, a + 1), -c), ((b, a), qc), ((a + 1, b - 1), qc)]
        for (x, y), cc in children:
            w = v[:p] + (x, y) + v[p + 2 :]
            old = pending.get(w)
            if old is None:
                pending[w] = cc
                heapq.heappush(heap, tuple(-t for t in rtl_key(w)))
            else:
                pending[w] = old + cc
    return HLExpansion(result)


@lru_cache(maxsize=None)
def _straighten_cached(u: tuple[int, ...]) -> HLExpansion:
    return _straighten(u, lambda asc: asc[-1], _fuel())


def straighten_Q(u, position="rightmost", fuel: int | None = None) -> HLExpansion:
    """Expand ``Q_u`` (``u`` any integer vector) in the ``Q_lambda`` basis.

    ``position`` chooses where the three-term rule is applied: ``"rightmost"``
    (default, memoized), ``"leftmost"``, or a :class:`random.Random` instance
    for a random ascent.  The result does not depend on the choice.
    """
    u = tuple(int(a) for a in u)
    if not u:
        return HLExpansion({(): ONE})
    if position == "rightmost" and fuel is None:
        return _straighten_cached(u)
    if position == "rightmost":
        pick = lambda asc: asc[-1]
    elif position == "leftmost":
        pick = lambda asc: asc[0]
    elif isinstance(position, random.Random):
        pick = position.choice
    else:
        raise ValueError(f"unknown rewrite position {position!r}")
    return _straighten(u, pick, _fuel() if fuel is None else fuel)


def q_at_zero(u) -> QRat:
    """``Q_u(0)``: the constant term of ``Q_u`` (zero unless ``|u| = 0`` and ``u >= 0``)."""
    u = tuple(u)
    if sum(u) != 0 or any(s < 0 for s in suffix_sums(u)):
        return ZERO
    return straighten_Q(u).coeff(())


# -- the predicted top term ----------------------------------------------------


def _dominates_zero(u) -> bool:
    return all(s >= 0 for s in suffix_sums(u))


def max_partition_below(u) -> Partition:
    """Largest partition ``v <= u`` (same weight, ``len(u)`` parts at most).

    Built right to left: each ``v_k`` is taken as large as possible such that
    the cheapest completion (``v_2 = ... = v_{k-1} = v_k``, the rest in
    ``v_1``) still respects the suffix-sum bounds of ``u``.
    """
    u = tuple(u)
    if not _dominates_zero(u):
        raise ValueError(f"{u} has a negative suffix sum")
    n = len(u)
    caps = suffix_sums(u)  # caps[j] bounds sum(v[j:])
    w = caps[0]
    v = [0] * n
    tail = 0  # sum(v[k+1:])
    floor = 0  # v[k+1]
    for k in range(n - 1, 0, -1):
        chosen = None
        for cand in range(w, floor - 1, -1):
            t = tail + cand
            if t > caps[k]:
                continue
            first = w - t - (k - 1) * cand
            if first < cand:
                continue
            if all(t + (k - j) * cand <= caps[j] for j in range(1, k)):
                chosen = cand
                break
        if chosen is None:
            raise AssertionError(f"no feasible partition below {u}")
        v[k] = chosen
        tail += chosen
        floor = chosen
    v[0] = w - tail
    return as_partition(v)


def max_partition_below_bruteforce(u) -> Partition:
    """Enumerate partitions ``v <= u`` and return the unique maximal one."""
    u = tuple(u)
    n = len(u)
    if not _dominates_zero(u):
        raise ValueError(f"{u} has a negative suffix sum")
    below = [
        pad(v, n)
        for v in partitions(sum(u), n)
        if compare_order(pad(v, n), u) in ("less", "equal")
    ]
    maximal = [v for v in below if not any(compare_order(v, w) == "less" for w in below)]
    if len(maximal) != 1:
        raise ValueError(f"no unique maximal partition below {u}: {maximal}")
    return as_partition(maximal[0])


def p_of(u):
    """The partition predicting the top term of ``Q_u``, or :data:`MINUS_INFINITY`.

    Recursion: ``-inf`` if some suffix sum is negative; if the tail
    ``(u_2..u_n)`` is already a partition, the largest partition below ``u``;
    otherwise replace the tail by its own value and recurse.
    """
    u = tuple(u)
    if not _dominates_zero(u):
        return MINUS_INFINITY
    n = len(u)
    if n == 1:
        return as_partition(u)
    tail = u[1:]
    if all(a >= b for a, b in zip(tail, tail[1:])) and tail[-1] >= 0:
        return max_partition_below(u)
    return p_of((u[0],) + pad(p_of(tail), n - 1))


def top_terms(e: HLExpansion) -> list[tuple[Partition, QRat]]:
    """Maximal partitions of ``e`` with their coefficients cut to the top ``q``-degree."""
    if not e:
        raise ValueError("the zero expansion has no top term")
    L = max(len(p) for p in e.terms) or 1
    keys = list(e.terms)
    out = []
    for lam in keys:
        if any(compare_order(pad(lam, L), pad(mu, L)) == "less" for mu in keys):
            continue
        out.append((lam, e.terms[lam].top_monomial()))
    return out


def top_term(e: HLExpansion) -> tuple[Partition, QRat]:
    tops = top_terms(e)
    if len(tops) != 1:
        raise ValueError(f"expansion has {len(tops)} maximal terms")
    return tops[0]


def predicted_top_term(u):
    """``(p(u), q^{n(u) - n(p(u))})``, or ``MINUS_INFINITY`` when ``Q_u`` vanishes."""
    v = p_of(u)
    if v is MINUS_INFINITY:
        return MINUS_INFINITY
    return v, Q ** (n_stat(tuple(u)) - n_stat(pad(v, len(u))))


def check_top_term(u) -> bool:
    """Does the straightened ``Q_u`` have the predicted top term (or vanish when predicted)?"""
    e = straighten_Q(u)
    pred = predicted_top_term(u)
    if pred is MINUS_INFINITY:
        return not e
    if not e:
        return False
    try:
        lam, c = top_term(e)
    except ValueError:
        return False
    return lam == pred[0] and c == pred[1]


def verify_lemma_top_term(n: int = 3, lo: int = -2, hi: int = 3, trials: int = 500, seed: int = 42) -> dict:
    """Exhaustive check over ``[lo, hi]^n`` plus ``trials`` random ``u`` in ``[lo-1, hi+1]^(n+1)``."""
    from itertools import product

    failures = []
    count = 0
    for u in product(range(lo, hi + 1), repeat=n):
        count += 1
        if not check_top_term(u):
            failures.append(u)
    rng = random.Random(seed)
    for _ in range(trials):
        u = tuple(rng.randint(lo - 1, hi + 1) for _ in range(n + 1))
        count += 1
        if not check_top_term(u):
            failures.append(u)
    return {"n": n, "checked": count, "failures": failures[:10], "pass": not failures}
