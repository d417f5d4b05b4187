"""Permutations of ``{1..n}`` in one-line notation, acting on weights on the right.

Conventions (fixed once, used everywhere):

* composition ``(sigma*tau)(j) = sigma(tau(j))``;
* right action on vectors ``(v.sigma)_j = v[sigma(j)]``, so that
  ``v.(sigma*tau) = (v.sigma).tau``;
* right multiplication by ``s_i`` swaps the entries in positions ``i, i+1``.

>>> compose(simple(2, 3), simple(1, 3))
(3, 1, 2)
>>> act_weight((2, 1, 0), longest(3))
(0, 1, 2)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

__all__ = [
    "Perm",
    "identity",
    "simple",
    "longest",
    "compose",
    "inverse",
    "length",
    "reduced_word",
    "from_word",
    "all_perms",
    "act_weight",
    "stabilizer_longest",
    "zeta",
    "eta",
    "coset",
    "orbit",
    "dominant",
    "is_permutation",
]

Perm = tuple[int, ...]


def is_permutation(sigma) -> bool:
    return sorted(sigma) == list(range(1, len(sigma) + 1))


def _check(sigma) -> Perm:
    sigma = tuple(sigma)
    if not is_permutation(sigma):
        raise ValueError(f"{sigma} is not a permutation in one-line notation")
    return sigma


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple(i: int, n: int) -> Perm:
    """The simple transposition ``s_i`` of ``S_n``."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"s_{i} does not exist in S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def compose(sigma: Perm, tau: Perm) -> Perm:
    """``sigma * tau`` with ``(sigma*tau)(j) = sigma(tau(j))``."""
    if len(sigma) != len(tau):
        raise ValueError("permutations of different sizes")
    return tuple(sigma[t - 1] for t in tau)


def inverse(sigma: Perm) -> Perm:
    out = [0] * len(sigma)
    for j, s in enumerate(sigma, 1):
        out[s - 1] = j
    return tuple(out)


def length(sigma: Perm) -> int:
    """Number of inversions."""
    n = len(sigma)
    return sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])


def right_mul_simple(sigma: Perm, i: int) -> Perm:
    p = list(sigma)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def reduced_word(sigma: Perm) -> tuple[int, ...]:
    """A reduced word ``(i_1, ..., i_p)`` with ``sigma = s_{i_1} ... s_{i_p}``.

    Obtained by bubble-sorting ``sigma`` down to the identity through right
    descents; reading the swaps backwards builds ``sigma`` from the identity
    by right multiplications, each of which raises the length by one.
    """
    sigma = _check(sigma)
    p = list(sigma)
    swaps = []
    done = False
    while not done:
        done = True
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                swaps.append(i + 1)
                done = False
    return tuple(reversed(swaps))


def from_word(word, n: int) -> Perm:
    sigma = identity(n)
    for i in word:
        sigma = right_mul_simple(sigma, i)
    return sigma


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of ``S_n`` in lexicographic order of one-line notation."""
    return tuple(permutations(range(1, n + 1)))


def act_weight(v, sigma: Perm) -> tuple[int, ...]:
    """Right action ``(v.sigma)_j = v[sigma(j)]``."""
    if len(v) != len(sigma):
        raise ValueError(f"vector {tuple(v)} and permutation {sigma} differ in length")
    return tuple(v[s - 1] for s in sigma)


def dominant(v) -> tuple[int, ...]:
    """Decreasing reordering of ``v``."""
    return tuple(sorted(v, reverse=True))


def stabilizer_longest(lam) -> Perm:
    """Longest element of the stabilizer of ``lam``: reverse each block of equal entries."""
    n = len(lam)
    out = list(range(1, n + 1))
    start = 0
    while start < n:
        end = start
        while end + 1 < n and lam[end + 1] == lam[start]:
            end += 1
        out[start : end + 1] = reversed(out[start : end + 1])
        start = end + 1
    return tuple(out)


def eta(v) -> Perm:
    """Shortest ``sigma`` with ``dominant(v).sigma == v``."""
    v = tuple(v)
    lam = dominant(v)
    slots: dict[int, list[int]] = {}
    for idx, a in enumerate(lam, 1):
        slots.setdefault(a, []).append(idx)
    out = []
    for a in v:
        out.append(slots[a].pop(0))
    return tuple(out)


def zeta(v) -> Perm:
    """Longest ``sigma`` with ``dominant(v).sigma == v``.

    ``{sigma : lam.sigma = v}`` is the coset ``Stab(lam) * eta(v)``, and
    ``eta(v)`` is its minimal element, so the maximum is ``w_Stab * eta(v)``.
    """
    return compose(stabilizer_longest(dominant(v)), eta(v))


def coset(v) -> list[Perm]:
    """Brute force: every ``sigma`` with ``dominant(v).sigma == v``."""
    v = tuple(v)
    lam = dominant(v)
    return [s for s in all_perms(len(v)) if act_weight(lam, s) == v]


def orbit(lam) -> list[tuple[int, ...]]:
    """Distinct rearrangements of ``lam`` in descending lexicographic order."""
    return sorted(set(permutations(tuple(lam))), reverse=True)
