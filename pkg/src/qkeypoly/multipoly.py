"""Sparse Laurent polynomials in ``x_1..x_n`` over :class:`QRat`.

Exponents are plain integer tuples.  Terms are iterated in descending
left-to-right lexicographic order of their exponents, the same order used
for rows and columns of every printed transition matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .qcoeff import ONE, Pole, QRat, eval_q

__all__ = [
    "LaurentPoly",
    "Exponent",
    "compare_order",
    "rtl_key",
    "n_stat",
    "suffix_sums",
    "monomial",
]

Exponent = tuple[int, ...]

LESS, GREATER, EQUAL, INCOMPARABLE = "less", "greater", "equal", "incomparable"


def suffix_sums(v: Exponent) -> list[int]:
    """``[sum(v[k:]) for k in range(len(v))]``."""
    out = []
    acc = 0
    for a in reversed(v):
        acc += a
        out.append(acc)
    return out[::-1]


def compare_order(u: Exponent, v: Exponent) -> str:
    """Compare exponents in the suffix-sum partial order.

    ``u <= v`` iff every suffix sum of ``v - u`` is nonnegative.  Returns one of
    ``"less"``, ``"greater"``, ``"equal"``, ``"incomparable"``.
    """
    if len(u) != len(v):
        raise ValueError("exponent length mismatch")
    if u == v:
        return EQUAL
    diffs = suffix_sums(tuple(b - a for a, b in zip(u, v)))
    if all(d >= 0 for d in diffs):
        return LESS
    if all(d <= 0 for d in diffs):
        return GREATER
    return INCOMPARABLE


def rtl_key(v: Exponent) -> Exponent:
    """Sort key for the right-to-left lexicographic order."""
    return tuple(reversed(v))


def n_stat(v: Exponent) -> int:
    """``0*v_1 + 1*v_2 + ... + (n-1)*v_n``."""
    return sum(i * a for i, a in enumerate(v))


def _fmt_exp(v: Exponent) -> str:
    if all(0 <= a <= 9 for a in v):
        return "".join(map(str, v))
    return ",".join(map(str, v))


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    ``terms`` maps exponent tuples of length ``n`` to nonzero :class:`QRat`
    coefficients.  Instances should be treated as values; the arithmetic
    operators always return new objects.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, object] | None = None):
        self.n = n
        clean: dict[Exponent, QRat] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not have length {n}")
                c = c if isinstance(c, QRat) else QRat(c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def x(cls, i: int, n: int) -> "LaurentPoly":
        """The variable ``x_i`` (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    # -- container protocol ---------------------------------------------------

    def __iter__(self) -> Iterator[tuple[Exponent, QRat]]:
        for e in sorted(self.terms, reverse=True):
            yield e, self.terms[e]

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, e: Iterable[int]) -> QRat:
        return self.terms.get(tuple(e), QRat(0))

    def support(self) -> list[Exponent]:
        return sorted(self.terms, reverse=True)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, QRat)):
            return self == LaurentPoly(self.n, {(0,) * self.n: other})
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QRat)):
            return LaurentPoly(self.n, {(0,) * self.n: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        c = c if isinstance(c, QRat) else QRat(c)
        if not c:
            return LaurentPoly.zero(self.n)
        if c == 1:
            return self
        return LaurentPoly._raw(self.n, {e: a * c for e, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QRat)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out: dict[Exponent, QRat] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers are only defined for monomials")
            ((e, c),) = self.terms.items()
            return LaurentPoly._raw(self.n, {tuple(-a * -k for a in e): c.inverse() ** -k})
        out = LaurentPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e: Exponent) -> "LaurentPoly":
        """Multiply by the monomial ``x^e``."""
        return LaurentPoly._raw(
            self.n, {tuple(a + b for a, b in zip(k, e)): c for k, c in self.terms.items()}
        )

    # -- substitutions --------------------------------------------------------

    def swap_vars(self, i: int) -> "LaurentPoly":
        """``f^{s_i}``: exchange ``x_i`` and ``x_{i+1}`` (1-based ``i``)."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"swap index {i} out of range for n={self.n}")
        out = {}
        for e, c in self.terms.items():
            l = list(e)
            l[i - 1], l[i] = l[i], l[i - 1]
            out[tuple(l)] = c
        return LaurentPoly._raw(self.n, out)

    def club(self) -> "LaurentPoly":
        """The automorphism ``x_i -> 1/x_{n+1-i}``."""
        return LaurentPoly._raw(
            self.n, {tuple(-a for a in reversed(e)): c for e, c in self.terms.items()}
        )

    def permute_vars(self, sigma) -> "LaurentPoly":
        """Substitute ``x_j -> x_{sigma(j)}`` (sigma in one-line notation, 1-based)."""
        out = {}
        for e, c in self.terms.items():
            l = [0] * self.n
            for j, a in enumerate(e):
                l[sigma[j] - 1] = a
            out[tuple(l)] = c
        return LaurentPoly._raw(self.n, out)

    # -- structure ------------------------------------------------------------

    def is_symmetric(self) -> bool:
        return all(self.swap_vars(i) == self for i in range(1, self.n))

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def leading_terms(self) -> dict[Exponent, QRat]:
        """Terms whose exponents are maximal for :func:`compare_order`."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        sup = list(self.terms)
        keep = {}
        for e in sup:
            if not any(compare_order(e, f) == LESS for f in sup):
                keep[e] = self.terms[e]
        return keep

    def max_rtl(self) -> Exponent:
        """Largest exponent in right-to-left lexicographic order."""
        return max(self.terms, key=rtl_key)

    def specialize_q(self, q0) -> "LaurentPoly":
        """Evaluate every coefficient at ``q = q0``; the result has constant coefficients."""
        out = {}
        for e, c in self.terms.items():
            try:
                val = eval_q(c, q0)
            except Pole as exc:
                raise Pole(f"coefficient of x^{{{_fmt_exp(e)}}}: {exc}") from None
            if val:
                out[e] = QRat(val)
        return LaurentPoly._raw(self.n, out)

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: fn(c) for e, c in self.terms.items()})

    # -- display / serialization ---------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self:
            mono = f"x^{{{_fmt_exp(e)}}}"
            if c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"({c})·{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"LaurentPoly({self.n}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exp": list(e), "coeff": c.to_json()} for e, c in self],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls(
            data["n"],
            {tuple(t["exp"]): QRat.from_json(t["coeff"]) for t in data["terms"]},
        )


def monomial(e: Iterable[int], coeff=1) -> LaurentPoly:
    e = tuple(e)
    return LaurentPoly(len(e), {e: coeff})
