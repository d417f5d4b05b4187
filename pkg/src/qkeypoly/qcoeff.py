"""Exact rational functions in the Hecke parameter ``q``.

Every scalar in the package lives in Q(q).  A :class:`QRat` stores a pair of
integer polynomials (via ``flint.fmpz_poly``) kept in lowest terms with a
positive leading denominator coefficient, so two equal values always have the
same representation and can be used as dictionary keys.

>>> q = QRat.q()
>>> (1 / (1 + q) + q / (1 + q)) == 1
True
>>> q_int(3)
1+q+q^2
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

__all__ = [
    "QRat",
    "Pole",
    "q_int",
    "q_factorial",
    "d_lambda",
    "eval_q",
    "ZERO",
    "ONE",
    "Q",
]


class Pole(ArithmeticError):
    """Evaluation of a rational function at a root of its denominator."""


def _poly(coeffs) -> flint.fmpz_poly:
    return flint.fmpz_poly(list(coeffs))


_P0 = flint.fmpz_poly([])
_P1 = flint.fmpz_poly([1])


def _poly_str(p: flint.fmpz_poly) -> str:
    coeffs = [int(c) for c in p.coeffs()]
    out = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            power = "q" if k == 1 else f"q^{k}"
            mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not out:
            out.append(("-" if c < 0 else "") + mono)
        else:
            out.append(("-" if c < 0 else "+") + mono)
    return "".join(out) or "0"


class QRat:
    """Element of Q(q) as ``num/den`` with integer polynomial parts.

    Construct from an int, a :class:`fractions.Fraction`, or a pair of
    ascending coefficient lists.  Arithmetic with ints and Fractions is
    promoted automatically.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _canonical=False):
        if isinstance(num, QRat):
            if den != 1:
                raise TypeError("QRat(QRat, den) is not supported; divide instead")
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        if isinstance(num, Rational) and not isinstance(num, int):
            num, den = Fraction(num) / Fraction(den), 1
            num, den = num.numerator, num.denominator
        n = num if isinstance(num, flint.fmpz_poly) else _as_poly(num)
        d = den if isinstance(den, flint.fmpz_poly) else _as_poly(den)
        if not _canonical:
            if d.is_zero():
                raise ZeroDivisionError("QRat with zero denominator")
            n, d = _reduce(n, d)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def q(cls) -> "QRat":
        """The generator ``q``."""
        return cls(flint.fmpz_poly([0, 1]), _P1, _canonical=True)

    @classmethod
    def from_coeffs(cls, num, den=(1,)) -> "QRat":
        return cls(_poly(num), _poly(den))

    @classmethod
    def _make(cls, n, d) -> "QRat":
        return cls(n, d, _canonical=True)

    # -- predicates and accessors -------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0 and int(self.den[0]) == 1

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def num_coeffs(self) -> list[int]:
        return [int(c) for c in self.num.coeffs()]

    def den_coeffs(self) -> list[int]:
        return [int(c) for c in self.den.coeffs()]

    def degree(self) -> int:
        """Degree of the numerator (``-1`` for zero)."""
        return self.num.degree()

    def top_monomial(self) -> "QRat":
        """Highest-degree term of a polynomial value, as a QRat."""
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in q")
        if self.is_zero():
            return self
        d = self.num.degree()
        coeffs = [0] * d + [int(self.num[d])]
        return QRat._make(_poly(coeffs), _P1)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return Fraction(int(self.num[0]) if self.num.degree() == 0 else 0, int(self.den[0]))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den == _P1:
                return QRat._make(self.num + other.num, _P1)
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._make(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == _P1 and other.den == _P1:
            return QRat._make(self.num * other.num, _P1)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return QRat._make(self.num**k, self.den**k)

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num_coeffs()), tuple(self.den_coeffs())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation / display -------------------------------------------------

    def __call__(self, q0) -> Fraction:
        return eval_q(self, q0)

    def __str__(self):
        n = _poly_str(self.num)
        if self.den == _P1:
            return n
        d = _poly_str(self.den)
        if sum(1 for c in self.num.coeffs() if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den.coeffs() if c) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return str(self)

    def to_json(self) -> dict:
        return {"num": self.num_coeffs() or [0], "den": self.den_coeffs()}

    @classmethod
    def from_json(cls, data: dict) -> "QRat":
        return cls.from_coeffs(data["num"], data.get("den", [1]))


def _as_poly(x) -> flint.fmpz_poly:
    if isinstance(x, int):
        return flint.fmpz_poly([x])
    if isinstance(x, (list, tuple)):
        return _poly(x)
    raise TypeError(f"cannot build an integer polynomial from {x!r}")


def _reduce(n: flint.fmpz_poly, d: flint.fmpz_poly):
    if n.is_zero():
        return _P0, _P1
    g = n.gcd(d)
    if g != _P1:
        n = n // g
        d = d // g
    if d[d.degree()] < 0:
        n, d = -n, -d
    return n, d


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat._make(flint.fmpz_poly([x]) if x else _P0, _P1)
    if isinstance(x, Rational):
        return QRat(x)
    return NotImplemented


ZERO = QRat(0)
ONE = QRat(1)
Q = QRat.q()


@lru_cache(maxsize=None)
def q_int(k: int) -> QRat:
    """The q-integer ``[k]_q = 1 + q + ... + q^(k-1)``; ``[0]_q = 0``."""
    if k < 0:
        raise ValueError(f"q-integer of negative argument {k}")
    return QRat._make(_poly([1] * k) if k else _P0, _P1)


@lru_cache(maxsize=None)
def q_factorial(m: int) -> QRat:
    out = ONE
    for j in range(1, m + 1):
        out = out * q_int(j)
    return out


def _multiplicities(lam, n: int) -> dict[int, int]:
    lam = list(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p < 0 for p in lam):
        raise ValueError(f"{tuple(lam)} is not a partition")
    parts = [p for p in lam if p > 0]
    if len(parts) > n:
        raise ValueError(f"partition {tuple(lam)} has more than {n} parts")
    mult: dict[int, int] = {0: n - len(parts)}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    return mult


def d_lambda(lam, n: int) -> QRat:
    """Product of q-factorials of part multiplicities, zeros included.

    The part 0 counts with multiplicity ``n - (number of nonzero parts)``.

    >>> d_lambda((2, 0, 0), 3)
    1+q
    """
    out = ONE
    for m in _multiplicities(lam, n).values():
        out = out * q_factorial(m)
    return out


def eval_q(a: QRat, q0) -> Fraction:
    """Evaluate ``a`` at the exact rational ``q0``; raises :class:`Pole`."""
    q0 = Fraction(q0)
    den = _horner(a.den_coeffs(), q0)
    if den == 0:
        raise Pole(f"{a} has a pole at q={q0}")
    return _horner(a.num_coeffs(), q0) / den


def _horner(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
