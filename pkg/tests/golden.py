"""Reference values transcribed from the printed tables."""

from qkeypoly.multipoly import LaurentPoly
from qkeypoly.qcoeff import ONE, Q, QRat

q = Q
_1q = ONE + q


def poly(terms: dict) -> LaurentPoly:
    """``{"102": c, ...}`` with single-digit exponents."""
    return LaurentPoly(3, {tuple(int(ch) for ch in k): v for k, v in terms.items()})


PERMS3 = [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]

_h = ONE / _1q
H3_MATRIX = [
    [1, 1, 1, _h, _h, 1],
    [0, 1, 0, 1, _h, 1],
    [0, 0, 1, _h, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
]

X210_U = {
    (2, 1, 0): poly({"210": 1}),
    (1, 2, 0): poly({"120": 1, "210": 1}),
    (2, 0, 1): poly({"201": 1, "210": 1}),
    (1, 0, 2): poly({"102": 1, "111": 1 - q, "120": 1 / _1q, "201": 1, "210": 1 / _1q}),
    (0, 2, 1): poly({"021": 1, "111": 1 - q, "201": 1 / _1q, "120": 1, "210": 1 / _1q}),
}

X210_UHAT = {
    (2, 1, 0): poly({"210": 1}),
    (1, 2, 0): poly({"120": 1, "210": -q}),
    (2, 0, 1): poly({"201": 1, "210": -q}),
    (1, 0, 2): poly({"102": 1, "111": 1 - q, "201": -q, "120": -q**2 / _1q, "210": q**3 / _1q}),
    (0, 2, 1): poly({"021": 1, "111": 1 - q, "120": -q, "201": -q**2 / _1q, "210": q**3 / _1q}),
}

# the x^200 displays, under the labels they carry in print (U and Uhat are swapped)
X200_LABELLED_U = {
    (2, 0, 0): poly({"200": 1}),
    (0, 2, 0): poly({"020": 1, "200": -q, "110": 1 - q}),
    (0, 0, 2): poly({
        "011": 1 - q, "101": 1 - q, "002": 1,
        "110": q**2 * (q - 1) / _1q, "020": -q**2 / _1q, "200": -q**2 / _1q,
    }),
}
X200_LABELLED_UHAT = {
    (2, 0, 0): poly({"200": 1}),
    (0, 2, 0): poly({"110": 1 - q, "020": 1, "200": 1 / _1q}),
    (0, 0, 2): poly({"011": 1 - q, "101": 1 - q, "002": 1, "110": 1 - q, "020": 1, "200": 1}),
}

WEIGHT3 = [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)]

_m = -q / _1q
U_TO_K = [
    [1, 0, 0, 0, 0, 0, _m, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, _m, 0, 0],
    [0, 0, 0, 1, 0, _m, -q, 0, 0, 0],
    [0, 0, 0, 0, 1, -q, 0, -q, -q * _1q, q**2],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -q],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

_a = -q**2 / _1q
_b = q**3 / _1q
UHAT_TO_KHAT = [
    [1, 0, 0, 0, 0, 0, -q, 0, 0, _a],
    [0, 1, -q, -q, 0, _b, -q, _b, -q**3, _b],
    [0, 0, 1, 0, 0, -q, 0, _a, q**2, -q],
    [0, 0, 0, 1, 0, _a, -q, -q, q**2, _b],
    [0, 0, 0, 0, 1, -q, 0, -q, q * _1q, q**2],
    [0, 0, 0, 0, 0, 1, 0, 0, -q, -q],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, _a],
    [0, 0, 0, 0, 0, 0, 0, 1, -q, -q],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -q],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

# the three-term expansion of Q_{-2,3,2} exactly as printed
STRAIGHTEN_PRINTED = {
    (3,): q**3 - q**2,
    (2, 1): q**5 + q**4 - q**3 - 2 * q**2 + q,
    (1, 1, 1): q**4 - q**3 - q**2 + q,
}

SCALAR_103_013 = q**2 * (1 - q) * (1 - q**2)


def as_qrat(c) -> QRat:
    return c if isinstance(c, QRat) else QRat(c)
