"""Integer kernels behind evaluate/permanent/determinant.

Each row of a matrix is multiplied by the lcm of its denominators, which
turns the entries into Gaussian integers. Every term of a generalized matrix
function takes exactly one entry per row, so the value of the original matrix
is the value of the scaled one divided by the product of the row scales.

Real matrices use plain ints; otherwise an entry is an (re, im) pair.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import NamedTuple

from .exact import ExactComplex


class Ring(NamedTuple):
    zero: object
    one: object
    add: object
    sub: object
    mul: object
    exact_div: object


def _gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gdiv(a, b):
    norm = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % norm or im % norm:
        raise ArithmeticError("inexact Gaussian division")
    return (re // norm, im // norm)


def _idiv(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact integer division")
    return q


INTEGERS = Ring(0, 1, operator.add, operator.sub, operator.mul, _idiv)
GAUSSIAN = Ring((0, 0), (1, 0), _gadd, _gsub, _gmul, _gdiv)


def scaled_rows(matrix):
    """Return (ring, rows, scale) with matrix == rows / scale row-product-wise."""
    rows = matrix.rows
    real = all(x.im == 0 for row in rows for x in row)
    scale = 1
    out = []
    for row in rows:
        d = 1
        for x in row:
            d = math.lcm(d, x.re.denominator, x.im.denominator)
        scale *= d
        if real:
            out.append([int(x.re * d) for x in row])
        else:
            out.append([(int(x.re * d), int(x.im * d)) for x in row])
    return (INTEGERS if real else GAUSSIAN), out, scale


def to_exact(ring: Ring, value, scale: int):
    if ring is INTEGERS:
        return ExactComplex(Fraction(value, scale))
    return ExactComplex(Fraction(value[0], scale), Fraction(value[1], scale))


def is_zero(ring: Ring, x) -> bool:
    return x == ring.zero
