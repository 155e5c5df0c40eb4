"""Generalized matrix functions d(A) = sum_{p in G} chi(p) prod_i A[i, p(i)].

``evaluate`` sums over the elements of G. ``permanent`` uses Ryser's
inclusion-exclusion formula and ``determinant`` fraction-free (Bareiss)
elimination; both agree exactly with ``evaluate`` for the trivial and sign
weights on S_n.
"""

from __future__ import annotations

from ..perm_core import DegreeError, Permutation, moved_set
from ._ring import INTEGERS, scaled_rows, to_exact
from .exact import ZERO, ExactComplex
from .matrix import SquareMatrix
from .weights import WeightedGroup, built_in_weights


def evaluate(w: WeightedGroup, a: SquareMatrix) -> ExactComplex:
    if a.n != w.n:
        raise DegreeError(f"matrix is {a.n}x{a.n} but the group acts on {w.n} points")
    ring, rows, scale = scaled_rows(a)
    # terms with equal weight are summed in the integer ring first
    acc = {}
    if ring is INTEGERS:
        for cols, chi in w._terms:
            prod = 1
            for row, j in zip(rows, cols):
                x = row[j]
                if not x:
                    break
                prod *= x
            else:
                acc[chi] = acc.get(chi, 0) + prod
    else:
        zero, one, add, mul = ring.zero, ring.one, ring.add, ring.mul
        for cols, chi in w._terms:
            prod = one
            for row, j in zip(rows, cols):
                x = row[j]
                if x == zero:
                    break
                prod = mul(prod, x)
            else:
                acc[chi] = add(acc.get(chi, zero), prod)
    total = ZERO
    for chi, s in acc.items():
        total = total + chi * to_exact(ring, s, 1)
    return total / scale if scale != 1 else total


def permanent(a: SquareMatrix) -> ExactComplex:
    """Ryser's formula walked in Gray-code order (one column toggled per step)."""
    ring, rows, scale = scaled_rows(a)
    n = a.n
    add, sub, mul = ring.add, ring.sub, ring.mul
    row_sums = [ring.zero] * n
    in_set = [False] * n
    total = ring.zero
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if in_set[j]:
            in_set[j] = False
            row_sums = [sub(s, r[j]) for s, r in zip(row_sums, rows)]
        else:
            in_set[j] = True
            row_sums = [add(s, r[j]) for s, r in zip(row_sums, rows)]
        prod = ring.one
        for s in row_sums:
            prod = mul(prod, s)
        # gray code k ^ (k >> 1) has the same popcount as the current subset
        if bin(k ^ (k >> 1)).count("1") % 2:
            total = sub(total, prod)
        else:
            total = add(total, prod)
    if n % 2:
        total = sub(ring.zero, total)
    return to_exact(ring, total, scale)


def permanent_naive(a: SquareMatrix) -> ExactComplex:
    return evaluate(built_in_weights("trivial", a.n), a)


def determinant(a: SquareMatrix) -> ExactComplex:
    """Bareiss elimination on the row-scaled Gaussian-integer matrix."""
    ring, rows, scale = scaled_rows(a)
    n = a.n
    m = [list(r) for r in rows]
    zero, sub, mul, div = ring.zero, ring.sub, ring.mul, ring.exact_div
    negate = False
    prev = ring.one
    for k in range(n - 1):
        if m[k][k] == zero:
            swap = next((r for r in range(k + 1, n) if m[r][k] != zero), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            negate = not negate
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = div(sub(mul(m[i][j], pivot), mul(mik, m[k][j])), prev)
            m[i][k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    if negate:
        det = sub(zero, det)
    return to_exact(ring, det, scale)


def c_sigma(p: Permutation, i: int, j: int) -> int:
    """1 when both i and j are moved by p, else 0."""
    if not (1 <= i <= p.n and 1 <= j <= p.n):
        raise IndexError(f"({i}, {j}) outside 1..{p.n}")
    moved = moved_set(p)
    return int(i in moved and j in moved)
