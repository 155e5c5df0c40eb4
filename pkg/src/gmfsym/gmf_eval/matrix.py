"""Square matrices over ExactComplex."""

from __future__ import annotations

import random

from ..perm_core import Permutation, inverse
from .exact import ONE, ZERO, ExactComplex


class SquareMatrix:
    """Immutable n x n matrix. ``symmetric`` is computed, never asserted by callers."""

    __slots__ = ("rows", "symmetric")

    def __init__(self, rows):
        rows = tuple(tuple(ExactComplex.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must be at least 1 x 1")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(
            self,
            "symmetric",
            all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    def __reduce__(self):
        return (SquareMatrix, (self.rows,))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> ExactComplex:
        """1-based entry [A]_ij."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(zip(*self.rows))

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append([sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in cols])
        return SquareMatrix(out)

    def scale(self, c) -> "SquareMatrix":
        c = ExactComplex.coerce(c)
        return SquareMatrix([[c * x for x in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"SquareMatrix([{body}])"


def identity(n: int) -> SquareMatrix:
    return SquareMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def constant(n: int, value) -> SquareMatrix:
    return SquareMatrix([[value] * n for _ in range(n)])


def s_sigma_matrix(p: Permutation) -> SquareMatrix:
    """0/1 matrix with a 1 at (i, j) exactly when j = p(i) or j = p^-1(i)."""
    n = p.n
    pinv = inverse(p).images
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][p.images[i] - 1] = ONE
        rows[i][pinv[i] - 1] = ONE
    return SquareMatrix(rows)


def permutation_matrix(p: Permutation) -> SquareMatrix:
    n = p.n
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][p.images[i] - 1] = ONE
    return SquareMatrix(rows)


def random_symmetric_matrix(n: int, seed: int, bound: int = 5) -> SquareMatrix:
    """Symmetric integer matrix with entries uniform in [-bound, bound]."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = random.Random(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    return SquareMatrix(rows)


def random_matrix(n: int, seed: int, bound: int = 5, gaussian: bool = False) -> SquareMatrix:
    """General matrix; with ``gaussian`` the imaginary parts are random too."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            im = rng.randint(-bound, bound) if gaussian else 0
            row.append(ExactComplex(rng.randint(-bound, bound), im))
        rows.append(row)
    return SquareMatrix(rows)
