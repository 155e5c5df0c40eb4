"""Permutations of [n], cycle decompositions and enumeration.

Points are 1-based everywhere a caller can see them. Composition is
right-to-left: ``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

import contextlib
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_CAP = 9
_cap = DEFAULT_CAP


class DegreeError(ValueError):
    """Two objects that must share a degree do not."""


class EnumerationCapError(ValueError):
    pass


def enumeration_cap() -> int:
    return _cap


def set_enumeration_cap(cap: int) -> None:
    global _cap
    if cap < 1:
        raise ValueError("enumeration cap must be positive")
    _cap = cap


@contextlib.contextmanager
def override_cap(cap: int):
    old = _cap
    set_enumeration_cap(cap)
    try:
        yield
    finally:
        set_enumeration_cap(old)


def _check_cap(n: int) -> None:
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    if n > _cap:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap {_cap} ({n}! permutations)"
        )


class Permutation:
    """A bijection of {1..n} stored as a tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs degree n >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"images {list(images)} are not a bijection of 1..{n}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        object.__setattr__(p, "_hash", hash(images))
        return p

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexError(f"point {i} outside 1..{self.n}")
        return self.images[i - 1]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return (self.n, self.images) < (other.n, other.images)

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __reduce__(self):
        return (Permutation, (self.images,))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycle_notation(self) -> str:
        cycles = decompose(self).cycles
        if not cycles:
            return "()"
        return "".join(str(c) for c in cycles)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return self.cycle_notation()


@dataclass(frozen=True)
class Cycle:
    """A cycle (a1 a2 ... as) with s >= 2, rotated so a1 is the minimum."""

    n: int
    support: tuple

    def __post_init__(self):
        support = tuple(int(x) for x in self.support)
        if len(support) < 2:
            raise ValueError("cycles must have length at least 2")
        if len(set(support)) != len(support):
            raise ValueError(f"cycle {support} repeats a point")
        if not all(1 <= a <= self.n for a in support):
            raise ValueError(f"cycle {support} leaves 1..{self.n}")
        k = support.index(min(support))
        object.__setattr__(self, "support", support[k:] + support[:k])

    def __len__(self):
        return len(self.support)

    def to_permutation(self) -> Permutation:
        images = list(range(1, self.n + 1))
        s = self.support
        for k, a in enumerate(s):
            images[a - 1] = s[(k + 1) % len(s)]
        return Permutation._trusted(tuple(images))

    def inverse(self) -> "Cycle":
        return Cycle(self.n, tuple(reversed(self.support)))

    def __str__(self):
        return "(" + " ".join(map(str, self.support)) + ")"


@dataclass(frozen=True)
class CycleDecomposition:
    n: int
    cycles: tuple

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def cycle_type(self) -> tuple:
        """Partition of n: cycle lengths in decreasing order, fixed points as 1s."""
        moved = sum(len(c) for c in self.cycles)
        lengths = sorted((len(c) for c in self.cycles), reverse=True)
        return tuple(lengths + [1] * (self.n - moved))

    def __str__(self):
        return "".join(str(c) for c in self.cycles) or "()"


def _check_same_degree(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise DegreeError(f"degree mismatch: {p.n} vs {q.n}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    _check_same_degree(p, q)
    pi = p.images
    return Permutation._trusted(tuple(pi[x - 1] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation._trusted(tuple(inv))


def power(p: Permutation, t: int) -> Permutation:
    if t < 0:
        p, t = inverse(p), -t
    result = Permutation.identity(p.n)
    base = p
    while t:
        if t & 1:
            result = compose(result, base)
        base = compose(base, base)
        t >>= 1
    return result


def fix_set(p: Permutation) -> frozenset:
    return frozenset(i for i, x in enumerate(p.images, 1) if x == i)


def moved_set(p: Permutation) -> frozenset:
    return frozenset(i for i, x in enumerate(p.images, 1) if x != i)


def decompose(p: Permutation) -> CycleDecomposition:
    # Scanning starts at increasing points, so every orbit is entered at its
    # minimum and cycles come out sorted by minimum.
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start] or p.images[start - 1] == start:
            continue
        orbit = []
        x = start
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = p.images[x - 1]
        cycles.append(Cycle(p.n, tuple(orbit)))
    return CycleDecomposition(p.n, tuple(cycles))


def from_cycles(n: int, cycles: Iterable) -> Permutation:
    """Multiply pairwise disjoint cycles; each may be a Cycle or a point sequence."""
    images = list(range(1, n + 1))
    used = set()
    for c in cycles:
        support = c.support if isinstance(c, Cycle) else tuple(c)
        if len(support) < 2:
            # a 1-cycle is harmless notation for a fixed point
            if support and not 1 <= support[0] <= n:
                raise ValueError(f"point {support[0]} outside 1..{n}")
            continue
        cyc = Cycle(n, support)
        overlap = used.intersection(cyc.support)
        if overlap:
            raise ValueError(f"cycles overlap on {sorted(overlap)}")
        used.update(cyc.support)
        s = cyc.support
        for k, a in enumerate(s):
            images[a - 1] = s[(k + 1) % len(s)]
    return Permutation._trusted(tuple(images))


def sign(p: Permutation) -> int:
    parity = sum(len(c) - 1 for c in decompose(p).cycles) % 2
    return -1 if parity else 1


def cycle_type(p: Permutation) -> tuple:
    return decompose(p).cycle_type()


def two_involution_factorization(p: Permutation) -> tuple:
    """Return involutions (alpha, beta) with compose(alpha, beta) == p.

    On a cycle c_0 -> c_1 -> ... -> c_{s-1}, beta reflects c_k to c_{-k}
    and alpha reflects c_j to c_{1-j} (indices mod s).
    """
    alpha = list(range(1, p.n + 1))
    beta = list(range(1, p.n + 1))
    for cyc in decompose(p).cycles:
        c = cyc.support
        s = len(c)
        for k in range(s):
            beta[c[k] - 1] = c[(-k) % s]
            alpha[c[k] - 1] = c[(1 - k) % s]
    return Permutation._trusted(tuple(alpha)), Permutation._trusted(tuple(beta))


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """All n! permutations in Heap's-algorithm order: id, (1 2), ...

    Each call returns a fresh generator.
    """
    _check_cap(n)
    a = list(range(1, n + 1))
    counters = [0] * n
    yield Permutation._trusted(tuple(a))
    i = 1
    while i < n:
        if counters[i] < i:
            k = 0 if i % 2 == 0 else counters[i]
            a[k], a[i] = a[i], a[k]
            yield Permutation._trusted(tuple(a))
            counters[i] += 1
            i = 1
        else:
            counters[i] = 0
            i += 1


def enumerate_f3c(n: int) -> Iterator[Permutation]:
    """Permutations moving at most three points.

    Order: identity, transpositions, then 3-cycles, each group by support.
    """
    _check_cap(n)
    yield Permutation.identity(n)
    for a, b in itertools.combinations(range(1, n + 1), 2):
        yield from_cycles(n, [(a, b)])
    yield from three_cycles(n)


def three_cycles(n: int) -> Iterator[Permutation]:
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        yield from_cycles(n, [(a, b, c)])
        yield from_cycles(n, [(a, c, b)])


def partitions(n: int) -> list:
    """Integer partitions of n, each in decreasing order."""
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return out


def parse_cycle_string(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation such as "(1 2 3)(4 5)"; "()" or "" is the identity.

    Points may be separated by spaces or commas. Without ``n`` the degree is
    the largest point mentioned.
    """
    body = text.strip()
    groups = []
    while body:
        if not body.startswith("("):
            raise ValueError(f"malformed cycle notation: {text!r}")
        end = body.find(")")
        if end < 0:
            raise ValueError(f"unbalanced parenthesis in {text!r}")
        inner = body[1:end].replace(",", " ").split()
        try:
            groups.append(tuple(int(x) for x in inner))
        except ValueError:
            raise ValueError(f"non-integer point in {text!r}") from None
        body = body[end + 1:].strip()
    points = [a for g in groups for a in g]
    if n is None:
        n = max(points, default=1)
    if any(not 1 <= a <= n for a in points):
        raise ValueError(f"cycle notation {text!r} leaves 1..{n}")
    return from_cycles(n, groups)
