"""Weighted groups (G, chi): a subgroup of S_n with a complex weight per element."""

from __future__ import annotations

import math
import random
from collections import deque
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from ..perm_core import (
    DegreeError,
    Permutation,
    compose,
    cycle_type,
    enumerate_sn,
    from_cycles,
    inverse,
    partitions,
    sign,
)
from .exact import ONE, ZERO, ExactComplex


class NotASubgroupError(ValueError):
    pass


class WeightError(ValueError):
    """chi is missing values, has extra values, or breaks a required property."""


class WeightedGroup:
    """G <= S_n together with chi: G -> C.

    Construction checks that G contains the identity and is closed under
    composition and inversion (|G|^2 products). ``trusted=True`` skips that
    for groups produced by the generators in this module.
    """

    def __init__(self, n: int, chi: Mapping, *, trusted: bool = False, label: str = ""):
        values = {}
        for p, v in chi.items():
            if p.n != n:
                raise DegreeError(f"element {p!r} has degree {p.n}, expected {n}")
            values[p] = ExactComplex.coerce(v)
        self.n = n
        self.label = label
        self.elements = frozenset(values)
        self.chi = MappingProxyType(values)
        if not trusted:
            _validate_subgroup(n, self.elements)
        # (0-based images, weight) for the non-zero weights, in a fixed order
        self._terms = tuple(
            (tuple(x - 1 for x in p.images), values[p])
            for p in sorted(values)
            if values[p]
        )

    @classmethod
    def from_function(cls, n: int, elements: Iterable[Permutation], f: Callable, **kw) -> "WeightedGroup":
        return cls(n, {p: f(p) for p in elements}, **kw)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_full_symmetric_group(self) -> bool:
        return len(self.elements) == math.factorial(self.n)

    def __repr__(self):
        name = self.label or "WeightedGroup"
        return f"<{name}: n={self.n}, |G|={self.order}>"


def _validate_subgroup(n: int, elements: frozenset) -> None:
    if Permutation.identity(n) not in elements:
        raise NotASubgroupError("not a subgroup: identity missing")
    for p in elements:
        if inverse(p) not in elements:
            raise NotASubgroupError(f"not a subgroup: inverse of {p} missing")
    for p in elements:
        for q in elements:
            if compose(p, q) not in elements:
                raise NotASubgroupError(f"not a subgroup: {p} * {q} missing")


def chi_hat(w: WeightedGroup, p: Permutation) -> ExactComplex:
    """chi(p) on G, zero off G."""
    if p.n != w.n:
        raise DegreeError(f"degree mismatch: {p.n} vs {w.n}")
    return w.chi.get(p, ZERO)


# -- groups -----------------------------------------------------------------

def symmetric_group(n: int) -> frozenset:
    return frozenset(enumerate_sn(n))


def alternating_group(n: int) -> frozenset:
    return frozenset(p for p in enumerate_sn(n) if sign(p) == 1)


def generated_group(n: int, generators: Iterable[Permutation]) -> frozenset:
    gens = list(generators)
    identity = Permutation.identity(n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return frozenset(seen)


def cyclic_group(generator: Permutation) -> list:
    """[g^0, g^1, ..., g^(m-1)] for the order m of g."""
    out = [Permutation.identity(generator.n)]
    g = generator
    while not g.is_identity():
        out.append(g)
        g = compose(g, generator)
    return out


# -- standard weights -------------------------------------------------------

def built_in_weights(name: str, n: int) -> WeightedGroup:
    """S_n with chi = 1 ("trivial", the permanent) or chi = sign (the determinant)."""
    if name == "trivial":
        return WeightedGroup(n, {p: ONE for p in enumerate_sn(n)}, trusted=True, label="trivial")
    if name == "sign":
        return WeightedGroup(n, {p: ExactComplex(sign(p)) for p in enumerate_sn(n)}, trusted=True, label="sign")
    raise ValueError(f"unknown built-in weights {name!r} (expected 'trivial' or 'sign')")


def class_function_weights(n: int, table: Mapping, label: str = "class-table") -> WeightedGroup:
    """S_n with chi(p) = table[cycle type of p]; keys are partitions like (3, 1)."""
    normalized = {tuple(sorted((int(k) for k in key), reverse=True)): ExactComplex.coerce(v) for key, v in table.items()}
    missing = [lam for lam in partitions(n) if lam not in normalized]
    if missing:
        raise WeightError(f"class table misses cycle types {missing}")
    extra = [lam for lam in normalized if sum(lam) != n]
    if extra:
        raise WeightError(f"class table has keys that are not partitions of {n}: {extra}")
    return WeightedGroup(n, {p: normalized[cycle_type(p)] for p in enumerate_sn(n)}, trusted=True, label=label)


def cyclic_power_weights(generator: Permutation, value, label: str = "cyclic") -> WeightedGroup:
    """G = <g> with chi(g^k) = value^k; needs value^|G| == 1 to be well defined."""
    value = ExactComplex.coerce(value)
    elems = cyclic_group(generator)
    if value ** len(elems) != ONE:
        raise WeightError(f"{value}^{len(elems)} != 1, so chi(g^k) = {value}^k is not well defined")
    return WeightedGroup(generator.n, {g: value ** k for k, g in enumerate(elems)}, trusted=True, label=label)


def inverse_weights(w: WeightedGroup, label: str = "") -> WeightedGroup:
    """psi(p) := chi(p^-1) on the same group."""
    return WeightedGroup(
        w.n, {p: w.chi[inverse(p)] for p in w.elements}, trusted=True, label=label or f"{w.label}-inverse"
    )


def _random_gaussian(rng: random.Random, bound: int, gaussian: bool) -> ExactComplex:
    im = rng.randint(-bound, bound) if gaussian else 0
    return ExactComplex(rng.randint(-bound, bound), im)


def random_class_table(n: int, seed: int, bound: int = 3, gaussian: bool = False, nonzero_identity: bool = True) -> dict:
    rng = random.Random(seed)
    table = {}
    for lam in partitions(n):
        v = _random_gaussian(rng, bound, gaussian)
        while nonzero_identity and lam == (1,) * n and not v:
            v = _random_gaussian(rng, bound, gaussian)
        table[lam] = v
    return table


def random_function_weights(
    n: int, seed: int, bound: int = 3, gaussian: bool = True, elements: Iterable[Permutation] | None = None,
    label: str = "random",
) -> WeightedGroup:
    """Arbitrary (generally non-class) weights on a group, S_n by default."""
    rng = random.Random(seed)
    elems = sorted(elements) if elements is not None else list(enumerate_sn(n))
    chi = {p: _random_gaussian(rng, bound, gaussian) for p in elems}
    return WeightedGroup(n, chi, trusted=elements is None, label=label)


def is_class_function(w: WeightedGroup) -> bool:
    """chi(g x g^-1) == chi(x) for all g, x in G."""
    if w.is_full_symmetric_group():
        # conjugacy classes of S_n are the cycle types
        by_type = {}
        for x, v in w.chi.items():
            if by_type.setdefault(cycle_type(x), v) != v:
                return False
        return True
    for g in w.elements:
        gi = inverse(g)
        for x, v in w.chi.items():
            if w.chi[compose(compose(g, x), gi)] != v:
                return False
    return True


def gaussian_cyclic_weights(n: int) -> WeightedGroup:
    """chi(g^k) = i^k on <g>, g the n-cycle when 4 | n and (1 2 3 4) otherwise."""
    if n < 4:
        raise ValueError("need n >= 4 for a cyclic group carrying chi(g^k) = i^k")
    support = range(1, n + 1) if n % 4 == 0 else range(1, 5)
    return cyclic_power_weights(from_cycles(n, [tuple(support)]), ExactComplex(0, 1), label="gaussian-cyclic")

