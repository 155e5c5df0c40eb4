"""Equivalence classes [sigma], the sets X_sigma and their type-I/II split.

For sigma = sigma_1 ... sigma_k (disjoint cycles of length >= 2):

* [sigma] inverts any subset of the cycles;
* X_sigma replaces each cycle by an element of X_cycle, where an odd cycle
  contributes {c, c^-1} and an even cycle additionally contributes its two
  splittings into transpositions.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import reduce

from .perm_core import (
    Cycle,
    Permutation,
    compose,
    decompose,
    enumerate_sn,
    from_cycles,
    inverse,
)


class PermType(enum.Enum):
    TYPE_I = "type-I"
    TYPE_II = "type-II"


@dataclass(frozen=True)
class PermClass:
    representative: Permutation
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in self.members


@dataclass(frozen=True)
class XSet:
    source: Permutation
    members: frozenset

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class XSetPiece:
    index_set: tuple      # 1-based positions among the type-II cycles
    classes: tuple        # PermClass, one per choice of splittings

    @property
    def members(self) -> frozenset:
        return frozenset().union(*(c.members for c in self.classes))


@dataclass(frozen=True)
class XSetPartition:
    source: Permutation
    own_class: PermClass
    pieces: tuple
    type_ii_cycles: tuple

    def blocks(self) -> list:
        """All classes of the partition, own class first."""
        out = [self.own_class]
        for piece in self.pieces:
            out.extend(piece.classes)
        return out


def _product(n: int, perms) -> Permutation:
    return reduce(compose, perms, Permutation.identity(n))


def equivalence_class(p: Permutation) -> PermClass:
    cycles = decompose(p).cycles
    choices = []
    for c in cycles:
        cp = c.to_permutation()
        # transpositions are self-inverse: one choice, not two
        choices.append((cp,) if len(c) == 2 else (cp, inverse(cp)))
    members = frozenset(_product(p.n, combo) for combo in itertools.product(*choices))
    return PermClass(min(members), members)


def s_split(c: Cycle) -> frozenset:
    """The two ways of cutting an even cycle into adjacent transpositions."""
    s = len(c)
    if s % 2:
        raise ValueError(f"s_split needs an even-length cycle, got {c}")
    a = c.support
    first = from_cycles(c.n, [(a[k], a[k + 1]) for k in range(0, s, 2)])
    last = from_cycles(c.n, [(a[s - 1], a[0])] + [(a[k], a[k + 1]) for k in range(1, s - 1, 2)])
    return frozenset({first, last})


def x_set_cycle(c: Cycle) -> frozenset:
    cp = c.to_permutation()
    base = {cp, inverse(cp)}
    if len(c) % 2 == 0:
        base |= s_split(c)
    return frozenset(base)


def x_set(p: Permutation) -> XSet:
    factors = [x_set_cycle(c) for c in decompose(p).cycles]
    members = frozenset(_product(p.n, combo) for combo in itertools.product(*factors))
    return XSet(p, members)


def is_type_ii_cycle(c: Cycle) -> bool:
    return len(c) % 2 == 0 and len(c) >= 4


def count_type_ii_cycles(p: Permutation) -> int:
    return sum(1 for c in decompose(p).cycles if is_type_ii_cycle(c))


def type_of(p: Permutation) -> PermType:
    return PermType.TYPE_II if count_type_ii_cycles(p) else PermType.TYPE_I


def type_of_by_definition(p: Permutation) -> PermType:
    """Type decided straight from X_sigma == [sigma]; slow, used as a cross-check."""
    same = x_set(p).members == equivalence_class(p).members
    return PermType.TYPE_I if same else PermType.TYPE_II


def x_set_partition(p: Permutation) -> XSetPartition:
    """Split X_p into [p] and the pieces indexed by non-empty sets S of type-II cycles.

    The piece for S takes one splitting of every type-II cycle in S and the
    class of the remaining cycles, so it is a union of 2^|S| classes.
    Pieces are listed by |S|, then lexicographically.
    """
    cycles = decompose(p).cycles
    type_ii = tuple(k for k, c in enumerate(cycles) if is_type_ii_cycle(c))
    pieces = []
    for size in range(1, len(type_ii) + 1):
        for chosen in itertools.combinations(range(len(type_ii)), size):
            chosen_cycles = [type_ii[k] for k in chosen]
            splits = [sorted(s_split(cycles[k])) for k in chosen_cycles]
            rest = [cycles[k].to_permutation() for k in range(len(cycles)) if k not in chosen_cycles]
            classes = []
            for pick in itertools.product(*splits):
                rep = _product(p.n, list(pick) + rest)
                classes.append(equivalence_class(rep))
            pieces.append(XSetPiece(tuple(k + 1 for k in chosen), tuple(classes)))
    return XSetPartition(p, equivalence_class(p), tuple(pieces), tuple(cycles[k] for k in type_ii))


def class_partition(n: int) -> list:
    """All equivalence classes of S_n, in the order enumerate_sn first meets them."""
    seen = set()
    classes = []
    for p in enumerate_sn(n):
        if p in seen:
            continue
        cls = equivalence_class(p)
        seen.update(cls.members)
        classes.append(cls)
    return classes
