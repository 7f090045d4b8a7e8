"""
Canonical pair colourings and the greedy extraction of compatible pairs.

A colouring chi of the pairs i < j of n is canonical of type
  1  if chi is constant,
  2  if chi(i,j) = chi(k,l) exactly when i = k,
  3  if chi(i,j) = chi(k,l) exactly when j = l,
  4  if chi(i,j) = chi(k,l) exactly when (i,j) = (k,l).
"""

from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from core.errors import HypothesisFailed, InvalidStructure, TooSmall

Pair = tuple[int, int]


@dataclass(frozen=True)
class CanonicalReport:
    """Type of each position's colouring; None when no single type fits."""

    types: Mapping[Hashable, int | None]

    def with_type(self, kind: int) -> list[Hashable]:
        return [x for x, t in self.types.items() if t == kind]


def classify_canonical(n: int, chi: Mapping[Pair, Hashable]) -> frozenset[int]:
    if n < 3:
        raise TooSmall(f"canonical types need n >= 3, got {n}")
    pairs = list(combinations(range(n), 2))
    missing = [p for p in pairs if p not in chi]
    if missing:
        raise InvalidStructure(f"colouring misses pairs {missing[:3]}")

    codes: dict[Hashable, int] = {}
    colour = np.array([codes.setdefault(chi[p], len(codes)) for p in pairs])
    first = np.array([i for i, _ in pairs])
    second = np.array([j for _, j in pairs])

    equal = colour[:, None] == colour[None, :]
    same_i = first[:, None] == first[None, :]
    same_j = second[:, None] == second[None, :]

    types = set()
    if equal.all():
        types.add(1)
    if (equal == same_i).all():
        types.add(2)
    if (equal == same_j).all():
        types.add(3)
    if (equal == (same_i & same_j)).all():
        types.add(4)
    return frozenset(types)


def canonical_report(n: int, colourings: Mapping[Hashable, Mapping[Pair, Hashable]]) -> CanonicalReport:
    types = {}
    for x, chi in colourings.items():
        found = classify_canonical(n, chi)
        types[x] = next(iter(found)) if len(found) == 1 else None
    return CanonicalReport(types)


def compatible_subset(fs: Mapping[Pair, Sequence[Hashable]], size: int | None = None) -> tuple[int, ...]:
    """Greedy set X of indices whose pairs have pairwise disjoint images.

    Needs f_{i,j}(x) != f_{k,l}(x) for distinct pairs at every position x.
    """
    if size is None:
        size = 1 + max((j for _, j in fs), default=0)
    pairs = sorted(fs)
    width = len(fs[pairs[0]]) if pairs else 0
    for x in range(width):
        column = [fs[p][x] for p in pairs]
        if len(set(column)) != len(column):
            raise HypothesisFailed(f"position {x} takes the same value on two pairs")
    if size < 2:
        return tuple(range(size))

    images = {p: set(fs[p]) for p in pairs}
    chosen = [0, 1]
    kept: list[Pair] = [(0, 1)]
    for t in range(2, size):
        new = [(i, t) for i in chosen]
        if all(images[q].isdisjoint(images[p]) for q in new for p in kept + new if p != q):
            chosen.append(t)
            kept += new
    return tuple(chosen)
