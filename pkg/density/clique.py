"""
Subdivided-clique witnesses in undirected graphs and the finite density
profile built from them.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Literal

from core.errors import NotUndirected
from core.graph import is_undirected, subdivided_clique, subdivided_half_graph
from core.structure import Inner, Native, Structure, TaggedStructure, Tuple
from hom.engine import HomQuery, exists, iter_homs

Pattern = Literal["clique", "half"]


@dataclass(frozen=True)
class CliqueWitness:
    natives: Tuple
    paths: Mapping[tuple[int, int], Tuple]  # (i, j), i < j -> a_i .. a_j

    @property
    def n(self) -> int:
        return len(self.natives)


def _by_degree(g: Structure) -> tuple[Structure, Tuple]:
    """Relabel g so that higher Gaifman degree comes first; returns (host, rank)."""
    degree = Counter(u for u, _ in g.edges)
    rank = tuple(sorted(g.domain, key=lambda x: (-degree[x], x)))
    position = [0] * g.size
    for i, x in enumerate(rank):
        position[x] = i
    return g.image(position, g.size), rank


def _decode(pattern: TaggedStructure, mapping: Tuple, n: int, r: int) -> CliqueWitness:
    natives = tuple(mapping[pattern.index(Native(i))] for i in range(n))
    paths = {
        (i, j): (natives[i],) + tuple(mapping[pattern.index(Inner(i, j, c))] for c in range(1, r + 1)) + (natives[j],)
        for i in range(n)
        for j in range(i + 1, n)
    }
    return CliqueWitness(natives, paths)


def iter_clique_witnesses(g: Structure, n: int, r: int) -> Iterator[CliqueWitness]:
    if not is_undirected(g):
        raise NotUndirected("clique detection needs an undirected graph")
    pattern = subdivided_clique(n, r)
    host, rank = _by_degree(g)
    for f in iter_homs(HomQuery(pattern.structure, host, injective=True), lexicographic=False):
        yield _decode(pattern, tuple(rank[y] for y in f.mapping), n, r)


def detect_subdivided_clique(g: Structure, n: int, r: int) -> CliqueWitness | None:
    return next(iter_clique_witnesses(g, n, r), None)


def _pattern(kind: Pattern, n: int, r: int) -> Structure:
    return (subdivided_clique(n, r) if kind == "clique" else subdivided_half_graph(n, r)).structure


def density_profile(g: Structure, max_n: int, max_r: int, kind: Pattern = "clique") -> dict[int, int]:
    """For each r <= max_r, the largest n <= max_n whose r-subdivided pattern embeds in g."""
    if not is_undirected(g):
        raise NotUndirected("density profiles need an undirected graph")
    host, _ = _by_degree(g)
    profile = {}
    for r in range(max_r + 1):
        best = 0
        for n in range(1, max_n + 1):
            if not exists(HomQuery(_pattern(kind, n, r), host, injective=True)):
                break
            best = n
        profile[r] = best
    return profile
