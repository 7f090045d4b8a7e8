"""
Graphs derived from structures and graph constructions: Gaifman graphs, arc
graphs, subdivisions, subdivided cliques, well-foundedness and permutation
equivalence.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from loguru import logger

from core.constants import EDGE
from core.errors import ModeMismatch, NotDirected, NotWellFounded, SignatureMismatch
from core.structure import (
    Inner,
    LabelTable,
    Native,
    Structure,
    TaggedStructure,
    Tuple,
    make_graph,
)

SubdivisionMode = Literal["undirected", "directed"]


# --- Derived graphs ---

def gaifman(m: Structure) -> Structure:
    """Undirected graph joining distinct elements that share a tuple. Loops are dropped."""
    edges: set[Tuple] = set()
    for _, t in m.tuples():
        for x, y in combinations(set(t), 2):
            edges.add((x, y))
            edges.add((y, x))
    return make_graph(m.size, edges, m.labels)


def isolated_points(m: Structure) -> frozenset[int]:
    touched = {x for _, t in m.tuples() for x in t}
    return frozenset(x for x in m.domain if x not in touched)


def is_undirected(g: Structure) -> bool:
    e = g.rel(EDGE)
    return g.is_graph and all(u != v and (v, u) in e for u, v in e)


def arc_vertices(m: Structure) -> tuple[int, ...]:
    """Elements occurring in one of the first two coordinates of some tuple."""
    return tuple(sorted({x for _, t in m.tuples() if len(t) >= 2 for x in t[:2]}))


def is_directed(m: Structure) -> bool:
    seen: set[frozenset[int]] = set()
    for _, t in m.tuples():
        if len(t) < 2:
            continue
        if t[0] == t[1]:
            return False
        key = frozenset(t[:2])
        if key in seen:
            return False
        seen.add(key)
    return True


@dataclass(frozen=True)
class ArcGraph:
    """Arc graph on the vertex set V, with V's elements listed in `vertices`."""

    graph: Structure
    vertices: Tuple

    def index(self, x: int) -> int:
        return self.vertices.index(x)


def arc_graph(m: Structure) -> ArcGraph:
    if not is_directed(m):
        raise NotDirected(f"structure is not directed: {m!r}")
    vertices = arc_vertices(m)
    index = {x: i for i, x in enumerate(vertices)}
    edges = {(index[t[0]], index[t[1]]) for _, t in m.tuples() if len(t) >= 2}
    labels = [m.labels[x] for x in vertices] if m.labels else None
    return ArcGraph(make_graph(len(vertices), edges, labels), vertices)


# --- Named graphs ---

def edgeless(n: int) -> Structure:
    return make_graph(n, ())


def complete_graph(n: int) -> Structure:
    return make_graph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def tournament(n: int) -> Structure:
    """Transitive tournament: edges u -> v for u < v."""
    return make_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def directed_path(length: int) -> Structure:
    return make_graph(length + 1, ((i, i + 1) for i in range(length)))


def directed_cycle(n: int) -> Structure:
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def undirected_cycle(n: int) -> Structure:
    return make_graph(n, {e for i in range(n) for e in ((i, (i + 1) % n), ((i + 1) % n, i))})


# --- Subdivisions ---

def subdivide(g: Structure, r: int, mode: SubdivisionMode) -> TaggedStructure:
    """Replace every edge by a path of length r+1.

    Subdivision points of edge (u, v) are tagged Inner(u, v, c) for c = 1..r,
    counted from u (the smaller endpoint, or the source). They follow the
    natives, grouped by edge in lexicographic order.
    """
    if mode == "undirected":
        if not is_undirected(g):
            raise ModeMismatch("undirected subdivision needs a symmetric loop-free graph")
        base = [(u, v) for u, v in g.edges if u < v]
    elif mode == "directed":
        if not (g.is_graph and is_directed(g)):
            raise ModeMismatch("directed subdivision needs an anti-symmetric loop-free graph")
        base = g.edges
    else:
        raise ModeMismatch(f"unknown subdivision mode {mode!r}")

    tags = [Native(x) for x in g.domain]
    tags += [Inner(u, v, c) for u, v in base for c in range(1, r + 1)]
    table = LabelTable(tuple(tags))

    edges: set[Tuple] = set()
    for u, v in base:
        walk = [u] + [table.index(Inner(u, v, c)) for c in range(1, r + 1)] + [v]
        for x, y in zip(walk, walk[1:]):
            edges.add((x, y))
            if mode == "undirected":
                edges.add((y, x))
    return TaggedStructure(make_graph(len(tags), edges), table)


def subdivided_clique(n: int, r: int) -> TaggedStructure:
    return subdivide(complete_graph(n), r, "undirected")


def subdivided_half_graph(n: int, r: int) -> TaggedStructure:
    """r-subdivided half-graph: a_i = i, b_j = n + j, edge {a_i, b_j} iff i <= j."""
    pairs = [(i, n + j) for i in range(n) for j in range(i, n)]
    half = make_graph(2 * n, pairs + [(v, u) for u, v in pairs])
    return subdivide(half, r, "undirected")


# --- Well-foundedness ---

def _topological_order(g: Structure) -> list[int] | None:
    """Lexicographically least topological order, or None if g has a cycle."""
    indegree = Counter(v for _, v in g.edges)
    succ: dict[int, list[int]] = defaultdict(list)
    for u, v in g.edges:
        succ[u].append(v)
    ready = [x for x in g.domain if indegree[x] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        x = heapq.heappop(ready)
        order.append(x)
        for y in succ[x]:
            indegree[y] -= 1
            if indegree[y] == 0:
                heapq.heappush(ready, y)
    return order if len(order) == g.size else None


def is_well_founded(g: Structure) -> bool:
    return _topological_order(g) is not None


def ordinal_embedding(g: Structure) -> Tuple:
    """Injective map f onto 0..n-1 with f(u) < f(v) for every edge (u, v)."""
    order = _topological_order(g)
    if order is None:
        raise NotWellFounded("graph has a directed cycle")
    f = [0] * g.size
    for position, x in enumerate(order):
        f[x] = position
    return tuple(f)


# --- Permutation equivalence ---

@dataclass(frozen=True)
class PermutationWitness:
    """Bijection f plus, per source tuple m, a one-line permutation s with
    image tuple (f(m)[s[0]], f(m)[s[1]], ...)."""

    bijection: Tuple
    permutations: Mapping[str, Mapping[Tuple, Tuple]]

    def apply(self, name: str, t: Tuple) -> Tuple:
        fm = tuple(self.bijection[x] for x in t)
        return tuple(fm[i] for i in self.permutations[name][t])

    def verify(self, m: Structure, n: Structure) -> bool:
        if sorted(self.bijection) != list(range(n.size)) or m.size != n.size:
            return False
        for name in m.signature.names:
            images = [self.apply(name, t) for t in m.rel(name)]
            if len(set(images)) != len(images) or set(images) != n.rel(name):
                return False
        return True

    def inverse(self) -> PermutationWitness:
        inv = [0] * len(self.bijection)
        for x, y in enumerate(self.bijection):
            inv[y] = x
        perms: dict[str, dict[Tuple, Tuple]] = {}
        for name, table in self.permutations.items():
            perms[name] = {}
            for t, s in table.items():
                image = self.apply(name, t)
                back = [0] * len(s)
                for i, j in enumerate(s):
                    back[j] = i
                perms[name][image] = tuple(back)
        return PermutationWitness(tuple(inv), perms)


def _least_permutation(source: Tuple, target: Tuple) -> Tuple:
    used: set[int] = set()
    out = []
    for value in target:
        j = next(j for j, x in enumerate(source) if x == value and j not in used)
        used.add(j)
        out.append(j)
    return tuple(out)


def permutation_equivalent(m: Structure, n: Structure) -> PermutationWitness | None:
    """First witness in lexicographic bijection order, or None.

    Tuples are matched one to one: each tuple of M goes to a distinct tuple
    of N that is a rearrangement of its image.
    """
    if m.signature != n.signature:
        raise SignatureMismatch("permutation equivalence needs a common signature")
    if m.size != n.size or any(len(m.rel(r)) != len(n.rel(r)) for r in m.signature.names):
        return None

    names = m.signature.names

    def profile(s: Structure, x: int) -> tuple[int, ...]:
        return tuple(sum(1 for t in s.rel(r) if x in t) for r in names)

    m_profile = [profile(m, x) for x in m.domain]
    n_profile = [profile(n, y) for y in n.domain]
    wanted = {r: Counter(tuple(sorted(t)) for t in n.rel(r)) for r in names}
    check_at: dict[int, list[tuple[str, Tuple]]] = defaultdict(list)
    for r, t in m.tuples():
        check_at[max(t)].append((r, t))

    f: list[int] = []
    used: set[int] = set()
    seen = {r: Counter() for r in names}

    def extend() -> bool:
        x = len(f)
        if x == m.size:
            return True
        for y in n.domain:
            if y in used or n_profile[y] != m_profile[x]:
                continue
            f.append(y)
            used.add(y)
            added = []
            ok = True
            for r, t in check_at[x]:
                key = tuple(sorted(f[z] for z in t))
                seen[r][key] += 1
                added.append((r, key))
                if seen[r][key] > wanted[r][key]:
                    ok = False
                    break
            if ok and extend():
                return True
            for r, key in added:
                seen[r][key] -= 1
            f.pop()
            used.discard(y)
        return False

    if not extend():
        logger.debug("[core] no permutation witness")
        return None

    perms: dict[str, dict[Tuple, Tuple]] = {}
    for r in names:
        pool: dict[Tuple, list[Tuple]] = defaultdict(list)
        for t in sorted(n.rel(r)):
            pool[tuple(sorted(t))].append(t)
        perms[r] = {}
        for t in sorted(m.rel(r)):
            fm = tuple(f[x] for x in t)
            target = pool[tuple(sorted(fm))].pop(0)
            perms[r][t] = _least_permutation(fm, target)
    return PermutationWitness(tuple(f), perms)
