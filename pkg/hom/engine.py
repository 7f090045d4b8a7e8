"""
Backtracking homomorphism search.

A query fixes source and target structures plus mode flags. Tuple
constraints are checked as soon as their last member is assigned; in strong
mode the reflection direction is checked the same way, never on partial
tuples. Candidate values are pre-filtered by the positions each element
occupies in source tuples.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import islice, product

from loguru import logger

from core.errors import InvalidStructure, ObjectMismatch, SignatureMismatch
from core.structure import Structure, Tuple


@dataclass(frozen=True)
class HomQuery:
    source: Structure
    target: Structure
    strong: bool = False
    injective: bool = False
    pinned: Mapping[int, int] = field(default_factory=dict)
    # Optional per-element candidate sets; elements not listed are unrestricted.
    allowed: Mapping[int, frozenset[int]] = field(default_factory=dict)
    limit: int | None = None


@dataclass(frozen=True)
class Hom:
    source: Structure
    target: Structure
    mapping: Tuple

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __len__(self) -> int:
        return len(self.mapping)

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)


def identity(m: Structure) -> Hom:
    return Hom(m, m, tuple(m.domain))


def _check_query(q: HomQuery) -> None:
    if q.source.signature != q.target.signature:
        raise SignatureMismatch(
            f"source signature {list(q.source.signature.names)} != target {list(q.target.signature.names)}"
        )
    for x, y in q.pinned.items():
        if x not in q.source.domain or y not in q.target.domain:
            raise InvalidStructure(f"pinned pair {x}->{y} outside the domains")


def _positions(t: Tuple, x: int) -> frozenset[int]:
    return frozenset(i for i, y in enumerate(t) if y == x)


class _Search:
    def __init__(self, q: HomQuery, order: Sequence[int]) -> None:
        self.q = q
        self.order = list(order)
        self.nodes = 0
        position = {x: i for i, x in enumerate(self.order)}

        self.check_at: dict[int, list[tuple[str, Tuple]]] = defaultdict(list)
        for name, t in q.source.tuples():
            self.check_at[max(t, key=position.__getitem__)].append((name, t))

        self.containing: dict[int, list[tuple[str, Tuple]]] = defaultdict(list)
        if q.strong:
            for name, t in q.target.tuples():
                for v in set(t):
                    self.containing[v].append((name, t))

        self.domains = _candidate_values(q)

    def run(self) -> Iterator[Tuple]:
        q = self.q
        if q.injective and q.source.size > q.target.size:
            return
        if any(not self.domains[x] for x in q.source.domain):
            return
        self.assign = [-1] * q.source.size
        self.preimage: dict[int, list[int]] = defaultdict(list)
        yield from self._extend(0)

    def _extend(self, depth: int) -> Iterator[Tuple]:
        if depth == len(self.order):
            yield tuple(self.assign)
            return
        x = self.order[depth]
        for v in self.domains[x]:
            if self.q.injective and self.preimage[v]:
                continue
            self.nodes += 1
            self.assign[x] = v
            self.preimage[v].append(x)
            if self._consistent(x, v):
                yield from self._extend(depth + 1)
            self.preimage[v].pop()
            self.assign[x] = -1

    def _consistent(self, x: int, v: int) -> bool:
        target = self.q.target.relations
        for name, t in self.check_at[x]:
            if tuple(self.assign[y] for y in t) not in target[name]:
                return False
        if self.q.strong:
            source = self.q.source.relations
            for name, t in self.containing[v]:
                choices = [self.preimage[w] for w in t]
                if not all(choices):
                    continue
                for combo in product(*choices):
                    if x in combo and combo not in source[name]:
                        return False
        return True


def _candidate_values(q: HomQuery) -> list[list[int]]:
    """Values each source element may take, ascending."""
    need: dict[int, Counter] = defaultdict(Counter)
    for name, t in q.source.tuples():
        for x in set(t):
            need[x][(name, _positions(t, x))] += 1
    offer: dict[int, Counter] = defaultdict(Counter)
    for name, t in q.target.tuples():
        for v in set(t):
            offer[v][(name, _positions(t, v))] += 1

    def fits(x: int, v: int) -> bool:
        for (name, spots), k in need[x].items():
            if q.injective:
                if offer[v][(name, spots)] < k:
                    return False
            elif not any(n == name and spots <= s for n, s in offer[v]):
                return False
        return True

    domains = []
    for x in q.source.domain:
        values = q.target.domain
        if x in q.pinned:
            values = [q.pinned[x]]
        elif x in q.allowed:
            values = sorted(q.allowed[x])
        domains.append([v for v in values if fits(x, v)])
    return domains


def connected_order(source: Structure, first: Sequence[int] = ()) -> list[int]:
    """Search order that keeps each new element attached to placed ones."""
    neighbours: dict[int, set[int]] = defaultdict(set)
    for _, t in source.tuples():
        for x in t:
            neighbours[x].update(y for y in t if y != x)
    order = list(dict.fromkeys(first))
    placed = set(order)
    while len(order) < source.size:
        x = max(
            (y for y in source.domain if y not in placed),
            key=lambda y: (len(neighbours[y] & placed), len(neighbours[y]), -y),
        )
        order.append(x)
        placed.add(x)
    return order


def _run(q: HomQuery, lexicographic: bool) -> Iterator[Tuple]:
    _check_query(q)
    if lexicographic:
        order = list(q.source.domain)
    else:
        first = sorted(set(q.pinned) | {x for x, vs in q.allowed.items() if len(vs) == 1})
        order = connected_order(q.source, first)
    search = _Search(q, order)
    yield from search.run()
    logger.debug(f"[hom] search visited {search.nodes} nodes (source size {q.source.size})")


def iter_homs(q: HomQuery, lexicographic: bool = True) -> Iterator[Hom]:
    """Lazily yield homs; in lexicographic mapping order when asked to."""
    maps = _run(q, lexicographic)
    if q.limit is not None:
        maps = islice(maps, q.limit)
    for mapping in maps:
        yield Hom(q.source, q.target, mapping)


def solve(q: HomQuery) -> list[Hom]:
    """All homs satisfying the query flags, in lexicographic mapping order."""
    if q.limit is not None:
        return list(iter_homs(q, lexicographic=True))
    maps = sorted(_run(q, lexicographic=False))
    return [Hom(q.source, q.target, m) for m in maps]


def find_one(q: HomQuery) -> Hom | None:
    """Some hom satisfying the query, not necessarily the lexicographically first."""
    return next(iter_homs(q, lexicographic=False), None)


def exists(q: HomQuery) -> bool:
    return find_one(q) is not None


def count(q: HomQuery) -> int:
    """Number of homs, capped at q.limit; the search stops once the cap is reached."""
    maps = _run(q, lexicographic=False)
    if q.limit is not None:
        maps = islice(maps, q.limit)
    return sum(1 for _ in maps)


def is_homomorphism(f: Sequence[int], m: Structure, n: Structure, strong: bool = False) -> bool:
    if m.signature != n.signature or len(f) != m.size:
        return False
    if any(not 0 <= y < n.size for y in f):
        return False
    for name, t in m.tuples():
        if tuple(f[x] for x in t) not in n.rel(name):
            return False
    if strong:
        preimage: dict[int, list[int]] = defaultdict(list)
        for x, y in enumerate(f):
            preimage[y].append(x)
        for name, t in n.tuples():
            for combo in product(*(preimage[w] for w in t)):
                if combo not in m.rel(name):
                    return False
    return True


def compose(f: Hom, g: Hom) -> Hom:
    """g after f."""
    if f.target != g.source:
        raise ObjectMismatch("target of the first map is not the source of the second")
    return Hom(f.source, g.target, tuple(g.mapping[y] for y in f.mapping))
