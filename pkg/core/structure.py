"""
Finite relational structures.

A Structure has domain 0..size-1 and one set of tuples per relation symbol.
Constructions that glue structures together emit a LabelTable so every
element carries a provenance tag and serialization stays bit-exact.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field, replace
from types import MappingProxyType

from core.constants import EDGE
from core.errors import InvalidStructure, NotAGraph

Tuple = tuple[int, ...]


@dataclass(frozen=True)
class Symbol:
    name: str
    arity: int


@dataclass(frozen=True)
class Signature:
    symbols: tuple[Symbol, ...]

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> Signature:
        return cls(tuple(Symbol(name, arity) for name, arity in pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.symbols)

    def arity(self, name: str) -> int:
        for s in self.symbols:
            if s.name == name:
                return s.arity
        raise InvalidStructure(f"unknown relation symbol {name!r}")

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def problems(self) -> list[str]:
        out = []
        if len(set(self.names)) != len(self.names):
            out.append(f"duplicate symbol names in {list(self.names)}")
        out += [f"arity must be positive: {s.name}/{s.arity}" for s in self.symbols if s.arity < 1]
        return out


GRAPH = Signature.of((EDGE, 2))


@dataclass(frozen=True, eq=False)
class Structure:
    signature: Signature
    size: int
    relations: Mapping[str, frozenset[Tuple]] = field(default_factory=dict)
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        rels: dict[str, frozenset[Tuple]] = {name: frozenset() for name in self.signature.names}
        for name, tuples in self.relations.items():
            rels[name] = frozenset(tuple(t) for t in tuples)
        object.__setattr__(self, "relations", MappingProxyType(rels))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    # Equality ignores labels.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Structure):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.size == other.size
            and dict(self.relations) == dict(other.relations)
        )

    def __hash__(self) -> int:
        return hash((self.signature, self.size, tuple(sorted(self.relations.items()))))

    def __repr__(self) -> str:
        body = ", ".join(f"{name}={sorted(ts)}" for name, ts in self.relations.items())
        return f"Structure(size={self.size}, {body})"

    @property
    def domain(self) -> range:
        return range(self.size)

    def rel(self, name: str) -> frozenset[Tuple]:
        return self.relations.get(name, frozenset())

    def tuples(self) -> Iterator[tuple[str, Tuple]]:
        """All (symbol, tuple) pairs, symbols in signature order, tuples sorted."""
        for name in self.signature.names:
            for t in sorted(self.relations[name]):
                yield name, t

    def tuple_count(self) -> int:
        return sum(len(ts) for ts in self.relations.values())

    @property
    def is_graph(self) -> bool:
        return self.signature == GRAPH

    @property
    def edges(self) -> list[Tuple]:
        if not self.is_graph:
            raise NotAGraph(f"expected signature {{{EDGE}:2}}, got {list(self.signature.names)}")
        return sorted(self.relations[EDGE])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def with_labels(self, labels: Sequence[str] | None) -> Structure:
        return replace(self, labels=tuple(labels) if labels is not None else None)

    def induced(self, elements: Iterable[int]) -> tuple[Structure, Tuple]:
        """Induced substructure on `elements`, relabelled in ascending order.

        Returns the substructure and the origin map (new index -> old index).
        """
        origin = tuple(sorted(set(elements)))
        index = {x: i for i, x in enumerate(origin)}
        rels = {
            name: {tuple(index[x] for x in t) for t in ts if all(x in index for x in t)}
            for name, ts in self.relations.items()
        }
        labels = tuple(self.labels[x] for x in origin) if self.labels else None
        return Structure(self.signature, len(origin), rels, labels), origin

    def image(self, mapping: Sequence[int], size: int) -> Structure:
        """Push every tuple forward along `mapping` into a domain of `size`."""
        rels = {name: {tuple(mapping[x] for x in t) for t in ts} for name, ts in self.relations.items()}
        return Structure(self.signature, size, rels)


def make_graph(size: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Structure:
    return Structure(GRAPH, size, {EDGE: {tuple(e) for e in edges}}, tuple(labels) if labels else None)


def validate(s: Structure) -> list[str]:
    """Describe every violated Structure invariant; empty when well formed."""
    problems = list(s.signature.problems())
    if s.size < 0:
        problems.append(f"negative size {s.size}")
    for name, tuples in s.relations.items():
        if name not in s.signature:
            problems.append(f"unknown relation symbol {name!r}")
            continue
        arity = s.signature.arity(name)
        for t in sorted(tuples):
            if len(t) != arity:
                problems.append(f"arity mismatch: {name}{t} under {name}/{arity}")
            if any(not isinstance(x, int) or x < 0 or x >= s.size for x in t):
                problems.append(f"tuple entry out of range: {name}{t} with size {s.size}")
    if s.labels is not None and len(s.labels) != s.size:
        problems.append(f"label count mismatch: {len(s.labels)} labels for size {s.size}")
    return problems


def structures_equal(m: Structure, n: Structure) -> bool:
    return m == n


# --- Provenance tags ---

@dataclass(frozen=True, order=True)
class Native:
    g: int

    def __str__(self) -> str:
        return f"n{self.g}"


@dataclass(frozen=True, order=True)
class Shared:
    p: int

    def __str__(self) -> str:
        return f"p{self.p}"


@dataclass(frozen=True, order=True)
class APoint:
    u: int
    a: int

    def __str__(self) -> str:
        return f"a{self.u}.{self.a}"


@dataclass(frozen=True, order=True)
class BPoint:
    v: int
    b: int

    def __str__(self) -> str:
        return f"b{self.v}.{self.b}"


@dataclass(frozen=True, order=True)
class Inner:
    u: int
    v: int
    c: int

    def __str__(self) -> str:
        return f"i{self.u}.{self.v}.{self.c}"


@dataclass(frozen=True, order=True)
class Plain:
    i: int

    def __str__(self) -> str:
        return f"x{self.i}"


Tag = Native | Shared | APoint | BPoint | Inner | Plain


@dataclass(frozen=True)
class LabelTable:
    tags: tuple[Tag, ...]
    _index: Mapping[Tag, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {tag: i for i, tag in enumerate(self.tags)}
        if len(index) != len(self.tags):
            raise InvalidStructure("label table repeats a tag")
        object.__setattr__(self, "_index", MappingProxyType(index))

    @classmethod
    def plain(cls, n: int) -> LabelTable:
        return cls(tuple(Plain(i) for i in range(n)))

    def index(self, tag: Tag) -> int:
        try:
            return self._index[tag]
        except KeyError:
            raise InvalidStructure(f"no element tagged {tag}") from None

    def __contains__(self, tag: object) -> bool:
        return tag in self._index

    def __getitem__(self, i: int) -> Tag:
        return self.tags[i]

    def __len__(self) -> int:
        return len(self.tags)

    def __iter__(self) -> Iterator[Tag]:
        return iter(self.tags)


@dataclass(frozen=True)
class TaggedStructure:
    """A constructed structure together with the provenance of its elements."""

    structure: Structure
    tags: LabelTable

    def labelled(self) -> Structure:
        return self.structure.with_labels([str(t) for t in self.tags])

    def index(self, tag: Tag) -> int:
        return self.tags.index(tag)
