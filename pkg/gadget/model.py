"""
Gadgets, gadget homomorphisms and systems.

A gadget is a structure with an entry point alpha, an exit point beta and
three marked sets: A (shared per source vertex when glued), B (shared per
target vertex) and P (shared by every copy).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from core.errors import (
    AlphaEqualsBeta,
    ArcNotAPath,
    InvalidStructure,
    NotAGadgetHom,
    NotASystem,
    OverlappingMarks,
)
from core.graph import arc_graph, arc_vertices, is_directed
from core.structure import Structure, Tuple, validate
from hom.engine import Hom, HomQuery, compose, identity, is_homomorphism, solve


@dataclass(frozen=True)
class Gadget:
    carrier: Structure
    alpha: int
    beta: int
    A: frozenset[int] = frozenset()
    B: frozenset[int] = frozenset()
    P: frozenset[int] = frozenset()

    @property
    def is_simple(self) -> bool:
        return not (self.A or self.B or self.P)

    @property
    def marked(self) -> frozenset[int]:
        return frozenset({self.alpha, self.beta}) | self.A | self.B | self.P

    @property
    def inner(self) -> Tuple:
        """Elements copied once per edge, in carrier order."""
        return tuple(x for x in self.carrier.domain if x not in self.marked)

    def role(self, x: int) -> str:
        if x == self.alpha:
            return "alpha"
        if x == self.beta:
            return "beta"
        for name in ("A", "B", "P"):
            if x in getattr(self, name):
                return name
        return "inner"


@dataclass(frozen=True)
class System(Gadget):
    """A gadget with directed carrier whose marks avoid the arc graph."""


def make_gadget(
    carrier: Structure,
    alpha: int,
    beta: int,
    A: Iterable[int] = (),
    B: Iterable[int] = (),
    P: Iterable[int] = (),
) -> Gadget:
    problems = validate(carrier)
    if problems:
        raise InvalidStructure(f"invalid carrier: {problems[0]}")
    marks = [frozenset(A), frozenset(B), frozenset(P)]
    points = {alpha, beta}.union(*marks)
    if any(not 0 <= x < carrier.size for x in points):
        raise InvalidStructure(f"marked point outside the domain of size {carrier.size}")
    if alpha == beta:
        raise AlphaEqualsBeta(f"alpha and beta are both {alpha}")
    a, b, p = marks
    if a & b or a & p or b & p:
        raise OverlappingMarks(f"A={sorted(a)}, B={sorted(b)}, P={sorted(p)} are not disjoint")
    if {alpha, beta} & (a | b | p):
        raise OverlappingMarks(f"alpha/beta ({alpha},{beta}) lie in a marked set")
    return Gadget(carrier, alpha, beta, a, b, p)


# --- Gadget homomorphisms ---

@dataclass(frozen=True)
class GadgetHom:
    source: Gadget
    target: Gadget
    mapping: Tuple

    @property
    def hom(self) -> Hom:
        return Hom(self.source.carrier, self.target.carrier, self.mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def _marks_respected(f: Sequence[int], m: Gadget, n: Gadget) -> bool:
    return (
        f[m.alpha] == n.alpha
        and f[m.beta] == n.beta
        and all(f[x] in n.A for x in m.A)
        and all(f[x] in n.B for x in m.B)
        and all(f[x] in n.P for x in m.P)
    )


def make_gadget_hom(mapping: Sequence[int], m: Gadget, n: Gadget) -> GadgetHom:
    f = tuple(mapping)
    if not is_homomorphism(f, m.carrier, n.carrier):
        raise NotAGadgetHom(f"{list(f)} is not a homomorphism of carriers")
    if not _marks_respected(f, m, n):
        raise NotAGadgetHom(f"{list(f)} does not respect alpha, beta, A, B, P")
    return GadgetHom(m, n, f)


def is_gadget_hom(rho: GadgetHom) -> bool:
    return is_homomorphism(rho.mapping, rho.source.carrier, rho.target.carrier) and _marks_respected(
        rho.mapping, rho.source, rho.target
    )


def gadget_identity(m: Gadget) -> GadgetHom:
    return GadgetHom(m, m, identity(m.carrier).mapping)


def compose_gadget(f: GadgetHom, g: GadgetHom) -> GadgetHom:
    h = compose(f.hom, g.hom)
    return GadgetHom(f.source, g.target, h.mapping)


def gadget_homs(m: Gadget, n: Gadget) -> list[GadgetHom]:
    """All gadget homomorphisms m -> n in lexicographic order."""
    allowed = {}
    for marks, image in ((m.A, n.A), (m.B, n.B), (m.P, n.P)):
        allowed.update({x: image for x in marks})
    q = HomQuery(m.carrier, n.carrier, pinned={m.alpha: n.alpha, m.beta: n.beta}, allowed=allowed)
    return [GadgetHom(m, n, f.mapping) for f in solve(q)]


# --- Systems and the arc functor ---

def is_system(g: Gadget) -> bool:
    if not is_directed(g.carrier):
        return False
    vertices = set(arc_vertices(g.carrier))
    return {g.alpha, g.beta} <= vertices and not vertices & (g.A | g.B | g.P)


def make_system(g: Gadget) -> System:
    if not is_directed(g.carrier):
        raise NotASystem("carrier is not directed")
    if not is_system(g):
        raise NotASystem("alpha/beta must lie in the arc graph and the marks must avoid it")
    return System(g.carrier, g.alpha, g.beta, g.A, g.B, g.P)


def system_arc(g: Gadget) -> Gadget:
    """Arc graph of a system as a simple graph gadget; marks avoid V so they drop."""
    system = make_system(g)
    arc = arc_graph(system.carrier)
    return make_gadget(arc.graph, arc.index(system.alpha), arc.index(system.beta))


def arc_hom(f: Hom) -> Hom:
    """Restriction of a hom between directed structures to their arc graphs."""
    source, target = arc_graph(f.source), arc_graph(f.target)
    mapping = tuple(target.index(f(x)) for x in source.vertices)
    return Hom(source.graph, target.graph, mapping)


def arc_path_length(g: Gadget) -> int:
    """Length of the arc graph when it is a directed path from alpha to beta."""
    system = make_system(g)
    arc = arc_graph(system.carrier)
    succ = dict(arc.graph.edges)
    if len(succ) != len(arc.graph.edges):
        raise ArcNotAPath("a vertex of the arc graph has two successors")
    walk = [arc.index(system.alpha)]
    while walk[-1] in succ and len(walk) <= arc.graph.size:
        walk.append(succ[walk[-1]])
    if walk[-1] != arc.index(system.beta) or len(walk) != arc.graph.size or len(set(walk)) != len(walk):
        raise ArcNotAPath(f"arc graph is not a directed path from alpha to beta: {arc.graph.edges}")
    return len(walk) - 1
