"""
The star product G * M: one copy of the gadget M per edge of the graph G,
glued at the vertices of G (alpha, beta), at A-points per source vertex, at
B-points per target vertex and globally at P.

Domain order: natives, Shared(P), APoints, BPoints, Inner; edges in
lexicographic order, carrier elements in carrier order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from loguru import logger

from core.errors import (
    EdgeAbsent,
    HypothesisFailed,
    NoIsoFound,
    NotAGadgetHom,
    NotAGraph,
    NotAHom,
    NotSimple,
)
from core.graph import arc_graph
from core.structure import (
    APoint,
    BPoint,
    Inner,
    LabelTable,
    Native,
    Shared,
    Structure,
    Tag,
    TaggedStructure,
    Tuple,
)
from gadget.model import Gadget, GadgetHom, gadget_identity, is_gadget_hom, make_gadget, system_arc
from hom.engine import Hom, identity, is_homomorphism
from hom.morphisms import find_isomorphism


def phi_tag(m: Gadget, edge: Tuple, x: int) -> Tag:
    """Tag of the copy of x glued along `edge`."""
    u, v = edge
    if x == m.alpha:
        return Native(u)
    if x == m.beta:
        return Native(v)
    if x in m.P:
        return Shared(x)
    if x in m.A:
        return APoint(u, x)
    if x in m.B:
        return BPoint(v, x)
    return Inner(u, v, x)


@dataclass(frozen=True)
class Star:
    graph: Structure
    gadget: Gadget
    built: TaggedStructure

    @property
    def structure(self) -> Structure:
        return self.built.structure

    @property
    def tags(self) -> LabelTable:
        return self.built.tags

    def index(self, tag: Tag) -> int:
        return self.built.index(tag)

    def phi(self, edge: Tuple) -> Hom:
        edge = tuple(edge)
        if edge not in self.graph.rel("E"):
            raise EdgeAbsent(f"{edge} is not an edge of the graph")
        mapping = tuple(self.index(phi_tag(self.gadget, edge, x)) for x in self.gadget.carrier.domain)
        return Hom(self.gadget.carrier, self.structure, mapping)

    def image(self, edge: Tuple) -> frozenset[int]:
        return frozenset(self.phi(edge).mapping)


@lru_cache(maxsize=512)
def star(g: Structure, m: Gadget) -> Star:
    if not g.is_graph:
        raise NotAGraph("the left factor of a star product must be a graph")
    edges = g.edges
    sources = sorted({u for u, _ in edges})
    targets = sorted({v for _, v in edges})

    tags: list[Tag] = [Native(x) for x in g.domain]
    tags += [Shared(p) for p in sorted(m.P)]
    tags += [APoint(u, a) for u in sources for a in sorted(m.A)]
    tags += [BPoint(v, b) for v in targets for b in sorted(m.B)]
    tags += [Inner(u, v, c) for u, v in edges for c in m.inner]
    table = LabelTable(tuple(tags))

    relations: dict[str, set[Tuple]] = {name: set() for name in m.carrier.signature.names}
    for edge in edges:
        for name, t in m.carrier.tuples():
            relations[name].add(tuple(table.index(phi_tag(m, edge, x)) for x in t))
    built = TaggedStructure(Structure(m.carrier.signature, len(tags), relations), table)
    logger.debug(f"[star] |G|={g.size}, |E|={len(edges)}, |M|={m.carrier.size} -> size {len(tags)}")
    return Star(g, m, built)


def phi(g: Structure, m: Gadget, edge: Tuple) -> Hom:
    return star(g, m).phi(edge)


# --- Morphism actions ---

def star_bi(f: Hom, rho: GadgetHom) -> Hom:
    """The combined action f * rho : G * M -> H * N."""
    if not (f.source.is_graph and f.target.is_graph) or not is_homomorphism(f.mapping, f.source, f.target):
        raise NotAHom(f"{list(f.mapping)} is not a graph homomorphism")
    if not is_gadget_hom(rho):
        raise NotAGadgetHom(f"{list(rho.mapping)} is not a gadget homomorphism")
    left, right = star(f.source, rho.source), star(f.target, rho.target)

    def image(tag: Tag) -> Tag:
        match tag:
            case Native(g):
                return Native(f(g))
            case Shared(p):
                return Shared(rho(p))
            case APoint(u, a):
                return APoint(f(u), rho(a))
            case BPoint(v, b):
                return BPoint(f(v), rho(b))
            case Inner(u, v, c):
                return phi_tag(rho.target, (f(u), f(v)), rho(c))
        raise ValueError(f"unexpected tag {tag}")

    mapping = tuple(right.index(image(tag)) for tag in left.tags)
    return Hom(left.structure, right.structure, mapping)


def star_graph_hom(f: Hom, m: Gadget) -> Hom:
    return star_bi(f, gadget_identity(m))


def star_gadget_hom(g: Structure, rho: GadgetHom) -> Hom:
    return star_bi(identity(g), rho)


# --- Star on gadgets ---

def _check_graph_gadget(h: Gadget) -> None:
    if not h.carrier.is_graph:
        raise NotAGraph("the left gadget must have a graph carrier")
    if not h.is_simple:
        raise NotSimple("the left gadget must be simple (A = B = P = empty)")


def ostar(h: Gadget, m: Gadget) -> Gadget:
    """H (*) M: the star of H's graph with M, re-marked at s = alpha(H), t = beta(H)."""
    _check_graph_gadget(h)
    s, t = h.alpha, h.beta
    built = star(h.carrier, m)
    edges = h.carrier.edges
    if m.A and s not in {u for u, _ in edges}:
        raise HypothesisFailed(f"s={s} has no outgoing edge, so A-points (s, a) do not exist")
    if m.B and t not in {v for _, v in edges}:
        raise HypothesisFailed(f"t={t} has no incoming edge, so B-points (t, b) do not exist")
    return make_gadget(
        built.structure,
        built.index(Native(s)),
        built.index(Native(t)),
        A=[built.index(APoint(s, a)) for a in m.A],
        B=[built.index(BPoint(t, b)) for b in m.B],
        P=[built.index(Shared(p)) for p in m.P],
    )


def assoc_check(g: Structure, h: Gadget, m: Gadget) -> Hom:
    """Isomorphism (G * H) * M -> G * (H (*) M)."""
    _check_graph_gadget(h)
    edges = h.carrier.edges
    sources, targets = {u for u, _ in edges}, {v for _, v in edges}
    if h.alpha not in sources or h.beta not in targets:
        raise HypothesisFailed("s must occur as a source and t as a target of H")
    # the left side also creates A-points at t and B-points at s; H (*) M does not
    if m.A and h.beta in sources:
        raise HypothesisFailed(f"M has A-points but t={h.beta} is the source of an edge of H")
    if m.B and h.alpha in targets:
        raise HypothesisFailed(f"M has B-points but s={h.alpha} is the target of an edge of H")
    left = star(star(g, h).structure, m).structure
    right = star(g, ostar(h, m)).structure
    iso = find_isomorphism(left, right)
    if iso is None:
        raise NoIsoFound(f"no isomorphism between sizes {left.size} and {right.size}")
    return iso


def arc_star_check(g: Structure, m: Gadget) -> bool:
    """Arc(G * M) equals G * Arc(M) under the tag correspondence."""
    arc_m = arc_graph(m.carrier)
    left = star(g, m)
    arc_left = arc_graph(left.structure)
    right = star(g, system_arc(m))

    def counterpart(x: int) -> int:
        match left.tags[x]:
            case Native(u):
                return right.index(Native(u))
            case Inner(u, v, c):
                return right.index(Inner(u, v, arc_m.index(c)))
        raise ValueError(f"{left.tags[x]} cannot lie in the arc graph")

    mapping = [counterpart(x) for x in arc_left.vertices]
    if sorted(mapping) != list(range(right.structure.size)):
        return False
    moved = {(mapping[a], mapping[b]) for a, b in arc_left.graph.edges}
    return moved == set(right.structure.edges)


def ostar_arc_check(g: Structure, h: Gadget, m: Gadget) -> bool:
    """Arc(G * (H (*) M)) is isomorphic to (G * H) * Arc(M)."""
    left = arc_graph(star(g, ostar(h, m)).structure).graph
    right = star(star(g, h).structure, system_arc(m)).structure
    return find_isomorphism(left, right) is not None
