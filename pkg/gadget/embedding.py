"""
Checks that G |-> G * M is a full embedding on a finite family of graphs, and
the universal construction G * (H (*) M) for systems.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import product

from loguru import logger

from core.errors import IsolatedPoint
from core.graph import isolated_points
from core.structure import Structure
from gadget.fixtures import h_gadget
from gadget.model import Gadget, arc_path_length, make_system
from gadget.star import Star, ostar, star, star_graph_hom
from hom.engine import HomQuery, count, is_homomorphism, solve


@dataclass(frozen=True)
class PairReport:
    source: int
    target: int
    graph_homs: int
    star_homs: int  # counted up to one past the images of the graph homs
    injective: bool
    surjective: bool


@dataclass(frozen=True)
class GraphReport:
    graph: int
    edges: int
    gadget_homs: int
    phi_only: bool


@dataclass(frozen=True)
class FullEmbeddingReport:
    pairs: tuple[PairReport, ...]
    graphs: tuple[GraphReport, ...]

    @property
    def faithful(self) -> bool:
        return all(p.injective for p in self.pairs)

    @property
    def full(self) -> bool:
        return all(p.surjective for p in self.pairs)

    @property
    def phi_only(self) -> bool:
        return all(g.phi_only for g in self.graphs)


def verify_full_embedding(
    m: Gadget, graphs: Sequence[Structure], pairs: Iterable[tuple[int, int]] | None = None
) -> FullEmbeddingReport:
    """Check every graph for phi-only maps and every pair (all pairs unless given) for a bijection."""
    for i, g in enumerate(graphs):
        if isolated_points(g):
            raise IsolatedPoint(f"graph #{i} has isolated points {sorted(isolated_points(g))}")

    graph_rows = []
    for i, g in enumerate(graphs):
        built = star(g, m)
        found = {f.mapping for f in solve(HomQuery(m.carrier, built.structure))}
        phis = {built.phi(e).mapping for e in g.edges}
        graph_rows.append(GraphReport(i, len(g.edges), len(found), found == phis))

    if pairs is None:
        pairs = product(range(len(graphs)), repeat=2)
    pair_rows = []
    for i, j in pairs:
        g, h = graphs[i], graphs[j]
        homs = solve(HomQuery(g, h))
        images = {star_graph_hom(f, m).mapping for f in homs}
        source, target = star(g, m).structure, star(h, m).structure
        # one hom past the images is enough to refute surjectivity
        star_homs = count(HomQuery(source, target, limit=len(images) + 1))
        surjective = star_homs == len(images) and all(is_homomorphism(f, source, target) for f in images)
        row = PairReport(i, j, len(homs), star_homs, len(images) == len(homs), surjective)
        if not (row.injective and row.surjective):
            logger.warning(f"[embedding] pair ({i},{j}): {len(homs)} graph homs vs {star_homs} star homs")
        pair_rows.append(row)
    return FullEmbeddingReport(tuple(pair_rows), tuple(graph_rows))


def universal_apply(g: Structure, m: Gadget) -> Star:
    """G * (H (*) M) for a system M whose arc graph is a path from alpha to beta."""
    system = make_system(m)
    length = arc_path_length(system)
    logger.debug(f"[embedding] system arc path of length {length}")
    return star(g, ostar(h_gadget(), system))
