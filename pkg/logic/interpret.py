"""
Interpretable categories: a structure M is recovered from the homs out of a
"point" structure and one pattern structure per relation symbol.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from core.errors import ArityMismatch, NotAHom
from core.graph import edgeless
from core.structure import GRAPH, Signature, Structure, Tuple, make_graph
from hom.engine import HomQuery, is_homomorphism, solve


@dataclass(frozen=True)
class Pattern:
    structure: Structure
    homs: tuple[Tuple, ...]  # h_0..h_{k-1}: bullet -> structure


@dataclass(frozen=True)
class InterpretableSpec:
    signature: Signature
    bullet: Structure
    patterns: Mapping[str, Pattern]

    def __post_init__(self) -> None:
        for name, pattern in self.patterns.items():
            if len(pattern.homs) != self.signature.arity(name):
                raise ArityMismatch(f"{name} needs {self.signature.arity(name)} homs, got {len(pattern.homs)}")
            for h in pattern.homs:
                if not is_homomorphism(h, self.bullet, pattern.structure):
                    raise NotAHom(f"{list(h)} is not a hom from the bullet into the {name} pattern")


def reconstruct(spec: InterpretableSpec, m: Structure) -> Structure:
    """Domain Hom(bullet, M) in lexicographic order; R holds of (g.h_0, ..., g.h_k)
    for every g: A_R -> M."""
    points = [f.mapping for f in solve(HomQuery(spec.bullet, m))]
    index = {f: i for i, f in enumerate(points)}
    relations = {}
    for name, pattern in spec.patterns.items():
        relations[name] = {
            tuple(index[tuple(g.mapping[y] for y in h)] for h in pattern.homs)
            for g in solve(HomQuery(pattern.structure, m))
        }
    return Structure(spec.signature, len(points), relations)


def gra_spec() -> InterpretableSpec:
    """Graphs: the bullet is a single point, the edge pattern a directed edge."""
    return InterpretableSpec(
        GRAPH,
        edgeless(1),
        {"E": Pattern(make_graph(2, [(0, 1)]), ((0,), (1,)))},
    )
