"""
Primitive positive formulas, represented by their canonical structure and
the tuple of free variables.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from core.errors import ArityMismatch, FreeVariableRepeat, InvalidStructure
from core.graph import gaifman
from core.structure import Structure, Tuple
from hom.engine import HomQuery, exists, iter_homs


@dataclass(frozen=True)
class PPFormula:
    canonical: Structure
    free: Tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "free", tuple(self.free))
        if len(set(self.free)) != len(self.free):
            raise FreeVariableRepeat(f"free variables repeat: {list(self.free)}")
        if any(not 0 <= x < self.canonical.size for x in self.free):
            raise InvalidStructure(f"free variables {list(self.free)} outside the canonical structure")


def pp_satisfies(a: Structure, abar: Sequence[int], phi: PPFormula) -> bool:
    """A |= phi(abar) iff (M_phi, free) maps to (A, abar)."""
    if len(abar) != len(phi.free):
        raise ArityMismatch(f"{len(abar)} values for {len(phi.free)} free variables")
    return exists(HomQuery(phi.canonical, a, pinned=dict(zip(phi.free, abar))))


def pp_components(phi: PPFormula) -> list[PPFormula]:
    """One pointed substructure per component of the Gaifman graph minus the free points.

    Tuples lying inside the free tuple belong to every component.
    """
    free = set(phi.free)
    rest = [x for x in phi.canonical.domain if x not in free]
    if not rest:
        return [phi]
    graph = nx.Graph()
    graph.add_nodes_from(rest)
    graph.add_edges_from((u, v) for u, v in gaifman(phi.canonical).edges if u not in free and v not in free)

    out = []
    for component in sorted(nx.connected_components(graph), key=min):
        sub, origin = phi.canonical.induced(component | free)
        out.append(PPFormula(sub, tuple(origin.index(x) for x in phi.free)))
    return out


def lemma_ppcomponents_check(a: Structure, abar: Sequence[int], phi: PPFormula) -> bool:
    """Whether direct satisfaction agrees with component-wise satisfaction."""
    direct = pp_satisfies(a, abar, phi)
    return direct == all(pp_satisfies(a, abar, part) for part in pp_components(phi))


@lru_cache(maxsize=1 << 16)
def satisfying_tuples(a: Structure, phi: PPFormula) -> frozenset[Tuple]:
    """Every abar with A |= phi(abar)."""
    homs = iter_homs(HomQuery(phi.canonical, a), lexicographic=False)
    return frozenset(tuple(f.mapping[x] for x in phi.free) for f in homs)


def components_disagree(a: Structure, phi: PPFormula) -> Tuple | None:
    """First abar, in lexicographic order, where direct and component-wise satisfaction differ."""
    direct = satisfying_tuples(a, phi)
    parts = [satisfying_tuples(a, part) for part in pp_components(phi)]
    combined = frozenset.intersection(*parts)
    return min(direct ^ combined, default=None)
