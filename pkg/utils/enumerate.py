"""
Exhaustive and seeded random generators for graphs, structures and pp
formulas. Everything here is deterministic for a fixed seed.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator
from itertools import combinations, permutations, product

import networkx as nx
import numpy as np

from core.constants import EDGE
from core.graph import is_well_founded, isolated_points
from core.structure import GRAPH, Signature, Structure, make_graph
from logic.pp import PPFormula


def to_networkx(g: Structure) -> nx.DiGraph:
    out = nx.DiGraph()
    out.add_nodes_from(g.domain)
    out.add_edges_from(g.rel(EDGE))
    return out


def iter_digraphs(n: int, loops: bool = False) -> Iterator[Structure]:
    pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    for bits in product((False, True), repeat=len(pairs)):
        yield make_graph(n, [p for p, keep in zip(pairs, bits) if keep])


def iter_oriented(n: int) -> Iterator[Structure]:
    """Graphs with no loops and no symmetric pair of edges."""
    pairs = list(combinations(range(n), 2))
    for choice in product((0, 1, 2), repeat=len(pairs)):
        edges = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
        yield make_graph(n, edges)


def up_to_iso(graphs: Iterator[Structure]) -> list[Structure]:
    """First representative of every isomorphism class, in input order."""
    buckets: dict[str, list[nx.DiGraph]] = defaultdict(list)
    kept = []
    for g in graphs:
        nxg = to_networkx(g)
        key = f"{g.size}:{len(g.edges)}:{nx.weisfeiler_lehman_graph_hash(nxg)}"
        if any(nx.is_isomorphic(nxg, other) for other in buckets[key]):
            continue
        buckets[key].append(nxg)
        kept.append(g)
    return kept


def digraphs(max_n: int, loops: bool = False, min_n: int = 1) -> list[Structure]:
    return up_to_iso(g for n in range(min_n, max_n + 1) for g in iter_digraphs(n, loops))


def connected_digraphs(max_n: int) -> list[Structure]:
    """Weakly connected digraphs with at least one edge, loops and 2-cycles allowed, up to isomorphism."""
    return up_to_iso(
        g
        for n in range(1, max_n + 1)
        for g in iter_digraphs(n, loops=True)
        if g.edges and nx.is_weakly_connected(to_networkx(g))
    )


def well_founded_graphs(max_n: int) -> list[Structure]:
    """Acyclic digraphs without isolated points, up to isomorphism."""
    return up_to_iso(
        g
        for n in range(2, max_n + 1)
        for g in iter_oriented(n)
        if not isolated_points(g) and is_well_founded(g)
    )


def directed_without_isolated(max_n: int) -> list[Structure]:
    """Oriented graphs (directed as structures) without isolated points, up to isomorphism."""
    return up_to_iso(
        g for n in range(2, max_n + 1) for g in iter_oriented(n) if not isolated_points(g)
    )


# --- Random ---

def random_digraph(rng: np.random.Generator, n: int, density: float = 0.3, loops: bool = True) -> Structure:
    mask = rng.random((n, n)) < density
    if not loops:
        np.fill_diagonal(mask, False)
    return make_graph(n, [(int(u), int(v)) for u, v in zip(*np.nonzero(mask))])


def random_structure(
    rng: np.random.Generator, signature: Signature, size: int, density: float = 0.2
) -> Structure:
    relations = {}
    for symbol in signature:
        candidates = list(product(range(size), repeat=symbol.arity))
        keep = rng.random(len(candidates)) < density
        relations[symbol.name] = {t for t, k in zip(candidates, keep) if k}
    return Structure(signature, size, relations)


def random_pp_formula(
    rng: np.random.Generator, variables: int, conjuncts: int, free: int
) -> PPFormula:
    """Random pp formula over {E:2}: `conjuncts` atoms on `variables` variables, `free` of them free."""
    atoms = {(int(rng.integers(variables)), int(rng.integers(variables))) for _ in range(conjuncts)}
    chosen = rng.permutation(variables)[:free]
    return PPFormula(Structure(GRAPH, variables, {EDGE: atoms}), tuple(int(x) for x in chosen))


def _formula_key(n: int, atoms: tuple[tuple[int, int], ...], free: tuple[int, ...]) -> tuple:
    """Smallest relabelling with free[i] -> i; equal keys mean the formulas differ by a renaming."""
    bound = [x for x in range(n) if x not in free]
    best = None
    for order in permutations(range(len(free), n)):
        label = dict(zip(free, range(len(free)))) | dict(zip(bound, order))
        key = tuple(sorted((label[u], label[v]) for u, v in atoms))
        best = key if best is None or key < best else best
    return n, len(free), best


def pp_formula_grid(max_variables: int, max_conjuncts: int, distinct: bool = False) -> Iterator[PPFormula]:
    """Every pp formula over {E:2} with up to the given numbers of variables and atoms,
    each free-variable tuple taken in increasing order. With distinct, formulas that
    differ only by renaming variables are yielded once."""
    seen = set()
    for n in range(1, max_variables + 1):
        pairs = list(product(range(n), repeat=2))
        for k in range(max_conjuncts + 1):
            for atoms in combinations(pairs, k):
                canonical = Structure(GRAPH, n, {EDGE: set(atoms)})
                for width in range(n + 1):
                    for free in combinations(range(n), width):
                        if distinct:
                            key = _formula_key(n, atoms, free)
                            if key in seen:
                                continue
                            seen.add(key)
                        yield PPFormula(canonical, free)


def assignments(size: int, width: int) -> Iterator[tuple[int, ...]]:
    return product(range(size), repeat=width)


def random_undirected(rng: np.random.Generator, n: int, density: float = 0.4) -> Structure:
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < density]
    return make_graph(n, pairs + [(v, u) for u, v in pairs])
