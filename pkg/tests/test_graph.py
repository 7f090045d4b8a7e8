import networkx as nx
import pytest

from core.errors import ModeMismatch, NotDirected, NotWellFounded, SignatureMismatch
from core.graph import (
    arc_graph,
    complete_graph,
    directed_cycle,
    directed_path,
    gaifman,
    is_directed,
    is_undirected,
    is_well_founded,
    isolated_points,
    ordinal_embedding,
    permutation_equivalent,
    subdivide,
    subdivided_clique,
    subdivided_half_graph,
    tournament,
)
from core.structure import Inner, Native, Signature, Structure, make_graph
from gadget.fixtures import ternary_system
from logic.paths import is_lpath, orient_lpath
from utils.enumerate import iter_digraphs, random_digraph, to_networkx

TERNARY = Signature.of(("R", 3))


def test_gaifman_drops_loops():
    s = Structure(TERNARY, 4, {"R": {(0, 0, 1), (1, 2, 3)}})
    g = gaifman(s)
    assert is_undirected(g)
    assert {(u, v) for u, v in g.edges if u < v} == {(0, 1), (1, 2), (1, 3), (2, 3)}


def test_isolated_points():
    s = Structure(TERNARY, 5, {"R": {(0, 1, 1)}})
    assert isolated_points(s) == {2, 3, 4}


def test_arc_graph_of_ternary_system():
    arc = arc_graph(ternary_system().carrier)
    assert arc.vertices == (0, 1, 2)
    assert arc.graph.edges == [(0, 2), (2, 1)]
    assert arc.index(2) == 2


def test_arc_graph_rejects_symmetric_pairs():
    assert not is_directed(make_graph(2, [(0, 1), (1, 0)]))
    assert not is_directed(make_graph(1, [(0, 0)]))
    with pytest.raises(NotDirected):
        arc_graph(make_graph(2, [(0, 1), (1, 0)]))


def test_subdivide_single_directed_edge():
    built = subdivide(make_graph(2, [(0, 1)]), 2, "directed")
    assert built.structure.size == 4
    assert built.index(Inner(0, 1, 1)) == 2 and built.index(Inner(0, 1, 2)) == 3
    assert built.structure.edges == [(0, 2), (2, 3), (3, 1)]


def test_subdivide_r0_is_identity():
    g = tournament(3)
    assert subdivide(g, 0, "directed").structure == g


def test_subdivide_mode_mismatch():
    with pytest.raises(ModeMismatch):
        subdivide(directed_path(2), 1, "undirected")
    with pytest.raises(ModeMismatch):
        subdivide(complete_graph(2), 1, "directed")


def test_subdivided_triangle_is_a_hexagon():
    built = subdivided_clique(3, 1)
    assert built.structure.size == 6
    assert nx.is_isomorphic(to_networkx(built.structure), nx.cycle_graph(6).to_directed())
    assert built.tags[0] == Native(0)


def test_subdivided_half_graph_sizes():
    built = subdivided_half_graph(2, 1)
    # a0-b0, a0-b1, a1-b1 each get one subdivision point
    assert built.structure.size == 4 + 3
    assert len(built.structure.edges) == 2 * 2 * 3


def test_well_founded_matches_networkx_exhaustively():
    for g in iter_digraphs(3, loops=True):
        assert is_well_founded(g) == nx.is_directed_acyclic_graph(to_networkx(g))


def test_well_founded_random(rng):
    for _ in range(100):
        g = random_digraph(rng, int(rng.integers(1, 9)), density=0.15)
        assert is_well_founded(g) == nx.is_directed_acyclic_graph(to_networkx(g))


def test_ordinal_embedding_is_least_topological_order():
    g = make_graph(3, [(2, 0)])
    assert ordinal_embedding(g) == (2, 0, 1)
    f = ordinal_embedding(tournament(4))
    assert f == (0, 1, 2, 3)


def test_ordinal_embedding_rejects_cycles():
    with pytest.raises(NotWellFounded):
        ordinal_embedding(directed_cycle(3))


def test_permutation_equivalence_of_oriented_path():
    carrier = ternary_system().carrier
    oriented = orient_lpath(is_lpath(carrier, (0, 2, 1))).structure
    shuffled = Structure(TERNARY, 5, {"R": {(2, 0, 3), (4, 1, 2)}})
    witness = permutation_equivalent(shuffled, oriented)
    assert witness is not None
    assert witness.verify(shuffled, oriented)
    assert witness.inverse().verify(oriented, shuffled)


def test_permutation_equivalence_negative():
    m = Structure(TERNARY, 3, {"R": {(0, 0, 1)}})
    n = Structure(TERNARY, 3, {"R": {(0, 1, 2)}})
    assert permutation_equivalent(m, n) is None
    with pytest.raises(SignatureMismatch):
        permutation_equivalent(m, make_graph(3, []))
