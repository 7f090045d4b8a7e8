import pytest

from core.errors import NotUndirected
from core.graph import directed_path, edgeless, subdivided_clique, undirected_cycle
from core.structure import make_graph
from density.clique import density_profile, detect_subdivided_clique, iter_clique_witnesses


def _is_witness(g, w, r):
    edges = set(g.edges)
    used = set(w.natives)
    for (i, j), path in w.paths.items():
        assert path[0] == w.natives[i] and path[-1] == w.natives[j]
        assert len(path) == r + 2
        assert all((a, b) in edges for a, b in zip(path, path[1:]))
        inner = set(path[1:-1])
        assert not inner & used
        used |= inner
    return True


@pytest.mark.parametrize("n,r", [(2, 0), (3, 0), (3, 1), (4, 0), (4, 1), (3, 2)])
def test_subdivided_clique_contains_itself(n, r):
    host = subdivided_clique(n, r).structure
    w = detect_subdivided_clique(host, n, r)
    assert w is not None and w.n == n
    assert _is_witness(host, w, r)


def test_hexagon_is_a_subdivided_triangle():
    w = detect_subdivided_clique(undirected_cycle(6), 3, 1)
    assert w is not None
    assert _is_witness(undirected_cycle(6), w, 1)
    assert detect_subdivided_clique(undirected_cycle(5), 3, 1) is None


def test_witnesses_are_distinct_embeddings():
    witnesses = list(iter_clique_witnesses(subdivided_clique(3, 0).structure, 3, 0))
    # one per ordering of the triangle's vertices
    assert len(witnesses) == 6


def test_needs_undirected_graph():
    with pytest.raises(NotUndirected):
        detect_subdivided_clique(directed_path(2), 3, 0)
    with pytest.raises(NotUndirected):
        density_profile(directed_path(2), 3, 1)


def test_density_profile():
    assert density_profile(undirected_cycle(6), 4, 2) == {0: 2, 1: 3, 2: 2}
    assert density_profile(edgeless(3), 3, 1) == {0: 1, 1: 1}
    k4 = subdivided_clique(4, 0).structure
    assert density_profile(k4, 5, 1) == {0: 4, 1: 2}


def test_half_graph_profile():
    star_graph = make_graph(4, [(0, x) for x in (1, 2, 3)] + [(x, 0) for x in (1, 2, 3)])
    assert density_profile(star_graph, 3, 0, "half") == {0: 1}
    assert density_profile(undirected_cycle(6), 3, 0, "half") == {0: 2}
