import pytest

from core.errors import NotAGaifmanPath
from core.graph import arc_graph, directed_cycle, directed_path, is_directed
from core.structure import Structure, make_graph
from gadget.fixtures import TERNARY, fixture_paths, ternary_system
from logic.paths import is_lpath, orient_lpath, path_types


@pytest.mark.parametrize("name", sorted(fixture_paths()))
def test_fixture_paths_orient_to_directed_paths(name):
    s, p = fixture_paths()[name]
    path = is_lpath(s, p)
    assert path is not None and path.length == len(p) - 1
    oriented = orient_lpath(path)
    assert is_directed(oriented.structure)
    assert oriented.witness.verify(s, oriented.structure)
    assert oriented.witness.inverse().verify(oriented.structure, s)
    arc = arc_graph(oriented.structure)
    assert set(arc.vertices) == set(p)
    assert set(arc.graph.edges) == {(arc.index(x), arc.index(y)) for x, y in zip(p, p[1:])}


def test_orienting_backwards_steps_gives_the_ternary_system():
    s, p = fixture_paths()["backwards"]
    assert orient_lpath(is_lpath(s, p)).structure == ternary_system().carrier


def test_already_oriented_path_is_unchanged():
    s, p = fixture_paths()["ternary-system"]
    assert orient_lpath(is_lpath(s, p)).structure == s


def test_not_lpaths():
    assert is_lpath(directed_cycle(3), (0, 1, 2, 0)) is None
    assert is_lpath(directed_path(2), (0, 2)) is None
    assert is_lpath(make_graph(3, [(0, 1)]), (0, 1)) is None
    # every step contains both endpoints, so p(0) reappears in the last step
    wrapped = Structure(TERNARY, 3, {"R": {(0, 1, 2), (1, 2, 0)}})
    assert is_lpath(wrapped, (0, 1, 2)) is None


def test_path_types_along_a_gaifman_path():
    types = path_types(directed_path(2), (0, 1, 2))
    assert len(types) == 1
    assert types[0].origin == (0, 1, 2)

    both_ways = make_graph(3, [(0, 1), (1, 0), (1, 2)])
    types = path_types(both_ways, (0, 1, 2))
    assert len(types) == 2
    assert {t.carrier.edges[0] for t in types} == {(0, 1), (1, 0)}


def test_path_types_need_a_gaifman_path():
    with pytest.raises(NotAGaifmanPath):
        path_types(directed_path(2), (0, 2))
    with pytest.raises(NotAGaifmanPath):
        path_types(directed_path(2), (0,))
