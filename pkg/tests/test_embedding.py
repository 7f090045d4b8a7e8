import pytest

from core.errors import ArcNotAPath, IsolatedPoint, NotASystem
from core.graph import arc_graph, directed_cycle, directed_path, subdivide, tournament
from core.structure import make_graph
from gadget.embedding import universal_apply, verify_full_embedding
from gadget.fixtures import h_gadget, h_graph, path_gadget
from gadget.star import star
from hom.engine import HomQuery, solve
from hom.morphisms import is_isomorphic
from utils.enumerate import connected_digraphs


@pytest.mark.parametrize("g", [directed_path(1), directed_path(2), tournament(3), directed_cycle(3)])
def test_only_phi_maps_hcal_into_a_star(g, hcal):
    built = star(g, hcal)
    homs = {f.mapping for f in solve(HomQuery(hcal.carrier, built.structure))}
    assert homs == {built.phi(e).mapping for e in g.edges}


def test_hcal_is_a_full_embedding_on_small_graphs(hcal):
    graphs = connected_digraphs(3)
    assert any((0, 0) in g.edges for g in graphs)
    assert any((0, 1) in g.edges and (1, 0) in g.edges for g in graphs)
    report = verify_full_embedding(hcal, graphs)
    assert len(report.pairs) == len(graphs) ** 2
    assert report.faithful and report.full and report.phi_only


def test_connected_digraphs_up_to_two_vertices():
    # one loop; then 0 -> 1 with four loop patterns and 0 <-> 1 with three
    assert len(connected_digraphs(2)) == 8


def test_given_pairs_only(hcal):
    graphs = [directed_path(1), make_graph(1, [(0, 0)]), directed_cycle(3)]
    report = verify_full_embedding(hcal, graphs, [(0, 1), (2, 1)])
    assert [(p.source, p.target) for p in report.pairs] == [(0, 1), (2, 1)]
    assert all(p.graph_homs == p.star_homs == 1 for p in report.pairs)
    assert len(report.graphs) == 3 and report.phi_only


def test_path_gadget_is_not_full(path1):
    report = verify_full_embedding(path1, [directed_path(1), directed_path(2)])
    assert report.faithful and not report.full
    row = next(p for p in report.pairs if (p.source, p.target) == (0, 1))
    assert (row.graph_homs, row.star_homs) == (2, 3)


def test_single_edge_gadget_is_the_identity_functor(edge_gadget):
    assert verify_full_embedding(edge_gadget, [directed_path(2), directed_cycle(3)]).full


def test_isolated_points_are_rejected(hcal):
    with pytest.raises(IsolatedPoint):
        verify_full_embedding(hcal, [make_graph(2, [])])


def test_empty_family_is_trivially_full(hcal):
    report = verify_full_embedding(hcal, [])
    assert report.full and report.faithful and report.phi_only


@pytest.mark.parametrize("system", ["path1", "ternary"])
def test_universal_apply_subdivides_hcal(system, path1, ternary):
    m = {"path1": path1, "ternary": ternary}[system]
    built = universal_apply(directed_path(1), m)
    arc = arc_graph(built.structure).graph
    assert is_isomorphic(arc, subdivide(h_graph(), 1, "directed").structure)


def test_universal_apply_needs_a_path_system(marked):
    with pytest.raises(NotASystem):
        universal_apply(directed_path(1), marked)
    with pytest.raises(ArcNotAPath):
        universal_apply(directed_path(1), h_gadget())


def test_universal_apply_with_single_edge_is_hcal_star():
    built = universal_apply(directed_path(2), path_gadget(0))
    assert built.structure.size == 9
