import pytest

from core.errors import AlphaEqualsBeta, ArcNotAPath, InvalidStructure, NotAGadgetHom, NotASystem, OverlappingMarks
from core.graph import directed_path
from core.structure import make_graph
from gadget.fixtures import H_LABELS, h_graph
from gadget.model import (
    arc_hom,
    arc_path_length,
    compose_gadget,
    gadget_homs,
    gadget_identity,
    is_gadget_hom,
    is_system,
    make_gadget,
    make_gadget_hom,
    make_system,
    system_arc,
)
from hom.engine import identity


def test_make_gadget_validation():
    p = directed_path(3)
    assert make_gadget(p, 0, 3).is_simple
    with pytest.raises(AlphaEqualsBeta):
        make_gadget(p, 1, 1)
    with pytest.raises(OverlappingMarks):
        make_gadget(p, 0, 3, A=[0])
    with pytest.raises(OverlappingMarks):
        make_gadget(p, 0, 3, A=[1], B=[1])
    with pytest.raises(InvalidStructure):
        make_gadget(p, 0, 9)


def test_gadget_roles(marked):
    assert marked.role(0) == "alpha" and marked.role(1) == "beta"
    assert [marked.role(x) for x in (3, 4, 5, 2)] == ["A", "B", "P", "inner"]
    assert marked.inner == (2,)
    assert marked.marked == {0, 1, 3, 4, 5}


def test_hcal_shape(hcal):
    g = h_graph()
    assert g.labels == H_LABELS
    assert len(g.edges) == 6
    sources = {u for u, _ in g.edges}
    targets = {v for _, v in g.edges}
    # v2 is the only vertex without incoming edges, v1 the only one without outgoing edges
    assert set(g.domain) - targets == {3}
    assert set(g.domain) - sources == {2}
    assert (hcal.alpha, hcal.beta) == (0, 4)


def test_path_gadget_zero_is_a_single_edge(edge_gadget):
    assert edge_gadget.carrier.edges == [(0, 1)]
    assert (edge_gadget.alpha, edge_gadget.beta) == (0, 1)


def test_gadget_homs_respect_marks(path1, marked):
    assert [rho.mapping for rho in gadget_homs(path1, marked)] == [(0, 2, 1)]
    assert gadget_homs(marked, path1) == []
    rho = make_gadget_hom((0, 2, 1), path1, marked)
    assert is_gadget_hom(rho)
    with pytest.raises(NotAGadgetHom):
        make_gadget_hom((0, 1, 2), path1, marked)
    with pytest.raises(NotAGadgetHom):
        make_gadget_hom((0, 2, 1, 4, 4, 5), marked, marked)


def test_gadget_composition(path1, marked):
    rho = gadget_homs(path1, marked)[0]
    assert compose_gadget(gadget_identity(path1), rho).mapping == rho.mapping
    assert compose_gadget(rho, gadget_identity(marked)).mapping == rho.mapping


def test_systems(ternary, hcal, marked, path1):
    assert is_system(ternary) and is_system(hcal) and is_system(path1)
    assert not is_system(marked)
    with pytest.raises(NotASystem):
        make_system(marked)
    with pytest.raises(NotASystem):
        make_system(make_gadget(make_graph(2, [(0, 1), (1, 0)]), 0, 1))


def test_system_arc_of_ternary(ternary):
    arc = system_arc(ternary)
    assert arc.carrier.edges == [(0, 2), (2, 1)]
    assert (arc.alpha, arc.beta) == (0, 1)
    assert arc.is_simple


def test_arc_path_length(ternary, hcal):
    assert arc_path_length(ternary) == 2
    assert arc_path_length(make_gadget(directed_path(3), 0, 3)) == 3
    with pytest.raises(ArcNotAPath):
        arc_path_length(hcal)
    with pytest.raises(ArcNotAPath):
        arc_path_length(make_gadget(directed_path(3), 0, 2))


def test_arc_hom_restricts_to_arc_graphs(ternary):
    f = arc_hom(identity(ternary.carrier))
    assert f.mapping == (0, 1, 2)
    assert f.source.edges == [(0, 2), (2, 1)]
