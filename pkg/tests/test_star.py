import pytest

from cli.suites import Budget, bifunctor_suite, phi_problems
from core.errors import EdgeAbsent, HypothesisFailed, NotAGraph, NotSimple
from core.graph import directed_cycle, directed_path, edgeless, subdivide, tournament
from core.structure import APoint, BPoint, Inner, Native, Shared, make_graph
from gadget.fixtures import fixture_gadgets, fixture_systems, h_gadget, h_graph, path_gadget, ternary_edge_system
from gadget.model import compose_gadget, gadget_homs, make_gadget
from gadget.star import (
    arc_star_check,
    assoc_check,
    ostar,
    ostar_arc_check,
    phi,
    star,
    star_bi,
    star_gadget_hom,
    star_graph_hom,
)
from hom.engine import HomQuery, compose, identity, is_homomorphism, solve
from hom.morphisms import find_isomorphism, is_isomorphic

GRAPHS = {
    "edge": directed_path(1),
    "P2": directed_path(2),
    "C3": directed_cycle(3),
    "T3": tournament(3),
    "out": make_graph(3, [(0, 1), (0, 2)]),
    "in": make_graph(3, [(1, 0), (2, 0)]),
}


def test_single_edge_star_is_hcal(hcal):
    built = star(directed_path(1), hcal)
    assert built.structure.size == 5
    assert is_isomorphic(built.structure, h_graph())


def test_star_sizes(hcal, marked, p2):
    assert star(p2, hcal).structure.size == 9
    assert star(edgeless(3), marked).structure.size == 4
    # natives 3, P 1, A per source 2, B per target 2, inner per edge 2
    assert star(p2, marked).structure.size == 10


def test_star_domain_order(marked):
    tags = list(star(directed_path(1), marked).tags)
    assert tags == [Native(0), Native(1), Shared(5), APoint(0, 3), BPoint(1, 4), Inner(0, 1, 2)]


def test_star_needs_a_graph(ternary):
    with pytest.raises(NotAGraph):
        star(ternary.carrier, ternary)


def test_phi_cases(marked, p2):
    built = star(p2, marked)
    f = phi(p2, marked, (1, 2))
    tag = [built.tags[y] for y in f.mapping]
    assert tag == [Native(1), Native(2), Inner(1, 2, 2), APoint(1, 3), BPoint(2, 4), Shared(5)]
    assert phi(p2, marked, (0, 1))(5) == f(5)
    with pytest.raises(EdgeAbsent):
        built.phi((2, 0))


@pytest.mark.parametrize("gadget", sorted(fixture_gadgets()))
@pytest.mark.parametrize("graph", sorted(GRAPHS))
def test_phi_is_injective_strong_with_exact_intersections(gadget, graph):
    assert phi_problems(GRAPHS[graph], fixture_gadgets()[gadget]) == []


def test_graph_action_functor_laws(path1, p2, c3):
    assert star_graph_hom(identity(p2), path1).mapping == tuple(star(p2, path1).structure.domain)
    edge = directed_path(1)
    for f in solve(HomQuery(edge, p2)):
        for g in solve(HomQuery(p2, c3)):
            whole = star_graph_hom(compose(f, g), path1)
            assert whole.mapping == compose(star_graph_hom(f, path1), star_graph_hom(g, path1)).mapping


def test_graph_action_commutes_with_phi(marked, p2, c3):
    for f in solve(HomQuery(p2, c3)):
        action = star_graph_hom(f, marked)
        assert is_homomorphism(action.mapping, action.source, action.target)
        for u, v in p2.edges:
            assert compose(phi(p2, marked, (u, v)), action).mapping == phi(c3, marked, (f(u), f(v))).mapping


def test_edge_collapsing_graph_hom(path1, p2):
    loop = make_graph(1, [(0, 0)])
    f = solve(HomQuery(p2, loop))[0]
    action = star_graph_hom(f, path1)
    assert is_homomorphism(action.mapping, action.source, action.target)


def test_gadget_action_commutes_with_phi(path1, marked, p2):
    rho = gadget_homs(path1, marked)[0]
    action = star_gadget_hom(p2, rho)
    assert action.is_injective
    for e in p2.edges:
        left = compose(phi(p2, path1, e), action).mapping
        right = tuple(phi(p2, marked, e)(rho(x)) for x in path1.carrier.domain)
        assert left == right


def test_star_bi_collapses_to_one_sided_actions(path1, marked, p2, c3):
    rho = gadget_homs(path1, marked)[0]
    f = solve(HomQuery(p2, c3))[0]
    both = star_bi(f, rho)
    assert both.mapping == compose(star_graph_hom(f, path1), star_gadget_hom(c3, rho)).mapping
    assert both.mapping == compose(star_gadget_hom(p2, rho), star_graph_hom(f, marked)).mapping


def test_distinct_gadget_homs_give_distinct_actions(path1, diamond, p2):
    rhos = gadget_homs(path1, diamond)
    assert [rho.mapping for rho in rhos] == [(0, 2, 1), (0, 3, 1)]
    assert len({star_gadget_hom(p2, rho).mapping for rho in rhos}) == 2


def test_star_bi_composes_through_a_swap(path1, diamond, p2, c3):
    swap = next(s for s in gadget_homs(diamond, diamond) if s.mapping == (0, 1, 3, 2))
    assert star_gadget_hom(c3, swap).mapping != tuple(star(c3, diamond).structure.domain)
    rho = gadget_homs(path1, diamond)[0]
    f = solve(HomQuery(directed_path(1), p2))[0]
    g = solve(HomQuery(p2, c3))[0]
    whole = star_bi(compose(f, g), compose_gadget(rho, swap))
    parts = compose(star_bi(f, rho), star_bi(g, swap))
    assert whole.mapping == parts.mapping
    # rho then swap sends the middle of the path to the other route
    assert compose_gadget(rho, swap).mapping == gadget_homs(path1, diamond)[1].mapping


def test_bifunctor_suite_passes_on_small_graphs():
    instances = list(bifunctor_suite(Budget(max_vertices=2, samples=10)))
    assert instances and all(i.passed for i in instances)
    faithful = [i for i in instances if i.id.startswith("bifunctor/diamond/faithful/")]
    assert faithful and any(int(i.expected) >= 2 for i in faithful)


def test_ostar_with_single_edge_keeps_the_gadget(edge_gadget, ternary):
    result = ostar(edge_gadget, ternary)
    assert result.carrier.size == ternary.carrier.size
    pinned = {ternary.alpha: result.alpha, ternary.beta: result.beta}
    pinned |= {3: min(result.A), 4: min(result.P)}
    assert find_isomorphism(ternary.carrier, result.carrier, pinned) is not None


def test_ostar_of_hcal_with_path_is_subdivision(hcal):
    result = ostar(hcal, path_gadget(1))
    assert is_isomorphic(result.carrier, subdivide(h_graph(), 1, "directed").structure)


def test_ostar_preconditions(ternary, marked):
    with pytest.raises(NotSimple):
        ostar(marked, ternary)
    with pytest.raises(NotAGraph):
        ostar(ternary, ternary)
    backwards = make_gadget(directed_path(1), 1, 0)
    with pytest.raises(HypothesisFailed):
        ostar(backwards, ternary)


@pytest.mark.parametrize("graph", [directed_path(1), directed_path(2), directed_cycle(3)])
@pytest.mark.parametrize("left", ["hcal", "edge"])
@pytest.mark.parametrize("right", ["path1", "ternary-shared"])
def test_associativity_grid(graph, left, right, hcal, edge_gadget, path1, ternary_shared):
    h = {"hcal": hcal, "edge": edge_gadget}[left]
    m = {"path1": path1, "ternary-shared": ternary_shared}[right]
    iso = assoc_check(graph, h, m)
    assert iso.is_injective
    assert is_homomorphism(iso.mapping, iso.source, iso.target, strong=True)


@pytest.mark.parametrize("graph", [directed_path(1), directed_path(2), directed_cycle(3)])
def test_associativity_with_a_points_when_t_is_a_sink(graph, edge_gadget, ternary):
    iso = assoc_check(graph, edge_gadget, ternary)
    assert iso.is_injective


def test_associativity_rejects_a_points_when_t_is_a_source(hcal, ternary):
    # t of H has the edge t -> v1, so (G * H) * M grows A-points at t that H (*) M lacks
    with pytest.raises(HypothesisFailed, match="A-points"):
        assoc_check(directed_path(2), hcal, ternary)


def test_associativity_rejects_b_points_when_s_is_a_target(hcal):
    with pytest.raises(HypothesisFailed, match="B-points"):
        assoc_check(directed_path(1), hcal, ternary_edge_system())


def test_associativity_edgeless_and_hypothesis(hcal, path1):
    assert assoc_check(edgeless(2), hcal, path1).mapping == (0, 1)
    with pytest.raises(HypothesisFailed):
        assoc_check(directed_path(1), make_gadget(directed_path(1), 1, 0), path1)


@pytest.mark.parametrize("system", sorted(fixture_systems()))
@pytest.mark.parametrize("graph", sorted(GRAPHS))
def test_arc_of_star_is_star_of_arc(system, graph):
    assert arc_star_check(GRAPHS[graph], fixture_systems()[system])


def test_arc_of_ostar(ternary):
    assert ostar_arc_check(directed_path(1), h_gadget(), ternary)
