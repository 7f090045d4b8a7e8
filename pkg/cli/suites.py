"""
Verification suites. Each suite yields one Instance per checked case; an
instance passes when what was observed equals what was expected.

Budgets come from the CLI flags (or the environment defaults) and every
randomized suite draws from numpy's default_rng(seed).
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import islice, product

import networkx as nx
import numpy as np

from core.constants import (
    DEFAULT_MAX_R,
    DEFAULT_MAX_VERTICES,
    DEFAULT_SEED,
    FULLEMBED_PAIR_VERTICES,
    FULLEMBED_SAMPLED_PAIRS,
    HOM_ORACLE_PAIRS,
    PP_GRID_CONJUNCTS,
    PP_GRID_VARIABLES,
    PP_RANDOM_FORMULAS,
    RANDOM_SAMPLES,
    WELLFOUNDED_RANDOM_GRAPHS,
)
from core.errors import HypothesisFailed
from core.graph import (
    arc_graph,
    directed_cycle,
    directed_path,
    is_directed,
    is_well_founded,
    ordinal_embedding,
    subdivide,
    subdivided_clique,
    tournament,
    undirected_cycle,
)
from core.structure import APoint, BPoint, Native, Shared, Structure, make_graph
from density.canonical import classify_canonical, compatible_subset
from density.clique import detect_subdivided_clique
from density.miner import mine_gadget
from gadget.embedding import verify_full_embedding
from gadget.fixtures import (
    diamond_gadget,
    fixture_gadgets,
    fixture_paths,
    fixture_systems,
    h_gadget,
    h_graph,
    marked_graph_gadget,
    path_gadget,
    single_edge_gadget,
    ternary_shared_system,
    ternary_system,
)
from gadget.model import Gadget, compose_gadget, gadget_homs, gadget_identity, make_gadget
from gadget.star import arc_star_check, assoc_check, ostar_arc_check, star, star_bi, star_gadget_hom, star_graph_hom
from hom.engine import HomQuery, compose, count, exists, identity, is_homomorphism, solve
from hom.morphisms import find_isomorphism
from logic.interpret import gra_spec, reconstruct
from logic.paths import is_lpath, orient_lpath
from logic.pp import components_disagree, lemma_ppcomponents_check
from utils.enumerate import (
    connected_digraphs,
    digraphs,
    directed_without_isolated,
    iter_digraphs,
    pp_formula_grid,
    random_digraph,
    random_pp_formula,
    random_undirected,
    to_networkx,
    well_founded_graphs,
)

OK = "ok"


@dataclass(frozen=True)
class Instance:
    id: str
    expected: str
    got: str

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        return f"{self.id}\texpected={self.expected}\tgot={self.got}\t{'PASS' if self.passed else 'FAIL'}"


@dataclass(frozen=True)
class Budget:
    max_vertices: int | None = DEFAULT_MAX_VERTICES
    max_r: int = DEFAULT_MAX_R
    seed: int = DEFAULT_SEED
    samples: int | None = RANDOM_SAMPLES
    limit: int | None = None  # instances per suite

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def bound(self, vertices: int) -> int:
        """A suite's vertex bound, lowered by max_vertices when that is set."""
        return vertices if self.max_vertices is None else min(vertices, self.max_vertices)

    def sample_count(self, default: int) -> int:
        return default if self.samples is None else self.samples


Suite = Callable[[Budget], Iterator[Instance]]
SUITES: dict[str, Suite] = {}


def suite(name: str) -> Callable[[Suite], Suite]:
    def register(fn: Suite) -> Suite:
        SUITES[name] = fn
        return fn

    return register


def run_suite(name: str, budget: Budget) -> list[Instance]:
    instances = SUITES[name](budget)
    return list(islice(instances, budget.limit) if budget.limit is not None else instances)


# --- Hom engine ---

def naive_homs(q: HomQuery) -> list[tuple[int, ...]]:
    """Filter every map source -> target; the reference the engine is checked against."""
    found = []
    for f in product(range(q.target.size), repeat=q.source.size):
        if q.injective and len(set(f)) != len(f):
            continue
        if any(f[x] != y for x, y in q.pinned.items()):
            continue
        if is_homomorphism(f, q.source, q.target, strong=q.strong):
            found.append(f)
    return found


@suite("hom-oracle")
def hom_oracle(budget: Budget) -> Iterator[Instance]:
    rng = budget.rng()
    size = budget.bound(3)
    for k in range(budget.sample_count(HOM_ORACLE_PAIRS)):
        m = random_digraph(rng, int(rng.integers(1, size + 1)))
        n = random_digraph(rng, int(rng.integers(1, size + 1)))
        for strong, injective, pin in product((False, True), repeat=3):
            pinned = {0: int(rng.integers(n.size))} if pin else {}
            q = HomQuery(m, n, strong=strong, injective=injective, pinned=pinned)
            expected = naive_homs(q)
            found = [f.mapping for f in solve(q)]
            agree = found == expected and count(q) == len(expected) and exists(q) == bool(expected)
            got = str(len(found)) if agree else f"differs({len(found)})"
            yield Instance(f"hom-oracle/{k}/s{int(strong)}i{int(injective)}p{int(pin)}", str(len(expected)), got)


# --- Star product ---

def _intersection_tags(m: Gadget, e: tuple[int, int], f: tuple[int, int]) -> set:
    (u, v), (s, t) = e, f
    tags = {Shared(p) for p in m.P}
    if u == s:
        tags |= {Native(u)} | {APoint(u, a) for a in m.A}
    if v == t:
        tags |= {Native(v)} | {BPoint(v, b) for b in m.B}
    if v == s:
        tags.add(Native(v))
    if u == t:
        tags.add(Native(u))
    return tags


def phi_problems(g: Structure, m: Gadget) -> list[str]:
    built = star(g, m)
    problems = []
    if built.structure.size != g.size + len(m.P) + len({u for u, _ in g.edges}) * len(m.A) + len(
        {v for _, v in g.edges}
    ) * len(m.B) + len(g.edges) * len(m.inner):
        problems.append("size formula")
    for e in g.edges:
        f = built.phi(e)
        if e[0] != e[1] and not (f.is_injective and is_homomorphism(f.mapping, m.carrier, built.structure, strong=True)):
            problems.append(f"phi{e} not injective strong")
    for e, f in product(g.edges, repeat=2):
        if e >= f:
            continue
        got = {built.tags[x] for x in built.image(e) & built.image(f)}
        if got != _intersection_tags(m, e, f):
            problems.append(f"intersection {e}/{f}")
    return problems


@suite("phi")
def phi_suite(budget: Budget) -> Iterator[Instance]:
    graphs = directed_without_isolated(budget.bound(5))
    for name, m in fixture_gadgets().items():
        for i, g in enumerate(graphs):
            problems = phi_problems(g, m)
            yield Instance(f"phi/{name}/G{i}", OK, ", ".join(problems) or OK)


def _bifunctor_graphs(budget: Budget) -> list[Structure]:
    graphs = [g for g in digraphs(budget.bound(3)) if g.edges]
    return graphs + [make_graph(1, [(0, 0)])]


@suite("bifunctor")
def bifunctor_suite(budget: Budget) -> Iterator[Instance]:
    # path1 -> marked has one gadget hom; path1 -> diamond has two and diamond has a swap
    pairs = {"marked": (path_gadget(1), marked_graph_gadget()), "diamond": (path_gadget(1), diamond_gadget())}
    graphs = _bifunctor_graphs(budget)
    rng = budget.rng()

    for name, (m, n) in pairs.items():
        rhos, endos = gadget_homs(m, n), gadget_homs(n, n)

        for i, g in enumerate(graphs):
            ident = star_bi(identity(g), gadget_identity(m))
            got = OK if ident.mapping == tuple(star(g, m).structure.domain) else "not identity"
            yield Instance(f"bifunctor/{name}/identity/G{i}", OK, got)

        for (i, g), (j, h) in product(enumerate(graphs), repeat=2):
            homs = solve(HomQuery(g, h))
            images = set()
            problems = []
            for f, rho in product(homs, rhos):
                both = star_bi(f, rho)
                images.add(both.mapping)
                if not is_homomorphism(both.mapping, both.source, both.target):
                    problems.append("not a hom")
                left = compose(star_graph_hom(f, m), star_gadget_hom(h, rho))
                right = compose(star_gadget_hom(g, rho), star_graph_hom(f, n))
                if not (both.mapping == left.mapping == right.mapping):
                    problems.append("one-sided actions disagree")
                for e in g.edges:
                    square = compose(star(g, m).phi(e), both).mapping
                    other = tuple(star(h, n).phi((f(e[0]), f(e[1])))(rho(x)) for x in m.carrier.domain)
                    if square != other:
                        problems.append(f"square at {e}")
            yield Instance(f"bifunctor/{name}/laws/G{i}-H{j}", OK, ", ".join(sorted(set(problems))) or OK)
            yield Instance(f"bifunctor/{name}/faithful/G{i}-H{j}", str(len(homs) * len(rhos)), str(len(images)))

        for k in range(budget.sample_count(50)):
            g, h, j = (graphs[int(rng.integers(len(graphs)))] for _ in range(3))
            fs, gs = solve(HomQuery(g, h)), solve(HomQuery(h, j))
            if not fs or not gs:
                continue
            f, f2 = fs[int(rng.integers(len(fs)))], gs[int(rng.integers(len(gs)))]
            rho, rho2 = rhos[int(rng.integers(len(rhos)))], endos[int(rng.integers(len(endos)))]
            whole = star_bi(compose(f, f2), compose_gadget(rho, rho2))
            parts = compose(star_bi(f, rho), star_bi(f2, rho2))
            yield Instance(f"bifunctor/{name}/compose/{k}", OK, OK if whole.mapping == parts.mapping else "differs")


@suite("assoc")
def assoc_suite(budget: Budget) -> Iterator[Instance]:
    graphs = {"edge": directed_path(1), "P2": directed_path(2), "C3": directed_cycle(3)}
    lefts = {"hcal": h_gadget(), "edge": single_edge_gadget()}
    rights = {"path1": path_gadget(1), "ternary": ternary_system(), "ternary-shared": ternary_shared_system()}
    for (gn, g), (hn, h), (mn, m) in product(graphs.items(), lefts.items(), rights.items()):
        # t is a source in H, so an M with A-points falls outside the hypothesis
        expected = "hypothesis failed" if (hn, mn) == ("hcal", "ternary") else "iso"
        try:
            iso = assoc_check(g, h, m)
        except HypothesisFailed:
            yield Instance(f"assoc/{gn}/{hn}/{mn}", expected, "hypothesis failed")
            continue
        ok = iso.is_injective and is_homomorphism(iso.mapping, iso.source, iso.target, strong=True)
        yield Instance(f"assoc/{gn}/{hn}/{mn}", expected, "iso" if ok else "not an iso")


@suite("arcstar")
def arcstar_suite(budget: Budget) -> Iterator[Instance]:
    graphs = directed_without_isolated(budget.bound(5))
    for name, m in fixture_systems().items():
        for i, g in enumerate(graphs):
            yield Instance(f"arcstar/{name}/G{i}", "equal", "equal" if arc_star_check(g, m) else "differs")
            if g.size <= 2:
                same = ostar_arc_check(g, h_gadget(), m)
                yield Instance(f"arcstar/ostar/{name}/G{i}", "iso", "iso" if same else "differs")


def subdivided_h_gadget(r: int) -> Gadget:
    sub = subdivide(h_graph(), r, "directed")
    return make_gadget(sub.structure, sub.index(Native(0)), sub.index(Native(4)))


@suite("hcal")
def hcal_suite(budget: Budget) -> Iterator[Instance]:
    graphs = well_founded_graphs(budget.bound(4))
    for r in range(budget.max_r + 1):
        m = subdivided_h_gadget(r)
        for i, g in enumerate(graphs):
            built = star(g, m)
            homs = {f.mapping for f in solve(HomQuery(m.carrier, built.structure))}
            phis = {built.phi(e).mapping for e in g.edges}
            got = str(len(homs)) if homs <= phis else f"{len(homs)} incl. non-phi"
            yield Instance(f"hcal/r{r}/G{i}", str(len(g.edges)), got)


@suite("fullembed")
def fullembed_suite(budget: Budget) -> Iterator[Instance]:
    graphs = connected_digraphs(budget.bound(4))
    small = [i for i, g in enumerate(graphs) if g.size <= FULLEMBED_PAIR_VERTICES]
    pairs = list(product(small, repeat=2))
    if len(small) < len(graphs):
        rng = budget.rng()
        for _ in range(budget.sample_count(FULLEMBED_SAMPLED_PAIRS)):
            i, j = (int(x) for x in rng.integers(len(graphs), size=2))
            if max(graphs[i].size, graphs[j].size) > FULLEMBED_PAIR_VERTICES:
                pairs.append((i, j))
    report = verify_full_embedding(h_gadget(), graphs, pairs)
    for row in report.pairs:
        got = "bijection" if row.injective and row.surjective else f"{row.graph_homs} vs {row.star_homs}"
        yield Instance(f"fullembed/G{row.source}-H{row.target}", "bijection", got)
    for row in report.graphs:
        yield Instance(f"fullembed/phi-only/G{row.graph}", "phi-only", "phi-only" if row.phi_only else "extra homs")

    negative = verify_full_embedding(path_gadget(1), [directed_path(1), directed_path(2)])
    yield Instance("fullembed/path1-not-full", "not full", "full" if negative.full else "not full")
    identity_functor = verify_full_embedding(single_edge_gadget(), [directed_path(2)])
    yield Instance("fullembed/single-edge", "full", "full" if identity_functor.full else "not full")


# --- Logic ---

@suite("ppcomp")
def ppcomp_suite(budget: Budget) -> Iterator[Instance]:
    structures = digraphs(budget.bound(3), loops=True)
    for k, phi in enumerate(pp_formula_grid(PP_GRID_VARIABLES, PP_GRID_CONJUNCTS, distinct=True)):
        bad = None
        for i, a in enumerate(structures):
            abar = components_disagree(a, phi)
            if abar is not None:
                bad = (i, abar)
                break
        yield Instance(f"ppcomp/grid/{k}", "agree", f"disagree at {bad}" if bad else "agree")

    rng = budget.rng()
    for k in range(budget.sample_count(PP_RANDOM_FORMULAS)):
        a = random_digraph(rng, int(rng.integers(3, 6)))
        phi = random_pp_formula(rng, int(rng.integers(2, 6)), int(rng.integers(1, 5)), int(rng.integers(0, 3)))
        abar = tuple(int(x) for x in rng.integers(a.size, size=len(phi.free)))
        ok = lemma_ppcomponents_check(a, abar, phi)
        yield Instance(f"ppcomp/random/{k}", "agree", "agree" if ok else "disagree")


@suite("reconstruct")
def reconstruct_suite(budget: Budget) -> Iterator[Instance]:
    for i, m in enumerate(digraphs(budget.bound(4), loops=True)):
        rebuilt = reconstruct(gra_spec(), m)
        yield Instance(f"reconstruct/M{i}", "iso", "iso" if find_isomorphism(rebuilt, m) else "differs")


@suite("orient")
def orient_suite(budget: Budget) -> Iterator[Instance]:
    for name, (s, p) in fixture_paths().items():
        path = is_lpath(s, p)
        if path is None:
            yield Instance(f"orient/{name}", OK, "not an L-path")
            continue
        oriented = orient_lpath(path)
        arc = arc_graph(oriented.structure)
        expected_edges = {(arc.index(x), arc.index(y)) for x, y in zip(p, p[1:])}
        problems = []
        if not is_directed(oriented.structure):
            problems.append("not directed")
        if not oriented.witness.verify(s, oriented.structure):
            problems.append("witness")
        if set(arc.vertices) != set(p) or set(arc.graph.edges) != expected_edges:
            problems.append("arc graph")
        yield Instance(f"orient/{name}", OK, ", ".join(problems) or OK)


# --- Density ---

@suite("canonical")
def canonical_suite(budget: Budget) -> Iterator[Instance]:
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    colourings = {
        "constant": ({p: 0 for p in pairs}, {1}),
        "by-first": ({(i, j): i for i, j in pairs}, {2}),
        "by-second": ({(i, j): j for i, j in pairs}, {3}),
        "injective": ({p: p for p in pairs}, {4}),
        "engineered": ({**{p: p for p in pairs}, (2, 3): (0, 1)}, set()),
    }
    for name, (chi, expected) in colourings.items():
        yield Instance(f"canonical/{name}", str(sorted(expected)), str(sorted(classify_canonical(5, chi))))

    fs = {(i, j): (("x", i, j), ("y", i, j)) for i, j in ((i, j) for i in range(5) for j in range(i + 1, 5))}
    fs[(2, 3)] = (("y", 0, 1), ("y", 2, 3))
    yield Instance("canonical/compatible", "(0, 1, 2, 4)", str(compatible_subset(fs, 5)))


def _naive_embeds(pattern: Structure, host: Structure) -> bool:
    return bool(naive_homs(HomQuery(pattern, host, injective=True)))


@suite("density")
def density_suite(budget: Budget) -> Iterator[Instance]:
    for n, r in product(range(2, 5), range(3)):
        host = subdivided_clique(n, r).structure
        found = detect_subdivided_clique(host, n, r) is not None
        yield Instance(f"density/K{n}^{r}", "found", "found" if found else "none")
    for size, expected in ((6, "found"), (5, "none")):
        found = detect_subdivided_clique(undirected_cycle(size), 3, 1) is not None
        yield Instance(f"density/C{size}-K3^1", expected, "found" if found else "none")

    rng = budget.rng()
    for k in range(budget.sample_count(40)):
        host = random_undirected(rng, int(rng.integers(4, 8)))
        for n, r in ((3, 0), (3, 1), (4, 0)):
            pattern = subdivided_clique(n, r).structure
            if pattern.size > host.size:
                continue
            expected = "found" if _naive_embeds(pattern, host) else "none"
            got = "found" if detect_subdivided_clique(host, n, r) is not None else "none"
            yield Instance(f"density/oracle/{k}/K{n}^{r}", expected, got)


@suite("wellfounded")
def wellfounded_suite(budget: Budget) -> Iterator[Instance]:
    def check(g: Structure) -> bool:
        acyclic = nx.is_directed_acyclic_graph(to_networkx(g))
        if is_well_founded(g) != acyclic:
            return False
        if acyclic:
            f = ordinal_embedding(g)
            return sorted(f) == list(g.domain) and all(f[u] < f[v] for u, v in g.edges)
        return True

    for n in range(1, budget.bound(4) + 1):
        graphs = list(iter_digraphs(n, loops=True))
        bad = next((i for i, g in enumerate(graphs) if not check(g)), None)
        yield Instance(f"wellfounded/all-{n}", f"agree on {len(graphs)}", f"disagree at #{bad}" if bad is not None else f"agree on {len(graphs)}")

    rng = budget.rng()
    for k in range(budget.sample_count(WELLFOUNDED_RANDOM_GRAPHS)):
        g = random_digraph(rng, int(rng.integers(1, 9)), density=float(rng.uniform(0.05, 0.4)))
        yield Instance(f"wellfounded/random/{k}", "agree", "agree" if check(g) else "disagree")


@suite("mine-roundtrip")
def mine_roundtrip_suite(budget: Budget) -> Iterator[Instance]:
    seeds = {"path1": path_gadget(1), "ternary": ternary_system()}
    for (name, m0), m in product(seeds.items(), (3, 4)):
        host = star(tournament(m), m0).structure
        mined = mine_gadget(host, m, 1)
        if mined is None:
            yield Instance(f"mine-roundtrip/{name}/m{m}", f">={m}", "none")
            continue
        confirmed = is_homomorphism(mined.embedding.mapping, mined.embedding.source, host) and exists(
            HomQuery(star(tournament(m), mined.gadget).structure, host, injective=True)
        )
        got = f">={m}" if mined.verified_m >= m and confirmed else f"{mined.verified_m}{'' if confirmed else ' unconfirmed'}"
        yield Instance(f"mine-roundtrip/{name}/m{m}", f">={m}", got)
