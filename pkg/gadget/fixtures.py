"""Named gadgets and paths used by the verifiers, the CLI and the tests."""

from __future__ import annotations

from core.graph import directed_path
from core.structure import Signature, Structure, make_graph
from gadget.model import Gadget, make_gadget

H_LABELS = ("s", "v0", "v1", "v2", "t")
# s -> v0 -> v1 <- t, and v2 -> s, v1, t
H_EDGES = ((0, 1), (1, 2), (4, 2), (3, 0), (3, 2), (3, 4))

TERNARY = Signature.of(("R", 3))


def h_graph() -> Structure:
    return make_graph(5, H_EDGES, H_LABELS)


def h_gadget() -> Gadget:
    """The rigid well-founded graph gadget with alpha = s, beta = t."""
    return make_gadget(h_graph(), 0, 4)


def path_gadget(r: int) -> Gadget:
    """Directed path of length r+1 from alpha = 0 to beta = r+1."""
    return make_gadget(directed_path(r + 1), 0, r + 1)


def single_edge_gadget() -> Gadget:
    return path_gadget(0)


def ternary_system() -> Gadget:
    """R(alpha, j, a), R(j, beta, p): an oriented path of length 2 with one
    A-point and one P-point off the arc graph."""
    carrier = Structure(TERNARY, 5, {"R": {(0, 2, 3), (2, 1, 4)}})
    return make_gadget(carrier, 0, 1, A=[3], P=[4])


def ternary_shared_system() -> Gadget:
    """R(alpha, j, p), R(j, beta, p): both tuples share the one P-point."""
    carrier = Structure(TERNARY, 4, {"R": {(0, 2, 3), (2, 1, 3)}})
    return make_gadget(carrier, 0, 1, P=[3])


def diamond_gadget() -> Gadget:
    """Two routes alpha -> 2 -> beta and alpha -> 3 -> beta; swapping 2 and 3 is an automorphism."""
    return make_gadget(make_graph(4, [(0, 2), (2, 1), (0, 3), (3, 1)]), 0, 1)


def ternary_edge_system() -> Gadget:
    """A single ternary tuple R(alpha, beta, b) with a B-point."""
    carrier = Structure(TERNARY, 3, {"R": {(0, 1, 2)}})
    return make_gadget(carrier, 0, 1, B=[2])


def marked_graph_gadget() -> Gadget:
    """Path 0 -> 2 -> 1 with an A-point 3 -> 2, a B-point 2 -> 4 and a P-point 5 -> 2.

    Marked points touch only the inner element, so every phi reflects tuples.
    """
    carrier = make_graph(6, [(0, 2), (2, 1), (3, 2), (2, 4), (5, 2)])
    return make_gadget(carrier, 0, 1, A=[3], B=[4], P=[5])


def fixture_gadgets() -> dict[str, Gadget]:
    return {
        "hcal": h_gadget(),
        "path0": path_gadget(0),
        "path1": path_gadget(1),
        "path2": path_gadget(2),
        "ternary": ternary_system(),
        "ternary-edge": ternary_edge_system(),
        "ternary-shared": ternary_shared_system(),
        "marked": marked_graph_gadget(),
        "diamond": diamond_gadget(),
    }


def fixture_systems() -> dict[str, Gadget]:
    return {
        "path0": path_gadget(0),
        "path1": path_gadget(1),
        "path2": path_gadget(2),
        "ternary": ternary_system(),
        "ternary-edge": ternary_edge_system(),
    }


def fixture_paths() -> dict[str, tuple[Structure, tuple[int, ...]]]:
    """Structures with joint sequences that form L-paths, oriented or not."""
    chain = Structure(Signature.of(("R", 3), ("S", 3)), 5, {"R": {(0, 1, 3)}, "S": {(1, 2, 4)}})
    # joints sit at arbitrary positions and element 0 is shared by both steps
    shuffled = Structure(
        Signature.of(("Q", 4)),
        6,
        {"Q": {(0, 1, 4, 5), (3, 2, 1, 0)}},
    )
    backwards = Structure(TERNARY, 5, {"R": {(3, 2, 0), (2, 4, 1)}})
    return {
        "graph-path": (directed_path(3), (0, 1, 2, 3)),
        "reversed-edges": (make_graph(3, [(1, 0), (1, 2)]), (0, 1, 2)),
        "ternary-chain": (chain, (0, 1, 2)),
        "ternary-system": (ternary_system().carrier, (0, 2, 1)),
        "backwards": (backwards, (0, 2, 1)),
        "shuffled": (shuffled, (4, 1, 2)),
    }
