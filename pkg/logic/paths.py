"""
L-paths: structures whose tuples form a chain of steps e_1..e_n linked by
joints p(0)..p(n); path types realising a Gaifman path; orientation.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from loguru import logger

from core.errors import NotAGaifmanPath
from core.graph import PermutationWitness, gaifman
from core.structure import Structure, Tuple

Step = tuple[str, Tuple]


@dataclass(frozen=True)
class LPath:
    carrier: Structure
    p: Tuple
    steps: tuple[Step, ...]
    # carrier element -> host element, when extracted from a host structure
    origin: Tuple | None = None

    @property
    def length(self) -> int:
        return len(self.steps)


def is_lpath(m: Structure, p: Sequence[int], steps: Sequence[Step] | None = None) -> LPath | None:
    """The L-path along p, or None. Given steps are checked as the chain instead of searched for."""
    p = tuple(p)
    n = len(p) - 1
    if n < 1 or len(set(p)) != len(p) or any(not 0 <= x < m.size for x in p):
        return None
    related = sorted(m.tuples())
    values = [t for _, t in related]
    if len(related) != n or len(set(values)) != n:
        return None
    if {x for t in values for x in t} != set(m.domain):
        return None

    options = [[(r, t) for r, t in related if p[i - 1] in t and p[i] in t] for i in range(1, n + 1)]
    if steps is not None:
        steps = [(r, tuple(t)) for r, t in steps]
        if len(steps) != n:
            return None
        options = [[step] if step in found else [] for step, found in zip(steps, options)]
    chosen: list[Step] = []

    def extend(i: int) -> bool:
        if i == n:
            return n < 2 or (p[0] not in chosen[1][1] and p[n] not in chosen[n - 2][1])
        for step in options[i]:
            if step in chosen:
                continue
            chosen.append(step)
            if extend(i + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        return None
    return LPath(m, p, tuple(chosen))


def iter_path_types(n: Structure, gpath: Sequence[int]) -> Iterator[LPath]:
    gpath = tuple(gpath)
    adjacent = set(gaifman(n).edges)
    if len(gpath) < 2 or len(set(gpath)) != len(gpath):
        raise NotAGaifmanPath(f"{list(gpath)} is not a path of distinct vertices")
    for u, v in zip(gpath, gpath[1:]):
        if (u, v) not in adjacent:
            raise NotAGaifmanPath(f"{u} and {v} are not adjacent in the Gaifman graph")

    options = [
        [(r, t) for r, t in n.tuples() if u in t and v in t] for u, v in zip(gpath, gpath[1:])
    ]
    for choice in product(*options):
        origin = tuple(sorted({x for _, t in choice for x in t}))
        index = {x: i for i, x in enumerate(origin)}
        relations: dict[str, set[Tuple]] = {}
        for r, t in choice:
            relations.setdefault(r, set()).add(tuple(index[x] for x in t))
        carrier = Structure(n.signature, len(origin), relations)
        found = is_lpath(carrier, [index[x] for x in gpath])
        if found is not None:
            yield LPath(found.carrier, found.p, found.steps, origin)


def path_types(n: Structure, gpath: Sequence[int]) -> list[LPath]:
    types = list(iter_path_types(n, gpath))
    logger.debug(f"[paths] {len(types)} path types along {list(gpath)}")
    return types


@dataclass(frozen=True)
class OrientedPath:
    structure: Structure
    witness: PermutationWitness


def orient_lpath(path: LPath) -> OrientedPath:
    """Move p(i-1), p(i) to the front of step i, keeping the other entries in order."""
    relations: dict[str, set[Tuple]] = {name: set() for name in path.carrier.signature.names}
    permutations: dict[str, dict[Tuple, Tuple]] = {name: {} for name in path.carrier.signature.names}
    for i, (name, t) in enumerate(path.steps, start=1):
        first, second = t.index(path.p[i - 1]), t.index(path.p[i])
        order = (first, second) + tuple(k for k in range(len(t)) if k not in (first, second))
        relations[name].add(tuple(t[k] for k in order))
        permutations[name][t] = order
    oriented = Structure(path.carrier.signature, path.carrier.size, relations, path.carrier.labels)
    witness = PermutationWitness(tuple(path.carrier.domain), permutations)
    return OrientedPath(oriented, witness)
