"""
Gadget mining: recover a gadget M from a structure N whose Gaifman graph
contains a subdivided clique, such that T_m * M embeds into N.

Stages:
  1. witness       find a subdivided clique in gaifman(N)
  2. path-types    take the first path type of every witness path
  3. grouping      keep the largest index set whose pairs share a path type
  4. alignment     align the maps f_ij : M -> N along pointed isomorphisms
  5. classify      sort non-joint elements into P / A / B / H'
  6. compatible    shrink the index set until H' and inner joints never collide
  7. glue          verify the gluing pattern and build T_m * M -> N
  8. orient        orient the path to obtain a system
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from loguru import logger

from core.constants import MIN_USABLE_INDICES, MINER_MAX_WITNESSES
from core.errors import HypothesisFailed
from core.graph import gaifman, tournament
from core.structure import Structure, Tuple
from density.canonical import classify_canonical, compatible_subset
from density.clique import CliqueWitness, iter_clique_witnesses
from gadget.model import Gadget, make_gadget, make_system
from gadget.star import phi_tag, star
from hom.engine import Hom, identity, is_homomorphism
from hom.morphisms import find_isomorphism
from logic.paths import LPath, iter_path_types, orient_lpath

Pair = tuple[int, int]
ROLE_BY_TYPE = {1: "P", 2: "A", 3: "B", 4: "H'"}


@dataclass(frozen=True)
class StageReport:
    stage: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class MinedGadget:
    gadget: Gadget
    system: Gadget
    verified_m: int
    natives: Tuple  # host elements glued at the tournament's vertices
    embedding: Hom  # star(tournament(verified_m), gadget) -> N
    stages: tuple[StageReport, ...]


def injective_glue_check(gadget: Gadget, indices: Sequence[int], maps: Mapping[Pair, Sequence[int]]) -> bool:
    """f_e(x) = f_e'(y) exactly when phi_e(x) = phi_e'(y) in T * gadget, for pairs over `indices`."""
    pairs = list(combinations(sorted(indices), 2))
    if any(p not in maps for p in pairs):
        return False
    by_tag: dict = {}
    by_value: dict = {}
    for pair in pairs:
        f = maps[pair]
        if len(set(f)) != len(f):
            return False
        for x in gadget.carrier.domain:
            tag, value = phi_tag(gadget, pair, x), f[x]
            if by_tag.setdefault(tag, value) != value or by_value.setdefault(value, tag) != tag:
                return False
    return True


def path_type_bound(signature_size: int, max_arity: int, r: int) -> int:
    """Upper bound on the number of path types along one subdivided edge."""
    return (signature_size * factorial(max_arity)) ** (r + 1) * 2 ** (r * r)


@dataclass
class _Group:
    representative: LPath
    isos: dict[Pair, Hom] = field(default_factory=dict)


class GadgetMiner:
    def __init__(self, host: Structure, n: int, r: int, max_witnesses: int = MINER_MAX_WITNESSES) -> None:
        self.host = host
        self.n = n
        self.r = r
        self.max_witnesses = max_witnesses
        self.stages: list[StageReport] = []

    def mine(self) -> MinedGadget | None:
        self.stages = []
        if self.n < MIN_USABLE_INDICES:
            self._record("witness", False, f"n={self.n} leaves fewer than {MIN_USABLE_INDICES} indices")
            return None

        best: MinedGadget | None = None
        last_failure: list[StageReport] = []
        tried = 0
        for witness in iter_clique_witnesses(gaifman(self.host), self.n, self.r):
            if list(witness.natives) != sorted(witness.natives):
                continue
            tried += 1
            result, stages = self._attempt(witness)
            if result is None:
                last_failure = stages
            elif best is None or result.verified_m > best.verified_m:
                best = result
            if (best is not None and best.verified_m == self.n) or tried >= self.max_witnesses:
                break

        if tried == 0:
            self._record("witness", False, f"no {self.r}-subdivided K_{self.n} in the Gaifman graph")
            return None
        self._record("witness", True, f"tried {tried} witnesses")
        if best is None:
            self.stages += last_failure
            return None
        self.stages += best.stages
        return MinedGadget(best.gadget, best.system, best.verified_m, best.natives, best.embedding, tuple(self.stages))

    def _record(self, stage: str, ok: bool, detail: str, into: list[StageReport] | None = None) -> None:
        (self.stages if into is None else into).append(StageReport(stage, ok, detail))
        if into is not None:
            logger.debug(f"[miner] attempt {stage}: {'ok' if ok else 'FAIL'} - {detail}")
            return
        log = logger.info if ok else logger.warning
        log(f"[miner] {stage}: {'ok' if ok else 'FAIL'} - {detail}")

    def _attempt(self, witness: CliqueWitness) -> tuple[MinedGadget | None, list[StageReport]]:
        stages: list[StageReport] = []

        # --- path types ---
        types: dict[Pair, LPath] = {}
        for pair, path in sorted(witness.paths.items()):
            first = next(iter_path_types(self.host, path), None)
            if first is None:
                self._record("path-types", False, f"witness path {pair} has no path type", stages)
                return None, stages
            types[pair] = first
        signature = self.host.signature
        bound = path_type_bound(len(signature), max(s.arity for s in signature), self.r)
        self._record("path-types", True, f"{len(types)} paths, bound {bound} types per path", stages)

        # --- grouping ---
        groups: list[_Group] = []
        for pair, lp in types.items():
            for group in groups:
                rep = group.representative
                iso = find_isomorphism(rep.carrier, lp.carrier, dict(zip(rep.p, lp.p)))
                if iso is not None:
                    group.isos[pair] = iso
                    break
            else:
                groups.append(_Group(lp, {pair: identity(lp.carrier)}))
        indices, group = self._largest_index_set(groups)
        if len(indices) < MIN_USABLE_INDICES:
            self._record("grouping", False, f"{len(groups)} path types, best index set {indices}", stages)
            return None, stages
        self._record("grouping", True, f"{len(groups)} path types, indices {indices}", stages)

        # --- alignment ---
        rep = group.representative
        maps = {
            (a, b): tuple(types[(i, j)].origin[group.isos[(i, j)](x)] for x in rep.carrier.domain)
            for (a, i), (b, j) in combinations(enumerate(indices), 2)
        }
        self._record("alignment", True, f"{len(maps)} maps of size {rep.carrier.size}", stages)

        # --- classify ---
        joints = set(rep.p)
        k = len(indices)
        roles: dict[int, str] = {}
        for x in rep.carrier.domain:
            if x in joints:
                continue
            found = classify_canonical(k, {pair: f[x] for pair, f in maps.items()})
            roles[x] = ROLE_BY_TYPE[min(found)] if len(found) == 1 else "H'"
        self._record("classify", True, f"roles {roles}", stages)

        # --- compatible ---
        positions = sorted(
            [x for x, role in roles.items() if role == "H'"] + [x for x in rep.p[1:-1]]
        )
        try:
            chosen = compatible_subset({pair: tuple(f[x] for x in positions) for pair, f in maps.items()}, k)
        except HypothesisFailed as exc:
            self._record("compatible", False, str(exc), stages)
            return None, stages
        if len(chosen) < MIN_USABLE_INDICES:
            self._record("compatible", False, f"only {list(chosen)} remain compatible", stages)
            return None, stages
        self._record("compatible", True, f"indices {list(chosen)}", stages)

        # --- glue ---
        gadget = make_gadget(
            rep.carrier,
            rep.p[0],
            rep.p[-1],
            A=[x for x, role in roles.items() if role == "A"],
            B=[x for x, role in roles.items() if role == "B"],
            P=[x for x, role in roles.items() if role == "P"],
        )
        verified = self._verified_subset(gadget, chosen, maps)
        if verified is None:
            self._record("glue", False, f"no {MIN_USABLE_INDICES}-subset of {list(chosen)} glues injectively", stages)
            return None, stages
        local = {
            (a, b): maps[(verified[a], verified[b])] for a, b in combinations(range(len(verified)), 2)
        }
        embedding = self._embedding(gadget, local)
        if embedding is None:
            self._record("glue", False, "induced map is not an injective homomorphism", stages)
            return None, stages
        self._record("glue", True, f"verified_m={len(verified)}", stages)

        # --- orient ---
        oriented = orient_lpath(rep)
        system = make_system(
            make_gadget(oriented.structure, gadget.alpha, gadget.beta, gadget.A, gadget.B, gadget.P)
        )
        self._record("orient", True, "arc graph is the directed path on the joints", stages)

        natives = tuple(witness.natives[indices[a]] for a in verified)
        return MinedGadget(gadget, system, len(verified), natives, embedding, tuple(stages)), stages

    def _largest_index_set(self, groups: list[_Group]) -> tuple[Tuple, _Group | None]:
        best: tuple[Tuple, _Group | None] = ((), None)
        for group in groups:
            for size in range(self.n, len(best[0]), -1):
                subset = next(
                    (s for s in combinations(range(self.n), size) if all(p in group.isos for p in combinations(s, 2))),
                    None,
                )
                if subset is not None:
                    best = (subset, group)
                    break
        return best

    @staticmethod
    def _verified_subset(gadget: Gadget, chosen: Tuple, maps: Mapping[Pair, Tuple]) -> Tuple | None:
        for size in range(len(chosen), MIN_USABLE_INDICES - 1, -1):
            for subset in combinations(chosen, size):
                local = {(a, b): maps[(subset[a], subset[b])] for a, b in combinations(range(size), 2)}
                if injective_glue_check(gadget, range(size), local):
                    return subset
        return None

    def _embedding(self, gadget: Gadget, maps: Mapping[Pair, Tuple]) -> Hom | None:
        size = 1 + max(j for _, j in maps)
        built = star(tournament(size), gadget)
        mapping = [-1] * built.structure.size
        for pair, f in maps.items():
            for x in gadget.carrier.domain:
                mapping[built.index(phi_tag(gadget, pair, x))] = f[x]
        ok = is_homomorphism(mapping, built.structure, self.host) and len(set(mapping)) == len(mapping)
        return Hom(built.structure, self.host, tuple(mapping)) if ok else None


def mine_gadget(host: Structure, n: int, r: int) -> MinedGadget | None:
    return GadgetMiner(host, n, r).mine()
