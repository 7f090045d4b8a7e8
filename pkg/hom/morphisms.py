"""Isomorphisms, endomorphisms and rigidity on top of the search engine."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Mapping

from core.errors import SignatureMismatch
from core.structure import Structure
from hom.engine import Hom, HomQuery, identity, is_homomorphism, iter_homs, solve


def _profile(s: Structure, x: int) -> Counter:
    return Counter((name, tuple(i for i, y in enumerate(t) if y == x)) for name, t in s.tuples() if x in t)


def _iso_query(m: Structure, n: Structure, pinned: Mapping[int, int], limit: int | None = None) -> HomQuery | None:
    if m.signature != n.signature:
        raise SignatureMismatch("isomorphism needs a common signature")
    if m.size != n.size or any(len(m.rel(r)) != len(n.rel(r)) for r in m.signature.names):
        return None
    target_profiles = [_profile(n, y) for y in n.domain]
    allowed = {
        x: frozenset(y for y in n.domain if target_profiles[y] == _profile(m, x)) for x in m.domain
    }
    return HomQuery(m, n, strong=True, injective=True, pinned=dict(pinned), allowed=allowed, limit=limit)


def _inverse_is_strong(f: Hom) -> bool:
    inverse = [0] * f.target.size
    for x, y in enumerate(f.mapping):
        inverse[y] = x
    return is_homomorphism(inverse, f.target, f.source, strong=True)


def isomorphisms(m: Structure, n: Structure) -> list[Hom]:
    q = _iso_query(m, n, {})
    if q is None:
        return []
    return [f for f in solve(q) if _inverse_is_strong(f)]


def iter_isomorphisms(m: Structure, n: Structure, pinned: Mapping[int, int] | None = None) -> Iterator[Hom]:
    q = _iso_query(m, n, pinned or {})
    if q is None:
        return
    for f in iter_homs(q, lexicographic=False):
        if _inverse_is_strong(f):
            yield f


def find_isomorphism(m: Structure, n: Structure, pinned: Mapping[int, int] | None = None) -> Hom | None:
    """An isomorphism of pointed structures when `pinned` is given."""
    return next(iter_isomorphisms(m, n, pinned), None)


def is_isomorphic(m: Structure, n: Structure) -> bool:
    return find_isomorphism(m, n) is not None


def endomorphisms(m: Structure) -> list[Hom]:
    return solve(HomQuery(m, m))


def is_rigid(m: Structure) -> bool:
    found = solve(HomQuery(m, m, limit=2))
    return len(found) == 1 and found[0] == identity(m)
