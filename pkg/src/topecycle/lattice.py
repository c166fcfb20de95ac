"""Intersection lattices, modular elements and supersolvable splittings.

A flat is identified by the reduced row-echelon form of the span of the
normals vanishing on it; its ``generators`` are all hyperplanes containing
it.  Flats are numbered in order of rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arrangement import Arrangement, delete
from .errors import SizeLimit
from .linalg import Echelon

DEFAULT_FLAT_LIMIT = 10**6


@dataclass(frozen=True)
class Flat:
    key: tuple
    generators: frozenset[int]
    rank: int


class Lattice:
    """Intersection lattice of an arrangement (flats ordered by reverse inclusion)."""

    def __init__(self, A: Arrangement, flats: list[Flat], covers: dict[int, set[int]]):
        self.arrangement = A
        self.flats = flats
        self.covers = covers
        self._by_gens = {f.generators: i for i, f in enumerate(flats)}
        self._rank_cache: dict[frozenset, int] = {}

    def __len__(self):
        return len(self.flats)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.flats) - 1

    @cached_property
    def by_rank(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.flats[-1].rank + 1)]
        for i, f in enumerate(self.flats):
            out[f.rank].append(i)
        return out

    @property
    def rank(self) -> int:
        return self.flats[-1].rank

    def counts(self) -> list[int]:
        return [len(level) for level in self.by_rank]

    def leq(self, x: int, y: int) -> bool:
        return self.flats[x].generators <= self.flats[y].generators

    def _span_rank(self, gens: frozenset) -> int:
        r = self._rank_cache.get(gens)
        if r is None:
            e = Echelon(self.arrangement.dim)
            for i in gens:
                e.add(self.arrangement.normals[i])
            r = self._rank_cache[gens] = e.rank
        return r

    def closure(self, gens) -> int:
        """Flat spanned by the hyperplanes ``gens``."""
        gens = frozenset(gens)
        hit = self._by_gens.get(gens)
        if hit is not None:
            return hit
        e = Echelon(self.arrangement.dim)
        for i in gens:
            e.add(self.arrangement.normals[i])
        full = frozenset(i for i, v in enumerate(self.arrangement.normals) if e.contains(v))
        return self._by_gens[full]

    def join(self, x: int, y: int) -> int:
        return self.closure(self.flats[x].generators | self.flats[y].generators)

    def meet(self, x: int, y: int) -> int:
        return self.closure(self.flats[x].generators & self.flats[y].generators)

    def rank_of(self, x: int) -> int:
        return self.flats[x].rank

    def is_modular(self, x: int) -> bool:
        """``rk(x v w) + rk(x ^ w) = rk(x) + rk(w)`` for every flat ``w``."""
        gx = self.flats[x].generators
        rx = self.flats[x].rank
        for w, fw in enumerate(self.flats):
            gw = fw.generators
            if gw <= gx or gx <= gw:
                continue
            # ranks only depend on the spans, so generator sets suffice
            if self._span_rank(gx | gw) + self._span_rank(gx & gw) != rx + fw.rank:
                return False
        return True

    def coatoms(self) -> list[int]:
        return self.by_rank[self.rank - 1] if self.rank >= 1 else []


def build_lattice(A: Arrangement, limit: int = DEFAULT_FLAT_LIMIT) -> Lattice:
    n = A.dim
    normals = A.normals
    bottom = Flat((), frozenset(), 0)
    flats = [bottom]
    echelons = [Echelon(n)]
    by_key = {(): 0}
    covers: dict[int, set[int]] = {0: set()}
    level = [0]
    while level:
        nxt = []
        for x in level:
            gx = flats[x].generators
            done = set(gx)
            for h in range(A.m):
                if h in done:
                    continue
                e = echelons[x].copy()
                e.add(normals[h])
                key = e.key()
                y = by_key.get(key)
                if y is None:
                    gens = frozenset(i for i, v in enumerate(normals) if i in gx or i == h or e.contains(v))
                    y = len(flats)
                    flats.append(Flat(key, gens, e.rank))
                    echelons.append(e)
                    by_key[key] = y
                    covers[y] = set()
                    nxt.append(y)
                    if len(flats) > limit:
                        raise SizeLimit(f"more than {limit} flats")
                covers[x].add(y)
                done |= flats[y].generators
        level = nxt
    return Lattice(A, flats, covers)


@dataclass(frozen=True)
class SupersolvableDecomposition:
    """``levels[k] = (A0, A1)`` in original hyperplane indices; level k+1 splits level k's A0."""

    levels: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    m: int

    def base(self) -> tuple[int, ...]:
        """Hyperplanes of the final rank <= 2 arrangement."""
        if not self.levels:
            return tuple(range(self.m))
        return self.levels[-1][0]


def split_condition_holds(A: Arrangement, A0, A1) -> bool:
    """Every pairwise intersection of A1 hyperplanes lies in some A0 hyperplane."""
    normals = A.normals
    A1 = list(A1)
    for a in range(len(A1)):
        for b in range(a + 1, len(A1)):
            e = Echelon(A.dim)
            e.add(normals[A1[a]])
            e.add(normals[A1[b]])
            if not any(e.contains(normals[h]) for h in A0):
                return False
    return True


def supersolvable_decomposition(A: Arrangement) -> SupersolvableDecomposition | None:
    """A chain of modular-coatom splittings down to rank 2, or None if none exists."""
    levels = _decompose(A, list(range(A.m)))
    if levels is None:
        return None
    return SupersolvableDecomposition(tuple(levels), A.m)


def _decompose(A: Arrangement, labels: list[int]):
    if A.rank <= 2:
        return []
    L = build_lattice(A)
    options = []
    for x in L.coatoms():
        gens = L.flats[x].generators
        if not L.is_modular(x):
            continue
        A0 = sorted(gens)
        A1 = [i for i in range(A.m) if i not in gens]
        if not A1:
            continue
        options.append((-len(A0), A0, A1))
    options.sort()
    for _, A0, A1 in options:
        if not split_condition_holds(A, A0, A1):
            continue
        sub, index_map = delete(A, A1)
        inverse = {new: old for old, new in index_map.items()}
        rest = _decompose(sub, [labels[inverse[k]] for k in range(sub.m)])
        if rest is not None:
            level = (tuple(labels[i] for i in A0), tuple(labels[i] for i in A1))
            return [level] + rest
    return None
