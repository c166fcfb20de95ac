"""Topes, tope graphs and Hamiltonian-cycle certificates.

A tope is a string over ``'+'`` and ``'-'`` whose k-th character is the
side of hyperplane k; the string itself is the vertex key.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import LengthMismatch

_FLIP = {"+": "-", "-": "+"}
_NEG = str.maketrans("+-", "-+")


def flip(t: str, i: int) -> str:
    return t[:i] + _FLIP[t[i]] + t[i + 1:]


def negate(t: str) -> str:
    return t.translate(_NEG)


def tope_from_signs(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def adjacency(t1: str, t2: str) -> int | None:
    """Index of the single differing sign, or None if the topes are not adjacent."""
    if len(t1) != len(t2):
        raise LengthMismatch(f"topes of length {len(t1)} and {len(t2)}")
    diff = None
    for i, (a, b) in enumerate(zip(t1, t2)):
        if a != b:
            if diff is not None:
                return None
            diff = i
    return diff


def project_tope(index_map: dict[int, int], t: str) -> str:
    """Tope of a subarrangement: keep the coordinates listed in ``index_map`` (old -> new)."""
    out = [""] * len(index_map)
    for old, new in index_map.items():
        out[new] = t[old]
    return "".join(out)


def keep_map(m: int, drop) -> dict[int, int]:
    drop = set(drop)
    keep = [i for i in range(m) if i not in drop]
    return {old: new for new, old in enumerate(keep)}


def reorient(t: str, orientation) -> str:
    """Flip the signs where ``orientation`` is negative."""
    return "".join(c if o > 0 else _FLIP[c] for c, o in zip(t, orientation))


@dataclass(frozen=True)
class TopeGraph:
    """Vertices are topes (sorted), edges are ``(a, b, type)`` with ``a < b`` (sorted)."""

    m: int
    topes: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]

    @classmethod
    def from_parts(cls, m: int, topes: Iterable[str], edges: Iterable[tuple]) -> TopeGraph:
        canon = set()
        for a, b, h in edges:
            canon.add((a, b, h) if a < b else (b, a, h))
        return cls(m, tuple(sorted(set(topes))), tuple(sorted(canon)))

    def __len__(self):
        return len(self.topes)

    @cached_property
    def tope_set(self) -> frozenset[str]:
        return frozenset(self.topes)

    @cached_property
    def neighbors(self) -> dict[str, list[tuple[str, int]]]:
        nb: dict[str, list[tuple[str, int]]] = {t: [] for t in self.topes}
        for a, b, h in self.edges:
            nb[a].append((b, h))
            nb[b].append((a, h))
        return nb

    @cached_property
    def edge_set(self) -> frozenset[tuple[str, str, int]]:
        return frozenset(self.edges)

    def has_edge(self, a: str, b: str, h: int | None = None) -> bool:
        if h is None:
            h = adjacency(a, b)
            if h is None:
                return False
        key = (a, b, h) if a < b else (b, a, h)
        return key in self.edge_set

    def degree(self, t: str) -> int:
        return len(self.neighbors[t])

    def problems(self) -> list[str]:
        """Violations of the tope-graph invariants (empty list when valid)."""
        out = []
        ts = self.tope_set
        for t in self.topes:
            if len(t) != self.m or set(t) - {"+", "-"}:
                out.append(f"malformed tope {t!r}")
        for a, b, h in self.edges:
            if a not in ts or b not in ts:
                out.append(f"edge {a} {b} has an unknown endpoint")
            elif adjacency(a, b) != h:
                out.append(f"edge {a} {b} does not differ exactly at {h}")
        for t in self.topes:
            if negate(t) not in ts:
                out.append(f"{t} has no antipode")
                break
        for a, b, h in self.edges:
            if not self.has_edge(negate(a), negate(b), h):
                out.append(f"edge {a} {b} has no antipodal edge")
                break
        if self.topes and not self.is_connected():
            out.append("graph is not connected")
        return out

    def is_connected(self) -> bool:
        if not self.topes:
            return True
        seen = {self.topes[0]}
        queue = deque(seen)
        nb = self.neighbors
        while queue:
            t = queue.popleft()
            for u, _ in nb[t]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == len(self.topes)

    def reoriented(self, orientation) -> TopeGraph:
        """Same graph with the sign convention of some hyperplanes reversed."""
        orientation = tuple(orientation)
        topes = [reorient(t, orientation) for t in self.topes]
        edges = [(reorient(a, orientation), reorient(b, orientation), h) for a, b, h in self.edges]
        return TopeGraph.from_parts(self.m, topes, edges)


def contract_graph(G: TopeGraph, drop) -> TopeGraph:
    """Contract every edge whose type is in ``drop``; merge parallel edges, drop loops.

    Vertices of the result are labelled by projecting away the dropped
    coordinates, so the result lives on ``G.m - len(drop)`` hyperplanes.
    """
    drop = set(drop)
    index_map = keep_map(G.m, drop)
    if not drop:
        return G
    parent = {t: t for t in G.topes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, h in G.edges:
        if h in drop:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    label: dict[str, str] = {}
    for t in G.topes:
        r = find(t)
        p = project_tope(index_map, t)
        if label.setdefault(r, p) != p:
            raise ValueError("contracted class does not project to a single tope")
    topes = set(label.values())
    edges = set()
    for a, b, h in G.edges:
        if h in drop:
            continue
        la, lb = label[find(a)], label[find(b)]
        if la != lb:
            edges.add((la, lb, index_map[h]))
    if len(topes) != len(label):
        raise ValueError("two contracted classes share a projection")
    return TopeGraph.from_parts(G.m - len(drop), topes, edges)


@dataclass(frozen=True)
class HamiltonCertificate:
    """Closed walk ``start -> ... -> start`` given by the flipped hyperplane at each step."""

    start: str
    flips: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.start)

    def __len__(self):
        return len(self.flips)

    def vertices(self) -> list[str]:
        """Visited topes in order, ``start`` first; the closing return is not repeated."""
        out = [self.start]
        t = self.start
        for h in self.flips[:-1]:
            t = flip(t, h)
            out.append(t)
        return out

    @classmethod
    def from_vertices(cls, cycle: list[str]) -> HamiltonCertificate:
        flips = []
        n = len(cycle)
        for k in range(n):
            h = adjacency(cycle[k], cycle[(k + 1) % n])
            if h is None:
                raise ValueError(f"{cycle[k]} and {cycle[(k + 1) % n]} are not adjacent")
            flips.append(h)
        return cls(cycle[0], tuple(flips))
