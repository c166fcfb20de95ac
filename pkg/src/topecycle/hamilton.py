"""Hamiltonian cycles on tope graphs: checking, combining and the supersolvable recursion."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EdgeNotInCycle, InvalidInput, NotAPath, NotSupersolvable
from .topes import HamiltonCertificate, TopeGraph, contract_graph, flip, keep_map, project_tope


@dataclass(frozen=True)
class Report:
    ok: bool
    violation: str | None = None
    step: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def verify_certificate(G: TopeGraph, c: HamiltonCertificate) -> Report:
    """Check that ``c`` is a closed walk through every tope of ``G`` exactly once."""
    n = len(G.topes)
    if len(c.start) != G.m:
        return Report(False, "NonEdgeStep", 0, f"start has length {len(c.start)}, graph has m={G.m}")
    if c.start not in G.tope_set:
        return Report(False, "NonEdgeStep", 0, f"start {c.start} is not a tope")
    if len(c.flips) != n:
        return Report(False, "NotSpanning", None, f"walk has {len(c.flips)} steps, graph has {n} topes")
    parity = [0] * G.m
    for h in c.flips:
        if not 0 <= h < G.m:
            return Report(False, "NonEdgeStep", None, f"flip index {h} out of range")
        parity[h] ^= 1
    odd = [h for h in range(G.m) if parity[h]]
    if odd:
        return Report(False, "NotClosed", None, f"hyperplane {odd[0]} is flipped an odd number of times")
    seen = {c.start}
    t = c.start
    for k, h in enumerate(c.flips):
        u = flip(t, h)
        if not G.has_edge(t, u, h):
            return Report(False, "NonEdgeStep", k, f"{t} -> {u} is not an edge of type {h}")
        if k < n - 1:
            if u in seen:
                return Report(False, "RepeatedTope", k, f"{u} visited twice")
            seen.add(u)
        t = u
    if t != c.start:  # pragma: no cover - excluded by the parity check
        return Report(False, "NotClosed", None, "walk does not return to its start")
    return Report(True)


def _closed_distinct(c: HamiltonCertificate) -> bool:
    verts = c.vertices()
    end = flip(verts[-1], c.flips[-1]) if c.flips else c.start
    return end == c.start and len(set(verts)) == len(verts)


def k2_certificate(start: str, h: int) -> HamiltonCertificate:
    """The back-and-forth closed walk of a two-tope graph."""
    return HamiltonCertificate(start, (h, h))


def product_cycle(
    c1: HamiltonCertificate,
    c2: HamiltonCertificate,
    G1: TopeGraph | None = None,
    G2: TopeGraph | None = None,
) -> HamiltonCertificate:
    """Boustrophedon cycle on the product: sweep c2 forward, step c1, sweep c2 backward, ..."""
    for c, G in ((c1, G1), (c2, G2)):
        if G is not None:
            rep = verify_certificate(G, c)
            if not rep:
                raise InvalidInput(f"factor certificate rejected: {rep.violation}: {rep.detail}")
        elif not c.flips or not _closed_distinct(c):
            raise InvalidInput("factor certificate is not a closed walk through distinct topes")
    p, s = len(c1), len(c2)
    if p % 2:
        raise InvalidInput("first factor has an odd number of topes")
    m1 = c1.m
    fwd = [h + m1 for h in c2.flips[:-1]]
    back = fwd[::-1]
    flips = []
    for i in range(p):
        flips.extend(fwd if i % 2 == 0 else back)
        flips.append(c1.flips[i])
    assert len(flips) == p * s
    return HamiltonCertificate(c1.start + c2.start, tuple(flips))


# ------------------------------------------------------------------ gluing


@dataclass(frozen=True)
class Quadrilateral:
    """4-cycle ``u1 - v1 - v2 - u2``: ``e1 = (u1, v1)`` and ``e2 = (u2, v2)`` are cycle edges,
    ``f1 = (u1, u2)`` and ``f2 = (v1, v2)`` cross between the cycles."""

    e1: tuple[str, str]
    e2: tuple[str, str]

    @property
    def f1(self) -> tuple[str, str]:
        return (self.e1[0], self.e2[0])

    @property
    def f2(self) -> tuple[str, str]:
        return (self.e1[1], self.e2[1])

    def is_four_cycle(self, G: TopeGraph) -> bool:
        (u1, v1), (u2, v2) = self.e1, self.e2
        return (
            len({u1, v1, u2, v2}) == 4
            and G.has_edge(u1, v1)
            and G.has_edge(u2, v2)
            and G.has_edge(u1, u2)
            and G.has_edge(v1, v2)
        )


def _open_at(cycle: list[str], a: str, b: str) -> list[str]:
    """Cut the cyclic sequence at edge ``a - b``: returns a path from ``b`` around to ``a``."""
    n = len(cycle)
    pos = {t: i for i, t in enumerate(cycle)}
    if a not in pos or b not in pos:
        raise EdgeNotInCycle(f"{a} - {b} is not an edge of the cycle")
    i, j = pos[a], pos[b]
    if (i + 1) % n == j:
        return [cycle[(j + k) % n] for k in range(n)]
    if (j + 1) % n == i:
        return [cycle[(j - k) % n] for k in range(n)]
    raise EdgeNotInCycle(f"{a} - {b} is not an edge of the cycle")


def glue(c1: HamiltonCertificate, c2: HamiltonCertificate, q: Quadrilateral) -> HamiltonCertificate:
    """Merge two vertex-disjoint cycles: drop e1 and e2, add f1 and f2."""
    (u1, v1), (u2, v2) = q.e1, q.e2
    p1 = _open_at(c1.vertices(), u1, v1)  # v1 ... u1
    p2 = _open_at(c2.vertices(), v2, u2)  # u2 ... v2
    if set(p1) & set(p2):
        raise InvalidInput("cycles to glue share a tope")
    cycle = p1 + p2  # ... u1 -f1- u2 ... v2 -f2- v1
    return HamiltonCertificate.from_vertices(cycle)


class CycleSplicer:
    """A growing Hamiltonian cycle held as a successor map; small cycles are spliced in."""

    def __init__(self, cycle: list[str]):
        n = len(cycle)
        self.succ = {cycle[k]: cycle[(k + 1) % n] for k in range(n)}

    def splice(self, small: list[str], q: Quadrilateral) -> None:
        (u1, v1), (u2, v2) = q.e1, q.e2
        succ = self.succ
        if succ.get(u1) != v1:
            if succ.get(v1) != u1:
                raise EdgeNotInCycle(f"{u1} - {v1} is not an edge of the cycle")
            u1, v1, u2, v2 = v1, u1, v2, u2
        # orient the small cycle so that it runs from u2 around to v2
        path = _open_at(small, v2, u2)
        if path[0] != u2 or path[-1] != v2:  # pragma: no cover
            raise EdgeNotInCycle("quadrilateral does not match the small cycle")
        for a, b in zip(path, path[1:]):
            if a in succ:
                raise InvalidInput(f"{a} is already on the cycle")
            succ[a] = b
        succ[u1] = u2
        succ[v2] = v1

    def cycle(self, start: str) -> list[str]:
        out = [start]
        t = self.succ[start]
        while t != start:
            out.append(t)
            t = self.succ[t]
        if len(out) != len(self.succ):
            raise InvalidInput("splices produced more than one cycle")
        return out


# ------------------------------------------------------------------ fibers


@dataclass(frozen=True)
class Fiber:
    base_tope: str
    members: tuple[str, ...]

    @property
    def eps_plus(self) -> str:
        return self.members[0]

    @property
    def eps_minus(self) -> str:
        return self.members[-1]


def fibers(G: TopeGraph, A0, A1, base: str) -> dict[str, Fiber]:
    """Fibers of the projection onto the ``A0`` coordinates, keyed by the projected tope.

    Members run from the endpoint whose ``A1`` signs agree with ``base``
    to the endpoint where they all disagree.
    """
    A0 = sorted(A0)
    A1 = sorted(A1)
    index_map = {old: new for new, old in enumerate(A0)}
    groups: dict[str, list[str]] = {}
    for t in G.topes:
        groups.setdefault(project_tope(index_map, t), []).append(t)
    plus = "".join(base[h] for h in A1)
    minus = plus.translate(str.maketrans("+-", "-+"))
    nb = G.neighbors
    a1set = set(A1)
    out = {}
    for key, members in groups.items():
        mset = set(members)
        start = [t for t in members if "".join(t[h] for h in A1) == plus]
        end = [t for t in members if "".join(t[h] for h in A1) == minus]
        if len(start) != 1 or len(end) != 1:
            raise NotAPath(f"fiber over {key} has no all-agreeing or all-opposite endpoint")
        path = [start[0]]
        used = set()
        prev = None
        t = start[0]
        while t != end[0]:
            nxt = [(u, h) for u, h in nb[t] if u in mset and u != prev]
            if len(nxt) != 1:
                raise NotAPath(f"fiber over {key} branches or stops at {t}")
            u, h = nxt[0]
            if h not in a1set or h in used:
                raise NotAPath(f"fiber over {key} repeats or leaves the A1 types at {t}")
            used.add(h)
            prev, t = t, u
            path.append(t)
        if len(path) != len(A1) + 1 or len(path) != len(members):
            raise NotAPath(f"fiber over {key} has {len(members)} topes, expected {len(A1) + 1}")
        out[key] = Fiber(key, tuple(path))
    return out


# ------------------------------------------------------------------ supersolvable recursion


def polygon_cycle(G: TopeGraph, start: str) -> list[str]:
    """Walk the cycle graph of a rank <= 2 arrangement from ``start``."""
    if len(G.topes) == 2:
        return [start, next(t for t in G.topes if t != start)]
    cycle = [start]
    prev = None
    t = start
    while True:
        nxt = sorted(u for u, _ in G.neighbors[t] if u != prev)
        if len(G.neighbors[t]) != 2:
            raise NotAPath(f"{t} has degree {len(G.neighbors[t])} in a rank-2 tope graph")
        u = nxt[0]
        if u == start:
            break
        cycle.append(u)
        prev, t = t, u
    if len(cycle) != len(G.topes):
        raise NotAPath("rank-2 tope graph is not a single cycle")
    return cycle


def _to_local(levels, m: int):
    """Re-index each level's split into the coordinates of the contracted graph it acts on."""
    alive = list(range(m))
    out = []
    for A0, A1 in levels:
        pos = {h: k for k, h in enumerate(alive)}
        out.append(([pos[h] for h in A0], [pos[h] for h in A1]))
        drop = set(A1)
        alive = [h for h in alive if h not in drop]
    return out


def cycle_from_splits(G: TopeGraph, levels, start: str | None = None) -> HamiltonCertificate:
    """Hamiltonian cycle of a tope graph given a chain of ``(A0, A1)`` splits (original indices).

    Needs only the graph, so it applies to any tope set with this fibre
    structure, with or without coordinates.
    """
    if start is None:
        plus = "+" * G.m
        start = plus if plus in G.tope_set else G.topes[0]
    local = _to_local(levels, G.m)
    graphs = [G]
    for A0, A1 in local:
        graphs.append(contract_graph(graphs[-1], A1))
    # projections of the preferred start at every level
    proj = [start]
    for A0, A1 in local:
        proj.append(project_tope(keep_map(len(proj[-1]), A1), proj[-1]))
    # canonical base regions, bottom-up: an endpoint of the fiber over the level below
    bases = [None] * len(graphs)
    bases[-1] = proj[-1]
    for lvl in range(len(local) - 1, -1, -1):
        A0, A1 = local[lvl]
        index_map = {old: new for new, old in enumerate(sorted(A0))}
        below = bases[lvl + 1]
        members = [t for t in graphs[lvl].topes if project_tope(index_map, t) == below]
        fb = fibers_of(graphs[lvl], A0, A1, members)
        ends = {fb[0], fb[-1]}
        bases[lvl] = proj[lvl] if proj[lvl] in ends else min(ends)
    cycle = polygon_cycle(graphs[-1], bases[-1])
    for lvl in range(len(local) - 1, -1, -1):
        A0, A1 = local[lvl]
        fib = fibers(graphs[lvl], A0, A1, bases[lvl])
        if len(cycle) % 2:
            raise NotSupersolvable("odd number of regions below a split")
        out = []
        for k, b in enumerate(cycle):
            path = fib[b].members
            out.extend(path if k % 2 == 0 else path[::-1])
        assert out[0] == bases[lvl]
        cycle = out
    return HamiltonCertificate.from_vertices(cycle)


def fibers_of(G: TopeGraph, A0, A1, members: list[str]) -> list[str]:
    """Order one fiber's members as a path (endpoint with lexicographically smaller key first)."""
    mset = set(members)
    nb = G.neighbors
    deg = {t: sum(1 for u, _ in nb[t] if u in mset) for t in members}
    if len(members) == 1:
        return members
    ends = sorted(t for t in members if deg[t] == 1)
    if len(ends) != 2 or any(d > 2 for d in deg.values()):
        raise NotAPath("fiber is not a path")
    path = [ends[0]]
    prev = None
    t = ends[0]
    while t != ends[1]:
        u = next(u for u, _ in nb[t] if u in mset and u != prev)
        prev, t = t, u
        path.append(t)
    if len(path) != len(members) or len(members) != len(A1) + 1:
        raise NotAPath("fiber does not have |A1| + 1 topes")
    return path


def supersolvable_cycle(A, start: str | None = None, G: TopeGraph | None = None, seed: int = 0):
    """Hamiltonian cycle of a supersolvable arrangement by the fibre recursion."""
    from .builder import tope_graph
    from .lattice import supersolvable_decomposition

    if G is None:
        G = tope_graph(A, seed=seed)
    if A.rank <= 1:
        t = G.topes[0] if start is None else start
        return k2_certificate(t, 0 if A.m == 1 else _only_type(G))
    dec = supersolvable_decomposition(A)
    if dec is None:
        raise NotSupersolvable("no chain of modular coatoms")
    return cycle_from_splits(G, dec.levels, start)


def _only_type(G: TopeGraph) -> int:
    types = {h for _, _, h in G.edges}
    if len(types) != 1:
        raise InvalidInput("rank-1 graph with several edge types")
    return types.pop()
