"""Hamiltonian cycles of D_{n,s} by gluing copies of one A_{n-2} cycle.

A region of B_n is a signed permutation (sigma, delta).  Fixing delta and
the last value j = sigma(n) leaves the permutations of the other n - 1
values, a copy of T(A_{n-2}).  D_{n,s} forgets the coordinate hyperplanes
e_{s+1}..e_n, which merges the classes (delta, j) and (delta', j) when
j > s and delta, delta' differ only at j.  Every class gets the same
Hamiltonian cycle; the class cycles are then spliced together along a BFS
tree of the class graph, one quadrilateral per tree edge, never reusing a
cycle edge of any class.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .builder import tope_graph
from .catalogue import SignedPermutation, generate, tope_of_signed_perm
from .errors import InvalidInput, QuadrilateralExhausted
from .hamilton import CycleSplicer, Quadrilateral, polygon_cycle, supersolvable_cycle, verify_certificate
from .lattice import supersolvable_decomposition
from .search import search_cycle
from .topes import HamiltonCertificate, TopeGraph, keep_map, project_tope


@dataclass
class DnsConstruction:
    certificate: HamiltonCertificate
    method: str
    classes: int = 0
    tree_edges: int = 0
    # minimum, over adjacent class pairs, of a greedy count of edge-disjoint quadrilaterals
    min_disjoint_quads: int | None = None
    quads: list[Quadrilateral] = field(default_factory=list)


def _perm_of_a_tope(t: str, k: int) -> list[int]:
    """Coordinate indices of R^k sorted by decreasing value, for a tope of ``A`` in R^k."""
    wins = [0] * k
    for (i, j), c in zip(itertools.combinations(range(k), 2), t):
        wins[i if c == "+" else j] += 1
    return sorted(range(k), key=lambda i: -wins[i])


def common_cycle(n: int) -> list[list[int]]:
    """One Hamiltonian cycle of T(A_{n-2}) as a list of orderings of ``range(n - 1)``."""
    k = n - 1
    if k == 1:
        return [[0]]
    A = generate("A", n=k)
    cert = supersolvable_cycle(A)
    return [_perm_of_a_tope(t, k) for t in cert.vertices()]


class DnsClasses:
    """Class structure of T(D_{n,s}) induced by the signed-permutation model of B_n."""

    def __init__(self, n: int, s: int):
        if n < 2 or not 0 <= s <= n:
            raise InvalidInput(f"D_(n,s) needs n >= 2 and 0 <= s <= n, got n={n}, s={s}")
        self.n, self.s = n, s
        self.keep = keep_map(n * n, range(s, n))
        self.cls: dict[str, tuple[str, int]] = {}
        for sigma in itertools.permutations(range(1, n + 1)):
            for delta in itertools.product("+-", repeat=n):
                sp = SignedPermutation(sigma, "".join(delta))
                t = self.tope(sp)
                key = self.class_of(sp)
                if self.cls.setdefault(t, key) != key:
                    raise AssertionError(f"tope {t} lies in two classes")

    def tope(self, sp: SignedPermutation) -> str:
        return project_tope(self.keep, tope_of_signed_perm(sp))

    def class_of(self, sp: SignedPermutation) -> tuple[str, int]:
        j = sp.sigma[-1]
        delta = sp.delta
        if j > self.s:
            delta = delta[: j - 1] + "+" + delta[j:]
        return delta, j

    def class_cycle(self, key: tuple[str, int], pattern: list[list[int]]) -> list[str]:
        delta, j = key
        values = [v for v in range(1, self.n + 1) if v != j]
        out = []
        for order in pattern:
            sigma = tuple(values[i] for i in order) + (j,)
            out.append(self.tope(SignedPermutation(sigma, delta)))
        return out


def _quad_candidates(G: TopeGraph, cyc_p: list[str], cls, target, nxt, prv):
    """All quadrilaterals between the cycle ``cyc_p`` and the cycle of class ``target``."""
    out = []
    nb = G.neighbors
    L = len(cyc_p)
    for k in range(L):
        u1, v1 = cyc_p[k], cyc_p[(k + 1) % L]
        for u2, _ in nb[u1]:
            if cls[u2] != target:
                continue
            for v2 in (nxt[u2], prv[u2]):
                if G.has_edge(v1, v2):
                    e1 = (u1, v1) if u1 < v1 else (v1, u1)
                    e2 = (u2, v2) if u2 < v2 else (v2, u2)
                    out.append((e1, e2, (u1, v1), (u2, v2)))
    out.sort()
    return out


def glue_dns(n: int, s: int, G: TopeGraph | None = None, count_pairs: bool = False) -> DnsConstruction:
    """The gluing construction; raises ``QuadrilateralExhausted`` if selection fails."""
    if n < 3:
        raise InvalidInput("gluing needs n >= 3")
    if G is None:
        G = tope_graph(generate("Dns", n=n, s=s))
    C = DnsClasses(n, s)
    cls = C.cls
    if set(cls) != G.tope_set:
        raise AssertionError("signed-permutation model disagrees with the tope graph")
    pattern = common_cycle(n)
    keys = sorted(set(cls.values()))
    cycles = {key: C.class_cycle(key, pattern) for key in keys}
    nxt, prv = {}, {}
    for cyc in cycles.values():
        L = len(cyc)
        for k, t in enumerate(cyc):
            nxt[t] = cyc[(k + 1) % L]
            prv[t] = cyc[(k - 1) % L]
    adj: dict[tuple, set] = {key: set() for key in keys}
    for a, b, _ in G.edges:
        if cls[a] != cls[b]:
            adj[cls[a]].add(cls[b])
            adj[cls[b]].add(cls[a])
    root_tope = "+" * G.m
    root = cls[root_tope]
    parent = {root: None}
    order = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                order.append((x, y))
                queue.append(y)
    if len(parent) != len(keys):
        raise AssertionError("class graph is not connected")
    reserved = {key: set() for key in keys}
    splicer = CycleSplicer(cycles[root])
    quads = []
    for p, c in order:
        chosen = None
        for e1, e2, d1, d2 in _quad_candidates(G, cycles[p], cls, c, nxt, prv):
            if e1 not in reserved[p] and e2 not in reserved[c]:
                chosen = (e1, e2, d1, d2)
                break
        if chosen is None:
            raise QuadrilateralExhausted(f"no free quadrilateral between classes {p} and {c}")
        e1, e2, (u1, v1), (u2, v2) = chosen
        reserved[p].add(e1)
        reserved[c].add(e2)
        q = Quadrilateral((u1, v1), (u2, v2))
        quads.append(q)
        splicer.splice(cycles[c], q)
    cycle = splicer.cycle(root_tope)
    cert = HamiltonCertificate.from_vertices(cycle)
    result = DnsConstruction(cert, "glue", len(keys), len(order), None, quads)
    if count_pairs:
        best = None
        for x in keys:
            for y in adj[x]:
                if x < y:
                    k = _greedy_disjoint(_quad_candidates(G, cycles[x], cls, y, nxt, prv))
                    best = k if best is None else min(best, k)
        result.min_disjoint_quads = best
    return result


def _greedy_disjoint(cands) -> int:
    used1, used2 = set(), set()
    k = 0
    for e1, e2, _, _ in cands:
        if e1 not in used1 and e2 not in used2:
            used1.add(e1)
            used2.add(e2)
            k += 1
    return k


def dns_construction(n: int, s: int, G: TopeGraph | None = None, budget: int = 1_000_000) -> DnsConstruction:
    """Cycle of T(D_{n,s}) with a record of how it was obtained.

    n = 2 is a hexagon; n <= 5 tries the supersolvable recursion, then
    gluing, then search; from n = 6 on gluing always succeeds.
    """
    if n < 2 or not 0 <= s <= n:
        raise InvalidInput(f"D_(n,s) needs n >= 2 and 0 <= s <= n, got n={n}, s={s}")
    A = generate("Dns", n=n, s=s)
    if G is None:
        G = tope_graph(A)
    if A.rank <= 2:
        cycle = polygon_cycle(G, "+" * A.m)
        return DnsConstruction(HamiltonCertificate.from_vertices(cycle), "polygon")
    if n <= 5:
        if supersolvable_decomposition(A) is not None:
            return DnsConstruction(supersolvable_cycle(A, start="+" * A.m, G=G), "supersolvable")
        if n >= 4:
            try:
                return glue_dns(n, s, G)
            except QuadrilateralExhausted:
                pass
        res = search_cycle(G, budget)
        if res.certificate is None:
            raise InvalidInput(f"search for D_({n},{s}) ended with status {res.status}")
        return DnsConstruction(res.certificate, "search")
    return glue_dns(n, s, G)


def dns_cycle(n: int, s: int, G: TopeGraph | None = None) -> HamiltonCertificate:
    """Verified Hamiltonian cycle of T(D_{n,s})."""
    A = generate("Dns", n=n, s=s)
    if G is None:
        G = tope_graph(A)
    res = dns_construction(n, s, G)
    rep = verify_certificate(G, res.certificate)
    if not rep:
        raise AssertionError(f"D_({n},{s}) construction produced an invalid cycle: {rep}")
    return res.certificate
