"""Backtracking search for a Hamiltonian cycle, deciding one edge at a time.

Each branch either puts an edge on the cycle or deletes it.  After every
decision the usual propagation runs to a fixed point:

* a vertex with only two live edges must use both;
* a vertex already using two edges loses its other edges;
* an edge joining the two ends of a path fragment is deleted unless that
  fragment already covers every vertex.

All changes are logged on a trail so that backtracking is cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .topes import HamiltonCertificate, TopeGraph

FOUND = "found"
PROVED_NONE = "proved_none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchResult:
    certificate: HamiltonCertificate | None
    status: str
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Contradiction(Exception):
    pass


class _State:
    def __init__(self, n: int, adj: list[set[int]]):
        self.n = n
        self.alive = [set(a) for a in adj]
        self.chosen: list[list[int]] = [[] for _ in range(n)]
        self.end = list(range(n))
        self.size = [1] * n
        self.nchosen = 0
        self.trail: list[tuple] = []
        self.queue: list[int] = []

    # -- primitive changes, each logged
    def remove(self, u: int, v: int) -> None:
        if v not in self.alive[u]:
            return
        if v in self.chosen[u]:
            raise _Contradiction
        self.alive[u].discard(v)
        self.alive[v].discard(u)
        self.trail.append(("r", u, v))
        self.queue.append(u)
        self.queue.append(v)

    def choose(self, u: int, v: int) -> None:
        if v in self.chosen[u]:
            return
        if v not in self.alive[u] or len(self.chosen[u]) == 2 or len(self.chosen[v]) == 2:
            raise _Contradiction
        a, b = self.end[u], self.end[v]
        if a == v:
            # closes a fragment into a cycle
            if self.size[u] != self.n:
                raise _Contradiction
            self.trail.append(("c", u, v, None))
            self.chosen[u].append(v)
            self.chosen[v].append(u)
            self.nchosen += 1
            return
        self.trail.append(("c", u, v, (a, b, self.end[a], self.end[b], self.size[a], self.size[b])))
        self.chosen[u].append(v)
        self.chosen[v].append(u)
        self.nchosen += 1
        s = self.size[a] + self.size[b]
        self.end[a], self.end[b] = b, a
        self.size[a] = self.size[b] = s
        self.queue.extend((u, v, a, b))

    def undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            op = trail.pop()
            if op[0] == "r":
                _, u, v = op
                self.alive[u].add(v)
                self.alive[v].add(u)
            else:
                _, u, v, info = op
                self.chosen[u].pop()
                self.chosen[v].pop()
                self.nchosen -= 1
                if info is not None:
                    a, b, ea, eb, sa, sb = info
                    self.end[a], self.end[b] = ea, eb
                    self.size[a], self.size[b] = sa, sb
        self.queue.clear()

    def propagate(self) -> None:
        q = self.queue
        while q:
            x = q.pop()
            alive = self.alive[x]
            chosen = self.chosen[x]
            if len(alive) < 2:
                raise _Contradiction
            if len(chosen) == 2:
                if len(alive) > 2:
                    for y in [y for y in alive if y not in chosen]:
                        self.remove(x, y)
                continue
            if len(alive) == 2:
                for y in list(alive):
                    self.choose(x, y)
                continue
            if len(chosen) == 1:
                y = self.end[x]
                if y != x and y in alive and y not in chosen and self.size[x] < self.n:
                    self.remove(x, y)

    def branch_edge(self):
        """An undecided edge at the most constrained fragment end (or at the first free vertex)."""
        best = None
        for x in range(self.n):
            c = len(self.chosen[x])
            if c == 1:
                free = len(self.alive[x]) - 1
                if best is None or free < best[0]:
                    best = (free, x)
                    if free <= 1:
                        break
        if best is None:
            x = next((x for x in range(self.n) if not self.chosen[x]), None)
            if x is None:
                return None
        else:
            x = best[1]
        y = min(y for y in self.alive[x] if y not in self.chosen[x])
        return x, y


def hamiltonian_cycle(n: int, adj: list[set[int]], budget: int | None = None):
    """Vertex order of a Hamiltonian cycle (``(order, status, nodes)``); ``order`` is None if absent."""
    if n == 0:
        return None, PROVED_NONE, 0
    if n == 1:
        return None, PROVED_NONE, 0
    if n == 2:
        return ([0, 1], FOUND, 0) if 1 in adj[0] else (None, PROVED_NONE, 0)
    st = _State(n, adj)
    st.queue.extend(range(n))
    try:
        st.propagate()
    except _Contradiction:
        return None, PROVED_NONE, 0
    stack: list[list] = []
    nodes = 0
    while True:
        if st.nchosen == n:
            break
        e = st.branch_edge()
        ok = False
        if e is not None:
            if budget is not None and nodes >= budget:
                return None, BUDGET_EXCEEDED, nodes
            nodes += 1
            stack.append([len(st.trail), e, 0])
            try:
                st.choose(*e)
                st.propagate()
                ok = True
            except _Contradiction:
                ok = False
        while not ok:
            if not stack:
                return None, PROVED_NONE, nodes
            frame = stack[-1]
            st.undo(frame[0])
            if frame[2] == 0:
                frame[2] = 1
                try:
                    st.remove(*frame[1])
                    st.propagate()
                    ok = True
                except _Contradiction:
                    ok = False
            else:
                stack.pop()
    order = [0]
    prev, x = None, 0
    while len(order) < n:
        y = st.chosen[x][0] if st.chosen[x][0] != prev else st.chosen[x][1]
        order.append(y)
        prev, x = x, y
    return order, FOUND, nodes


def search_cycle(G: TopeGraph, budget: int | None = 1_000_000) -> SearchResult:
    """Search ``G`` for a Hamiltonian cycle; vertices are taken in canonical tope order."""
    topes = list(G.topes)
    index = {t: i for i, t in enumerate(topes)}
    adj = [set() for _ in topes]
    for a, b, _ in G.edges:
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    order, status, nodes = hamiltonian_cycle(len(topes), adj, budget)
    cert = None
    if order is not None:
        cert = HamiltonCertificate.from_vertices([topes[i] for i in order])
    return SearchResult(cert, status, nodes)
