"""Choosing and running a cycle construction for an arbitrary arrangement."""

from __future__ import annotations

from .arrangement import Arrangement, coordinate_blocks
from .builder import tope_graph
from .catalogue import generate
from .dns import dns_construction
from .errors import BudgetExceeded, InvalidInput, UsageError
from .hamilton import k2_certificate, product_cycle, supersolvable_cycle
from .lattice import supersolvable_decomposition
from .search import BUDGET_EXCEEDED, search_cycle
from .topes import HamiltonCertificate, TopeGraph

METHODS = ("auto", "supersolvable", "dns", "product", "search")
DEFAULT_BUDGET = 2_000_000


def match_dns(A: Arrangement):
    """``(n, s, perm)`` if ``A`` is D_{n,s} with hyperplanes permuted (``perm[k]`` = index in ``A``)."""
    n = A.dim
    if A.field is not None or n < 2:
        return None
    for s in range(n + 1):
        if A.m != n * (n - 1) + s:
            continue
        D = generate("Dns", n=n, s=s)
        if A.same_hyperplanes(D):
            return n, s, [A.index_of(v) for v in D.normals]
    return None


def remap_certificate(c: HamiltonCertificate, perm: list[int]) -> HamiltonCertificate:
    """Rename hyperplane ``k`` to ``perm[k]``."""
    start = [""] * len(perm)
    for k, ch in enumerate(c.start):
        start[perm[k]] = ch
    return HamiltonCertificate("".join(start), tuple(perm[h] for h in c.flips))


def split_blocks(A: Arrangement):
    """Factors of ``A`` along its coordinate blocks, with their hyperplane indices in ``A``."""
    out = []
    for block in coordinate_blocks(A):
        idx = [k for k, v in enumerate(A.normals) if any(v[i] for i in block)]
        if not idx:
            continue
        normals = tuple(tuple(A.normals[k][i] for i in block) for k in idx)
        out.append((Arrangement(len(block), normals, A.field), idx))
    return out


def find_cycle(
    A: Arrangement,
    method: str = "auto",
    G: TopeGraph | None = None,
    seed: int = 0,
    budget: int | None = DEFAULT_BUDGET,
) -> tuple[HamiltonCertificate, str]:
    """A Hamiltonian cycle of T(A) and the name of the construction that produced it."""
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if A.m == 1:
        return k2_certificate("+", 0), "supersolvable"
    if method == "auto":
        if A.rank <= 2:
            method = "supersolvable"
        elif match_dns(A) is not None:
            method = "dns"
        elif len(split_blocks(A)) > 1:
            method = "product"
        elif supersolvable_decomposition(A) is not None:
            method = "supersolvable"
        else:
            method = "search"
    if method == "supersolvable":
        return supersolvable_cycle(A, G=G, seed=seed), method
    if method == "dns":
        hit = match_dns(A)
        if hit is None:
            raise UsageError("arrangement is not of type D_(n,s)")
        n, s, perm = hit
        Gd = None
        if G is not None and perm == list(range(A.m)):
            Gd = G
        res = dns_construction(n, s, Gd)
        return remap_certificate(res.certificate, perm), method
    if method == "product":
        factors = split_blocks(A)
        if len(factors) < 2:
            raise UsageError("arrangement does not split into coordinate blocks")
        acc, order = None, []
        for F, idx in factors:
            c, _ = find_cycle(F, "auto", seed=seed, budget=budget)
            acc = c if acc is None else product_cycle(acc, c)
            order.extend(idx)
        return remap_certificate(acc, order), method
    if G is None:
        G = tope_graph(A, seed=seed)
    return search_graph(G, budget), "search"


def search_graph(G: TopeGraph, budget: int | None = DEFAULT_BUDGET) -> HamiltonCertificate:
    res = search_cycle(G, budget)
    if res.certificate is not None:
        return res.certificate
    if res.status == BUDGET_EXCEEDED:
        raise BudgetExceeded(f"no cycle found within {budget} search nodes")
    raise InvalidInput("the graph has no Hamiltonian cycle")
