import math

import pytest

from topecycle.builder import tope_graph
from topecycle.catalogue import generate
from topecycle.dns import DnsClasses, common_cycle, dns_construction, dns_cycle, glue_dns
from topecycle.errors import InvalidInput, QuadrilateralExhausted
from topecycle.hamilton import verify_certificate


def test_d21_hexagon():
    c = dns_cycle(2, 1)
    assert len(c) == 6
    assert dns_construction(2, 1).method == "polygon"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_common_cycle_is_hamiltonian_on_permutations(n):
    cyc = common_cycle(n)
    assert len(cyc) == math.factorial(n - 1)
    assert len({tuple(p) for p in cyc}) == len(cyc)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        diff = [k for k in range(n - 1) if a[k] != b[k]]
        assert len(diff) == 2 and diff[1] == diff[0] + 1


@pytest.mark.parametrize("n,s", [(3, 1), (4, 2), (5, 1), (5, 4)])
def test_classes_partition_topes(n, s):
    C = DnsClasses(n, s)
    G = tope_graph(generate("Dns", n=n, s=s))
    assert set(C.cls) == G.tope_set
    sizes = {}
    for key in C.cls.values():
        sizes[key] = sizes.get(key, 0) + 1
    assert set(sizes.values()) == {math.factorial(n - 1)}
    pattern = common_cycle(n)
    for key in sizes:
        cyc = C.class_cycle(key, pattern)
        assert all(C.cls[t] == key for t in cyc)
        assert all(G.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


@pytest.mark.parametrize("n,s", [(n, s) for n in (3, 4, 5) for s in range(1, n)])
def test_dns_cycle_verifies(n, s):
    G = tope_graph(generate("Dns", n=n, s=s))
    c = dns_cycle(n, s, G)
    assert verify_certificate(G, c)


def test_methods_for_small_n():
    assert dns_construction(3, 2).method == "supersolvable"
    assert dns_construction(4, 2).method == "search"
    assert dns_construction(5, 2).method == "glue"


def test_gluing_fails_for_n4():
    with pytest.raises(QuadrilateralExhausted):
        glue_dns(4, 2)


def test_glue_n5_quadrilaterals_disjoint():
    res = glue_dns(5, 2, count_pairs=True)
    G = tope_graph(generate("Dns", n=5, s=2))
    assert verify_certificate(G, res.certificate)
    assert res.tree_edges == res.classes - 1 == len(res.quads)
    assert res.min_disjoint_quads >= 1
    seen = set()
    for q in res.quads:
        for e in (q.e1, q.e2):
            key = frozenset(e)
            assert key not in seen
            seen.add(key)
        assert q.is_four_cycle(G)


def test_invalid_parameters():
    with pytest.raises(InvalidInput):
        dns_construction(1, 0)
    with pytest.raises(InvalidInput):
        DnsClasses(3, 4)
