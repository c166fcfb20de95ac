import itertools
import math

import pytest

from topecycle.arrangement import delete
from topecycle.builder import tope_graph
from topecycle.catalogue import (
    FamilySpec,
    SignedPermutation,
    all_signed_permutations,
    b_index,
    generate,
    lines_2d,
    signed_perm_adjacent,
    signed_perm_graph,
    tope_of_signed_perm,
)
from topecycle.errors import UnsupportedField
from topecycle.oracle import oracle_enumerate
from topecycle.topes import negate

COUNTS = [
    # (spec, hyperplanes, topes); tope counts frozen from the independent oracle
    (FamilySpec("A", n=3), 3, 6),
    (FamilySpec("A", n=4), 6, 24),
    (FamilySpec("B", n=2), 4, 8),
    (FamilySpec("B", n=3), 9, 48),
    (FamilySpec("D", n=4), 12, 192),
    (FamilySpec("Dns", n=2, s=1), 3, 6),
    (FamilySpec("Dns", n=3, s=1), 7, 32),
    (FamilySpec("R0", m=6), 6, 20),
    (FamilySpec("R1", m=3), 6, 24),
    (FamilySpec("R1", m=4), 8, 40),
    (FamilySpec("R1", m=5), 10, 60),
    (FamilySpec("R1", m=6), 12, 84),
    (FamilySpec("R2", m=2), 9, 48),
    (FamilySpec("R2", m=3), 13, 96),
    (FamilySpec("I2m", m=5), 5, 10),
    (FamilySpec("I2m", m=8), 8, 16),
]


@pytest.mark.parametrize("spec,m,topes", COUNTS, ids=[c[0].label for c in COUNTS])
def test_counts(spec, m, topes):
    A = generate(spec)
    assert A.m == m
    assert len(tope_graph(A).topes) == topes


@pytest.mark.parametrize("spec,m,topes", [c for c in COUNTS if c[2] <= 100], ids=lambda x: getattr(x, "label", ""))
def test_counts_oracle(spec, m, topes):
    assert len(oracle_enumerate(generate(spec)).topes) == topes


@pytest.mark.parametrize("family,key,formula", [
    ("A", "n", lambda n: n * (n - 1) // 2),
    ("B", "n", lambda n: n * n),
    ("D", "n", lambda n: n * (n - 1)),
    ("R0", "m", lambda m: m),
    ("R1", "m", lambda m: 2 * m),
    ("R2", "m", lambda m: 4 * m + 1),
])
def test_hyperplane_formulas(family, key, formula):
    lo = {"A": 2, "B": 2, "D": 4, "R0": 3, "R1": 3, "R2": 2}[family]
    hi = {"R1": 6, "R2": 3}.get(family, 7)
    for v in range(lo, hi + 1):
        assert generate(family, **{key: v}).m == formula(v)


def test_dns_formula():
    for n in range(2, 7):
        for s in range(n + 1):
            assert generate("Dns", n=n, s=s).m == n * (n - 1) + s


def test_dns_extremes():
    for n in (4, 5):
        assert generate("Dns", n=n, s=n).same_hyperplanes(generate("B", n=n))
        assert generate("Dns", n=n, s=0).same_hyperplanes(generate("D", n=n))


def test_r2_contains_r1():
    R2 = generate("R2", m=3)
    R1 = generate("R1", m=6)
    assert R2.normals[:-1] == R1.normals
    assert R2.normals[-1] == (0, 0, 1)


def test_r0_is_near_pencil():
    A = generate("R0", m=6)
    assert A.normals[-1] == (1, 0, 0)
    assert all(v[0] == 0 for v in A.normals[:-1])


def test_invalid_specs():
    for bad in (FamilySpec("A", n=1), FamilySpec("D", n=3), FamilySpec("Dns", n=3, s=4),
                FamilySpec("R0", m=2), FamilySpec("Q", n=2), FamilySpec("B")):
        with pytest.raises(ValueError):
            generate(bad)


def test_unsupported_field():
    with pytest.raises(UnsupportedField):
        generate("R1", m=7)
    with pytest.raises(UnsupportedField):
        generate("I2m", m=9)


def test_lines_2d():
    for m in (1, 2, 5, 20):
        A = lines_2d(m)
        assert len(tope_graph(A).topes) == 2 * m


def test_signed_perm_witness_tope():
    sp = SignedPermutation((1, 2), "++")
    assert sp.witness() == (2, 1)
    assert tope_of_signed_perm(sp) == "++++"


def test_signed_perm_global_flip():
    for sp in all_signed_permutations(3):
        flipped = SignedPermutation(sp.sigma, negate(sp.delta))
        assert tope_of_signed_perm(flipped) == negate(tope_of_signed_perm(sp))


def test_signed_perm_adjacency_examples():
    a = SignedPermutation((1, 2), "++")
    assert signed_perm_adjacent(a, SignedPermutation((1, 2), "+-")) == b_index(2, 1)
    assert signed_perm_adjacent(a, SignedPermutation((1, 2), "-+")) is None
    assert signed_perm_adjacent(a, SignedPermutation((2, 1), "++")) == b_index(2, 0, 1)
    assert signed_perm_adjacent(SignedPermutation((1, 2), "+-"), SignedPermutation((2, 1), "+-")) == b_index(
        2, 0, 1, plus=True
    )


def test_invalid_signed_perm():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1), "++")
    with pytest.raises(ValueError):
        SignedPermutation((1, 2), "+")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_signed_perm_graph_is_tope_graph(n):
    S = signed_perm_graph(n)
    G = tope_graph(generate("B", n=n))
    assert len(S.topes) == 2**n * math.factorial(n)
    assert S.tope_set == G.tope_set and S.edge_set == G.edge_set


def _a_tope(sp):
    """Tope of A_{n-1} of the point with |x| values ordered by sigma."""
    y = [0] * sp.n
    for i, v in enumerate(sp.sigma):
        y[v - 1] = sp.n - i
    return "".join("+" if y[i] > y[j] else "-" for i, j in itertools.combinations(range(sp.n), 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fixed_delta_is_type_a(n):
    G = tope_graph(generate("B", n=n))
    A = tope_graph(generate("A", n=n))
    a_edges = {frozenset((a, b)) for a, b, _ in A.edges}
    for delta in itertools.product("+-", repeat=n):
        perms = [sp for sp in all_signed_permutations(n) if sp.delta == "".join(delta)]
        to_a = {tope_of_signed_perm(sp): _a_tope(sp) for sp in perms}
        assert set(to_a.values()) == A.tope_set
        induced = {frozenset((to_a[a], to_a[b])) for a, b, _ in G.edges if a in to_a and b in to_a}
        assert induced == a_edges


def test_delete_b_to_dns_matches_generator():
    for n in (3, 4):
        B = generate("B", n=n)
        for s in range(n + 1):
            D, _ = delete(B, set(range(s, n)))
            assert D == generate("Dns", n=n, s=s)
