import pytest

from topecycle.arrangement import Arrangement
from topecycle.builder import tope_graph
from topecycle.catalogue import FamilySpec, generate
from topecycle.errors import SizeLimit
from topecycle.lp import separate, strictly_feasible_point
from topecycle.linalg import dot
from topecycle.oracle import oracle_enumerate


def test_boolean_orthants():
    for n in (1, 2, 3, 4):
        A = Arrangement.from_normals([tuple(int(i == k) for i in range(n)) for k in range(n)])
        G = oracle_enumerate(A)
        assert len(G.topes) == 2**n
        assert len(G.edges) == n * 2 ** (n - 1)


def test_single_hyperplane():
    G = oracle_enumerate(Arrangement.from_normals([(1, 2, 3)]))
    assert len(G.topes) == 2 and len(G.edges) == 1


def test_non_simplicial_arrangement():
    # four planes in general position: 4 triangles and 3 quadrilaterals projectively
    A = Arrangement.from_normals([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)])
    G = oracle_enumerate(A)
    assert len(G.topes) == 14
    assert not G.problems()
    assert any(G.degree(t) == 4 for t in G.topes)


def test_size_limit():
    with pytest.raises(SizeLimit):
        oracle_enumerate(generate("B", n=3), limit=20)


@pytest.mark.parametrize("spec", [
    FamilySpec("A", n=3), FamilySpec("A", n=4), FamilySpec("B", n=2), FamilySpec("B", n=3),
    FamilySpec("Dns", n=3, s=1), FamilySpec("R0", m=5), FamilySpec("R1", m=3), FamilySpec("I2m", m=5),
])
def test_agrees_with_builder(spec):
    A = generate(spec)
    G, H = tope_graph(A), oracle_enumerate(A)
    assert G.tope_set == H.tope_set and G.edge_set == H.edge_set


def test_separate_farkas():
    gens = [(1, 0), (0, 1)]
    assert separate(gens, (2, 3)) is None
    y = separate(gens, (-1, 1))
    assert all(dot(g, y) >= 0 for g in gens) and dot((-1, 1), y) < 0


def test_strictly_feasible_point():
    normals = [(1, 0, 0), (0, 1, 0), (-1, -1, 1)]
    x = strictly_feasible_point(normals)
    assert all(dot(a, x) > 0 for a in normals)
    assert strictly_feasible_point([(1, 0), (-1, 0)]) is None
