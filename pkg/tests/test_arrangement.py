import pytest

from topecycle.arrangement import Arrangement, delete, product, restrict
from topecycle.catalogue import generate
from topecycle.errors import DropAll, DuplicateHyperplane, FieldMismatch
from topecycle.oracle import oracle_enumerate
from topecycle.scalar import Quad

def test_normals_are_canonical():
    A = Arrangement.from_normals([(-2, 4, 0), (0, Quad(0, 2, 5), Quad(0, -4, 5))])
    assert A.normals[0] == (1, -2, 0)
    # only rational factors are cleared
    assert A.normals[1] == (0, Quad(0, 1, 5), Quad(0, -2, 5))


def test_proportional_normals_rejected():
    with pytest.raises(DuplicateHyperplane):
        Arrangement.from_normals([(1, 1), (-3, -3)])


def test_rank():
    assert generate("A", n=4).rank == 3
    assert Arrangement.from_normals([(1, 0, 0), (0, 1, 0)]).rank == 2


def test_delete_b2_coordinate_gives_d21():
    B2 = generate("B", n=2)
    A, index_map = delete(B2, {B2.index_of((0, 1))})
    assert A.same_hyperplanes(generate("Dns", n=2, s=1))
    assert sorted(index_map) == [i for i in range(4) if i != B2.index_of((0, 1))]


def test_delete_trivial_cases():
    A = generate("B", n=2)
    assert delete(A, set())[0] == A
    two = Arrangement.from_normals([(1, 0), (0, 1)])
    assert delete(two, {1})[0].normals == ((1, 0),)
    with pytest.raises(DropAll):
        delete(two, {0, 1})


def test_restrict_boolean():
    A = Arrangement.from_normals([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    R = restrict(A, 2)
    assert R.dim == 2 and R.m == 2 and R.rank == 2


def test_restrict_a2_to_one_hyperplane():
    A = Arrangement.from_normals([(1, -1, 0), (1, 0, -1), (0, 1, -1)])
    assert restrict(A, 0).m == 1


def test_restrict_b3_to_e3_is_b2():
    B3 = generate("B", n=3)
    R = restrict(B3, B3.index_of((0, 0, 1)))
    assert R.m == 4
    assert len(oracle_enumerate(R).topes) == 8


def test_product_examples():
    P = product(Arrangement.from_normals([(1,)]), Arrangement.from_normals([(1,)]))
    assert P.normals == ((1, 0), (0, 1))
    P = product(generate("A", n=3), Arrangement.from_normals([(1,)]))
    assert P.dim == 4 and P.m == 4
    assert len(oracle_enumerate(P).topes) == 12


def test_product_field_mismatch():
    A = Arrangement.from_normals([(1, Quad(0, 1, 2))])
    B = Arrangement.from_normals([(1, Quad(0, 1, 3))])
    with pytest.raises(FieldMismatch):
        product(A, B)


def test_product_tope_graph_is_graph_product():
    A1, A2 = generate("A", n=3), generate("B", n=2)
    G1, G2 = oracle_enumerate(A1), oracle_enumerate(A2)
    G = oracle_enumerate(product(A1, A2))
    expect = {a + b for a in G1.topes for b in G2.topes}
    assert G.tope_set == expect
    assert len(G.edges) == len(G1.edges) * len(G2.topes) + len(G2.edges) * len(G1.topes)
