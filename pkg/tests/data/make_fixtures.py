"""Regenerate the rank-3 arrangement files in this directory.

Run from the repository root:  python3 tests/data/make_fixtures.py
Restrictions of reflection arrangements are simplicial, so every file
here is a valid input for the wall-crossing builder.
"""

import itertools
from fractions import Fraction
from pathlib import Path

from topecycle.arrangement import Arrangement, restrict
from topecycle.catalogue import generate
from topecycle.formats import write_arrangement
from topecycle.scalar import Quad

HERE = Path(__file__).resolve().parent


def h3():
    phi = Quad(Fraction(1, 2), Fraction(1, 2), 5)
    inv = phi - 1
    normals = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for s1, s2 in itertools.product((1, -1), repeat=2):
        base = (phi, s1 * 1, s2 * inv)
        for k in range(3):
            normals.append(base[k:] + base[:k])
    return Arrangement(3, tuple(normals), 5)


def f4():
    normals = [tuple(int(i == k) for i in range(4)) for k in range(4)]
    for i, j in itertools.combinations(range(4), 2):
        for sj in (1, -1):
            v = [0] * 4
            v[i], v[j] = 1, sj
            normals.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=3):
        normals.append((1,) + signs)
    return Arrangement.from_normals(normals)


def e8():
    normals = []
    for i, j in itertools.combinations(range(8), 2):
        for sj in (1, -1):
            v = [0] * 8
            v[i], v[j] = 1, sj
            normals.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=7):
        if signs.count(-1) % 2 == 0:
            normals.append((1,) + signs)
    return Arrangement.from_normals(normals)


def restrict_to_rank3(A, picks):
    for h in picks:
        A = restrict(A, h)
    assert A.rank == 3, A.rank
    return A


def e7():
    E = e8()
    # roots orthogonal to e7 + e8 form E7 (ambient dimension stays 8)
    keep = [v for v in E.normals if v[6] + v[7] == 0]
    return Arrangement.from_normals(keep)


def main():
    fixtures = {
        "h3.arr": h3(),
        "f4_restricted.arr": restrict(f4(), 0),
        "b5_restricted.arr": restrict_to_rank3(generate("B", n=5), [0, 0]),
        "d5_restricted.arr": restrict_to_rank3(generate("D", n=5), [0, 0]),
        "e8_restricted_13.arr": restrict_to_rank3(e8(), [0, 0, 0, 0, 0]),
        "e8_restricted_16.arr": restrict_to_rank3(e8(), [62, 3, 49, 27, 0]),
        "e8_restricted_19.arr": restrict_to_rank3(e8(), [1, 25, 29, 25, 22]),
        # rank 3 inside R^4: exercises rank-deficient input
        "e7_restricted_11.arr": restrict_to_rank3(e7(), [34, 14, 28, 7]),
        "r1_5.arr": generate("R1", m=5),
        "r2_6.arr": generate("R2", m=6),
        "near_pencil_1250.arr": generate("R0", m=1250),
    }
    for name, A in fixtures.items():
        write_arrangement(A, HERE / name)
        print(name, A.m, A.rank)


if __name__ == "__main__":
    main()
