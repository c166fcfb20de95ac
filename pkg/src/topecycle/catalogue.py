"""Exact generators for the named arrangement families and the signed-permutation model of B_n.

Hyperplanes are emitted in a fixed definitional order so that tope strings
can be read off directly:

* ``A``   (n):    e_i - e_j for i < j, lexicographic in (i, j)
* ``B``   (n):    e_1..e_n, then e_i - e_j, e_i + e_j for each i < j
* ``D``   (n):    e_i - e_j, e_i + e_j for each i < j
* ``Dns`` (n, s): e_1..e_s, then the pairs as in ``D``
* ``R0``  (m):    e_2, e_2 - k e_3 (k = 1..m-2), e_1
* ``R1``  (m):    the m sidelines of an affinely regular m-gon on z = 1, then its m mirror axes
* ``R2``  (m):    ``R1(2m)`` followed by e_3 (the plane z = 0)
* ``I2m`` (m):    m lines through the origin of R^2 in regular position
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arrangement import Arrangement, canonical_normal, direction_key
from .errors import UnsupportedField
from .scalar import Quad, embed
from .topes import TopeGraph, tope_from_signs

FAMILIES = ("A", "B", "D", "Dns", "I2m", "R0", "R1", "R2")


def _two_cos(m: int):
    """``2 cos(2 pi / m)`` as an exact scalar, or raise if it is not in some Q(sqrt d)."""
    table = {
        1: 2,
        2: -2,
        3: -1,
        4: 0,
        5: Quad(-1, 1, 5) / 2,
        6: 1,
        8: Quad(0, 1, 2),
        10: Quad(1, 1, 5) / 2,
        12: Quad(0, 1, 3),
    }
    if m not in table:
        raise UnsupportedField(f"2cos(2pi/{m}) does not lie in a quadratic field")
    return table[m]


def _field(*values) -> int | None:
    for v in values:
        if isinstance(v, Quad) and v.b:
            return v.d
    return None


def _unit(n: int, i: int, c=1):
    v = [0] * n
    v[i] = c
    return v


def _pairs(n: int):
    out = []
    for i, j in itertools.combinations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        out.append(tuple(v))
        v = [0] * n
        v[i], v[j] = 1, 1
        out.append(tuple(v))
    return out


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dedup(normals, d):
    seen = set()
    out = []
    for v in normals:
        c = canonical_normal(v, d)
        k = direction_key(c)
        if k not in seen:
            seen.add(k)
            out.append(c)
    return out


def polygon(m: int):
    """Vertices of an affinely regular m-gon centred at the origin (``V_k = M^k (1, 0)``)."""
    t = _two_cos(m)
    verts = [(1, 0)]
    for _ in range(m - 1):
        x, y = verts[-1]
        verts.append((-y, x + t * y))
    return verts


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    s: int | None = None
    m: int | None = None

    def validate(self) -> None:
        f, n, s, m = self.family, self.n, self.s, self.m
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
        if f in ("A", "B", "D", "Dns") and n is None:
            raise ValueError(f"family {f} needs n")
        if f in ("I2m", "R0", "R1", "R2") and m is None:
            raise ValueError(f"family {f} needs m")
        if f == "A" and n < 2:
            raise ValueError("A needs n >= 2")
        if f == "B" and n < 2:
            raise ValueError("B needs n >= 2")
        if f == "D" and n < 4:
            raise ValueError("D needs n >= 4")
        if f == "Dns":
            if n < 2:
                raise ValueError("Dns needs n >= 2")
            if s is None or not 0 <= s <= n:
                raise ValueError("Dns needs 0 <= s <= n")
        if f == "I2m" and m < 2:
            raise ValueError("I2m needs m >= 2")
        if f == "R0" and m < 3:
            raise ValueError("R0 needs m >= 3")
        if f == "R1" and m < 3:
            raise ValueError("R1 needs m >= 3")
        if f == "R2" and m < 2:
            raise ValueError("R2 needs m >= 2")

    @property
    def label(self) -> str:
        if self.family == "Dns":
            return f"D{self.n},{self.s}"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.n}"
        return f"{self.family}({self.m})"


def generate(spec, **params) -> Arrangement:
    """Arrangement of a named family: ``generate(FamilySpec("B", n=3))`` or ``generate("B", n=3)``."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, **params)
    spec.validate()
    f, n, s, m = spec.family, spec.n, spec.s, spec.m
    if f == "A":
        normals = []
        for i, j in itertools.combinations(range(n), 2):
            v = [0] * n
            v[i], v[j] = 1, -1
            normals.append(v)
        return Arrangement.from_normals(normals)
    if f == "B":
        return Arrangement.from_normals([_unit(n, i) for i in range(n)] + _pairs(n))
    if f == "D":
        return Arrangement.from_normals(_pairs(n))
    if f == "Dns":
        return Arrangement.from_normals([_unit(n, i) for i in range(s)] + _pairs(n), dim=n)
    if f == "R0":
        normals = [(0, 1, 0)] + [(0, 1, -k) for k in range(1, m - 1)] + [(1, 0, 0)]
        return Arrangement.from_normals(normals)
    if f == "R1":
        return _r1(m)
    if f == "R2":
        A = _r1(2 * m)
        return Arrangement(3, A.normals + (embed_vec((0, 0, 1), A.field),), A.field)
    if f == "I2m":
        return _dihedral(m)
    raise AssertionError(f)


def embed_vec(v, d):
    return tuple(v) if d is None else tuple(embed(x, d) for x in v)


def _r1(m: int) -> Arrangement:
    verts = polygon(m)
    d = _field(_two_cos(m))
    pts = [(x, y, 1) for x, y in verts]
    sides = [_cross(pts[k], pts[(k + 1) % m]) for k in range(m)]
    centre = (0, 0, 1)
    through = list(pts)
    for k in range(m):
        (x1, y1, _), (x2, y2, _) = pts[k], pts[(k + 1) % m]
        through.append((x1 + x2, y1 + y2, 2))
    axes = [_cross(centre, p) for p in through]
    normals = _dedup(sides, d) + _dedup(axes, d)
    assert len(normals) == 2 * m
    return Arrangement(3, tuple(normals), d)


def _dihedral(m: int) -> Arrangement:
    """``m`` lines through the origin permuted cyclically by a projective map of order m."""
    if m == 2:
        return Arrangement.from_normals([(1, 0), (0, 1)])
    c = 2 + _two_cos(m)
    d = _field(c)
    dirs = [(1, 0)]
    for _ in range(m - 1):
        x, y = dirs[-1]
        dirs.append((-c * y, x + c * y))
    normals = _dedup([(-y, x) for x, y in dirs], d)
    assert len(normals) == m
    return Arrangement(2, tuple(normals), d)


def lines_2d(m: int) -> Arrangement:
    """``m`` distinct rational lines through the origin of R^2 (any m >= 1)."""
    if m < 1:
        raise ValueError("need at least one line")
    return Arrangement.from_normals([(1, 0)] + [(k, 1) for k in range(m - 1)])


def near_pencil(m: int) -> Arrangement:
    return generate("R0", m=m)


# ----------------------------------------------------------------- signed permutations


@dataclass(frozen=True)
class SignedPermutation:
    """``sigma`` lists sigma(1..n) (values in 1..n), ``delta`` is a '+'/'-' string indexed by value."""

    sigma: tuple[int, ...]
    delta: str

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{n}")
        if len(self.delta) != n or set(self.delta) - {"+", "-"}:
            raise ValueError(f"bad sign vector {self.delta!r}")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def witness(self) -> tuple[int, ...]:
        """Integral interior point: ``x_{sigma(i)} = delta(sigma(i)) * (n + 1 - i)``."""
        n = self.n
        x = [0] * n
        for i, v in enumerate(self.sigma):
            x[v - 1] = (n - i) if self.delta[v - 1] == "+" else -(n - i)
        return tuple(x)


def all_signed_permutations(n: int):
    for sigma in itertools.permutations(range(1, n + 1)):
        for delta in itertools.product("+-", repeat=n):
            yield SignedPermutation(sigma, "".join(delta))


def b_index(n: int, i: int, j: int | None = None, plus: bool = False, s: int | None = None) -> int:
    """Position of ``e_i`` (j None) or ``e_i -/+ e_j`` (0-based, i < j) in the ``B``/``Dns`` order."""
    s = n if s is None else s
    if j is None:
        if not 0 <= i < s:
            raise IndexError(f"e_{i + 1} is not in the arrangement")
        return i
    if i > j:
        i, j = j, i
    pair = sum(n - 1 - k for k in range(i)) + (j - i - 1)
    return s + 2 * pair + (1 if plus else 0)


def tope_of_signed_perm(sp: SignedPermutation, n: int | None = None) -> str:
    """Tope of ``B_n`` (definitional order) of the region holding the witness of ``sp``."""
    n = sp.n if n is None else n
    if n != sp.n:
        raise ValueError("signed permutation has the wrong length")
    x = sp.witness()
    signs = list(x)
    for i, j in itertools.combinations(range(n), 2):
        signs.append(x[i] - x[j])
        signs.append(x[i] + x[j])
    return tope_from_signs(signs)


def signed_perm_adjacent(a: SignedPermutation, b: SignedPermutation) -> int | None:
    """``B_n`` index of the hyperplane separating two adjacent signed permutations, else None."""
    n = a.n
    if b.n != n:
        raise ValueError("signed permutations of different lengths")
    if a.sigma == b.sigma:
        diff = [k for k in range(n) if a.delta[k] != b.delta[k]]
        if len(diff) == 1 and a.sigma[-1] == diff[0] + 1:
            return b_index(n, diff[0])
        return None
    if a.delta != b.delta:
        return None
    pos = [p for p in range(n) if a.sigma[p] != b.sigma[p]]
    if len(pos) != 2 or pos[1] != pos[0] + 1:
        return None
    p = pos[0]
    if (a.sigma[p], a.sigma[p + 1]) != (b.sigma[p + 1], b.sigma[p]):
        return None
    i, j = a.sigma[p] - 1, a.sigma[p + 1] - 1
    return b_index(n, i, j, plus=a.delta[i] != a.delta[j])


def signed_perm_graph(n: int) -> TopeGraph:
    """Graph on signed permutations by ``signed_perm_adjacent``, relabelled by topes."""
    perms = list(all_signed_permutations(n))
    tope = {sp: tope_of_signed_perm(sp) for sp in perms}
    by_key = {(sp.sigma, sp.delta): sp for sp in perms}
    edges = []
    for sp in perms:
        # candidate neighbours: one sign change at sigma(n), or one adjacent swap
        cands = []
        k = sp.sigma[-1] - 1
        delta = sp.delta[:k] + ("-" if sp.delta[k] == "+" else "+") + sp.delta[k + 1:]
        cands.append(by_key[(sp.sigma, delta)])
        for p in range(n - 1):
            sig = list(sp.sigma)
            sig[p], sig[p + 1] = sig[p + 1], sig[p]
            cands.append(by_key[(tuple(sig), sp.delta)])
        for other in cands:
            h = signed_perm_adjacent(sp, other)
            if h is not None:
                edges.append((tope[sp], tope[other], h))
    return TopeGraph.from_parts(n * n, tope.values(), edges)
