"""Small exact linear-algebra kernel over int/Fraction/Quad entries.

Everything here is dense Gaussian elimination; the matrices that show up
(normals of an arrangement, wall bases) are tiny.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import simplify


def _lift(x):
    # ints are promoted so that division stays exact
    return Fraction(x) if isinstance(x, int) else x


def dot(u, v):
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def rref(rows):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    mat = [[_lift(x) for x in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = [tuple(simplify(x) for x in row) for row in mat[:r]]
    return out, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int):
    """Basis of ``{x : r.x = 0 for r in rows}`` (free-variable basis of the RREF)."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = simplify(-row[f])
        basis.append(tuple(v))
    return basis


class Echelon:
    """Incrementally maintained row space with a fast membership test."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v):
        v = [_lift(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        """Add ``v``; returns False if it was already in the span."""
        w = self.reduce(v)
        p = next((c for c, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = 1 / w[p]
        w = [x * inv for x in w]
        for i, row in enumerate(self.rows):
            f = row[p]
            if f:
                self.rows[i] = [x - f * y for x, y in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(p)
        return True

    def copy(self) -> Echelon:
        e = Echelon(self.ncols)
        e.rows = [list(r) for r in self.rows]
        e.pivots = list(self.pivots)
        return e

    def key(self):
        """Canonical RREF of the span, as a tuple of tuples."""
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        return tuple(tuple(simplify(x) for x in self.rows[i]) for i in order)

    @property
    def rank(self) -> int:
        return len(self.rows)


def coordinates_solver(basis):
    """Return ``f(v)`` giving the coordinates of ``v`` in the (independent) ``basis``.

    Raises ``ValueError`` from ``f`` if ``v`` is not in the span.
    """
    r = len(basis)
    n = len(basis[0])
    # Solve c * B = v using r independent columns of B.
    _, colpiv = rref(basis)
    if len(colpiv) != r:
        raise ValueError("basis vectors are dependent")
    inv = _invert([[_lift(basis[i][c]) for c in colpiv] for i in range(r)])

    def solve(v):
        vp = [v[c] for c in colpiv]
        coeffs = []
        for j in range(r):
            s = 0
            for i in range(r):
                if vp[i] and inv[i][j]:
                    s = s + vp[i] * inv[i][j]
            coeffs.append(simplify(s))
        for k in range(n):
            acc = 0
            for j in range(r):
                if coeffs[j] and basis[j][k]:
                    acc = acc + coeffs[j] * basis[j][k]
            if acc != v[k]:
                raise ValueError("vector not in span of basis")
        return tuple(coeffs)

    return solve


def _invert(mat):
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise ValueError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [[simplify(x) for x in row[n:]] for row in aug]
