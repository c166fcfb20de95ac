"""Central hyperplane arrangements with exact normals.

An arrangement is an ordered tuple of canonical normals in ``R^dim``.  A
normal is canonical when it has been scaled by a positive rational so that
its rational coordinates are coprime integers, and its first nonzero entry
is positive.  Quadratic arrangements keep every entry as a ``Quad`` over
the same ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .errors import DropAll, DuplicateHyperplane, FieldMismatch, UnsupportedField
from .linalg import nullspace, rank as _rank
from .scalar import Quad, embed, sign, simplify


def _rational_parts(x):
    if isinstance(x, Quad):
        return (x.a, x.b)
    return (Fraction(x),)


def canonical_normal(normal, d: int | None):
    """Scale ``normal`` by a positive rational to canonical form (see module doc)."""
    vec = [embed(x, d) for x in normal]
    if not any(vec):
        raise ValueError("hyperplane normal must be nonzero")
    parts = [p for x in vec for p in _rational_parts(x)]
    den = lcm(*(p.denominator for p in parts))
    num = 0
    for p in parts:
        num = gcd(num, int(p * den))
    scale = Fraction(den, num)
    first = next(x for x in vec if x)
    if sign(first) < 0:
        scale = -scale
    if d is None:
        return tuple(int(x * scale) for x in vec)
    return tuple(Quad(x.a * scale, x.b * scale, d) for x in vec)


def direction_key(normal):
    """Key shared exactly by proportional normals (first nonzero entry scaled to 1)."""
    first = next(x for x in normal if x)
    inv = 1 / (Fraction(first) if isinstance(first, int) else first)
    return tuple(simplify(x * inv) for x in normal)


def infer_field(normals) -> int | None:
    ds = {x.d for v in normals for x in v if isinstance(x, Quad) and x.b}
    if len(ds) > 1:
        raise UnsupportedField(f"entries from several quadratic fields: {sorted(ds)}")
    return ds.pop() if ds else None


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    index: int


@dataclass(frozen=True, eq=False)
class Arrangement:
    """Ordered central arrangement; ``field`` is ``None`` (Q) or ``d`` (Q(sqrt d))."""

    dim: int
    normals: tuple
    field: int | None = None
    _keys: dict = dc_field(init=False, repr=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.normals:
            raise ValueError("an arrangement needs at least one hyperplane")
        canon = []
        keys = {}
        for i, v in enumerate(self.normals):
            if len(v) != self.dim:
                raise ValueError(f"normal {i} has length {len(v)}, expected {self.dim}")
            try:
                c = canonical_normal(v, self.field)
            except FieldMismatch as exc:
                raise UnsupportedField(str(exc)) from None
            k = direction_key(c)
            if k in keys:
                raise DuplicateHyperplane(f"hyperplane {i} is proportional to hyperplane {keys[k]}")
            keys[k] = i
            canon.append(c)
        object.__setattr__(self, "normals", tuple(canon))
        object.__setattr__(self, "_keys", keys)

    @classmethod
    def from_normals(cls, normals, dim: int | None = None) -> Arrangement:
        normals = [tuple(v) for v in normals]
        if dim is None:
            dim = len(normals[0])
        return cls(dim, tuple(normals), infer_field(normals))

    def __len__(self):
        return len(self.normals)

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.dim == other.dim and self.normals == other.normals

    def __hash__(self):
        return hash((self.dim, self.normals))

    @property
    def m(self) -> int:
        return len(self.normals)

    @property
    def hyperplanes(self) -> list[Hyperplane]:
        return [Hyperplane(v, i) for i, v in enumerate(self.normals)]

    @cached_property
    def rank(self) -> int:
        return _rank(self.normals)

    def index_of(self, normal) -> int | None:
        """Index of the hyperplane with this normal (up to scaling), or None."""
        return self._keys.get(direction_key(normal))

    def sorted(self) -> Arrangement:
        """Same hyperplanes in canonical lexicographic order."""
        return Arrangement(self.dim, tuple(sorted(self.normals)), self.field)

    def same_hyperplanes(self, other: Arrangement) -> bool:
        return self.dim == other.dim and set(self._keys) == set(other._keys)


def delete(A: Arrangement, drop) -> tuple[Arrangement, dict[int, int]]:
    """Remove the hyperplanes with indices in ``drop``.

    Returns the smaller arrangement and the map old index -> new index for
    the retained hyperplanes.
    """
    drop = set(drop)
    bad = [i for i in drop if not 0 <= i < A.m]
    if bad:
        raise IndexError(f"no hyperplane with index {bad[0]}")
    keep = [i for i in range(A.m) if i not in drop]
    if not keep:
        raise DropAll("cannot delete every hyperplane")
    index_map = {old: new for new, old in enumerate(keep)}
    return Arrangement(A.dim, tuple(A.normals[i] for i in keep), A.field), index_map


def restrict(A: Arrangement, h: int, return_map: bool = False):
    """Arrangement induced on the hyperplane ``H_h`` in coordinates of a basis of it.

    With ``return_map`` also returns ``{old index: new index}`` for every
    hyperplane other than ``h``; several old hyperplanes may share a new one.
    """
    if A.m < 2:
        raise ValueError("restriction needs at least two hyperplanes")
    if not 0 <= h < A.m:
        raise IndexError(f"no hyperplane with index {h}")
    basis = nullspace([A.normals[h]], A.dim)
    normals = []
    keys = {}
    mapping = {}
    for i, v in enumerate(A.normals):
        if i == h:
            continue
        w = tuple(sum((x * y for x, y in zip(v, b) if x and y), 0) for b in basis)
        c = canonical_normal(w, A.field)
        k = direction_key(c)
        if k not in keys:
            keys[k] = len(normals)
            normals.append(c)
        mapping[i] = keys[k]
    R = Arrangement(A.dim - 1, tuple(normals), A.field)
    return (R, mapping) if return_map else R


def product(A1: Arrangement, A2: Arrangement) -> Arrangement:
    """``A1 x A2`` in ``R^(n1+n2)``; hyperplanes of ``A1`` come first."""
    if A1.field is None:
        d = A2.field
    elif A2.field is None or A2.field == A1.field:
        d = A1.field
    else:
        raise FieldMismatch(f"cannot combine Q(sqrt {A1.field}) with Q(sqrt {A2.field})")
    z1 = (0,) * A1.dim
    z2 = (0,) * A2.dim
    normals = [tuple(v) + z2 for v in A1.normals] + [z1 + tuple(v) for v in A2.normals]
    return Arrangement(A1.dim + A2.dim, tuple(normals), d)


def coordinate_blocks(A: Arrangement) -> list[list[int]]:
    """Partition of the coordinates into blocks no hyperplane straddles.

    More than one block means ``A`` is (up to coordinate order) a product.
    """
    parent = list(range(A.dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in A.normals:
        support = [i for i, x in enumerate(v) if x]
        for i in support[1:]:
            parent[find(i)] = find(support[0])
    blocks: dict[int, list[int]] = {}
    for i in range(A.dim):
        blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values())
