"""Tope graphs of simplicial arrangements by wall crossing.

A region is described by a ``RegionFrame``: the hyperplanes of its walls
and, for every hyperplane, the coordinates of its region-positive root in
the basis of wall roots.  In a simplicial arrangement these coordinates are
all non-negative, and the frame of a neighbouring region can be computed
from the current one with a handful of exact operations, without any
geometry.  Starting from one region found by linear optimisation, a stack
walk then discovers every region.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, direction_key
from .errors import (
    DegenerateDirection,
    DuplicateHyperplane,
    EmptyBaseRegion,
    NotSimplicial,
    NotSimplicialCone,
    SizeLimit,
    TieDetected,
)
from .linalg import coordinates_solver, dot, rank
from .lp import strictly_feasible_point
from .scalar import sign, simplify
from .topes import TopeGraph, flip

MAX_DIRECTION_ATTEMPTS = 32


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        if x % y == 0:
            return x // y
        return Fraction(x, y)
    return simplify(x / y)


def generic_vector(dim: int, rng: random.Random, bound: int = 1 << 20) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(dim))


@dataclass(frozen=True)
class PositiveSystem:
    """One root per hyperplane, all strictly positive on a common base region.

    ``witness`` is a point of the base region.  ``orientation[k]`` records
    whether root k is the canonical normal (+1) or its negative (-1).
    """

    roots: tuple
    witness: tuple | None = None
    orientation: tuple | None = None

    def __post_init__(self):
        roots = tuple(tuple(r) for r in self.roots)
        if not roots:
            raise ValueError("a positive system needs at least one root")
        keys = {}
        for i, r in enumerate(roots):
            if not any(r):
                raise ValueError(f"root {i} is zero")
            k = direction_key(r)
            if k in keys:
                raise DuplicateHyperplane(f"root {i} is proportional to root {keys[k]}")
            # opposite roots describe the same hyperplane as well
            nk = direction_key(tuple(-x for x in r))
            keys[k] = keys[nk] = i
        w = self.witness
        if w is None:
            w = strictly_feasible_point(list(roots))
            if w is None:
                raise EmptyBaseRegion("no point is positive on every root")
        elif any(sign(dot(r, w)) <= 0 for r in roots):
            raise EmptyBaseRegion("witness is not strictly positive on every root")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "witness", tuple(w))
        if self.orientation is None:
            object.__setattr__(self, "orientation", (1,) * len(roots))

    @property
    def m(self) -> int:
        return len(self.roots)

    @classmethod
    def from_arrangement(cls, A: Arrangement, point=None, seed: int = 0) -> PositiveSystem:
        """Orient ``A`` so that ``point`` (or a seeded generic point) is in the base region."""
        if point is None:
            rng = random.Random(seed)
            for _ in range(64):
                cand = generic_vector(A.dim, rng)
                if all(sign(dot(a, cand)) != 0 for a in A.normals):
                    point = cand
                    break
            else:  # pragma: no cover - probability zero
                raise DegenerateDirection("could not find a generic base point")
        signs = [sign(dot(a, point)) for a in A.normals]
        if 0 in signs:
            raise EmptyBaseRegion("base point lies on a hyperplane")
        roots = tuple(tuple(simplify(s * x) for x in a) for s, a in zip(signs, A.normals))
        return cls(roots, tuple(point), tuple(signs))


@dataclass(frozen=True)
class RegionFrame:
    """Walls of a region and the wall-basis expansion of every positive root.

    ``tope`` is relative to the roots of the positive system.  ``walls`` lists
    hyperplane indices in increasing order; ``rows[k]`` are the coordinates
    of the root of hyperplane k (signed to be positive on this region) in
    the basis of signed wall roots.
    """

    tope: str
    walls: tuple[int, ...]
    rows: tuple[tuple, ...]

    @property
    def rank(self) -> int:
        return len(self.walls)

    def problems(self) -> list[str]:
        out = []
        r = self.rank
        for k, row in enumerate(self.rows):
            if len(row) != r:
                out.append(f"row {k} has {len(row)} entries")
            if any(sign(x) < 0 for x in row):
                out.append(f"row {k} has a negative entry")
        units = [k for k, row in enumerate(self.rows) if sum(1 for x in row if x) == 1 and 1 in row]
        if sorted(units) != list(self.walls):
            out.append(f"unit rows {units} do not match walls {list(self.walls)}")
        for pos, h in enumerate(self.walls):
            if self.rows[h][pos] != 1:
                out.append(f"wall {h} is not the unit vector at position {pos}")
        return out


def _extreme_rays(roots, witness, rng: random.Random, r: int) -> list[int]:
    """Indices of ``r`` roots spanning the extreme rays of ``cone(roots)``."""
    images = [list(a) for a in roots]
    alive = list(range(len(roots)))
    u = list(witness)
    found = []
    for _ in range(r):
        if not alive:
            raise NotSimplicialCone("roots span fewer dimensions than expected")
        c = generic_vector(len(u), rng)
        scores = {k: _div(dot(c, images[k]), dot(u, images[k])) for k in alive}
        best = max(scores.values())
        top = [k for k in alive if scores[k] == best]
        keys = {direction_key(images[k]) for k in top}
        if len(keys) > 1:
            raise DegenerateDirection("generic direction attains its maximum on two rays")
        # the generator of the ray is the candidate closest to the origin along u
        ray = min(top, key=lambda k: (_div(dot(witness, roots[k]), dot(u, images[k])), k))
        found.append(ray)
        rho = images[ray]
        ur = dot(u, rho)
        nxt = []
        for k in alive:
            if k in top:
                continue
            # quotient by the ray: project along rho
            t = _div(dot(u, images[k]), ur)
            images[k] = [simplify(x - t * y) for x, y in zip(images[k], rho)]
            nxt.append(k)
        alive = nxt
        # new positive functional vanishes on the ray and is positive elsewhere
        u = [simplify(best * a - b) for a, b in zip(u, c)]
    if alive:
        raise NotSimplicialCone("roots are not spanned by the extreme rays found")
    return found


def initial_region(P: PositiveSystem, seed: int = 0) -> RegionFrame:
    """Frame of the base region, walls found by optimising generic directions."""
    r = rank(P.roots)
    for attempt in range(MAX_DIRECTION_ATTEMPTS):
        rng = random.Random(seed * 1000003 + attempt)
        try:
            walls = sorted(_extreme_rays(P.roots, P.witness, rng, r))
            break
        except DegenerateDirection:
            continue
    else:
        raise DegenerateDirection(f"no generic direction after {MAX_DIRECTION_ATTEMPTS} attempts")
    solve = coordinates_solver([P.roots[h] for h in walls])
    rows = []
    for k, a in enumerate(P.roots):
        row = solve(a)
        if any(sign(x) < 0 for x in row):
            raise NotSimplicialCone(f"root {k} is not a non-negative combination of the walls")
        rows.append(row)
    return RegionFrame("+" * P.m, tuple(walls), tuple(rows))


def closest_root(F: RegionFrame, i: int, j: int):
    """Root in the 2-face of walls ``i`` and ``j`` with the largest quotient ``entry_i / entry_j``.

    Returns ``(hyperplane, q, d)`` with ``d = entry_j``, or None when no
    root is supported exactly on ``{i, j}``.
    """
    if i == j:
        raise ValueError("the two walls must differ")
    best = None
    for k, row in enumerate(F.rows):
        a, b = row[i], row[j]
        if not a or not b:
            continue
        if any(x for p, x in enumerate(row) if p != i and p != j):
            continue
        if sign(a) < 0 or sign(b) < 0:
            continue
        q = _div(a, b)
        if best is None or q > best[1]:
            best = (k, q, b)
        elif q == best[1]:
            raise TieDetected(f"roots {best[0]} and {k} have the same quotient")
    return best


def _candidates(F: RegionFrame, i: int) -> dict[int, tuple]:
    """``closest_root(F, i, j)`` for every ``j`` at once (one pass over the rows)."""
    best: dict[int, tuple] = {}
    for k, row in enumerate(F.rows):
        if not row[i]:
            continue
        j = -1
        for p, x in enumerate(row):
            if x and p != i:
                if j >= 0:
                    j = -2
                    break
                j = p
        if j < 0:
            continue
        b = row[j]
        q = _div(row[i], b)
        cur = best.get(j)
        if cur is None or q > cur[1]:
            best[j] = (k, q, b)
        elif q == cur[1]:
            raise TieDetected(f"roots {cur[0]} and {k} have the same quotient")
    return best


def cross_wall(F: RegionFrame, i: int, check: bool = True) -> RegionFrame:
    """Frame of the region on the other side of wall position ``i``."""
    r = F.rank
    sep = F.walls[i]
    found = _candidates(F, i)
    walls = list(F.walls)
    for j, (k, _, _) in found.items():
        walls[j] = k
    touched = list(found.items())
    rows = []
    for h, row in enumerate(F.rows):
        if h == sep:
            new = [0] * r
            new[i] = 1
            rows.append(tuple(new))
            continue
        if not row[i] and not any(row[j] for j, _ in touched):
            rows.append(row)
            continue
        new = list(row)
        acc = -row[i]
        for j, (_, q, d) in touched:
            x = row[j]
            if x:
                acc = acc + q * x
                new[j] = _div(x, d)
        new[i] = acc if isinstance(acc, int) else simplify(acc)
        rows.append(tuple(new))
    order = sorted(range(r), key=lambda p: walls[p])
    if order == list(range(r)):
        frame = RegionFrame(flip(F.tope, sep), tuple(walls), tuple(rows))
    else:
        frame = RegionFrame(
            flip(F.tope, sep),
            tuple(walls[p] for p in order),
            tuple(tuple(row[p] for p in order) for row in rows),
        )
    if check:
        _check_frame(frame)
    return frame


def _check_frame(F: RegionFrame) -> None:
    units = 0
    for row in F.rows:
        nz = 0
        for x in row:
            if x:
                if sign(x) < 0:
                    raise NotSimplicial(f"negative expansion entry in region {F.tope}")
                nz += 1
        if nz == 1 and 1 in row:
            units += 1
        elif nz == 0:
            raise NotSimplicial(f"zero expansion row in region {F.tope}")
    if units != F.rank:
        raise NotSimplicial(f"region {F.tope} has {units} unit rows, expected {F.rank}")


def build_tope_graph(
    P: PositiveSystem, seed: int = 0, limit: int | None = None, debug: bool = False
) -> TopeGraph:
    """All topes of the arrangement of ``P`` with their adjacencies (topes relative to the roots)."""
    F0 = initial_region(P, seed)
    seen = {F0.tope}
    frames = {F0.tope: F0} if debug else None
    edges = set()
    stack = [(F0, F0.walls)]
    while stack:
        F, pending = stack.pop()
        h = pending[0]
        if len(pending) > 1:
            stack.append((F, pending[1:]))
        t2 = flip(F.tope, h)
        a, b = (F.tope, t2) if F.tope < t2 else (t2, F.tope)
        edges.add((a, b, h))
        if t2 in seen:
            if debug:
                again = cross_wall(F, F.walls.index(h))
                if again != frames[t2]:
                    raise NotSimplicial(f"region {t2} reached with two different frames")
            continue
        F2 = cross_wall(F, F.walls.index(h))
        seen.add(t2)
        if debug:
            frames[t2] = F2
            assert not F2.problems(), F2.problems()
        if limit is not None and len(seen) > limit:
            raise SizeLimit(f"more than {limit} topes")
        rest = tuple(w for w in F2.walls if w != h)
        if rest:
            stack.append((F2, rest))
    return TopeGraph.from_parts(P.m, seen, edges)


def tope_graph(A: Arrangement, seed: int = 0, limit: int | None = None, debug: bool = False) -> TopeGraph:
    """Tope graph of ``A`` with signs relative to its canonical normals."""
    P = PositiveSystem.from_arrangement(A, seed=seed)
    G = build_tope_graph(P, seed=seed, limit=limit, debug=debug)
    return G.reoriented(P.orientation)
