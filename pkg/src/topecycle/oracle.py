"""Brute-force tope enumeration, independent of the wall-crossing builder.

Hyperplanes are inserted one at a time.  Every region found so far carries
an exact interior point; when a new hyperplane comes in, the side holding
that point certainly exists, and the other side is tested with an exact
cone-membership problem.  Works for any central arrangement, simplicial or
not.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement
from .errors import SizeLimit
from .linalg import dot, nullspace
from .lp import separate, strictly_feasible_point
from .scalar import sign, simplify
from .topes import TopeGraph, flip


def _split_both(normals, signs, w, alpha):
    """``w`` lies on the new hyperplane: nudge it to both sides."""
    eps = Fraction(1)
    for a, s in zip(normals, signs):
        aa = dot(a, alpha)
        if aa:
            bound = abs(dot(a, w) / aa) / 2 if isinstance(aa, int) else _abs(dot(a, w) / aa) / 2
            if bound < eps:
                eps = bound
    plus = tuple(simplify(x + eps * y) for x, y in zip(w, alpha))
    minus = tuple(simplify(x - eps * y) for x, y in zip(w, alpha))
    return plus, minus


def _abs(x):
    return -x if sign(x) < 0 else x


def _other_side(normals, signs, w, alpha, side):
    """Interior point of the current region on the ``-side`` of ``alpha``, or None."""
    gens = [a if s > 0 else tuple(-x for x in a) for a, s in zip(normals, signs)]
    target = alpha if side > 0 else tuple(-x for x in alpha)
    y = separate(gens, target)
    if y is None:
        return None
    # <g, w + lam*y> stays positive; choose lam so that <-target, w + lam*y> = 1
    c = tuple(-x for x in target)
    lam = (1 - dot(c, w)) / dot(c, y)
    return tuple(simplify(x + lam * yi) for x, yi in zip(w, y))


def enumerate_regions(A: Arrangement, limit: int | None = None) -> dict[str, tuple]:
    """Map each tope (relative to ``A.normals``) to an interior point of its region."""
    normals = A.normals
    a0 = normals[0]
    regions = {"+": tuple(a0), "-": tuple(-x for x in a0)}
    for k in range(1, A.m):
        alpha = normals[k]
        prev = normals[:k]
        nxt = {}
        for t, w in regions.items():
            signs = [1 if c == "+" else -1 for c in t]
            v = sign(dot(alpha, w))
            if v == 0:
                plus, minus = _split_both(prev, signs, w, alpha)
                nxt[t + "+"] = plus
                nxt[t + "-"] = minus
                continue
            nxt[t + ("+" if v > 0 else "-")] = w
            other = _other_side(prev, signs, w, alpha, v)
            if other is not None:
                nxt[t + ("-" if v > 0 else "+")] = other
        if limit is not None and len(nxt) > limit:
            raise SizeLimit(f"more than {limit} topes")
        regions = nxt
    for t, w in regions.items():
        for a, c in zip(normals, t):
            assert sign(dot(a, w)) == (1 if c == "+" else -1), "witness left its region"
    return regions


def _share_facet(normals, t, h, w1, w2) -> bool:
    """Do the regions of ``t`` and ``flip(t, h)`` meet in a full facet on ``H_h``?"""
    alpha = normals[h]
    f1, f2 = dot(alpha, w1), dot(alpha, w2)
    # the segment w1-w2 crosses H_h at p = w1 + s (w2 - w1)
    s = f1 / (f1 - f2)
    p = [simplify(x + s * (y - x)) for x, y in zip(w1, w2)]
    ok = True
    for k, a in enumerate(normals):
        if k == h:
            continue
        want = 1 if t[k] == "+" else -1
        if sign(dot(a, p)) != want:
            ok = False
            break
    if ok:
        return True
    # the segment hit a lower-dimensional face: decide inside H_h exactly
    basis = nullspace([alpha], len(alpha))
    gens = []
    for k, a in enumerate(normals):
        if k == h:
            continue
        red = tuple(dot(a, b) for b in basis)
        gens.append(red if t[k] == "+" else tuple(-x for x in red))
    return strictly_feasible_point(gens) is not None


def oracle_enumerate(A: Arrangement, limit: int | None = None) -> TopeGraph:
    """Tope graph of any central arrangement by incremental insertion."""
    regions = enumerate_regions(A, limit)
    edges = []
    for t, w in regions.items():
        for h in range(A.m):
            u = flip(t, h)
            if u > t and u in regions and _share_facet(A.normals, t, h, w, regions[u]):
                edges.append((t, u, h))
    return TopeGraph.from_parts(A.m, regions, edges)
