"""Exact cone separation by phase-one simplex.

``separate(gens, b)`` decides whether ``b`` lies in the cone spanned by
``gens``.  When it does not, it returns a Farkas witness ``y`` with
``<y, g> >= 0`` for every generator and ``<y, b> < 0``.  All pivoting is
exact (Bland's rule, so no cycling) over whatever ordered field the
entries come from.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import dot
from .scalar import sign, simplify


def _lift(x):
    return Fraction(x) if isinstance(x, int) else x


def separate(gens, b):
    """Return None if ``b`` is in ``cone(gens)``, else a separating vector ``y``."""
    n = len(b)
    k = len(gens)
    if not any(b):
        return None
    # rows: sum_j lam_j g_j[i] + art_i = |b_i|  (row i negated if b_i < 0)
    flipped = [sign(bi) < 0 for bi in b]
    ncols = k + n
    rows = []
    rhs = []
    for i in range(n):
        s = -1 if flipped[i] else 1
        row = [_lift(s * g[i]) if g[i] else Fraction(0) for g in gens]
        row += [Fraction(int(c == i)) for c in range(n)]
        rows.append(row)
        rhs.append(_lift(s * b[i]))
    basis = [k + i for i in range(n)]
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [0] * ncols
    for j in range(k):
        cost[j] = -sum((rows[i][j] for i in range(n)), Fraction(0))
    obj = sum(rhs, Fraction(0))

    while True:
        enter = next((j for j in range(ncols) if sign(cost[j]) < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(n):
            a = rows[i][enter]
            if sign(a) > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # cannot happen: the phase-one objective is bounded below by zero
            raise ArithmeticError("unbounded phase-one problem")
        piv = rows[leave][enter]
        inv = 1 / piv
        rows[leave] = [x * inv for x in rows[leave]]
        rhs[leave] = rhs[leave] * inv
        prow = rows[leave]
        for i in range(n):
            if i != leave:
                f = rows[i][enter]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
                    rhs[i] = rhs[i] - f * rhs[leave]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow)]
        obj = obj + f * rhs[leave]
        basis[leave] = enter

    if sign(obj) == 0:
        return None
    # simplex multipliers: reduced cost of artificial i is 1 - pi_i
    pi = [1 - cost[k + i] for i in range(n)]
    y = [simplify(pi[i] if flipped[i] else -pi[i]) for i in range(n)]
    for g in gens:
        assert sign(dot(y, g)) >= 0, "Farkas witness failed on a generator"
    assert sign(dot(y, b)) < 0, "Farkas witness failed on the target"
    return tuple(y)


def strictly_feasible_point(normals):
    """A point ``x`` with ``<a, x> > 0`` for every ``a`` in ``normals``, or None."""
    # Gordan: infeasible iff some -a_j lies in the cone of the others.  Each
    # separating vector is >= 0 on every normal and > 0 on its own, so the
    # sum of them is strictly positive on all normals.
    if not normals:
        return None
    x = [0] * len(normals[0])
    for j, a in enumerate(normals):
        if sign(dot(x, a)) > 0:
            continue
        y = separate([g for i, g in enumerate(normals) if i != j], [-c for c in a])
        if y is None:
            return None
        x = [simplify(xi + yi) for xi, yi in zip(x, y)]
    assert all(sign(dot(x, a)) > 0 for a in normals)
    return tuple(x)
