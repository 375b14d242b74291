"""Linear-time Roman domination number on trees.

Standard rooted dynamic program with four states per vertex; vertices outside
the constrained set may stay at value 0 without ever being dominated.
"""

from __future__ import annotations

import math
from typing import Iterable

from .graphs import Tree

_INF = math.inf


def gamma_R_tree(t: Tree, x: Iterable[int], *, root: int = 0) -> int:
    """Minimum weight over assignments where value-0 vertices of ``x`` see a 2.

    Agrees with the exhaustive ``solver.gamma_R`` on every input; the root
    choice does not affect the result.
    """
    xset = frozenset(x)
    for v in xset:
        if not (0 <= v < t.n):
            raise ValueError(f"x contains vertex {v} outside 0..{t.n - 1}")
    if not (0 <= root < t.n):
        raise ValueError(f"root {root} out of range")

    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for v in order:
        for u in t.neighbors(v):
            if parent[u] == -1:
                parent[u] = v
                order.append(u)

    # Per vertex: (value 2, value 1, value 0 with a 2-child, value 0 unclaimed).
    # The unclaimed state is only usable under a value-2 parent when the
    # vertex is constrained, and at the root only when it is not.
    state = [None] * t.n
    for v in reversed(order):
        s2, s1, s0 = 2, 1, 0
        pen = _INF
        for c in t.neighbors(v):
            if parent[c] != v:
                continue
            a2, a1, a0d, a0u = state[c]
            any_parent = min(a2, a1, a0d, a0u)
            no2_parent = min(a2, a1, a0d) if c in xset else any_parent
            s2 += any_parent
            s1 += no2_parent
            s0 += no2_parent
            if a2 - no2_parent < pen:
                pen = a2 - no2_parent
        state[v] = (s2, s1, s0 + pen, s0)
    r2, r1, r0d, r0u = state[root]
    ans = min(r2, r1, r0d) if root in xset else min(r2, r1, r0d, r0u)
    return int(ans)
