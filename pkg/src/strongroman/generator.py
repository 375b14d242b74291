"""Constructive side: grow members of the strongly-equal class bottom-up.

Five extension operations are applied to triples, starting from the two
one-vertex seeds.  The closure of the seeds under the operations is exactly
the class the recognizer and the exhaustive oracle decide, which the test
suite checks in both directions.

New vertices always take the next free identifiers: the single added vertex
of operations 1, 4 and 5 is ``n``; operation 2 adds ``v, w1, w2 = n, n+1,
n+2``; operation 3 adds ``v, w1, w2, w3 = n .. n+3``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graphs import Tree
from .recognizer import Triple, configuration_case
from .solver import SizeCapError

ENUMERATION_ORDER_CAP = 10

# Constrained-set variants per operation: which of the newly touched vertices
# join X.  Anchors: u for ops 1-3, the configuration's v for op 4, one of its
# branch roots for op 5.
_VARIANTS = {1: 1, 2: 2, 3: 4, 4: 2, 5: 1}


class OperationNotApplicable(ValueError):
    """The operation's applicability condition fails at the given anchor."""

    def __init__(self, op: int, clause: str):
        super().__init__(f"operation {op}: {clause}")
        self.op = op
        self.clause = clause


@dataclass(frozen=True)
class OpStep:
    """One extension: operation number, anchor vertex, constrained-set variant."""

    op: int
    anchor: int
    variant: int = 0

    def __post_init__(self):
        if self.op not in _VARIANTS:
            raise ValueError(f"unknown operation {self.op}")
        if not (0 <= self.variant < _VARIANTS[self.op]):
            raise ValueError(f"operation {self.op} has no variant {self.variant}")

    def to_json_dict(self) -> dict:
        return {"op": self.op, "anchor": self.anchor, "variant": self.variant}

    @classmethod
    def from_json_dict(cls, d: dict) -> "OpStep":
        return cls(op=int(d["op"]), anchor=int(d["anchor"]), variant=int(d.get("variant", 0)))


def base_triples() -> tuple[Triple, Triple]:
    """The two one-vertex seeds: fully unconstrained and fully constrained."""
    k1 = Tree(1, ())
    return Triple(k1, frozenset(), frozenset()), Triple(k1, frozenset({0}), frozenset({0}))


def _scan_configurations(tr: Triple):
    """All (v, u) reduction configurations of ``tr`` whose side conditions hold."""
    for v in tr.tree.vertices():
        for u in tr.tree.neighbors(v):
            case = configuration_case(tr, v, u)
            if case is not None:
                yield v, u


def _op4_anchors(tr: Triple) -> set[int]:
    return {v for v, _ in _scan_configurations(tr)}


def _op5_anchors(tr: Triple) -> set[int]:
    anchors: set[int] = set()
    for v, u in _scan_configurations(tr):
        anchors.update(w for w in tr.tree.neighbors(v) if w != u)
    return anchors


def apply_op(tr: Triple, step: OpStep) -> Triple:
    """Apply one extension operation, validating its applicability condition."""
    t, x, y = tr.tree, tr.x, tr.y
    n = t.n
    a = step.anchor
    if not (0 <= a < n):
        raise OperationNotApplicable(step.op, f"anchor {a} is not a vertex")

    if step.op == 1:
        if a in y:
            raise OperationNotApplicable(1, "anchor must lie outside Y")
        tree = Tree(n + 1, t.edges + ((a, n),))
        return Triple(tree, x, y)

    if step.op == 2:
        # The anchor must avoid Y, not just X: the two-branch reduction pins
        # the smaller certificate set to Y minus the anchor, so anchoring at a
        # Y-vertex would demand a second, different certificate set for the
        # same (tree, X), which uniqueness forbids.  Anchoring at a Y-vertex
        # demonstrably creates triples the exhaustive oracle rejects.
        if a in y:
            raise OperationNotApplicable(2, "anchor must lie outside Y")
        v, w1, w2 = n, n + 1, n + 2
        tree = Tree(n + 3, t.edges + ((a, v), (v, w1), (v, w2)))
        new_x = {a, w1, w2} if step.variant == 0 else {a, v, w1, w2}
        return Triple(tree, x | new_x, y | {a, v, w1, w2})

    if step.op == 3:
        if a in x:
            raise OperationNotApplicable(3, "anchor must lie outside X")
        v, w1, w2, w3 = n, n + 1, n + 2, n + 3
        tree = Tree(n + 4, t.edges + ((a, v), (v, w1), (v, w2), (v, w3)))
        new_x = (
            {w1, w2, w3},
            {a, w1, w2, w3},
            {v, w1, w2, w3},
            {a, v, w1, w2, w3},
        )[step.variant]
        return Triple(tree, x | new_x, y | {a, v, w1, w2, w3})

    if step.op == 4:
        if not any(configuration_case(tr, a, u) for u in t.neighbors(a)):
            raise OperationNotApplicable(
                4, "anchor is not the cut vertex of any valid configuration"
            )
        tree = Tree(n + 1, t.edges + ((a, n),))
        new_x = x if step.variant == 0 else x | {n}
        return Triple(tree, new_x, y | {n})

    # operation 5
    if a not in _op5_anchors(tr):
        raise OperationNotApplicable(
            5, "anchor is not a branch root of any valid configuration"
        )
    tree = Tree(n + 1, t.edges + ((a, n),))
    return Triple(tree, x, y)


def applicable_steps(tr: Triple, max_order: int) -> Iterator[OpStep]:
    """Every step applicable to ``tr`` whose result stays within ``max_order``."""
    n = tr.n
    if n + 1 <= max_order:
        for u in tr.tree.vertices():
            if u not in tr.y:
                yield OpStep(1, u)
        for v in sorted(_op4_anchors(tr)):
            yield OpStep(4, v, 0)
            yield OpStep(4, v, 1)
        for w in sorted(_op5_anchors(tr)):
            yield OpStep(5, w)
    if n + 3 <= max_order:
        for u in tr.tree.vertices():
            if u not in tr.y:
                yield OpStep(2, u, 0)
                yield OpStep(2, u, 1)
    if n + 4 <= max_order:
        for u in tr.tree.vertices():
            if u not in tr.x:
                for variant in range(4):
                    yield OpStep(3, u, variant)


def enumerate_T(n_max: int, *, cap: int = ENUMERATION_ORDER_CAP) -> dict[str, Triple]:
    """Closure of the seeds under the operations, up to ``n_max`` vertices.

    Returns one canonically labelled representative per canonical form,
    keyed by the canonical string.  Breadth-first; since every operation
    grows the tree, members of order k are complete before order k+1 opens.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > cap:
        raise SizeCapError(f"n_max {n_max} exceeds the configured cap {cap}")
    members: dict[str, Triple] = {}
    queue: deque[Triple] = deque()
    for seed in base_triples():
        canon, _ = seed.canonicalized()
        members[canon.canonical_key] = canon
        queue.append(canon)
    while queue:
        tr = queue.popleft()
        for step in applicable_steps(tr, n_max):
            child, _ = apply_op(tr, step).canonicalized()
            key = child.canonical_key
            if key not in members:
                members[key] = child
                queue.append(child)
    return members


class GrowthRetryError(RuntimeError):
    """The random grower did not reach the requested order within its budget."""


def random_member(n: int, seed: int, *, max_retries: int = 64) -> tuple[Triple, list[OpStep]]:
    """A pseudo-random member of order exactly ``n`` with its growth recipe.

    Deterministic for a fixed seed.  Growth starts from the unconstrained
    seed and picks uniformly among the currently applicable steps that still
    fit; this samples reachable members, not any particular distribution.
    Replaying the returned steps from the unconstrained seed reproduces the
    triple (an order-1 result is one of the two seeds with no steps).
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    rng = random.Random(seed)
    empty, full = base_triples()
    if n == 1:
        return rng.choice((empty, full)), []
    for _ in range(max_retries):
        tr = empty
        steps: list[OpStep] = []
        while tr.n < n:
            candidates = list(applicable_steps(tr, n))
            if not candidates:
                break
            step = rng.choice(candidates)
            tr = apply_op(tr, step)
            steps.append(step)
        if tr.n == n:
            return tr, steps
    raise GrowthRetryError(f"no member of order {n} reached after {max_retries} attempts")


def replay(steps: Iterable[OpStep], start: Optional[Triple] = None) -> Triple:
    """Re-run a recorded step list from a seed (default: the unconstrained one)."""
    tr = base_triples()[0] if start is None else start
    for step in steps:
        tr = apply_op(tr, step)
    return tr
