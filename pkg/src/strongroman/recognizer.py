"""Reduction-based membership test for the strongly-equal class of triples.

A triple bundles a tree with the constrained set X and the certificate set Y.
Membership is decided by repeatedly cutting away the far end of a longest
X-path: the cut configuration either fails one of a fixed list of structural
conditions (reject) or leaves one or two smaller candidate triples whose
membership is equivalent.  Every decision comes with a replayable trace.

Trace coordinates: ``decide_in_S`` relabels the input triple canonically
before working, and every child triple is canonically relabelled as well, so
steps are expressed in canonical labels at each level.  ``verify_trace``
repeats the same deterministic relabelling, which makes traces portable
between runs and across isomorphic inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .graphs import Split, Tree, canonical_relabel, longest_x_path, split_at

# Vertex colors for canonical forms: outside both sets, in Y only, in X
# (membership in X forces membership in Y, so three colors suffice).
_COLOR_FREE = 0
_COLOR_Y_ONLY = 1
_COLOR_X = 2


class InternalInconsistencyError(AssertionError):
    """A condition guaranteed by construction failed; signals a bug here."""


@dataclass(frozen=True)
class Triple:
    """A tree with its constrained set ``x`` and certificate set ``y``.

    Requires ``x <= y <= V``; candidate members never violate this, so it is
    enforced at construction.
    """

    tree: Tree
    x: frozenset[int]
    y: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "x", frozenset(self.x))
        object.__setattr__(self, "y", frozenset(self.y))
        vs = set(self.tree.vertices())
        if not self.x <= self.y:
            raise ValueError("x must be a subset of y")
        if not self.y <= vs:
            raise ValueError("y contains vertices outside the tree")

    @property
    def n(self) -> int:
        return self.tree.n

    def colors(self) -> dict[int, int]:
        return {
            v: _COLOR_X if v in self.x else _COLOR_Y_ONLY if v in self.y else _COLOR_FREE
            for v in self.tree.vertices()
        }

    @cached_property
    def canonical_key(self) -> str:
        return canonical_relabel(self.tree, self.colors())[0]

    def canonicalized(self) -> tuple["Triple", dict[int, int]]:
        """Canonically relabelled copy plus the old-to-new vertex map."""
        key, mapping = canonical_relabel(self.tree, self.colors())
        edges = sorted((min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in self.tree.edges)
        out = Triple(
            Tree(self.n, edges),
            frozenset(mapping[v] for v in self.x),
            frozenset(mapping[v] for v in self.y),
        )
        object.__setattr__(out, "canonical_key", key)
        return out, mapping


@dataclass(frozen=True, eq=False)
class ReductionLocus:
    """The cut configuration at the far end of a longest X-path.

    ``v`` is the path's second vertex, ``u`` its third; ``ws`` lists the other
    neighbors of ``v`` with the branches that meet X first (``ws[0]`` is the
    path's endpoint).  ``split`` holds the kept component and its relabelling.
    """

    v: int
    u: int
    ws: tuple[int, ...]
    w_sets: tuple[frozenset[int], ...]
    ell: int
    split: Split


@dataclass(frozen=True)
class TraceStep:
    u: int
    v: int
    ws: tuple[int, ...]
    ell: int
    case: str  # "a" or "b"
    y_prime_has_u: bool
    child_canonical: str

    def to_json_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "w": list(self.ws),
            "ell": self.ell,
            "case": self.case,
            "yPrimeHasU": self.y_prime_has_u,
            "childCanonical": self.child_canonical,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TraceStep":
        return cls(
            u=int(d["u"]),
            v=int(d["v"]),
            ws=tuple(int(w) for w in d["w"]),
            ell=int(d["ell"]),
            case=str(d["case"]),
            y_prime_has_u=bool(d["yPrimeHasU"]),
            child_canonical=str(d["childCanonical"]),
        )


BASE_X_EMPTY = "x-empty"
BASE_K1_FULL = "k1-full"


@dataclass(frozen=True)
class ReductionTrace:
    """Chain of reduction steps ending in a base case, or a failure reason."""

    steps: tuple[TraceStep, ...]
    base: Optional[str]
    failure: Optional[str]

    @property
    def accepted(self) -> bool:
        return self.base is not None

    def to_json_dict(self) -> dict:
        terminal = {"base": self.base} if self.accepted else {"failure": self.failure}
        return {"steps": [s.to_json_dict() for s in self.steps], "terminal": terminal}

    @classmethod
    def from_json_dict(cls, d: dict) -> "ReductionTrace":
        steps = tuple(TraceStep.from_json_dict(s) for s in d.get("steps", ()))
        terminal = d.get("terminal", {})
        base = terminal.get("base")
        failure = terminal.get("failure")
        return cls(steps=steps, base=base, failure=failure)


def _branch_data(tr: Triple, v: int, u: int):
    """Branches of ``tr`` at ``(v, u)`` with the premise check.

    Returns ``(split, branches, ell)`` where branches are ``(w, W)`` pairs
    with the X-meeting ones first, or ``None`` when some branch contains an
    X-vertex deeper than its root (the configuration premise fails).
    """
    split = split_at(tr.tree, v, u)
    meeting = []
    free = []
    for w, wset in split.branches:
        deep = (wset & tr.x) - {w}
        if deep:
            return None
        if w in tr.x:
            meeting.append((w, wset))
        else:
            free.append((w, wset))
    return split, meeting + free, len(meeting)


def _case_of(tr: Triple, v: int, u: int, branches, ell: int) -> Optional[str]:
    """Which of the two reducible patterns the configuration matches, if any."""
    if u not in tr.y or v not in tr.y:
        return None
    if any(wset & tr.y != {w} for w, wset in branches):
        return None
    if ell == 2 and u in tr.x:
        return "a"
    if ell >= 3:
        return "b"
    return None


def configuration_case(tr: Triple, v: int, u: int) -> Optional[str]:
    """``"a"``/``"b"`` when ``(v, u)`` forms a valid reduction configuration
    whose structural side conditions hold, else ``None``.
    """
    data = _branch_data(tr, v, u)
    if data is None:
        return None
    _, branches, ell = data
    if ell == 0:
        return None
    return _case_of(tr, v, u, branches, ell)


def find_locus(tr: Triple) -> ReductionLocus:
    """Locate the reduction configuration at the far end of a longest X-path.

    Requires at least three constrained vertices.  The longest-path choice
    guarantees that no branch hides a constrained vertex below its root; this
    is re-checked defensively.
    """
    if len(tr.x) < 3:
        raise ValueError("locus search needs at least three constrained vertices")
    path = longest_x_path(tr.tree, tr.x)
    w1, v, u = path[0], path[1], path[2]
    data = _branch_data(tr, v, u)
    if data is None:
        raise InternalInconsistencyError(
            "longest-path locus has a constrained vertex below a branch root"
        )
    split, branches, ell = data
    ordered = [(w1, next(s for w, s in branches if w == w1))]
    ordered += [(w, s) for w, s in branches if w != w1 and w in tr.x]
    ordered += [(w, s) for w, s in branches if w not in tr.x]
    return ReductionLocus(
        v=v,
        u=u,
        ws=tuple(w for w, _ in ordered),
        w_sets=tuple(s for _, s in ordered),
        ell=ell,
        split=split,
    )


def _child_triple(tr: Triple, loc_split: Split, u: int, with_u: bool) -> Triple:
    """The reduced triple on the kept component, in its own labelling."""
    to_prime = loc_split.to_prime
    x_new = frozenset(to_prime[a] for a in tr.x if a in to_prime and a != u)
    y_new = set(to_prime[a] for a in tr.y if a in to_prime and a != u)
    if with_u:
        y_new.add(to_prime[u])
    return Triple(loc_split.t_prime, x_new, frozenset(y_new))


def _reduce_detailed(tr: Triple, loc: ReductionLocus):
    """Candidate children plus their Y'-includes-u flags, or a failure reason."""
    branches = tuple(zip(loc.ws, loc.w_sets))
    if loc.ell == 1:
        return [], "a single branch meets X (need at least two)"
    if loc.ell == 2:
        if loc.u not in tr.x:
            return [], "two branches meet X but the path vertex u is not in X"
        if loc.u not in tr.y or loc.v not in tr.y:
            return [], "u and v must both lie in Y"
        bad = [w for w, wset in branches if wset & tr.y != {w}]
        if bad:
            return [], f"branch at {bad[0]} must meet Y exactly in its root"
        return [(_child_triple(tr, loc.split, loc.u, False), False)], None
    # three or more branches meet X
    if loc.u not in tr.y or loc.v not in tr.y:
        return [], "u and v must both lie in Y"
    bad = [w for w, wset in branches if wset & tr.y != {w}]
    if bad:
        return [], f"branch at {bad[0]} must meet Y exactly in its root"
    return [
        (_child_triple(tr, loc.split, loc.u, False), False),
        (_child_triple(tr, loc.split, loc.u, True), True),
    ], None


def reduce(tr: Triple, loc: ReductionLocus) -> list[Triple]:
    """Candidate reduced triples at the locus: none when a structural
    condition fails, one in the two-branch pattern, two (differing only in
    whether u stays in Y') in the three-or-more pattern.
    """
    n = tr.tree.n
    if not (0 <= loc.v < n and 0 <= loc.u < n) or not tr.tree.has_edge(loc.v, loc.u):
        raise ValueError("locus does not match the triple")
    covered = set(loc.split.to_prime) | {loc.v}
    for wset in loc.w_sets:
        covered |= wset
    if covered != set(tr.tree.vertices()) or set(loc.ws) != set(tr.tree.neighbors(loc.v)) - {loc.u}:
        raise ValueError("locus does not match the triple")
    children, _ = _reduce_detailed(tr, loc)
    return [child for child, _ in children]


def _base_case(tr: Triple):
    """(verdict, base marker or failure reason) for triples with |X| <= 2."""
    if not tr.x:
        if tr.y:
            return False, "Y must be empty when X is empty"
        return True, BASE_X_EMPTY
    if len(tr.x) == 1:
        if tr.n == 1 and len(tr.y) == 1:
            return True, BASE_K1_FULL
        return False, "a single constrained vertex only works on the one-vertex tree"
    return False, "exactly two constrained vertices never occur in the class"


def _decide(tr: Triple, memo: dict) -> tuple[bool, ReductionTrace]:
    key = tr.canonical_key
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(tr.x) <= 2:
        ok, marker = _base_case(tr)
        trace = (
            ReductionTrace((), marker, None) if ok else ReductionTrace((), None, marker)
        )
        memo[key] = (ok, trace)
        return ok, trace

    loc = find_locus(tr)
    case = "a" if loc.ell == 2 else "b"
    children, failure = _reduce_detailed(tr, loc)
    if failure is not None:
        result = (False, ReductionTrace((), None, failure))
        memo[key] = result
        return result

    accepted = []
    child_failure = None
    for child, has_u in children:
        if not len(child.x) < len(tr.x):
            raise InternalInconsistencyError("reduction did not shrink X")
        child_c, _ = child.canonicalized()
        ok, sub = _decide(child_c, memo)
        if ok:
            accepted.append((has_u, child_c, sub))
        elif child_failure is None:
            child_failure = sub.failure
    if len(accepted) > 1:
        raise InternalInconsistencyError(
            "both Y' candidates were accepted; Y is not unique"
        )
    if accepted:
        has_u, child_c, sub = accepted[0]
        step = TraceStep(
            u=loc.u,
            v=loc.v,
            ws=loc.ws,
            ell=loc.ell,
            case=case,
            y_prime_has_u=has_u,
            child_canonical=child_c.canonical_key,
        )
        result = (True, ReductionTrace((step,) + sub.steps, sub.base, None))
    else:
        result = (False, ReductionTrace((), None, f"no reduced triple is accepted ({child_failure})"))
    memo[key] = result
    return result


def decide_in_S(tr: Triple) -> tuple[bool, ReductionTrace]:
    """Decide membership in the strongly-equal class, with a trace.

    The trace is expressed over the canonically relabelled input (see the
    module docstring) and, when accepting, replays via ``verify_trace``.
    """
    canon, _ = tr.canonicalized()
    return _decide(canon, {})


def verify_trace(tr: Triple, trace: ReductionTrace) -> bool:
    """Re-check a trace as a derivation without re-running any search.

    Accepts exactly the traces that chain valid reduction steps from the
    canonicalized ``tr`` down to a base case.  Rejection traces are not
    derivations and never verify.
    """
    if not trace.accepted:
        return False
    cur, _ = tr.canonicalized()
    for step in trace.steps:
        n = cur.n
        if not (0 <= step.v < n and 0 <= step.u < n) or not cur.tree.has_edge(step.v, step.u):
            return False
        data = _branch_data(cur, step.v, step.u)
        if data is None:
            return False
        split, branches, ell = data
        if ell != step.ell or sorted(step.ws) != sorted(w for w, _ in branches):
            return False
        case = _case_of(cur, step.v, step.u, branches, ell)
        if case != step.case:
            return False
        if case == "a" and step.y_prime_has_u:
            return False
        child = _child_triple(cur, split, step.u, step.y_prime_has_u)
        child_c, _ = child.canonicalized()
        if child_c.canonical_key != step.child_canonical:
            return False
        cur = child_c
    ok, marker = _base_case(cur) if len(cur.x) <= 2 else (False, None)
    return ok and marker == trace.base


def triple_for_tree(t: Tree, x: Optional[Iterable[int]] = None, y: Optional[Iterable[int]] = None) -> Triple:
    """Convenience constructor; defaults to the headline query X = Y = V."""
    xs = frozenset(range(t.n)) if x is None else frozenset(x)
    ys = frozenset(range(t.n)) if y is None else frozenset(y)
    return Triple(t, xs, ys)
