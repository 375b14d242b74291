"""Immutable graphs and trees with the structural queries used everywhere else.

Vertices are always the integers ``0 .. n-1``.  Labels, when present, are
cosmetic metadata and never participate in equality or canonical forms.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


class ParseError(ValueError):
    """Base class for edge-list parsing failures."""


class MalformedLineError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class NotATreeError(ValueError):
    pass


class Graph:
    """A finite simple undirected graph on vertices ``0 .. n-1``.

    Instances are immutable after construction and safe to share between
    concurrent tasks.  Equality and hashing ignore labels.
    """

    __slots__ = ("n", "edges", "labels", "_adj", "_edge_set", "_masks")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Mapping[int, str]] = None,
    ):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        norm: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise VertexRangeError(f"edge ({a},{b}) leaves the vertex range 0..{n - 1}")
            if a == b:
                raise SelfLoopError(f"self-loop at vertex {a}")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            norm.append(e)
            adj[a].append(b)
            adj[b].append(a)
        norm.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        if labels is not None:
            for v in labels:
                if not (0 <= v < n):
                    raise VertexRangeError(f"label for unknown vertex {v}")
            labels = dict(labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_edge_set", frozenset(norm))
        object.__setattr__(self, "_masks", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self._edge_set

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks, built lazily (exhaustive solvers only)."""
        masks = object.__getattribute__(self, "_masks")
        if masks is None:
            masks = tuple(sum(1 << u for u in nbrs) for nbrs in self._adj)
            object.__setattr__(self, "_masks", masks)
        return masks

    def label_of(self, v: int) -> Optional[str]:
        return None if self.labels is None else self.labels.get(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={len(self.edges)})"


def _is_connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    todo = deque([0])
    count = 1
    while todo:
        v = todo.popleft()
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = 1
                count += 1
                todo.append(u)
    return count == g.n


def is_tree(g: Graph) -> bool:
    """True iff ``g`` is connected and acyclic."""
    return len(g.edges) == g.n - 1 and _is_connected(g)


class Tree(Graph):
    """A graph certified connected and acyclic at construction time."""

    __slots__ = ()

    def __init__(self, n, edges=(), labels=None):
        super().__init__(n, edges, labels)
        if len(self.edges) != self.n - 1 or not _is_connected(self):
            raise NotATreeError(f"graph on {self.n} vertices with {len(self.edges)} edges is not a tree")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        return cls(g.n, g.edges, g.labels)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first meaningful line is ``n m``; the next ``m`` lines are ``a b``
    edges with ``0 <= a, b < n`` and ``a != b``.  Blank lines and lines
    starting with ``#`` are skipped.
    """
    lines = [
        (i + 1, s.strip())
        for i, s in enumerate(text.splitlines())
        if s.strip() and not s.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedLineError("empty input, expected a header line 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise MalformedLineError(f"line {lineno}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLineError(f"line {lineno}: non-integer header {header!r}") from None
    if n < 1 or m < 0:
        raise MalformedLineError(f"line {lineno}: invalid sizes n={n}, m={m}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedLineError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"line {lineno}: expected 'a b', got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"line {lineno}: non-integer edge {line!r}") from None
        if not (0 <= a < n and 0 <= b < n):
            raise VertexRangeError(f"line {lineno}: edge ({a},{b}) leaves the vertex range 0..{n - 1}")
        if a == b:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {a}")
        edges.append((a, b))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(out) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """Plain structural DOT export, no layout or styling decisions."""
    out = [f"graph {name} {{"]
    for v in g.vertices():
        label = g.label_of(v)
        out.append(f'  {v} [label="{label}"];' if label is not None else f"  {v};")
    for a, b in g.edges:
        out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True, eq=False)
class Split:
    """Result of deleting ``v`` and keeping the side that contains ``u``.

    ``t_prime`` is the component of ``T - v`` containing ``u``, relabelled
    order-preservingly to ``0 .. n'-1``; ``to_prime`` maps old identifiers to
    the new ones.  ``branches`` lists every other neighbor ``w`` of ``v``
    together with the vertex set (original identifiers) of its component,
    ordered by ``w``.
    """

    t_prime: Tree
    to_prime: dict[int, int]
    branches: tuple[tuple[int, frozenset[int]], ...]


def split_at(t: Tree, v: int, u: int) -> Split:
    """Split ``t`` at ``v`` towards ``u``.

    The returned parts partition ``V(t) - {v}``: the ``u``-side component and
    one branch per remaining neighbor of ``v``.
    """
    if not (0 <= v < t.n and 0 <= u < t.n):
        raise ValueError(f"vertices ({v},{u}) out of range")
    if not t.has_edge(v, u):
        raise ValueError(f"{u} is not a neighbor of {v}")

    def component(start: int) -> list[int]:
        seen = {start, v}
        todo = [start]
        out = [start]
        while todo:
            a = todo.pop()
            for b in t.neighbors(a):
                if b not in seen:
                    seen.add(b)
                    out.append(b)
                    todo.append(b)
        return out

    prime_old = sorted(component(u))
    to_prime = {old: new for new, old in enumerate(prime_old)}
    prime_edges = [
        (to_prime[a], to_prime[b]) for a, b in t.edges if a in to_prime and b in to_prime
    ]
    prime_labels = None
    if t.labels:
        prime_labels = {to_prime[a]: s for a, s in t.labels.items() if a in to_prime}
    t_prime = Tree(len(prime_old), prime_edges, prime_labels)
    branches = tuple(
        (w, frozenset(component(w))) for w in t.neighbors(v) if w != u
    )
    return Split(t_prime=t_prime, to_prime=to_prime, branches=branches)


def _centers(t: Tree) -> list[int]:
    """The one or two middle vertices of the tree (leaf peeling)."""
    if t.n <= 2:
        return list(t.vertices())
    degree = [t.degree(v) for v in t.vertices()]
    layer = [v for v in t.vertices() if degree[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in t.neighbors(v):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
            degree[v] = 0
        layer = nxt
    return sorted(layer)


def _rooted_encoding(t: Tree, colors: Mapping[int, int], root: int) -> dict[int, str]:
    """Bottom-up subtree encodings; equal strings iff color-isomorphic subtrees."""
    parent = {root: root}
    order = [root]
    todo = [root]
    while todo:
        v = todo.pop()
        for u in t.neighbors(v):
            if u not in parent:
                parent[u] = v
                order.append(u)
                todo.append(u)
    enc: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(enc[u] for u in t.neighbors(v) if parent[u] == v and u != v)
        enc[v] = "(" + str(colors[v]) + "".join(kids) + ")"
    return enc


def canonical_relabel(t: Tree, colors: Optional[Mapping[int, int]] = None) -> tuple[str, dict[int, int]]:
    """Canonical form of a colored tree plus a relabelling that realizes it.

    Two colored trees receive the same string exactly when some isomorphism
    maps one onto the other preserving colors.  The returned map sends old
    identifiers to the canonical ``0 .. n-1`` labelling; applying it to two
    color-isomorphic trees yields identical labelled trees.
    """
    if colors is None:
        colors = {v: 0 for v in t.vertices()}
    else:
        for v in t.vertices():
            if v not in colors:
                raise ValueError(f"color missing for vertex {v}")
    best: Optional[tuple[str, int, dict[int, str]]] = None
    for c in _centers(t):
        enc = _rooted_encoding(t, colors, c)
        if best is None or enc[c] < best[0]:
            best = (enc[c], c, enc)
    key, root, enc = best
    mapping: dict[int, int] = {}
    parent = {root: root}
    todo = [root]
    while todo:
        v = todo.pop()
        mapping[v] = len(mapping)
        kids = sorted(
            (u for u in t.neighbors(v) if u not in parent),
            key=lambda u: (enc[u], u),
        )
        for u in reversed(kids):
            parent[u] = v
            todo.append(u)
    return key, mapping


def canonical_form(t: Tree, colors: Optional[Mapping[int, int]] = None) -> str:
    """Canonical string of a colored tree, invariant under relabelling."""
    key, _ = canonical_relabel(t, colors)
    return key


def tree_path(t: Tree, a: int, b: int) -> list[int]:
    """The unique path from ``a`` to ``b``."""
    parent = {a: a}
    todo = deque([a])
    while todo:
        v = todo.popleft()
        if v == b:
            break
        for u in t.neighbors(v):
            if u not in parent:
                parent[u] = v
                todo.append(u)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def longest_x_path(t: Tree, x: Iterable[int]) -> list[int]:
    """A maximum-length path whose two endpoints both lie in ``x``.

    Ties break to the lexicographically smallest vertex sequence, so the
    result is deterministic; any maximum-length choice would do for the
    reductions built on top of this.
    """
    xs = sorted(set(x))
    for a in xs:
        if not (0 <= a < t.n):
            raise ValueError(f"vertex {a} out of range")
    if len(xs) < 2:
        raise ValueError("need at least two marked vertices")
    best_key = None
    best_path = None
    for a in xs:
        parent = {a: a}
        dist = {a: 0}
        todo = deque([a])
        while todo:
            v = todo.popleft()
            for u in t.neighbors(v):
                if u not in parent:
                    parent[u] = v
                    dist[u] = dist[v] + 1
                    todo.append(u)
        for b in xs:
            if b == a:
                continue
            path = [b]
            while path[-1] != a:
                path.append(parent[path[-1]])
            path.reverse()
            key = (-dist[b], tuple(path))
            if best_key is None or key < best_key:
                best_key = key
                best_path = path
    return best_path
