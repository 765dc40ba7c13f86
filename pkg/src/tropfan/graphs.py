"""Simple labeled graphs, edge subsets, rank, and multipartiteness tests.

Vertices carry integer labels (the stability graphs used elsewhere live on
labels 2..n).  All orderings are canonical: labels ascending, edges sorted
lexicographically with the smaller endpoint first.  Every value here is
immutable and hashable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional


Edge = tuple[int, int]


def _norm_edge(a: int, b: int) -> Edge:
    if a == b:
        raise ValueError(f"loop edge {a}-{b} not allowed")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with a fixed, totally ordered label set."""

    labels: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if list(self.labels) != sorted(set(self.labels)):
            raise ValueError("labels must be strictly ascending")
        lab = set(self.labels)
        seen = set()
        for e in self.edges:
            a, b = e
            if a >= b:
                raise ValueError(f"edge {e} not stored smaller-first")
            if a not in lab or b not in lab:
                raise ValueError(f"edge {e} has endpoint outside label set")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted lexicographically")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], labels: Iterable[int] = ()) -> "Graph":
        es = sorted({_norm_edge(a, b) for a, b in edges})
        labs = set(labels)
        for a, b in es:
            labs.add(a)
            labs.add(b)
        return cls(tuple(sorted(labs)), tuple(es))

    @classmethod
    def complete(cls, labels: Iterable[int]) -> "Graph":
        labs = tuple(sorted(set(labels)))
        return cls(labs, tuple(combinations(labs, 2)))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.labels}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    def has_edge(self, a: int, b: int) -> bool:
        return _norm_edge(a, b) in self.edge_index

    def full_edge_set(self) -> "EdgeSet":
        return EdgeSet(self, (1 << len(self.edges)) - 1)

    def empty_edge_set(self) -> "EdgeSet":
        return EdgeSet(self, 0)

    def edge_set(self, edges: Iterable[Edge]) -> "EdgeSet":
        return EdgeSet.from_edges(self, edges)

    def is_connected(self) -> bool:
        """Connectivity over the whole label set, isolated vertices included."""
        if not self.labels:
            return True
        seen = {self.labels[0]}
        stack = [self.labels[0]]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.labels)

    def to_dot(self) -> str:
        lines = ["graph {"]
        covered = {v for e in self.edges for v in e}
        for v in self.labels:
            if v not in covered:
                lines.append(f'  "{v}";')
        for a, b in self.edges:
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EdgeSet:
    """A subset of a graph's edges, bit-indexed by the canonical edge order."""

    graph: Graph
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << len(self.graph.edges)):
            raise ValueError("mask out of range for parent graph")

    @classmethod
    def from_edges(cls, graph: Graph, edges: Iterable[Edge]) -> "EdgeSet":
        mask = 0
        idx = graph.edge_index
        for a, b in edges:
            e = _norm_edge(a, b)
            if e not in idx:
                raise ValueError(f"edge {e} not in parent graph")
            mask |= 1 << idx[e]
        return cls(graph, mask)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(e for i, e in enumerate(self.graph.edges) if self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, edge: Edge) -> bool:
        e = _norm_edge(*edge)
        i = self.graph.edge_index.get(e)
        return i is not None and bool(self.mask >> i & 1)

    def __le__(self, other: "EdgeSet") -> bool:
        self._check_parent(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "EdgeSet") -> bool:
        return self <= other and self.mask != other.mask

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_parent(other)
        return EdgeSet(self.graph, self.mask | other.mask)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_parent(other)
        return EdgeSet(self.graph, self.mask & other.mask)

    def __sub__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_parent(other)
        return EdgeSet(self.graph, self.mask & ~other.mask)

    def _check_parent(self, other: "EdgeSet"):
        if self.graph != other.graph:
            raise ValueError("edge sets have different parent graphs")


_EDGE_LINE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")
_VERTEX_LINE = re.compile(r"^\s*vertices\s*:\s*(.*)$")


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: one "i-j" per line, plus optional "vertices:" lines
    declaring isolated vertices."""
    edges: list[Edge] = []
    labels: set[int] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        m = _VERTEX_LINE.match(line)
        if m:
            try:
                labels.update(int(t) for t in m.group(1).split())
            except ValueError:
                raise ValueError(f"line {lineno}: malformed vertices line: {line!r}")
            continue
        m = _EDGE_LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: malformed edge line: {line!r}")
        a, b = int(m.group(1)), int(m.group(2))
        if a == b:
            raise ValueError(f"line {lineno}: loop edge {a}-{b}")
        e = _norm_edge(a, b)
        if e in edges:
            raise ValueError(f"line {lineno}: duplicate edge {a}-{b}")
        edges.append(e)
    return Graph.from_edges(edges, labels)


def _vertex_partition(g: Graph, s: EdgeSet) -> dict[int, int]:
    """Union-find roots for the non-isolated vertices of ``s``."""
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, e in enumerate(g.edges):
        if not s.mask >> i & 1:
            continue
        a, b = e
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return {v: find(v) for v in parent}


def components(g: Graph, s: EdgeSet) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components of ``s``, non-isolated vertices only,
    sorted by smallest member."""
    roots = _vertex_partition(g, s)
    blocks: dict[int, list[int]] = {}
    for v, r in roots.items():
        blocks.setdefault(r, []).append(v)
    return sorted(tuple(sorted(b)) for b in blocks.values())


def graph_rank(g: Graph, s: EdgeSet) -> int:
    """Number of non-isolated vertices of ``s`` minus its number of components."""
    if s.graph != g:
        raise ValueError("edge set does not belong to this graph")
    blocks = components(g, s)
    return sum(len(b) for b in blocks) - len(blocks)


def spanning_forest(g: Graph, s: EdgeSet) -> EdgeSet:
    """Greedy maximal acyclic subset of ``s`` in canonical edge order."""
    if s.graph != g:
        raise ValueError("edge set does not belong to this graph")
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    mask = 0
    for i, (a, b) in enumerate(g.edges):
        if not s.mask >> i & 1:
            continue
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            mask |= 1 << i
    return EdgeSet(g, mask)


def is_acyclic(g: Graph, s: EdgeSet) -> bool:
    return spanning_forest(g, s).mask == s.mask


def is_complete_multipartite(g: Graph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Decide complete multipartiteness.

    A graph is complete multipartite exactly when no 3 vertices induce exactly
    one edge.  Returns ``(True, None)`` or ``(False, witness_triple)`` with the
    first offending triple in label order.
    """
    for triple in combinations(g.labels, 3):
        count = sum(g.has_edge(a, b) for a, b in combinations(triple, 2))
        if count == 1:
            return False, triple
    return True, None


def induced_subgraph(g: Graph, labels: Iterable[int]) -> Graph:
    labs = sorted(set(labels))
    if not set(labs) <= set(g.labels):
        raise ValueError("labels not contained in graph")
    keep = set(labs)
    edges = tuple(e for e in g.edges if e[0] in keep and e[1] in keep)
    return Graph(tuple(labs), edges)


def complement(g: Graph) -> Graph:
    edges = tuple(e for e in combinations(g.labels, 2) if e not in g.edge_index)
    return Graph(g.labels, edges)
