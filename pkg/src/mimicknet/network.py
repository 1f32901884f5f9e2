"""Data model for k-terminal networks with exact rational edge costs.

Vertices are dense ids ``0..n-1``.  Edges keep their position in the edge
list as a stable id, so column ``j`` of any incidence matrix built from a
network always refers to edge ``j``.  All costs are ``fractions.Fraction``;
no floating point enters any cut value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    InvalidEdgeError,
    InvalidParameterError,
    InvalidTerminalCountError,
    TerminalCollisionError,
)


class Edge(NamedTuple):
    u: int
    v: int
    cost: Fraction


def _as_cost(value) -> Fraction:
    cost = Fraction(value)
    if cost <= 0:
        raise InvalidParameterError(f"edge cost must be positive, got {cost}")
    return cost


class Network:
    """Undirected multigraph (parallel edges and self-loops allowed) with
    an ordered tuple of distinct terminal vertices.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("n", "edges", "terminals", "cost_denominator")

    def __init__(self, n: int, edges: Iterable[tuple], terminals: Sequence[int]):
        if n <= 0:
            raise InvalidParameterError(f"need at least one vertex, got n={n}")
        edge_list = []
        for u, v, cost in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdgeError(f"edge ({u},{v}) out of range for n={n}")
            edge_list.append(Edge(u, v, _as_cost(cost)))
        terms = tuple(terminals)
        if len(set(terms)) != len(terms):
            raise InvalidTerminalCountError(f"terminals not distinct: {terms}")
        if any(not (0 <= t < n) for t in terms):
            raise InvalidTerminalCountError(f"terminal out of range: {terms}")
        # terminals may be empty for derived graphs (duals); every operation
        # that needs terminals checks k itself.
        self.n = n
        self.edges = tuple(edge_list)
        self.terminals = terms
        self.cost_denominator = math.lcm(*(e.cost.denominator for e in edge_list)) if edge_list else 1

    @property
    def k(self) -> int:
        return len(self.terminals)

    @property
    def m(self) -> int:
        return len(self.edges)

    def terminal_index(self, vertex: int) -> int | None:
        try:
            return self.terminals.index(vertex)
        except ValueError:
            return None

    def total_cost(self) -> Fraction:
        return sum((e.cost for e in self.edges), Fraction(0))

    def with_costs(self, costs: Sequence[Fraction]) -> "Network":
        """Same graph, new edge costs (edge ids preserved)."""
        if len(costs) != self.m:
            raise InvalidParameterError("cost vector length mismatch")
        return Network(self.n, [(e.u, e.v, c) for e, c in zip(self.edges, costs)], self.terminals)

    def adjacency(self, removed_edges: frozenset[int] | set[int] = frozenset()) -> list[list[tuple[int, int]]]:
        """Adjacency lists of (neighbor, edge id), skipping removed edges."""
        for eid in removed_edges:
            if not (0 <= eid < self.m):
                raise InvalidEdgeError(f"unknown edge id {eid}")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, e in enumerate(self.edges):
            if eid in removed_edges:
                continue
            adj[e.u].append((e.v, eid))
            if e.u != e.v:
                adj[e.v].append((e.u, eid))
        return adj

    def __repr__(self) -> str:
        return f"Network(n={self.n}, m={self.m}, k={self.k})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (self.n, self.edges, self.terminals) == (other.n, other.edges, other.terminals)

    def __hash__(self):
        return hash((self.n, self.edges, self.terminals))


@dataclass(frozen=True)
class Bipartition:
    """Canonical nontrivial split of the terminal set.

    ``mask`` has bit ``i`` set iff terminal ``i`` lies on the S side.  Bit 0
    is always clear (terminal 0 lies on the complement side), which fixes one
    representative per unordered split.
    """

    k: int
    mask: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidTerminalCountError(f"need k >= 2 terminals, got {self.k}")
        full = (1 << self.k) - 1
        if not (0 < self.mask < full):
            raise InvalidParameterError(f"trivial bipartition mask {self.mask:#b}")
        if self.mask & 1:
            raise InvalidParameterError("non-canonical mask: bit 0 must be clear")

    @classmethod
    def from_mask(cls, k: int, mask: int) -> "Bipartition":
        """Canonicalize an arbitrary nontrivial terminal-index mask."""
        full = (1 << k) - 1
        if not (0 < mask < full):
            raise InvalidParameterError(f"trivial bipartition mask {mask:#b}")
        if mask & 1:
            mask ^= full
        return cls(k, mask)

    @classmethod
    def from_indices(cls, k: int, indices: Iterable[int]) -> "Bipartition":
        mask = 0
        for i in indices:
            if not (0 <= i < k):
                raise InvalidParameterError(f"terminal index {i} out of range")
            mask |= 1 << i
        return cls.from_mask(k, mask)

    @property
    def row_index(self) -> int:
        """Position in the canonical enumeration (ascending even masks)."""
        return self.mask // 2 - 1

    def side_indices(self) -> tuple[int, ...]:
        """Terminal indices on the S side (never contains index 0)."""
        return tuple(i for i in range(self.k) if self.mask >> i & 1)

    def coside_indices(self) -> tuple[int, ...]:
        """Terminal indices on the complement side (contains index 0)."""
        return tuple(i for i in range(self.k) if not self.mask >> i & 1)

    def side_vertices(self, net: Network) -> tuple[int, ...]:
        return tuple(net.terminals[i] for i in self.side_indices())

    def coside_vertices(self, net: Network) -> tuple[int, ...]:
        return tuple(net.terminals[i] for i in self.coside_indices())


def enumerate_bipartitions(k: int) -> list[Bipartition]:
    """All 2**(k-1) - 1 canonical bipartitions, ascending by mask.

    This order is the row order of every incidence matrix and terminal-cuts
    store built from a k-terminal network.
    """
    if k < 2:
        raise InvalidTerminalCountError(f"need k >= 2 terminals, got {k}")
    return [Bipartition(k, mask) for mask in range(2, (1 << k) - 1, 2)]


def connected_components(net: Network, removed_edges: frozenset[int] | set[int] = frozenset()) -> list[frozenset[int]]:
    """Vertex sets of the maximal connected pieces of ``net`` minus the
    given edge ids.  Every vertex appears (isolated ones as singletons);
    components are sorted by smallest member."""
    adj = net.adjacency(removed_edges)
    seen = [False] * net.n
    comps: list[frozenset[int]] = []
    for start in range(net.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=min)
    return comps


class ContractionMap:
    """Partition of the vertex set into contraction classes.

    Class ids are dense, ordered by smallest member vertex.  At most one
    terminal per class; the class of a terminal becomes that terminal after
    contraction.
    """

    __slots__ = ("class_of", "classes", "terminal_of_class")

    def __init__(self, net: Network, partition: Iterable[Iterable[int]]):
        classes = sorted((tuple(sorted(set(part))) for part in partition), key=lambda c: c[0])
        class_of = [-1] * net.n
        for cid, members in enumerate(classes):
            for v in members:
                if not (0 <= v < net.n):
                    raise InvalidParameterError(f"vertex {v} out of range")
                if class_of[v] != -1:
                    raise InvalidParameterError(f"vertex {v} in two classes")
                class_of[v] = cid
        if any(c == -1 for c in class_of):
            missing = [v for v, c in enumerate(class_of) if c == -1]
            raise InvalidParameterError(f"partition does not cover vertices {missing}")
        term_of_class: list[int | None] = [None] * len(classes)
        for t in net.terminals:
            cid = class_of[t]
            if term_of_class[cid] is not None:
                raise TerminalCollisionError(
                    f"class {cid} holds terminals {term_of_class[cid]} and {t}"
                )
            term_of_class[cid] = t
        self.class_of = tuple(class_of)
        self.classes = tuple(classes)
        self.terminal_of_class = tuple(term_of_class)

    @classmethod
    def identity(cls, net: Network) -> "ContractionMap":
        return cls(net, [[v] for v in range(net.n)])

    def __len__(self) -> int:
        return len(self.classes)


def contract(net: Network, cmap: ContractionMap) -> Network:
    """Contract every class to a single vertex.

    Crossing edges between a class pair merge into one edge whose cost is
    the exact sum of the originals; edges internal to a class disappear.
    Terminal order is preserved.
    """
    merged: dict[tuple[int, int], Fraction] = {}
    for e in net.edges:
        a, b = cmap.class_of[e.u], cmap.class_of[e.v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        merged[key] = merged.get(key, Fraction(0)) + e.cost
    new_edges = [(a, b, cost) for (a, b), cost in merged.items()]
    new_terminals = [cmap.class_of[t] for t in net.terminals]
    return Network(len(cmap), new_edges, new_terminals)
