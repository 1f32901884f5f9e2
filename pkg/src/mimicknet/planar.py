"""Plane multigraph embeddings, dual graphs, and cut/circuit duality checks.

An embedding is a rotation system: every edge ``e`` contributes darts
``2e`` (at its first endpoint) and ``2e+1`` (at its second), and each
vertex lists its incident darts in cyclic order.  Faces are the orbits of
``dart -> successor-in-rotation(reverse(dart))``; the validator requires
genus zero (Euler formula per connected component).

The dual keeps the primal's edge ids and dart ids: dual vertex = primal
face, dual rotation at a face = that face's dart orbit.  Taking the dual
twice therefore reproduces the primal rotation system exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidEdgeError, InvalidEmbeddingError, NotACircuitError
from .network import Network, connected_components


class PlaneEmbedding:
    """Immutable rotation-system embedding of a network, validated genus 0."""

    __slots__ = ("net", "rotations", "rotation_next", "faces", "face_of_dart")

    def __init__(self, net: Network, rotations: Sequence[Sequence[int]]):
        if len(rotations) != net.n:
            raise InvalidEmbeddingError(f"need {net.n} rotation lists, got {len(rotations)}")
        n_darts = 2 * net.m
        seen = [False] * n_darts
        for v, rot in enumerate(rotations):
            for d in rot:
                if not (0 <= d < n_darts):
                    raise InvalidEmbeddingError(f"dart {d} out of range")
                if seen[d]:
                    raise InvalidEmbeddingError(f"dart {d} appears twice")
                if dart_tail(net, d) != v:
                    raise InvalidEmbeddingError(
                        f"dart {d} of edge {d >> 1} listed at vertex {v}, tail is {dart_tail(net, d)}"
                    )
                seen[d] = True
        if not all(seen):
            missing = [d for d, s in enumerate(seen) if not s]
            raise InvalidEmbeddingError(f"darts missing from rotations: {missing[:8]}")

        self.net = net
        self.rotations = tuple(tuple(rot) for rot in rotations)
        nxt = [0] * n_darts
        for rot in self.rotations:
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % len(rot)]
        self.rotation_next = tuple(nxt)
        self.faces = self._trace_faces()
        face_of = [-1] * n_darts
        for f, orbit in enumerate(self.faces):
            for d in orbit:
                face_of[d] = f
        self.face_of_dart = tuple(face_of)
        self._check_genus()

    def _trace_faces(self) -> tuple[tuple[int, ...], ...]:
        n_darts = 2 * self.net.m
        visited = [False] * n_darts
        orbits = []
        for start in range(n_darts):
            if visited[start]:
                continue
            orbit = []
            d = start
            while not visited[d]:
                visited[d] = True
                orbit.append(d)
                d = self.rotation_next[d ^ 1]
            orbits.append(tuple(orbit))
        return tuple(orbits)

    def _check_genus(self) -> None:
        comps = connected_components(self.net)
        comp_of = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        v_count = [len(c) for c in comps]
        e_count = [0] * len(comps)
        f_count = [0] * len(comps)
        for e in self.net.edges:
            e_count[comp_of[e.u]] += 1
        for orbit in self.faces:
            f_count[comp_of[dart_tail(self.net, orbit[0])]] += 1
        for ci in range(len(comps)):
            faces = f_count[ci] if e_count[ci] else 1
            if v_count[ci] - e_count[ci] + faces != 2:
                raise InvalidEmbeddingError(
                    f"component {ci} is not genus 0: V={v_count[ci]} E={e_count[ci]} F={faces}"
                )

    @property
    def face_count(self) -> int:
        """Face count satisfying |V| - |E| + |F| = 1 + |CC| (outer faces of
        separate components merged)."""
        return 1 + len(connected_components(self.net)) - self.net.n + self.net.m

    def __repr__(self) -> str:
        return f"PlaneEmbedding({self.net!r}, faces={self.face_count})"


def dart_tail(net: Network, dart: int) -> int:
    e = net.edges[dart >> 1]
    return e.u if dart & 1 == 0 else e.v


def dart_head(net: Network, dart: int) -> int:
    e = net.edges[dart >> 1]
    return e.v if dart & 1 == 0 else e.u


@dataclass(frozen=True, eq=False)
class DualGraph:
    """Dual of a connected plane multigraph.

    Edge ids are shared: primal edge ``e`` pairs with dual edge ``e`` (same
    cost), and dart ids carry over unchanged.
    """

    primal: PlaneEmbedding
    dual: Network
    embedding: PlaneEmbedding
    face_of_dart: tuple[int, ...]


def build_dual(emb: PlaneEmbedding) -> DualGraph:
    if len(connected_components(emb.net)) != 1:
        raise InvalidEmbeddingError("dual construction needs a connected primal")
    face_of = emb.face_of_dart
    n_faces = max(len(emb.faces), 1)
    dual_edges = [
        (face_of[2 * e], face_of[2 * e + 1], emb.net.edges[e].cost) for e in range(emb.net.m)
    ]
    dual_net = Network(n_faces, dual_edges, terminals=())
    dual_rotations = [tuple(orbit) for orbit in emb.faces]
    if not dual_rotations:
        dual_rotations = [()]
    dual_emb = PlaneEmbedding(dual_net, dual_rotations)
    return DualGraph(emb, dual_net, dual_emb, face_of)


def faces_of_subgraph(emb: PlaneEmbedding, edge_subset: Iterable[int]) -> int:
    """Face count of the plane subgraph on the given edge ids (inherited
    rotations, untouched vertices dropped, outer faces of the subgraph's
    components merged).  Cross-checked against the Euler formula per
    component; the empty subset reports one face by convention."""
    subset = frozenset(edge_subset)
    for eid in subset:
        if not (0 <= eid < emb.net.m):
            raise InvalidEdgeError(f"unknown edge id {eid}")
    if not subset:
        return 1

    kept = lambda d: (d >> 1) in subset
    sub_rot_next: dict[int, int] = {}
    touched: list[int] = []
    for v, rot in enumerate(emb.rotations):
        sub = [d for d in rot if kept(d)]
        if sub:
            touched.append(v)
            for i, d in enumerate(sub):
                sub_rot_next[d] = sub[(i + 1) % len(sub)]

    visited: set[int] = set()
    orbits = []
    for e in sorted(subset):
        for start in (2 * e, 2 * e + 1):
            if start in visited:
                continue
            orbit = []
            d = start
            while d not in visited:
                visited.add(d)
                orbit.append(d)
                d = sub_rot_next[d ^ 1]
            orbits.append(orbit)

    comp_of = _subgraph_components(emb.net, subset, touched)
    n_comps = max(comp_of.values()) + 1
    v_count = [0] * n_comps
    e_count = [0] * n_comps
    f_count = [0] * n_comps
    for v in touched:
        v_count[comp_of[v]] += 1
    for eid in subset:
        e_count[comp_of[emb.net.edges[eid].u]] += 1
    for orbit in orbits:
        f_count[comp_of[dart_tail(emb.net, orbit[0])]] += 1
    for ci in range(n_comps):
        if v_count[ci] - e_count[ci] + f_count[ci] != 2:
            raise InvalidEmbeddingError(
                "face tracing disagrees with Euler formula "
                f"(component {ci}: V={v_count[ci]} E={e_count[ci]} F={f_count[ci]})"
            )
    return len(orbits) - (n_comps - 1)


def _subgraph_components(net: Network, subset: frozenset[int], touched: Sequence[int]) -> dict[int, int]:
    adj: dict[int, list[int]] = {v: [] for v in touched}
    for eid in subset:
        e = net.edges[eid]
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    comp_of: dict[int, int] = {}
    ci = 0
    for start in touched:
        if start in comp_of:
            continue
        stack = [start]
        comp_of[start] = ci
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp_of:
                    comp_of[w] = ci
                    stack.append(w)
        ci += 1
    return comp_of


@dataclass(frozen=True)
class CircuitReport:
    edge_set: frozenset[int]
    vertex_degrees: dict[int, int]
    meeting_vertices: frozenset[int]
    face_count: int
    component_count: int


def dual_circuit_check(dual: DualGraph, primal_cutset: Iterable[int]) -> CircuitReport:
    """Check that the dual edges of a minimum cutset form a circuit (every
    incident dual vertex has degree >= 2); degree-1 vertices signal a
    non-minimal cutset or an embedding bug."""
    subset = frozenset(primal_cutset)
    for eid in subset:
        if not (0 <= eid < dual.dual.m):
            raise InvalidEdgeError(f"unknown edge id {eid}")
    degrees: dict[int, int] = {}
    for eid in subset:
        e = dual.dual.edges[eid]
        degrees[e.u] = degrees.get(e.u, 0) + 1
        degrees[e.v] = degrees.get(e.v, 0) + 1
    bad = [v for v, d in degrees.items() if d < 2]
    if bad:
        raise NotACircuitError(f"dual vertices of degree < 2: {sorted(bad)}")
    meeting = frozenset(v for v, d in degrees.items() if d > 2)
    face_count = faces_of_subgraph(dual.embedding, subset) if subset else 1
    comp_of = _subgraph_components(dual.dual, subset, sorted(degrees)) if subset else {}
    n_comps = (max(comp_of.values()) + 1) if comp_of else 0
    return CircuitReport(subset, degrees, meeting, face_count, n_comps)


@dataclass(frozen=True)
class BoundReport:
    k: int
    cc_single: tuple[int, ...]
    cc_union: int | None
    meeting_vertices: int | None
    single_ok: bool
    union_ok: bool | None
    meeting_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.single_ok and self.union_ok is not False and self.meeting_ok is not False


def check_component_bounds(
    emb: PlaneEmbedding,
    dual: DualGraph,
    cutset_s: Iterable[int],
    cutset_t: Iterable[int] | None = None,
) -> BoundReport:
    """Structural bounds for one or two minimum cutsets: at most k components
    after removing one cutset; at most cc(S) + cc(T) + k after removing both;
    at most 6k meeting vertices in the dual subgraph of the union."""
    k = emb.net.k
    es = frozenset(cutset_s)
    singles = [len(connected_components(emb.net, es))]
    cc_union = meeting = None
    union_ok = meeting_ok = None
    if cutset_t is not None:
        et = frozenset(cutset_t)
        singles.append(len(connected_components(emb.net, et)))
        union = es | et
        cc_union = len(connected_components(emb.net, union))
        union_ok = cc_union <= singles[0] + singles[1] + k
        degrees: dict[int, int] = {}
        for eid in union:
            e = dual.dual.edges[eid]
            degrees[e.u] = degrees.get(e.u, 0) + 1
            degrees[e.v] = degrees.get(e.v, 0) + 1
        meeting = sum(1 for d in degrees.values() if d > 2)
        meeting_ok = meeting <= 6 * k
    return BoundReport(
        k=k,
        cc_single=tuple(singles),
        cc_union=cc_union,
        meeting_vertices=meeting,
        single_ok=all(c <= k for c in singles),
        union_ok=union_ok,
        meeting_ok=meeting_ok,
    )
