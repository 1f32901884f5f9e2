"""Mimicking-network construction and verification.

Two constructions:

* component contraction: remove the union of all canonical minimum
  cutsets, contract each surviving connected component (the output is a
  minor of the input);
* signature merge: vertices that lie on the same side of every canonical
  minimum cut are merged, whether or not they are adjacent.

Both preserve every terminal bipartition cut value exactly; ``verify`` and
``verify_generalized`` check that by recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidPairError, InvalidTerminalCountError
from .mincut import CutResult, min_cut_between, min_separating_cut
from .network import (
    Bipartition,
    ContractionMap,
    Network,
    connected_components,
    contract,
    enumerate_bipartitions,
)


def terminal_cuts(net: Network) -> list[CutResult]:
    """Canonical minimum cut of every bipartition, in enumeration order."""
    if net.k < 2:
        raise InvalidTerminalCountError(f"need k >= 2 terminals, got {net.k}")
    return [min_separating_cut(net, bp) for bp in enumerate_bipartitions(net.k)]


def terminal_cut_union(net: Network) -> frozenset[int]:
    """Union of the canonical minimum cutsets over all bipartitions."""
    union: set[int] = set()
    for cut in terminal_cuts(net):
        union |= cut.cutset
    return frozenset(union)


@dataclass(frozen=True)
class MimickingStats:
    vertices: int
    edges: int
    class_count: int
    dropped_classes: int
    size_bound: int
    within_size_bound: bool


@dataclass(frozen=True)
class MimickingResult:
    network: Network
    construction: str
    contraction_map: ContractionMap
    cut_union: frozenset[int]
    stats: MimickingStats


def _size_bound(k: int) -> int:
    # telemetry only: constant-1 version of the k^2 * 4^k face bound
    return k * k * (1 << (2 * k))


def _drop_isolated_nonterminals(net: Network) -> tuple[Network, int]:
    """Remove vertices with no incident edge that are not terminals
    (contracted images of terminal-free components)."""
    touched = set(net.terminals)
    for e in net.edges:
        touched.add(e.u)
        touched.add(e.v)
    if len(touched) == net.n:
        return net, 0
    keep = sorted(touched)
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [(relabel[e.u], relabel[e.v], e.cost) for e in net.edges]
    terms = [relabel[t] for t in net.terminals]
    return Network(len(keep), edges, terms), net.n - len(keep)


def build_by_contraction(net: Network) -> MimickingResult:
    """Contract each connected component left after removing the union of
    canonical minimum cutsets.  Classes are connected, so the result is a
    minor of the input; terminal-free components (only possible when the
    input is disconnected) are dropped."""
    union = terminal_cut_union(net)
    classes = connected_components(net, union)
    cmap = ContractionMap(net, classes)
    contracted = contract(net, cmap)
    result, dropped = _drop_isolated_nonterminals(contracted)
    bound = _size_bound(net.k)
    stats = MimickingStats(
        vertices=result.n,
        edges=result.m,
        class_count=len(classes),
        dropped_classes=dropped,
        size_bound=bound,
        within_size_bound=result.n <= bound,
    )
    return MimickingResult(result, "component-contraction", cmap, union, stats)


def build_by_signature(net: Network) -> MimickingResult:
    """Merge vertices whose side pattern agrees across every canonical
    minimum cut.  Classes need not be connected and the output need not be
    a minor; the class count is at most 2**(2**(k-1) - 1)."""
    cuts = terminal_cuts(net)
    groups: dict[tuple[bool, ...], list[int]] = {}
    for v in range(net.n):
        sig = tuple(v in cut.side for cut in cuts)
        groups.setdefault(sig, []).append(v)
    cmap = ContractionMap(net, groups.values())
    contracted = contract(net, cmap)
    union = frozenset().union(*(cut.cutset for cut in cuts))
    bound = _size_bound(net.k)
    stats = MimickingStats(
        vertices=contracted.n,
        edges=contracted.m,
        class_count=len(groups),
        dropped_classes=0,
        size_bound=bound,
        within_size_bound=contracted.n <= bound,
    )
    return MimickingResult(contracted, "signature-merge", cmap, union, stats)


@dataclass(frozen=True)
class VerificationRow:
    bipartition: Bipartition
    value_original: Fraction
    value_candidate: Fraction
    equal: bool


@dataclass(frozen=True)
class GeneralizedRow:
    source_mask: int
    sink_mask: int
    value_original: Fraction
    value_candidate: Fraction
    equal: bool


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[VerificationRow, ...]
    generalized: tuple[GeneralizedRow, ...] | None

    @property
    def all_equal(self) -> bool:
        if any(not r.equal for r in self.rows):
            return False
        if self.generalized is not None and any(not r.equal for r in self.generalized):
            return False
        return True


def _check_pair(orig: Network, candidate: Network) -> None:
    if orig.k != candidate.k:
        raise InvalidPairError(f"terminal counts differ: {orig.k} vs {candidate.k}")
    if orig.k < 2:
        raise InvalidTerminalCountError(f"need k >= 2 terminals, got {orig.k}")


def verify(orig: Network, candidate: Network) -> VerificationReport:
    """Compare every terminal bipartition cut value, exactly."""
    _check_pair(orig, candidate)
    rows = []
    for bp in enumerate_bipartitions(orig.k):
        a = min_separating_cut(orig, bp).value
        b = min_separating_cut(candidate, bp).value
        rows.append(VerificationRow(bp, a, b, a == b))
    return VerificationReport(tuple(rows), None)


def disjoint_terminal_pairs(k: int) -> list[tuple[int, int]]:
    """Unordered pairs of disjoint nonempty terminal-index masks whose union
    is not the whole terminal set (those coincide with plain bipartitions)."""
    full = (1 << k) - 1
    pairs = []
    for s in range(1, full):
        for t in range(s + 1, full + 1):
            if s & t or (s | t) == full:
                continue
            pairs.append((s, t))
    return pairs


def verify_generalized(orig: Network, candidate: Network) -> VerificationReport:
    """Bipartition check plus minimum cuts separating every unordered pair
    of disjoint terminal subsets (remaining terminals unconstrained)."""
    base = verify(orig, candidate)
    gen_rows = []
    for s_mask, t_mask in disjoint_terminal_pairs(orig.k):
        s_idx = [i for i in range(orig.k) if s_mask >> i & 1]
        t_idx = [i for i in range(orig.k) if t_mask >> i & 1]
        a = min_cut_between(orig, s_idx, t_idx).value
        b = min_cut_between(candidate, s_idx, t_idx).value
        gen_rows.append(GeneralizedRow(s_mask, t_mask, a, b, a == b))
    return VerificationReport(base.rows, tuple(gen_rows))
