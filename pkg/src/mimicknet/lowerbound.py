"""Extremal families for mimicking-network size lower bounds.

* Complete bipartite family: one non-terminal per terminal subset of size
  2k/3, edges of cost 1 into the subset and 2 + 1/k outside it.  Each
  subset's minimum cut isolates its own non-terminal with the complement
  terminals, and the incidence matrix has rank >= C(k, 2k/3).

* Grid family: a k x k grid with 2k degree-one terminals on the first
  column and row, heavy (k^4) boundary and attachment edges, unit vertical
  interior edges, and horizontal interior edges of cost 1 - j/k^4.  The
  staircase cuts give an exactly lower-triangular submatrix of the
  incidence matrix, so its rank is at least (k-1)^2.

Experiment runners re-derive the claimed cut structure numerically and
flag any violation; the collision experiment demonstrates that distinct
small cost functions keep distinct cut-value vectors (the injectivity a
2^Omega(k)-word storage bound rests on).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InvalidParameterError
from .incidence import IncidenceMatrix, build_incidence, integer_rank
from .mincut import gap, global_gap, min_separating_cut, oracle_enumeration, uniqueness_by_flow
from .network import Bipartition, Network
from .planar import PlaneEmbedding


# --- bipartite family -------------------------------------------------------


@dataclass(frozen=True)
class BipartiteFamily:
    k: int
    l: int
    epsilon: Fraction
    subsets: tuple[tuple[int, ...], ...]
    network: Network

    def u_vertex(self, i: int) -> int:
        """Non-terminal for the i-th subset (0-based)."""
        return self.k + i

    def edge_id(self, i: int, q: int) -> int:
        return i * self.k + q


def gen_bipartite(k: int) -> BipartiteFamily:
    """Complete bipartite lower-bound family; k must be >= 6 and divisible
    by 3 (subset size 2k/3 is taken literally, never rounded)."""
    if k % 3 != 0:
        raise InvalidParameterError(f"k must be divisible by 3, got {k}")
    if k < 6:
        raise InvalidParameterError(f"k must be at least 6, got {k}")
    eps = Fraction(1, k)
    subsets = tuple(combinations(range(k), 2 * k // 3))
    edges = []
    for i, subset in enumerate(subsets):
        inside = set(subset)
        for q in range(k):
            cost = Fraction(1) if q in inside else 2 + eps
            edges.append((k + i, q, cost))
    net = Network(k + len(subsets), edges, terminals=range(k))
    return BipartiteFamily(k, len(subsets), eps, subsets, net)


def _u_side_cost(fam: BipartiteFamily, i: int, terminal_set) -> Fraction:
    inside = set(fam.subsets[i])
    return sum(
        (Fraction(1) if q in inside else 2 + fam.epsilon for q in terminal_set),
        Fraction(0),
    )


@dataclass(frozen=True)
class BipartiteCutRecord:
    subset: tuple[int, ...]
    value: Fraction
    side_ok: bool
    unique: bool
    inequalities_ok: bool

    @property
    def ok(self) -> bool:
        return self.side_ok and self.unique and self.inequalities_ok


@dataclass(frozen=True)
class BipartiteLemmaReport:
    k: int
    checked: tuple[BipartiteCutRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.checked)


def verify_bipartite_lemma(
    fam: BipartiteFamily, spot_check: int | None = None, seed: int = 0
) -> BipartiteLemmaReport:
    """Check, for every (or a sample of) size-2k/3 subset(s), that the
    minimum cut isolates exactly that subset's non-terminal with the
    complement terminals, uniquely, and that the proof's per-non-terminal
    cost comparisons hold numerically."""
    net = fam.network
    indices = list(range(fam.l))
    if spot_check is not None and spot_check < fam.l:
        indices = sorted(random.Random(seed).sample(indices, spot_check))
    records = []
    for i in indices:
        subset = fam.subsets[i]
        bp = Bipartition.from_indices(fam.k, subset)
        cut = min_separating_cut(net, bp)
        expected_w = frozenset({fam.u_vertex(i)} | (set(range(fam.k)) - set(subset)))
        side = cut.side if 0 not in subset else frozenset(range(net.n)) - cut.side
        side_ok = side == expected_w
        unique = uniqueness_by_flow(net, bp)
        sbar = set(range(fam.k)) - set(subset)
        ineq = _u_side_cost(fam, i, subset) < _u_side_cost(fam, i, sbar)
        for j in range(fam.l):
            if j == i:
                continue
            if not _u_side_cost(fam, j, subset) > _u_side_cost(fam, j, sbar):
                ineq = False
        records.append(BipartiteCutRecord(subset, cut.value, side_ok, unique, ineq))
    return BipartiteLemmaReport(fam.k, tuple(records))


# --- grid family ------------------------------------------------------------


@dataclass(frozen=True)
class GridFamily:
    k: int
    heavy_cost: Fraction
    network: Network
    embedding: PlaneEmbedding

    # terminal indices: v_j -> j-1, h_i -> k + i - 1 (1-based i, j)
    def v_terminal_index(self, j: int) -> int:
        return j - 1

    def h_terminal_index(self, i: int) -> int:
        return self.k + i - 1

    def u_vertex(self, i: int, j: int) -> int:
        """Grid vertex at column i, row j (1-based)."""
        return 2 * self.k + (j - 1) * self.k + (i - 1)

    def horizontal_edge_id(self, i: int, j: int) -> int:
        """Interior edge of cost 1 - j/k^4 between rows j and j+1 in column i."""
        return (i - 1) * (self.k - 1) + (j - 1)

    def vertical_edge_id(self, i: int, j: int) -> int:
        """Interior unit edge between columns i and i+1 in row j."""
        return (self.k - 1) ** 2 + (i - 1) * (self.k - 1) + (j - 1)

    def subset_mask(self, i: int, j: int) -> int:
        mask = 0
        for jj in range(1, j + 1):
            mask |= 1 << self.v_terminal_index(jj)
        for ii in range(1, i + 1):
            mask |= 1 << self.h_terminal_index(ii)
        return mask

    def expected_cut_value(self, i: int, j: int) -> Fraction:
        return i + j - Fraction(i * j, self.k**4)

    def expected_side(self, i: int, j: int) -> frozenset[int]:
        side = {self.v_terminal_index(jj) for jj in range(1, j + 1)}
        side |= {self.h_terminal_index(ii) for ii in range(1, i + 1)}
        side |= {self.u_vertex(a, b) for a in range(1, i + 1) for b in range(1, j + 1)}
        return frozenset(side)

    def expected_cutset(self, i: int, j: int) -> frozenset[int]:
        horiz = {self.horizontal_edge_id(a, j) for a in range(1, i + 1)}
        vert = {self.vertical_edge_id(i, b) for b in range(1, j + 1)}
        return frozenset(horiz | vert)


def gen_grid(k: int) -> GridFamily:
    """Planar lower-bound grid with 2k terminals, including a rotation
    system for duality checks."""
    if k < 3:
        raise InvalidParameterError(f"k must be at least 3, got {k}")
    heavy = Fraction(k**4)
    n = 2 * k + k * k

    def u(i, j):
        return 2 * k + (j - 1) * k + (i - 1)

    edges: list[tuple[int, int, Fraction]] = []
    # horizontal interior first: their ids form the triangular submatrix columns
    for i in range(1, k):
        for j in range(1, k):
            edges.append((u(i, j), u(i, j + 1), 1 - Fraction(j, k**4)))
    for i in range(1, k):
        for j in range(1, k):
            edges.append((u(i, j), u(i + 1, j), Fraction(1)))
    for j in range(1, k):  # heavy last-column horizontal run
        edges.append((u(k, j), u(k, j + 1), heavy))
    for i in range(1, k):  # heavy last-row vertical run
        edges.append((u(i, k), u(i + 1, k), heavy))
    for j in range(1, k + 1):  # v_j hangs off column 1
        edges.append((j - 1, u(1, j), heavy))
    for i in range(1, k + 1):  # h_i hangs off row 1
        edges.append((k + i - 1, u(i, 1), heavy))

    net = Network(n, edges, terminals=range(2 * k))

    # rotation system from grid coordinates: u(i,j) at (i, j), v_j at (0, j),
    # h_i at (i, 0); at each vertex order darts east, north, west, south.
    pos: dict[int, tuple[int, int]] = {}
    for j in range(1, k + 1):
        pos[j - 1] = (0, j)
        pos[k + j - 1] = (j, 0)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            pos[u(i, j)] = (i, j)
    slot_of = {(1, 0): 0, (0, -1): 1, (-1, 0): 2, (0, 1): 3}
    slots: list[list[int | None]] = [[None] * 4 for _ in range(n)]
    for eid, (a, b, _) in enumerate(edges):
        ax, ay = pos[a]
        bx, by = pos[b]
        d = (bx - ax, by - ay)
        slots[a][slot_of[d]] = 2 * eid
        slots[b][slot_of[(-d[0], -d[1])]] = 2 * eid + 1
    rotations = [tuple(d for d in sl if d is not None) for sl in slots]
    emb = PlaneEmbedding(net, rotations)
    return GridFamily(k, heavy, net, emb)


@dataclass(frozen=True)
class GridCutRecord:
    i: int
    j: int
    value: Fraction
    expected: Fraction
    value_ok: bool
    side_ok: bool
    cutset_ok: bool
    unique: bool
    oracle_ok: bool | None

    @property
    def ok(self) -> bool:
        return (
            self.value_ok
            and self.side_ok
            and self.cutset_ok
            and self.unique
            and self.oracle_ok is not False
        )


@dataclass(frozen=True)
class GridLemmaReport:
    k: int
    checked: tuple[GridCutRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.checked)


def verify_grid_lemma(fam: GridFamily, oracle: bool = False) -> GridLemmaReport:
    """Check that every staircase bipartition cut has value
    i + j - i*j/k^4, the expected side and cutset (exactly i horizontal and
    j vertical interior edges), and is unique; optionally cross-check the
    whole thing against the exhaustive oracle."""
    net = fam.network
    records = []
    for i in range(1, fam.k):
        for j in range(1, fam.k):
            bp = Bipartition.from_mask(2 * fam.k, fam.subset_mask(i, j))
            cut = min_separating_cut(net, bp)
            expected = fam.expected_cut_value(i, j)
            side_ok = cut.side == fam.expected_side(i, j)
            cutset_ok = cut.cutset == fam.expected_cutset(i, j)
            unique = uniqueness_by_flow(net, bp)
            oracle_ok = None
            if oracle:
                res = oracle_enumeration(net, bp)
                oracle_ok = (
                    res.value == expected
                    and len(res.min_cutsets) == 1
                    and next(iter(res.min_cutsets)) == cut.cutset
                )
            records.append(
                GridCutRecord(i, j, cut.value, expected, cut.value == expected, side_ok, cutset_ok, unique, oracle_ok)
            )
    return GridLemmaReport(fam.k, tuple(records))


# --- rank bounds ------------------------------------------------------------


@dataclass(frozen=True)
class RankReport:
    family: str
    k: int
    rank: int
    bound: int
    rank_ok: bool
    submatrix_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.rank_ok and self.submatrix_ok is not False


def verify_rank_bounds(fam: BipartiteFamily | GridFamily) -> RankReport:
    """Exact incidence rank against the family's lower bound; for grids the
    (k-1)^2 staircase-rows x interior-horizontal-columns submatrix is also
    verified entrywise to be lower triangular with unit diagonal."""
    mat = build_incidence(fam.network)
    r = integer_rank(mat.bits.tolist())
    if isinstance(fam, BipartiteFamily):
        return RankReport("bipartite", fam.k, r, fam.l, r >= fam.l, None)
    bound = (fam.k - 1) ** 2
    sub_ok = True
    rows = [
        Bipartition.from_mask(2 * fam.k, fam.subset_mask(i, j)).row_index
        for i in range(1, fam.k)
        for j in range(1, fam.k)
    ]
    side = fam.k - 1
    for a, row in enumerate(rows):
        i, j = a // side + 1, a % side + 1
        for b in range(side * side):
            ic, jc = b // side + 1, b % side + 1
            expected = 1 if (jc == j and ic <= i) else 0
            if int(mat.bits[row, b]) != expected:
                sub_ok = False
            if b == a and int(mat.bits[row, b]) != 1:
                sub_ok = False
            if b > a and int(mat.bits[row, b]) != 0:
                sub_ok = False
    return RankReport("grid", fam.k, r, bound, r >= bound, sub_ok)


# --- storage collision experiment -------------------------------------------


@dataclass(frozen=True)
class CollisionReport:
    k: int
    l: int
    gap: Fraction
    step: Fraction
    columns: tuple[int, ...]
    first_l_columns_independent: bool
    min_subset_row_gap: Fraction
    total_mass_below_gap: bool
    pairs_checked: int
    collisions: tuple[tuple[int, int], ...]
    subset_rows_stable: bool
    full_matrix_changes: int

    @property
    def ok(self) -> bool:
        return not self.collisions and self.subset_rows_stable and self.total_mass_below_gap


def _independent_columns(mat: IncidenceMatrix, row_indices: list[int], count: int) -> list[int]:
    selected: list[int] = []
    for col in range(mat.cols):
        cand = selected + [col]
        rows = [[int(mat.bits[r, c]) for c in cand] for r in row_indices]
        if integer_rank(rows) == len(cand):
            selected.append(col)
            if len(selected) == count:
                break
    return selected


def tc_collision_family(fam: BipartiteFamily, sample_count: int, seed: int) -> CollisionReport:
    """Sample pairs of two-valued cost functions supported on independent
    incidence columns and check that every pair is distinguished by some
    terminal cut value.

    Also records that the subset rows (whose gaps exceed the total
    perturbation mass) keep their cutsets; the full matrix may legitimately
    change at rows with tied minimum cuts, which this family has.
    """
    net = fam.network
    mat = build_incidence(net)
    subset_rows = [
        Bipartition.from_indices(fam.k, s).row_index for s in fam.subsets
    ]
    columns = _independent_columns(mat, subset_rows, fam.l)
    if len(columns) < fam.l:
        raise InvalidParameterError("could not find enough independent columns")
    first_l = columns == list(range(fam.l))

    family_gap = global_gap(net) or Fraction(0)
    row_gaps = []
    for row in subset_rows:
        bp = Bipartition(fam.k, (row + 1) * 2)
        delta = gap(net, bp).delta
        if delta is not None:
            row_gaps.append(delta)
    min_row_gap = min(row_gaps)
    step = Fraction(1, 6 * fam.k * fam.k * fam.l)
    mass_ok = fam.l * step < min_row_gap

    rng = random.Random(seed)
    space = 1 << fam.l

    def values_for(bits: int) -> tuple[tuple[Fraction, ...], bool, bool]:
        w = [Fraction(0)] * net.m
        for pos, col in enumerate(columns):
            if bits >> pos & 1:
                w[col] = step
        pert = net.with_costs([e.cost + we for e, we in zip(net.edges, w)])
        pmat = build_incidence(pert)
        stable = all(
            (pmat.bits[r] == mat.bits[r]).all() for r in subset_rows
        )
        full_equal = pmat.same_bits(mat)
        return pmat.values, stable, full_equal

    cache: dict[int, tuple] = {}

    def lookup(bits: int):
        if bits not in cache:
            cache[bits] = values_for(bits)
        return cache[bits]

    collisions = []
    stable = True
    full_changes = 0
    seen_full: set[int] = set()
    for _ in range(sample_count):
        a = rng.randrange(space)
        b = rng.randrange(space)
        while b == a:
            b = rng.randrange(space)
        va, sa, fa = lookup(a)
        vb, sb, fb = lookup(b)
        stable = stable and sa and sb
        for bits, full_equal in ((a, fa), (b, fb)):
            if bits not in seen_full:
                seen_full.add(bits)
                if not full_equal:
                    full_changes += 1
        if va == vb:
            collisions.append((a, b))
    return CollisionReport(
        k=fam.k,
        l=fam.l,
        gap=family_gap,
        step=step,
        columns=tuple(columns),
        first_l_columns_independent=first_l,
        min_subset_row_gap=min_row_gap,
        total_mass_below_gap=mass_ok,
        pairs_checked=sample_count,
        collisions=tuple(collisions),
        subset_rows_stable=stable,
        full_matrix_changes=full_changes,
    )
