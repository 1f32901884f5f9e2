"""Command-line interface.

Subcommands: ``gen`` (instance generators), ``compress`` (build and verify a
mimicking network), ``verify`` (compare two networks), ``experiment``
(lemma/bound/collision checks), ``tc`` (terminal-cuts store build/query).

Exit codes: 0 success or all checks PASS, 1 verification failure or a
violated claim, 2 usage or parse errors.  Every randomized command takes an
explicit ``--seed``; reports embed seed and parameters, and identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import InvalidEmbeddingError, MimicknetError, ParseError
from .fileio import load_network, serialize_network
from .generate import random_planar_network, star_network
from .lowerbound import (
    gen_bipartite,
    gen_grid,
    tc_collision_family,
    verify_bipartite_lemma,
    verify_grid_lemma,
    verify_rank_bounds,
)
from .mimick import build_by_contraction, build_by_signature, verify, verify_generalized
from .mincut import min_separating_cut
from .network import enumerate_bipartitions
from .planar import build_dual, check_component_bounds, faces_of_subgraph
from .tcscheme import deserialize, preprocess, query, serialize, storage_report

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class _Records:
    """Line-oriented machine-readable claim log."""

    def __init__(self, path: str | None, command: str, params: dict):
        self.path = path
        self.header = {"command": command, "format_version": FORMAT_VERSION, **params}
        self.rows: list[dict] = []

    def add(self, claim: str, instance: str, expected, observed, ok: bool) -> None:
        self.rows.append(
            {
                "claim": claim,
                "instance": instance,
                "expected": str(expected),
                "observed": str(observed),
                "verdict": "PASS" if ok else "FAIL",
            }
        )

    def flush(self) -> None:
        if self.path is None:
            return
        with open(self.path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(self.header) + "\n")
            for row in self.rows:
                fh.write(json.dumps({**self.header, **row}) + "\n")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- gen ---------------------------------------------------------------------


def _cmd_gen(args) -> int:
    if args.family == "bipartite":
        fam = gen_bipartite(args.k)
        text = serialize_network(fam.network, None, comment=f"bipartite family k={args.k}")
    elif args.family == "grid":
        fam = gen_grid(args.k)
        text = serialize_network(fam.network, fam.embedding, comment=f"grid family k={args.k}")
    elif args.family == "star":
        net, emb = star_network(args.k)
        text = serialize_network(net, emb, comment=f"star k={args.k}")
    else:  # random-planar
        if args.seed is None:
            raise MimicknetError("gen random-planar requires --seed")
        net, emb = random_planar_network(args.n, args.k, args.seed, args.extra_edges)
        text = serialize_network(
            net, emb, comment=f"random planar n={args.n} k={args.k} seed={args.seed}"
        )
    _emit(text, args.out)
    return EXIT_OK


# --- compress ----------------------------------------------------------------


def _cmd_compress(args) -> int:
    net, _ = load_network(args.input)
    build = build_by_contraction if args.method == "contract" else build_by_signature
    result = build(net)
    report = verify(net, result.network)
    comment = f"mimicking network ({result.construction}) of {args.input}"
    _emit(serialize_network(result.network, None, comment=comment), args.out)
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8") as fh:
            for cid, members in enumerate(result.contraction_map.classes):
                fh.write(f"class {cid} " + " ".join(str(v) for v in members) + "\n")
    s = result.stats
    print(
        f"compress: {net.n} -> {s.vertices} vertices, {net.m} -> {s.edges} edges, "
        f"{s.class_count} classes ({s.dropped_classes} dropped), "
        f"size bound k^2*4^k = {s.size_bound} ({'within' if s.within_size_bound else 'above'})",
        file=sys.stderr,
    )
    if not report.all_equal:
        print("compress: internal verification FAILED", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# --- verify ------------------------------------------------------------------


def _cmd_verify(args) -> int:
    orig, _ = load_network(args.original)
    cand, _ = load_network(args.candidate)
    report = verify_generalized(orig, cand) if args.generalized else verify(orig, cand)
    for row in report.rows:
        status = "ok" if row.equal else "MISMATCH"
        print(
            f"bipartition mask={row.bipartition.mask:0{orig.k}b} "
            f"original={_frac(row.value_original)} candidate={_frac(row.value_candidate)} {status}"
        )
    if report.generalized is not None:
        for row in report.generalized:
            status = "ok" if row.equal else "MISMATCH"
            print(
                f"pair S={row.source_mask:0{orig.k}b} T={row.sink_mask:0{orig.k}b} "
                f"original={_frac(row.value_original)} candidate={_frac(row.value_candidate)} {status}"
            )
    print(f"verify: {'PASS' if report.all_equal else 'FAIL'}")
    return EXIT_OK if report.all_equal else EXIT_FAIL


# --- experiment --------------------------------------------------------------


def _experiment_bipartite_lemma(args, rec: _Records) -> bool:
    fam = gen_bipartite(args.k)
    if args.spot_check is not None and args.seed is None:
        raise MimicknetError("--spot-check sampling requires --seed")
    rep = verify_bipartite_lemma(fam, args.spot_check, args.seed or 0)
    for r in rep.checked:
        rec.add(
            "bipartite-min-cut-side-and-uniqueness",
            f"k={args.k} subset={r.subset}",
            "side={u_S} U complement, unique",
            f"side_ok={r.side_ok} unique={r.unique} ineq={r.inequalities_ok} value={_frac(r.value)}",
            r.ok,
        )
        print(f"subset {r.subset}: value {_frac(r.value)} {'PASS' if r.ok else 'FAIL'}")
    return rep.ok


def _experiment_grid_lemma(args, rec: _Records) -> bool:
    fam = gen_grid(args.k)
    rep = verify_grid_lemma(fam, oracle=args.oracle)
    for r in rep.checked:
        rec.add(
            "grid-staircase-cut",
            f"k={args.k} i={r.i} j={r.j}",
            _frac(r.expected),
            f"value={_frac(r.value)} side_ok={r.side_ok} cutset_ok={r.cutset_ok} unique={r.unique}",
            r.ok,
        )
        print(f"cut ({r.i},{r.j}): value {_frac(r.value)} {'PASS' if r.ok else 'FAIL'}")
    return rep.ok


def _experiment_rank(args, rec: _Records) -> bool:
    fam = gen_bipartite(args.k) if args.family == "bipartite" else gen_grid(args.k)
    rep = verify_rank_bounds(fam)
    rec.add(
        "incidence-rank-bound",
        f"{rep.family} k={rep.k}",
        f">= {rep.bound}",
        f"rank={rep.rank} submatrix_ok={rep.submatrix_ok}",
        rep.ok,
    )
    print(f"rank >= {rep.bound}: observed {rep.rank} -> {'PASS' if rep.ok else 'FAIL'}")
    if rep.submatrix_ok is not None:
        print(f"lower-triangular submatrix: {'PASS' if rep.submatrix_ok else 'FAIL'}")
    return rep.ok


def _experiment_bounds(args, rec: _Records) -> bool:
    import random as _random

    net, emb = load_network(args.input)
    if emb is None:
        raise MimicknetError("bounds experiment needs rotation lines in the input")
    dual = build_dual(emb)
    bps = enumerate_bipartitions(net.k)
    cutsets = [min_separating_cut(net, bp).cutset for bp in bps]
    ok = True
    for bp, cutset in zip(bps, cutsets):
        rep = check_component_bounds(emb, dual, cutset)
        ok &= rep.ok
        rec.add(
            "single-cutset-components",
            f"mask={bp.mask:b}",
            f"<= {net.k}",
            rep.cc_single[0],
            rep.ok,
        )
    rng = _random.Random(args.seed)
    for _ in range(args.pairs):
        a = rng.randrange(len(bps))
        b = rng.randrange(len(bps))
        rep = check_component_bounds(emb, dual, cutsets[a], cutsets[b])
        ok &= rep.ok
        rec.add(
            "two-cutset-components-and-meeting-vertices",
            f"masks={bps[a].mask:b},{bps[b].mask:b}",
            f"cc <= {rep.cc_single[0]}+{rep.cc_single[1]}+{net.k}, meeting <= {6 * net.k}",
            f"cc={rep.cc_union} meeting={rep.meeting_vertices}",
            rep.ok,
        )
    result = build_by_contraction(net)
    union = result.cut_union
    from .network import connected_components

    cc = len(connected_components(net, union))
    faces = faces_of_subgraph(dual.embedding, union)
    size_ok = result.stats.class_count == cc == faces
    ok &= size_ok
    rec.add(
        "component-face-correspondence",
        args.input,
        "classes == components == dual faces",
        f"{result.stats.class_count} == {cc} == {faces}",
        size_ok,
    )
    print(f"bounds: {'PASS' if ok else 'FAIL'} ({len(rec.rows)} claims)")
    return ok


def _experiment_tc_collision(args, rec: _Records) -> bool:
    if args.seed is None:
        raise MimicknetError("tc-collision requires --seed")
    fam = gen_bipartite(args.k)
    rep = tc_collision_family(fam, args.samples, args.seed)
    rec.add(
        "distinct-cost-functions-distinguished",
        f"bipartite k={args.k} samples={args.samples} seed={args.seed}",
        "no cut-value collisions",
        f"collisions={len(rep.collisions)} subset_rows_stable={rep.subset_rows_stable} "
        f"gap={_frac(rep.gap)} step={_frac(rep.step)}",
        rep.ok,
    )
    print(
        f"tc-collision: {rep.pairs_checked} pairs, {len(rep.collisions)} collisions, "
        f"subset rows stable: {rep.subset_rows_stable} -> {'PASS' if rep.ok else 'FAIL'}"
    )
    return rep.ok


def _cmd_experiment(args) -> int:
    params = {k: v for k, v in vars(args).items() if k not in ("func", "records") and v is not None}
    rec = _Records(args.records, f"experiment {args.name}", params)
    runner = {
        "bipartite-lemma": _experiment_bipartite_lemma,
        "grid-lemma": _experiment_grid_lemma,
        "rank": _experiment_rank,
        "bounds": _experiment_bounds,
        "tc-collision": _experiment_tc_collision,
    }[args.name]
    ok = runner(args, rec)
    rec.flush()
    print(f"experiment {args.name}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# --- tc ----------------------------------------------------------------------


def _parse_terminal_set(text: str, k: int) -> list[int]:
    indices = []
    for token in text.replace(",", " ").split():
        token = token.strip()
        if token.startswith("q"):
            token = token[1:]
        try:
            pos = int(token)
        except ValueError as exc:
            raise MimicknetError(f"bad terminal {token!r} (use q1..q{k})") from exc
        if not (1 <= pos <= k):
            raise MimicknetError(f"terminal q{pos} out of range 1..{k}")
        indices.append(pos - 1)
    return indices


def _cmd_tc(args) -> int:
    if args.action == "build":
        net, _ = load_network(args.input)
        store = preprocess(net)
        with open(args.out, "wb") as fh:
            fh.write(serialize(store))
        rep = storage_report(store)
        print(
            f"tc build: {rep.entries} values, {rep.value_bits} bits each, "
            f"{rep.words} words (bound {rep.bound_words})",
            file=sys.stderr,
        )
        return EXIT_OK
    with open(args.store, "rb") as fh:
        store = deserialize(fh.read())
    indices = _parse_terminal_set(args.set, store.k)
    value = query(store, indices)
    print(_frac(value))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mimicknet",
        description="Compress k-terminal networks into cut-preserving mimicking networks "
        "and run the structural and lower-bound experiments.",
    )
    parser.add_argument("--version", action="version", version=f"mimicknet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance file")
    p_gen.add_argument("family", choices=["bipartite", "grid", "star", "random-planar"])
    p_gen.add_argument("--k", type=int, required=True, help="terminal count (grid: side length)")
    p_gen.add_argument("--n", type=int, help="vertex count (random-planar)")
    p_gen.add_argument("--seed", type=int, help="rng seed (random-planar)")
    p_gen.add_argument("--extra-edges", type=int, help="edges beyond the spanning tree")
    p_gen.add_argument("-o", "--out", help="output file (default stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_comp = sub.add_parser("compress", help="build a verified mimicking network")
    p_comp.add_argument("input")
    p_comp.add_argument("--method", choices=["contract", "signature"], default="contract")
    p_comp.add_argument("-o", "--out", help="output network file (default stdout)")
    p_comp.add_argument("--map-out", help="contraction-map sidecar file")
    p_comp.set_defaults(func=_cmd_compress)

    p_ver = sub.add_parser("verify", help="compare terminal cut values of two networks")
    p_ver.add_argument("original")
    p_ver.add_argument("candidate")
    p_ver.add_argument("--generalized", action="store_true", help="also check disjoint subset pairs")
    p_ver.set_defaults(func=_cmd_verify)

    p_exp = sub.add_parser("experiment", help="run a verification experiment")
    p_exp.add_argument(
        "name", choices=["bipartite-lemma", "grid-lemma", "rank", "bounds", "tc-collision"]
    )
    p_exp.add_argument("--k", type=int, help="family parameter")
    p_exp.add_argument("--family", choices=["bipartite", "grid"], help="for: rank")
    p_exp.add_argument("--input", help="network file (for: bounds)")
    p_exp.add_argument("--pairs", type=int, default=50, help="sampled cutset pairs (bounds)")
    p_exp.add_argument("--samples", type=int, default=100, help="sampled pairs (tc-collision)")
    p_exp.add_argument("--spot-check", type=int, help="sample size (bipartite-lemma)")
    p_exp.add_argument("--oracle", action="store_true", help="exhaustive cross-check (grid-lemma)")
    p_exp.add_argument("--seed", type=int, help="rng seed for sampling commands")
    p_exp.add_argument("--records", help="write machine-readable claim records (JSON lines)")
    p_exp.set_defaults(func=_cmd_experiment)

    p_tc = sub.add_parser("tc", help="terminal-cuts store")
    tc_sub = p_tc.add_subparsers(dest="action", required=True)
    tc_build = tc_sub.add_parser("build", help="preprocess a network into a store")
    tc_build.add_argument("input")
    tc_build.add_argument("-o", "--out", required=True)
    tc_build.set_defaults(func=_cmd_tc)
    tc_query = tc_sub.add_parser("query", help="answer one terminal subset")
    tc_query.add_argument("store")
    tc_query.add_argument("--set", required=True, help="comma-separated terminals, e.g. q2,q3")
    tc_query.set_defaults(func=_cmd_tc)

    return parser


def _validate(args) -> None:
    if args.command == "gen":
        if args.family == "random-planar" and args.n is None:
            raise MimicknetError("gen random-planar requires --n")
    if args.command == "experiment":
        if args.name in ("bipartite-lemma", "grid-lemma", "rank", "tc-collision") and args.k is None:
            raise MimicknetError(f"experiment {args.name} requires --k")
        if args.name == "rank" and args.family is None:
            raise MimicknetError("experiment rank requires --family")
        if args.name == "bounds":
            if args.input is None:
                raise MimicknetError("experiment bounds requires --input")
            if args.seed is None:
                raise MimicknetError("experiment bounds requires --seed")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except (ParseError, InvalidEmbeddingError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MimicknetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
