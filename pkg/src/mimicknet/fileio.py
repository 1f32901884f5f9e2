"""Text format for networks and optional plane embeddings.

::

    c free-form comment
    p mimick <n> <m> <k>
    t <v1> ... <vk>
    e <u> <v> <num>/<den>
    r <v> <edgeId>:<end> ...

Edge ids are assigned in file order (0-based); dart end 0 is the first
endpoint of the ``e`` line.  Rotation lines, when present, must cover every
dart exactly once and describe a genus-zero embedding.  Serialization is
canonical, so ``parse(serialize(x)) == x`` byte for byte.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .network import Network
from .planar import PlaneEmbedding


def _parse_cost(token: str, lineno: int) -> Fraction:
    try:
        if "/" in token:
            num, den = token.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"line {lineno}: bad cost {token!r}") from exc


def parse_network(text: str) -> tuple[Network, PlaneEmbedding | None]:
    header = None
    terminals: list[int] | None = None
    edges: list[tuple[int, int, Fraction]] = []
    rotations: dict[int, list[int]] = {}
    n_edges_declared = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(fields) != 5 or fields[1] != "mimick":
                raise ParseError(f"line {lineno}: expected 'p mimick <n> <m> <k>'")
            try:
                header = tuple(int(x) for x in fields[2:5])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad header numbers") from exc
            n_edges_declared = header[1]
        elif tag == "t":
            if header is None:
                raise ParseError(f"line {lineno}: 't' before header")
            if terminals is not None:
                raise ParseError(f"line {lineno}: duplicate terminal line")
            try:
                terminals = [int(x) for x in fields[1:]]
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad terminal id") from exc
        elif tag == "e":
            if header is None:
                raise ParseError(f"line {lineno}: 'e' before header")
            if len(fields) != 4:
                raise ParseError(f"line {lineno}: expected 'e <u> <v> <cost>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad endpoint") from exc
            edges.append((u, v, _parse_cost(fields[3], lineno)))
        elif tag == "r":
            if header is None:
                raise ParseError(f"line {lineno}: 'r' before header")
            try:
                v = int(fields[1])
            except (IndexError, ValueError) as exc:
                raise ParseError(f"line {lineno}: bad rotation vertex") from exc
            if v in rotations:
                raise ParseError(f"line {lineno}: duplicate rotation for vertex {v}")
            darts = []
            for dart_spec in fields[2:]:
                try:
                    eid, end = dart_spec.split(":")
                    eid, end = int(eid), int(end)
                except ValueError as exc:
                    raise ParseError(f"line {lineno}: bad dart {dart_spec!r}") from exc
                if end not in (0, 1):
                    raise ParseError(f"line {lineno}: dart end must be 0 or 1")
                darts.append(2 * eid + end)
            rotations[v] = darts
        else:
            raise ParseError(f"line {lineno}: unknown record {tag!r}")

    if header is None:
        raise ParseError("missing 'p mimick' header")
    n, m, k = header
    if terminals is None:
        raise ParseError("missing terminal line")
    if len(terminals) != k:
        raise ParseError(f"header declares k={k}, terminal line has {len(terminals)}")
    if len(edges) != m:
        raise ParseError(f"header declares m={m}, found {len(edges)} edges")
    net = Network(n, edges, terminals)

    if not rotations:
        return net, None
    rotation_lists = []
    for v in range(n):
        rotation_lists.append(rotations.pop(v, []))
    if rotations:
        raise ParseError(f"rotation lines for unknown vertices {sorted(rotations)}")
    return net, PlaneEmbedding(net, rotation_lists)


def serialize_network(net: Network, emb: PlaneEmbedding | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p mimick {net.n} {net.m} {net.k}")
    lines.append("t " + " ".join(str(t) for t in net.terminals))
    for e in net.edges:
        lines.append(f"e {e.u} {e.v} {e.cost.numerator}/{e.cost.denominator}")
    if emb is not None:
        for v, rot in enumerate(emb.rotations):
            if rot:
                lines.append(f"r {v} " + " ".join(f"{d >> 1}:{d & 1}" for d in rot))
    return "\n".join(lines) + "\n"


def load_network(path) -> tuple[Network, PlaneEmbedding | None]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_network(fh.read())


def save_network(path, net: Network, emb: PlaneEmbedding | None = None, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_network(net, emb, comment))
