"""Terminal-cuts store: preprocess once, answer any bipartition without
the network.

Values are kept exact as integers over one shared denominator.  The
explicit table of all 2**(k-1) - 1 values is order-optimal (no scheme can
beat 2**Omega(k) words), so no compression is attempted.  Storage is
accounted in raw value bits and in 64-bit machine words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidQueryError, ParseError
from .mincut import min_separating_cut
from .network import Network, enumerate_bipartitions

MAGIC = b"TCS1"
WORD_BITS = 64


@dataclass(frozen=True)
class TCStore:
    k: int
    terminal_labels: tuple[int, ...]
    denominator: int
    scaled_values: tuple[int, ...]

    @property
    def entries(self) -> int:
        return len(self.scaled_values)

    @property
    def value_bits(self) -> int:
        return max(1, max(self.scaled_values, default=0).bit_length())

    def value(self, row: int) -> Fraction:
        return Fraction(self.scaled_values[row], self.denominator)


def preprocess(net: Network) -> TCStore:
    """Build the full cut-value table in canonical bipartition order."""
    values = [min_separating_cut(net, bp).value for bp in enumerate_bipartitions(net.k)]
    den = math.lcm(*(v.denominator for v in values))
    scaled = tuple(v.numerator * (den // v.denominator) for v in values)
    return TCStore(net.k, tuple(net.terminals), den, scaled)


def query(store: TCStore, subset: Iterable[int]) -> Fraction:
    """Exact minimum cut value separating the given terminal indices from
    the rest.  Either side of a split may be passed; trivial subsets are
    rejected."""
    mask = 0
    for i in subset:
        if not (0 <= i < store.k):
            raise InvalidQueryError(f"terminal index {i} out of range for k={store.k}")
        mask |= 1 << i
    full = (1 << store.k) - 1
    if mask == 0 or mask == full:
        raise InvalidQueryError("subset must be nonempty and proper")
    if mask & 1:
        mask ^= full
    return store.value(mask // 2 - 1)


@dataclass(frozen=True)
class StorageReport:
    entries: int
    value_bits: int
    words: int
    bound_words: int
    within_bound: bool


def storage_report(store: TCStore) -> StorageReport:
    """Value words used versus the trivial 2**k-word bound."""
    words_per_value = max(1, -(-store.value_bits // WORD_BITS))
    words = store.entries * words_per_value
    bound = 1 << store.k
    return StorageReport(store.entries, store.value_bits, words, bound, words <= bound)


# --- serialization ----------------------------------------------------------


def _write_varint(out: bytearray, value: int) -> None:
    if value < 0:
        raise ValueError("varints are unsigned")
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return


def _read_varint(data: bytes, pos: int) -> tuple[int, int]:
    result = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise ParseError("truncated varint")
        byte = data[pos]
        pos += 1
        result |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return result, pos
        shift += 7


def serialize(store: TCStore) -> bytes:
    """Binary form: magic ``TCS1``, k (u32 LE), value bits (u32 LE), shared
    denominator (varint), then the scaled values as varints."""
    out = bytearray(MAGIC)
    out += store.k.to_bytes(4, "little")
    out += store.value_bits.to_bytes(4, "little")
    _write_varint(out, store.denominator)
    for v in store.scaled_values:
        _write_varint(out, v)
    return bytes(out)


def deserialize(data: bytes) -> TCStore:
    if data[:4] != MAGIC:
        raise ParseError(f"bad magic {data[:4]!r}")
    if len(data) < 12:
        raise ParseError("truncated header")
    k = int.from_bytes(data[4:8], "little")
    if k < 2:
        raise ParseError(f"bad terminal count {k}")
    pos = 12
    den, pos = _read_varint(data, pos)
    if den <= 0:
        raise ParseError("denominator must be positive")
    values = []
    for _ in range((1 << (k - 1)) - 1):
        v, pos = _read_varint(data, pos)
        values.append(v)
    if pos != len(data):
        raise ParseError(f"{len(data) - pos} trailing bytes")
    return TCStore(k, tuple(range(k)), den, tuple(values))
