"""graph6 reading and writing.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits
per printable character (value + 63), zero padded.
"""

from typing import IO, Iterable, Iterator

from app.graphs.graph import Graph
from exceptions import GraphFormatError

HEADER = ">>graph6<<"
_BIAS = 63
_SHORT_MAX = 62
_MEDIUM_MAX = 258047
_LONG_MAX = 68719476735


def _encode_bits(value: int, width: int) -> str:
    chars = []
    for shift in range(width - 6, -1, -6):
        chars.append(chr(_BIAS + (value >> shift & 0x3F)))
    return "".join(chars)


def encode_size(n: int) -> str:
    if n < 0 or n > _LONG_MAX:
        raise GraphFormatError(f"vertex count {n} cannot be encoded", 0)
    if n <= _SHORT_MAX:
        return chr(_BIAS + n)
    if n <= _MEDIUM_MAX:
        return "~" + _encode_bits(n, 18)
    return "~~" + _encode_bits(n, 36)


def _decode_chunk(text: str, start: int, count: int) -> int:
    value = 0
    for i in range(start, start + count):
        if i >= len(text):
            raise GraphFormatError("truncated size header", i, text)
        value = value << 6 | (ord(text[i]) - _BIAS)
    return value


def _decode_size(text: str, base: int) -> tuple[int, int]:
    """Return (n, offset of the first data character)."""
    if base >= len(text):
        raise GraphFormatError("empty graph6 string", base, text)
    if text[base] != "~":
        return ord(text[base]) - _BIAS, base + 1
    if base + 1 < len(text) and text[base + 1] == "~":
        return _decode_chunk(text, base + 2, 6), base + 8
    return _decode_chunk(text, base + 1, 3), base + 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line; errors name the offending byte offset."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("non-ASCII byte", exc.start) from exc
    text = text.rstrip("\r\n")
    base = len(HEADER) if text.startswith(HEADER) else 0
    for offset in range(base, len(text)):
        code = ord(text[offset])
        if code < _BIAS or code > 126:
            raise GraphFormatError(f"character {text[offset]!r} out of range", offset, text)

    n, start = _decode_size(text, base)
    bit_count = n * (n - 1) // 2
    char_count = (bit_count + 5) // 6
    end = start + char_count
    if len(text) < end:
        raise GraphFormatError(
            f"expected {char_count} data characters for n={n}, got {len(text) - start}",
            len(text),
            text,
        )
    if len(text) > end:
        raise GraphFormatError("unexpected trailing characters", end, text)

    packed = 0
    for offset in range(start, end):
        packed = packed << 6 | (ord(text[offset]) - _BIAS)
    padding = char_count * 6 - bit_count
    if padding and packed & ((1 << padding) - 1):
        raise GraphFormatError("nonzero padding bits", end - 1, text)
    packed >>= padding

    rows = [0] * n
    position = bit_count - 1
    for j in range(1, n):
        for i in range(j):
            if packed >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph._trusted(n, tuple(rows))


def graph6_bits(graph: Graph) -> int:
    """Upper-triangle bits in column order, first bit most significant."""
    bits = 0
    adj = graph.adj
    for j in range(1, graph.n):
        row = adj[j]
        for i in range(j):
            bits = bits << 1 | (row >> i & 1)
    return bits


def write_graph6(graph: Graph) -> str:
    n = graph.n
    bit_count = n * (n - 1) // 2
    char_count = (bit_count + 5) // 6
    packed = graph6_bits(graph) << (char_count * 6 - bit_count)
    return encode_size(n) + (_encode_bits(packed, char_count * 6) if char_count else "")


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def dump_graph6(graphs: Iterable[Graph], stream: IO[str]) -> int:
    count = 0
    for graph in graphs:
        stream.write(write_graph6(graph) + "\n")
        count += 1
    return count
