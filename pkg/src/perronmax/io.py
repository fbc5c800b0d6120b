"""Edge-list and graph6 readers/writers, plus degree-sequence parsing."""

from __future__ import annotations

import os
import re
from typing import Iterator

from .graph import DegreeSequence, Graph

__all__ = [
    "GraphFormatError",
    "decode_graph6",
    "encode_graph6",
    "format_edgelist",
    "iter_graph6",
    "parse_degree_sequence",
    "parse_edgelist",
    "read_graph",
    "write_graph",
]

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph text. ``line`` is 1-based, ``pos`` a 0-based byte offset."""

    def __init__(self, message: str, *, line: int | None = None, pos: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"byte {pos}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.pos = pos


# -- edge list ---------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list, expected vertex count", line=1)
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphFormatError(f"malformed header {head!r}, expected vertex count", line=lineno) from None
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}", line=lineno)
    seen: set[tuple[int, int]] = set()
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {ln!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {ln!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range [0, {n}) in {ln!r}", line=lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
    return Graph(n, seen)


def format_edgelist(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edge_list()])


# -- graph6 ------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 2**36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """graph6 string (no header, no trailing newline)."""
    n = g.n
    bits = [
        1 if g.has_edge(i, j) else 0
        for j in range(1, n)
        for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = [
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2))
        for k in range(0, len(bits), 6)
    ]
    return _encode_n(n) + "".join(body)


def decode_graph6(s: str) -> Graph:
    raw = s.strip()
    offset = 0
    if raw.startswith(GRAPH6_HEADER):
        raw = raw[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    data = []
    for i, ch in enumerate(raw):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", pos=offset + i)
        data.append(c - 63)
    if not data:
        raise GraphFormatError("empty graph6 string", pos=offset)
    if data[0] != 63:
        n, k = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field", pos=offset + len(data))
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        k = 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field", pos=offset + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        k = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[k:]
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            pos=offset + k + min(len(body), need),
        )
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(idx, 6)
            if (body[byte] >> (5 - bit)) & 1:
                edges.append((i, j))
            idx += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise GraphFormatError("non-zero graph6 padding bits", pos=offset + k + need - 1)
    return Graph(n, edges)


def iter_graph6(text: str) -> Iterator[Graph]:
    for ln in text.splitlines():
        if ln.strip():
            yield decode_graph6(ln)


# -- files -------------------------------------------------------------------


def _sniff(text: str) -> str:
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            return "edgelist" if re.fullmatch(r"-?\d+", ln) else "graph6"
    return "edgelist"


def read_graph(source: str | os.PathLike, fmt: str | None = None) -> Graph:
    """Read a graph from a path (or from ``-`` for stdin)."""
    if str(source) == "-":
        import sys

        text = sys.stdin.read()
    else:
        with open(source, encoding="ascii") as fh:
            text = fh.read()
    if fmt is None:
        suffix = os.path.splitext(str(source))[1].lower()
        fmt = "graph6" if suffix in {".g6", ".graph6"} else _sniff(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError("empty graph6 file", line=1)
        return decode_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, dest: str | os.PathLike | None = None, fmt: str = "edgelist") -> str:
    if fmt == "graph6":
        text = encode_graph6(g) + "\n"
    elif fmt == "edgelist":
        text = format_edgelist(g)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    if dest is not None:
        with open(dest, "w", encoding="ascii") as fh:
            fh.write(text)
    return text


# -- degree sequences --------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_degree_sequence(text: str) -> DegreeSequence:
    """Parse ``"4,4,3,3,2,1,1"``, ``"4 4 3"`` or ``"4^2,3^4,1^10"``.

    Order is irrelevant; the result is sorted non-increasing.
    """
    cleaned = text.strip().strip("()[]")
    tokens = [t for t in re.split(r"[,\s]+", cleaned) if t]
    if not tokens:
        raise ValueError("empty degree sequence")
    degrees: list[int] = []
    for t in tokens:
        m = _TOKEN.match(t)
        if m is None:
            raise ValueError(f"bad degree token {t!r}")
        d = int(m.group(1))
        if d < 1:
            raise ValueError(f"degrees must be positive, got {d}")
        degrees.extend([d] * (int(m.group(2)) if m.group(2) else 1))
    return DegreeSequence(tuple(degrees))
