"""Edge-list text format and the graph6 codec."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError, new_graph


class FormatError(GraphError):
    """Malformed edge-list or graph6 input."""


# -- edge list -------------------------------------------------------------
#
#   n m
#   u v        (m lines, 0-based ids)
#
# blank lines and lines starting with '#' are ignored.


def parse_edgelist(text: str) -> Graph:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens.append((lineno, stripped.split()))
    if not tokens:
        raise FormatError("empty edge list")
    lineno, head = tokens[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must be two integers") from None
    body = tokens[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from None
    try:
        return new_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    edges = g.edges()
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    rows = g.rows
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(record: str) -> Graph:
    s = record.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"illegal graph6 character {ch!r}")
    data = [ord(ch) - 63 for ch in s]
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] != 63:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    if n == 0:
        raise FormatError("graph6 record with zero vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise FormatError(f"graph6 body has {len(data) - pos} bytes, expected {need} for n={n}")
    rows = [0] * n
    k = 0
    body = data[pos:]
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits must be zero for a bit-exact encoding
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero graph6 padding bits")
    return Graph(n, rows)


def ingest_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield decode_graph6(line)
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read one graph from an edge-list or graph6 file (detected by suffix)."""
    path = Path(path)
    text = path.read_text()
    if fmt is None:
        fmt = "g6" if path.suffix in (".g6", ".graph6") else "edgelist"
    if fmt == "g6":
        graphs = list(ingest_graph6(text.splitlines()))
        if len(graphs) != 1:
            raise FormatError(f"{path}: expected one graph6 record, found {len(graphs)}")
        return graphs[0]
    return parse_edgelist(text)


def read_graphs(path: str | Path) -> list[Graph]:
    """Read every graph in a file: graph6 (one per line) or a single edge list."""
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".g6", ".graph6"):
        return list(ingest_graph6(text.splitlines()))
    return [parse_edgelist(text)]
