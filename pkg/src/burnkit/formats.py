"""Edge-list and graph6 readers/writers."""

from __future__ import annotations

from .graph import Graph, GraphFormatError

GRAPH6_HEADER = ">>graph6<<"


def read_edge_list(text: str) -> tuple[Graph, list[int]]:
    """Parse an edge list and compact its labels.

    One edge per line as two whitespace-separated nonnegative integers. A line
    holding a single label declares a vertex without edges. Blank lines and
    lines starting with ``#`` are skipped. Returns the graph and the sorted
    original labels, so ``labels[i]`` is the input label of vertex ``i``.
    """
    seen: set[int] = set()
    raw_edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) > 2:
            raise GraphFormatError(f"expected at most two labels, got {len(parts)}", lineno, "line")
        try:
            labels = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer label in {stripped!r}", lineno, "line") from None
        if any(x < 0 for x in labels):
            raise GraphFormatError("negative label", lineno, "line")
        if len(labels) == 2:
            if labels[0] == labels[1]:
                raise GraphFormatError(f"self-loop at label {labels[0]}", lineno, "line")
            raw_edges.append((labels[0], labels[1]))
        seen.update(labels)
    order = sorted(seen)
    index = {lab: i for i, lab in enumerate(order)}
    g = Graph.from_edges(len(order), [(index[u], index[v]) for u, v in raw_edges])
    return g, order


def write_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines += [str(v) for v in range(g.n) if g.degree(v) == 0]
    return "\n".join(lines) + "\n"


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 36-bit size field", len(data))
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 18-bit size field", len(data))
        width, start = 3, 1
    n = 0
    for i in range(start, start + width):
        n = (n << 6) | (data[i] - 63)
    return n, start + width


def decode_graph6(line: str | bytes) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} outside graph6 range 63..126", pos)
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, got {len(body)}", offset)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("nonzero padding bits", offset + need - 1)
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    adj = [set(a) for a in g.adjacency]
    bits = [1 if i in adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def iter_graph6(text: str):
    for line in text.splitlines():
        if line.strip():
            yield decode_graph6(line)


def parse_graph(text: str | bytes, fmt: str = "edgelist") -> Graph:
    """Parse a single graph. ``fmt`` is ``"graph6"`` or ``"edgelist"`` (``"edge-list"`` also accepted)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("input is not UTF-8", exc.start) from None
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return decode_graph6(lines[0])
    if fmt in ("edgelist", "edge-list"):
        return read_edge_list(text)[0]
    raise ValueError(f"unknown format {fmt!r}")
