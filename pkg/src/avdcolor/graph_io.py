"""Graph parsing and emission: graph6, DIMACS edge format, plain edge lists."""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import Graph

FORMATS = ("graph6", "dimacs", "edgelist")

_G6_HEADER = ">>graph6<<"


def parse_graph(text: bytes | str, fmt: str) -> Graph:
    """Parse ``text`` in the named format; rejects malformed input."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not ASCII: {exc}") from None
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> bytes:
    """Serialize ``g``; parse_graph(emit_graph(g, f), f) preserves the edge set."""
    if fmt == "graph6":
        return _emit_graph6(g)
    if fmt == "dimacs":
        return _emit_dimacs(g)
    if fmt == "edgelist":
        return _emit_edgelist(g)
    raise GraphFormatError(f"unknown format {fmt!r}")


def sniff_format(text: bytes | str) -> str:
    """Best-effort format detection for CLI convenience."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    stripped = text.lstrip()
    if stripped.startswith(_G6_HEADER):
        return "graph6"
    for line in stripped.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(("c ", "c\t", "p ")) or line == "c":
            return "dimacs"
        if line.startswith("e "):
            return "dimacs"
        if line.startswith("#"):
            return "edgelist"
        toks = line.split()
        if len(toks) == 2 and all(t.isdigit() for t in toks):
            return "edgelist"
        return "graph6"
    return "edgelist"


# -- graph6 (McKay ASCII encoding) ----------------------------------------


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphFormatError("graph6 byte outside printable range")
    if data[0] < 63:
        n, body = data[0], data[1:]
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size header")
        if data[1] == 63:
            raise GraphFormatError("graph6 sizes beyond 2^18 not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body length {len(body)} does not match n={n}")
    bits = []
    for b in body:
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def _emit_graph6(g: Graph) -> bytes:
    if g.vertices != tuple(range(g.n)):
        raise GraphFormatError("graph6 requires a dense vertex set 0..n-1")
    n = g.n
    if n < 63:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise GraphFormatError("graph6 sizes beyond 2^18 not supported")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i:i + 6]:
            b = (b << 1) | bit
        body.append(b + 63)
    return head + bytes(body)


# -- DIMACS edge format -----------------------------------------------------


def _parse_dimacs(text: str) -> Graph:
    n = None
    m_declared = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(toks) != 4 or toks[1] != "edge":
                raise GraphFormatError(f"line {lineno}: malformed problem line")
            try:
                n, m_declared = int(toks[2]), int(toks[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad counts") from None
        elif toks[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(toks) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line")
            try:
                u, v = int(toks[1]) - 1, int(toks[2]) - 1
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad endpoints") from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: vertex out of range")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
            seen.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {toks[0]!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if m_declared is not None and m_declared != len(edges):
        raise GraphFormatError(
            f"header declares {m_declared} edges, found {len(edges)}")
    return Graph(n, edges)


def _emit_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.edge_count}"]
    for u, v in g.sorted_edges():
        lines.append(f"e {u + 1} {v + 1}")
    return ("\n".join(lines) + "\n").encode("ascii")


# -- plain edge list --------------------------------------------------------


def _parse_edgelist(text: str) -> Graph:
    pairs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad endpoints") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        pairs.append(key)
    n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    return Graph(n, pairs)


def _emit_edgelist(g: Graph) -> bytes:
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    return ("\n".join(lines) + ("\n" if lines else "")).encode("ascii")
