"""graph6 and plain edge-list text formats.

graph6 is the compact printable encoding of undirected simple graphs: a size
header N(n) followed by the upper-triangle adjacency bits R(x), both packed
six bits per printable byte (offset 63).  This implementation is bit-exact
for 0 <= n <= 64 and rejects anything larger.  The secondary edge-list
format is one "u v" pair per line, 0-indexed, with '#' comments.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class EdgeListError(ValueError):
    """Malformed edge-list input."""


def _pair_bits(n: int) -> list[tuple[int, int]]:
    # upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no trailing newline, no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 0x3F) + 63) for s in (12, 6, 0))
    out = [head]
    group = 0
    width = 0
    for i, j in _pair_bits(n):
        group = group << 1 | (g.adj[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(group + 63))
            group = 0
            width = 0
    if width:
        group <<= 6 - width
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; a leading '>>graph6<<' header is allowed."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at position {pos} outside graph6 range")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            # the 8-byte huge-size header always means n > 2^18
            raise Graph6Error(f"graph order exceeds the {MAX_VERTICES}-vertex cap")
        if len(s) < 4:
            raise Graph6Error("size header truncated")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph order {n} exceeds the {MAX_VERTICES}-vertex cap")
    pairs = _pair_bits(n)
    need = (len(pairs) + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"bit-vector truncated: {len(body)} bytes, expected {need}")
    if len(body) > need:
        raise Graph6Error(f"trailing bytes after bit-vector: {len(body) - need}")
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        group = ord(body[k // 6]) - 63
        if group >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    # padding bits beyond the last pair must be zero for a canonical string
    if pairs:
        tail = ord(body[-1]) - 63
        pad = (6 - len(pairs) % 6) % 6
        if tail & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits in final group")
    return Graph(n, tuple(rows))


def parse_graph6_lines(text: str) -> list[Graph]:
    """Decode a multi-line graph6 stream, skipping blank lines."""
    out = []
    for line in text.splitlines():
        if line.strip():
            out.append(parse_graph6(line))
    return out


def emit_graph6_lines(graphs) -> str:
    """Encode graphs one per line, with a trailing newline when nonempty."""
    lines = [emit_graph6(g) for g in graphs]
    return "\n".join(lines) + "\n" if lines else ""


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse "u v" lines into a graph.

    Blank lines and '#' comments are skipped.  Vertex count defaults to
    1 + the largest index seen (0 for an empty list); pass ``n`` to pin it,
    for example to keep trailing isolated vertices.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two vertex indices, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex index")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
        top = max(top, u, v)
    count = top + 1 if n is None else n
    if count > MAX_VERTICES:
        raise EdgeListError(f"vertex count {count} exceeds the {MAX_VERTICES}-vertex cap")
    if n is not None and top >= n:
        raise EdgeListError(f"vertex {top} outside declared count {n}")
    return Graph.from_edges(count, edges)


def emit_edge_list(g: Graph) -> str:
    """One "u v" line per edge, sorted; empty string for an edgeless graph."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n" if lines else ""
