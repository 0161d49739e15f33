"""Text formats: edge list, graph6 (short form), DOT export."""
from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_MAX = 62


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# ---------------------------------------------------------------------------
# edge list
# ---------------------------------------------------------------------------


def _ints(text: str, count: int, lineno: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {text.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {text.strip()!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1)
    n, m = _ints(lines[0], 2, 1)
    if n < 0 or m < 0:
        raise ParseError("negative vertex or edge count", 1)
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1}", len(lines))
    adj = [0] * n
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        if adj[u] >> v & 1:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def write_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", 1)
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ParseError("character outside the graph6 range", 1)
    n = data[0]
    if n == 63:
        raise ParseError("only the short graph6 form (n <= 62) is supported", 1)
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}", 1)
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


def write_graph6(G: Graph) -> str:
    if G.n > GRAPH6_MAX:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX}, got {G.n}")
    bits = [G.adj[u] >> v & 1 for v in range(1, G.n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(G.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------


def write_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        text = G.label_text(v).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {v} [label="{text}"];')
    lines.extend(f"  {u} -- {v};" for u, v in G.edges())
    lines.append("}")
    return "\n".join(lines)


_PARSERS = {"edge_list": parse_edge_list, "graph6": parse_graph6}
_WRITERS = {"edge_list": write_edge_list, "graph6": write_graph6, "dot": write_dot}


def parse_graph(text: str, format: str = "edge_list") -> Graph:
    try:
        parser = _PARSERS[format]
    except KeyError:
        raise ValueError(f"unknown input format {format!r}") from None
    return parser(text)


def write_graph(G: Graph, format: str = "edge_list") -> str:
    try:
        writer = _WRITERS[format]
    except KeyError:
        raise ValueError(f"unknown output format {format!r}") from None
    return writer(G)


def sniff_format(text: str) -> str:
    """Guess ``edge_list`` vs ``graph6`` from the first nonblank line."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return "edge_list"
    return "graph6"
