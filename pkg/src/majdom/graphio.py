"""Edge-list text format and DOT export.

Format: lines starting with ``#`` are comments, blank lines are ignored.  The
first data line is ``digraph N`` or ``graph N``; every following data line is
``u v`` (0-based), declaring the arc u->v or the edge {u, v}.  Serialisation
is the inverse with arcs emitted in ascending (u, v) order, so
parse(serialize(x)) == x and serialize(parse(text)) is canonical.
"""

from __future__ import annotations

from .core import Digraph, Graph, SignFunction


class ParseError(ValueError):
    """Malformed edge-list input; the message names the offending line."""


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse(text: str, expect: str | None):
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input: missing 'digraph N' or 'graph N' header")
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("digraph", "graph"):
        raise ParseError(f"line {lineno}: malformed header {header!r}")
    kind = parts[0]
    if expect is not None and kind != expect:
        raise ParseError(f"line {lineno}: expected a {expect}, got {kind!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: vertex count {parts[1]!r} is not an integer")
    if n < 0:
        raise ParseError(f"line {lineno}: negative vertex count {n}")

    pairs = []
    for lineno, line in lines:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {line!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        pairs.append((lineno, u, v))

    if kind == "digraph":
        g = Digraph(n)
        for lineno, u, v in pairs:
            if g.has_arc(u, v):
                raise ParseError(f"line {lineno}: duplicate arc {u}->{v}")
            g._out[u] |= 1 << v
            g._in[v] |= 1 << u
        return g
    g = Graph(n)
    for lineno, u, v in pairs:
        if g.has_edge(u, v):
            raise ParseError(f"line {lineno}: duplicate edge {{{u}, {v}}}")
        g._adj[u] |= 1 << v
        g._adj[v] |= 1 << u
    return g


def parse_digraph(text: str) -> Digraph:
    return _parse(text, "digraph")


def parse_graph(text: str) -> Graph:
    return _parse(text, "graph")


def parse_any(text: str) -> Digraph | Graph:
    """Parse either kind; the header decides."""
    return _parse(text, None)


def dumps_digraph(D: Digraph) -> str:
    lines = [f"digraph {D.n}"]
    lines += [f"{u} {v}" for u, v in D.arcs()]
    return "\n".join(lines) + "\n"


def dumps_graph(G: Graph) -> str:
    lines = [f"graph {G.n}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def dumps(g: Digraph | Graph) -> str:
    return dumps_digraph(g) if isinstance(g, Digraph) else dumps_graph(g)


def to_dot(g: Digraph | Graph, signs: SignFunction | None = None) -> str:
    """DOT rendering; a sign function becomes per-vertex labels "+1"/"-1"."""
    directed = isinstance(g, Digraph)
    if signs is not None and signs.n != g.n:
        raise ValueError("sign function size does not match the graph")
    lines = ["digraph {" if directed else "graph {"]
    if signs is not None:
        for v in range(g.n):
            lines.append(f'  {v} [label="{"+1" if signs.value(v) > 0 else "-1"}"];')
    sep = "->" if directed else "--"
    pairs = g.arcs() if directed else g.edges()
    for u, v in pairs:
        lines.append(f"  {u} {sep} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
