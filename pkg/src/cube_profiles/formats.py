"""Text formats for matchings.

JSON: ``{"n": 3, "edges": [[0, 1], [2, 6], [5, 7]]}`` with ``u < v`` per
edge and edges sorted ascending.

Edge list: one edge per line, two n-character bitstrings, coordinate 1 is
the rightmost character.
"""

from __future__ import annotations

import json

from .hypercube import Matching, edge_between


def to_json(m: Matching) -> str:
    return json.dumps({"n": m.n, "edges": [list(p) for p in m.vertex_pairs()]}) + "\n"


def to_edges(m: Matching) -> str:
    return "".join(f"{u:0{m.n}b} {v:0{m.n}b}\n" for u, v in m.vertex_pairs())


def to_dot(m: Matching) -> str:
    lines = [f"graph Q{m.n} {{"]
    for v in range(1 << m.n) if m.n <= 10 else ():
        lines.append(f'  v{v} [label="{v:0{m.n}b}"];')
    for e in m.edges:
        u, v = e.endpoints()
        lines.append(f'  v{u} -- v{v} [label="{e.dir + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


WRITERS = {"json": to_json, "edges": to_edges, "dot": to_dot}


def from_json(text: str) -> Matching:
    try:
        data = json.loads(text)
        n = data["n"]
        pairs = data["edges"]
    except (ValueError, KeyError, TypeError) as exc:
        raise ValueError(f"not a matching JSON document: {exc}") from None
    if not isinstance(n, int) or not isinstance(pairs, list):
        raise ValueError("matching JSON needs an integer 'n' and a list 'edges'")
    edges = []
    for pair in pairs:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(v, int) for v in pair)):
            raise ValueError(f"edge entry {pair!r} is not a pair of integers")
        edges.append(edge_between(pair[0], pair[1], n))
    return Matching(n, tuple(edges))


def from_edges(text: str, n: int | None = None) -> Matching:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or any(set(p) - {"0", "1"} for p in parts):
            raise ValueError(f"line {lineno}: expected two bitstrings, got {line!r}")
        if len(parts[0]) != len(parts[1]) or (n is not None and len(parts[0]) != n):
            raise ValueError(f"line {lineno}: bitstring length does not match the dimension")
        n = len(parts[0])
        edges.append(edge_between(int(parts[0], 2), int(parts[1], 2), n))
    if n is None:
        raise ValueError("empty edge list: dimension unknown")
    return Matching(n, tuple(edges))


def load(text: str, n: int | None = None) -> Matching:
    """Parse either format; JSON is recognised by a leading brace."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_edges(text, n)
