"""Immutable bitmask graphs, named-family generators, products, and text formats.

Vertices are dense integers ``0..n-1``. Adjacency is kept as one Python int
bitmask per vertex, which keeps set algebra (union, intersection, popcount)
cheap for the exact solvers while placing no hard limit on ``n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_MAX_PRODUCT_VERTICES = 1 << 20

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "wheel",
    "grid",
    "apex_join",
)

_FAMILY_ALIASES = {
    "biclique": "complete_bipartite",
    "complete-bipartite": "complete_bipartite",
    "apex": "apex_join",
    "apex-join": "apex_join",
}

_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "wheel": 1,
    "grid": 2,
    "apex_join": 0,
}


class GraphError(ValueError):
    """Malformed graph construction or unparsable graph text."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph; immutable after construction.

    ``adj[v]`` is the open-neighborhood bitmask of ``v``.  Labels are optional
    per-vertex text tags carried for bookkeeping (reduction gadget roles);
    they never influence any algorithm and are ignored by equality.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Iterable[str | None] | None = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) rejected")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        if labels is None:
            self.labels = None
        else:
            lab = tuple(labels)
            if len(lab) != n:
                raise GraphError(f"expected {n} labels, got {len(lab)}")
            self.labels = lab

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> int:
        """Closed-neighborhood bitmask N[v]."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def label(self, v: int) -> str | None:
        return None if self.labels is None else self.labels[v]

    def with_labels(self, labels: Iterable[str | None]) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = self.adj
        lab = tuple(labels)
        if len(lab) != self.n:
            raise GraphError(f"expected {self.n} labels, got {len(lab)}")
        g.labels = lab
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def graph_new(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops reject."""
    return Graph(n, edges)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.all_mask


# ---------------------------------------------------------------------------
# Named families.  Canonical numbering:
#   path/cycle: vertices 0..n-1 in order;
#   complete_bipartite: part A = 0..p-1 (the smaller part), B = p..p+q-1;
#   star: hub 0, leaves 1..q;
#   wheel: rim cycle 0..n-1, hub n;
#   grid m*k: cell (r, c) -> r*k + c;
#   apex_join: new vertex g.n adjacent to every vertex of g.
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    _require_size("path", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n vertices; degenerates to K_1 / K_2 for n = 1, 2."""
    _require_size("cycle", n)
    if n <= 2:
        return path(n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require_size("complete", n)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    _require_size("complete_bipartite", p)
    _require_size("complete_bipartite", q)
    p, q = min(p, q), max(p, q)
    return Graph(p + q, [(a, b) for a in range(p) for b in range(p, p + q)])


def star(q: int) -> Graph:
    """K_{1,q}: hub 0 with q leaves."""
    return complete_bipartite(1, q)


def apex_join(g: Graph) -> Graph:
    """Add one vertex adjacent to every vertex of g."""
    edges = list(g.edges()) + [(v, g.n) for v in range(g.n)]
    labels = None if g.labels is None else g.labels + (None,)
    return Graph(g.n + 1, edges, labels)


def wheel(n: int) -> Graph:
    """Wheel with rim C_n and hub n (total n+1 vertices)."""
    _require_size("wheel", n)
    return apex_join(cycle(n))


def cartesian_product(
    g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_PRODUCT_VERTICES
) -> Graph:
    """Cartesian product; vertex (a, b) maps to a*h.n + b."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product requires nonempty factors")
    if g.n * h.n > max_vertices:
        raise GraphError(f"product would have {g.n * h.n} vertices, limit {max_vertices}")
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges():
            edges.append((a * h.n + b1, a * h.n + b2))
    for b in range(h.n):
        for a1, a2 in g.edges():
            edges.append((a1 * h.n + b, a2 * h.n + b))
    return Graph(g.n * h.n, edges)


def grid(m: int, k: int) -> Graph:
    """m*k grid: the cartesian product of paths P_m and P_k."""
    _require_size("grid", m)
    _require_size("grid", k)
    return cartesian_product(path(m), path(k))


def _require_size(kind: str, value: int) -> None:
    if value < 1:
        raise GraphError(f"{kind} size parameter must be >= 1, got {value}")


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance (kind plus size parameters)."""

    kind: str
    params: tuple[int, ...] = ()
    base: Graph | None = None

    def __post_init__(self):
        kind = _FAMILY_ALIASES.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        if kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        arity = _FAMILY_ARITY[kind]
        if len(self.params) != arity:
            raise GraphError(f"{kind} takes {arity} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise GraphError(f"{kind} parameters must be >= 1, got {self.params}")
        if kind == "apex_join":
            if self.base is None:
                raise GraphError("apex_join requires a base graph")
        elif self.base is not None:
            raise GraphError(f"{kind} does not take a base graph")
        if kind == "complete_bipartite":
            object.__setattr__(self, "params", tuple(sorted(self.params)))

    def build(self) -> Graph:
        kind, params = self.kind, self.params
        if kind == "path":
            return path(params[0])
        if kind == "cycle":
            return cycle(params[0])
        if kind == "complete":
            return complete(params[0])
        if kind == "complete_bipartite":
            return complete_bipartite(*params)
        if kind == "star":
            return star(params[0])
        if kind == "wheel":
            return wheel(params[0])
        if kind == "grid":
            return grid(*params)
        return apex_join(self.base)

    @classmethod
    def from_tokens(cls, tokens: list[str], base: Graph | None = None) -> "FamilySpec":
        """Parse CLI-style tokens like ["path", "10"] or ["grid", "3", "4"]."""
        if not tokens:
            raise GraphError("missing family name")
        kind = _FAMILY_ALIASES.get(tokens[0], tokens[0])
        try:
            params = tuple(int(t) for t in tokens[1:])
        except ValueError as exc:
            raise GraphError(f"family parameters must be integers: {tokens[1:]}") from exc
        return cls(kind, params, base)


def generate(spec: FamilySpec) -> Graph:
    return spec.build()


# ---------------------------------------------------------------------------
# Text formats.
#
# Edge-list: line 1 is the vertex count; each following non-empty line is
# "u v" with 0 <= u < v < n; '#' starts a comment line.
#
# Structured: a JSON object {"n": int, "edges": [[u, v], ...], "labels": [...]}
# where "labels" is optional.
# ---------------------------------------------------------------------------


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt in ("json", "structured"):
        return _parse_json(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        lines = [str(g.n)]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if fmt in ("json", "structured"):
        doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
        if g.labels is not None:
            doc["labels"] = list(g.labels)
        return json.dumps(doc) + "\n"
    raise GraphError(f"unknown graph format {fmt!r}")


def _parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise GraphError(f"line {lineno}: expected a single vertex count, got {raw!r}")
            try:
                n = int(parts[0])
            except ValueError as exc:
                raise GraphError(f"line {lineno}: vertex count is not an integer: {raw!r}") from exc
            if n < 0:
                raise GraphError(f"line {lineno}: vertex count must be non-negative")
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"line {lineno}: endpoints are not integers: {raw!r}") from exc
        if not (0 <= u < v):
            raise GraphError(f"line {lineno}: edges must satisfy 0 <= u < v, got {raw!r}")
        if v >= n:
            raise GraphError(f"line {lineno}: endpoint {v} inconsistent with vertex count {n}")
        edges.append((u, v))
    if n is None:
        raise GraphError("empty graph text: missing vertex-count line")
    return Graph(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON graph: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise GraphError("JSON graph must be an object with fields 'n' and 'edges'")
    n = doc["n"]
    edges = doc["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphError("JSON graph fields have wrong types")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    labels = doc.get("labels")
    return Graph(n, pairs, labels)
