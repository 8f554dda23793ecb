"""Recognizers for bipartite, split, threshold, and perfect elimination
bipartite graphs, plus the linear-style secure-independent-domination rule
for connected threshold graphs.

Every certificate a recognizer hands out is re-verified against its defining
conditions before being returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, bits, is_connected, mask_of
from .verify import Variant, verify_set


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class ThresholdCertificate:
    """Split partition plus the nested-neighborhood orderings.

    Closed neighborhoods are nested upward along clique_order and open
    neighborhoods nested downward along independent_order.
    """

    partition: SplitPartition
    clique_order: tuple[int, ...]
    independent_order: tuple[int, ...]


@dataclass(frozen=True)
class EliminationOrdering:
    """Pairwise vertex-disjoint edges eliminated in order, with the cumulative
    endpoint sets after each step."""

    edges: tuple[tuple[int, int], ...]
    eliminated: tuple[frozenset[int], ...]


class PebStatus(Enum):
    FOUND = "found"
    ABSENT = "absent"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class PebResult:
    status: PebStatus
    ordering: EliminationOrdering | None = None


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-color by breadth-first layering per component; None on odd cycles.

    The smallest vertex of each component lands in the first part.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(g.adj[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    x = frozenset(v for v in range(g.n) if color[v] == 0)
    y = frozenset(v for v in range(g.n) if color[v] == 1)
    return x, y


def _partition_valid(g: Graph, clique_mask: int, indep_mask: int) -> bool:
    for v in bits(clique_mask):
        if g.adj[v] & clique_mask != clique_mask & ~(1 << v):
            return False
    for v in bits(indep_mask):
        if g.adj[v] & indep_mask:
            return False
    return True


def split_partition(g: Graph) -> SplitPartition | None:
    """Clique/independent partition via the degree-sequence test.

    With degrees sorted non-increasingly and h the largest index (1-based)
    with d_h >= h-1, the graph is split iff
    sum(d_1..d_h) == h(h-1) + sum(d_{h+1}..d_n); the h highest-degree
    vertices then form the clique.  The extracted partition is re-verified.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    h = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            h = i
    if sum(degs[:h]) != h * (h - 1) + sum(degs[h:]):
        return None
    clique_mask = mask_of(order[:h])
    indep_mask = g.all_mask & ~clique_mask
    if not _partition_valid(g, clique_mask, indep_mask):
        raise RuntimeError("degree test accepted a graph but the extracted partition is invalid")
    return SplitPartition(frozenset(bits(clique_mask)), frozenset(bits(indep_mask)))


def recognize_threshold(g: Graph) -> ThresholdCertificate | None:
    """Iterated peeling: repeatedly remove an isolated-in-remainder vertex,
    else a universal-in-remainder vertex; threshold iff the graph empties.

    Isolated removals feed the independent side, universal removals the
    clique side.  Peel order determines the nested orderings, which are
    re-verified before returning.
    """
    alive = g.all_mask
    clique_peel: list[int] = []
    indep_peel: list[int] = []
    while alive:
        rest = None
        for v in bits(alive):
            if not (g.adj[v] & alive):
                rest = ("i", v)
                break
        if rest is None:
            for v in bits(alive):
                if g.adj[v] & alive == alive & ~(1 << v):
                    rest = ("u", v)
                    break
        if rest is None:
            return None
        kind, v = rest
        (indep_peel if kind == "i" else clique_peel).append(v)
        alive &= ~(1 << v)

    clique_order = tuple(reversed(clique_peel))
    indep_order = tuple(reversed(indep_peel))
    part = SplitPartition(frozenset(clique_peel), frozenset(indep_peel))

    if not _partition_valid(g, mask_of(part.clique), mask_of(part.independent)):
        raise RuntimeError("threshold peeling produced an invalid split partition")
    prev = 0
    for x in clique_order:
        cur = g.closed(x)
        if prev & ~cur:
            raise RuntimeError("threshold clique ordering is not nested")
        prev = cur
    prev = g.all_mask
    for y in indep_order:
        cur = g.adj[y]
        if cur & ~prev:
            raise RuntimeError("threshold independent ordering is not nested")
        prev = cur
    return ThresholdCertificate(part, clique_order, indep_order)


def threshold_insds(g: Graph) -> frozenset[int]:
    """Minimum secure independent dominating set of a connected threshold graph.

    Rule: take the independent side I of the split partition; if some clique
    vertex has no neighbor in I, add the smallest such vertex.  The result is
    re-verified before returning.
    """
    if not is_connected(g):
        raise ValueError("threshold rule requires a connected graph")
    cert = recognize_threshold(g)
    if cert is None:
        raise ValueError("graph is not a threshold graph")
    indep_mask = mask_of(cert.partition.independent)
    chosen = indep_mask
    for c in sorted(cert.partition.clique):
        if not (g.adj[c] & indep_mask):
            chosen |= 1 << c
            break
    witness = frozenset(bits(chosen))
    report = verify_set(g, witness, Variant.INSDOM)
    if not report.holds:
        raise RuntimeError("threshold rule produced a set that fails verification")
    return witness


# ---------------------------------------------------------------------------
# Perfect elimination bipartite graphs.
# ---------------------------------------------------------------------------


def is_bisimplicial(g: Graph, u: int, v: int, alive: int | None = None) -> bool:
    """Edge (u, v) of a bipartite graph is bisimplicial when N(u) and N(v)
    span a complete bipartite subgraph (within the alive-induced subgraph)."""
    if alive is None:
        alive = g.all_mask
    if not (g.adj[u] >> v & 1) or not (alive >> u & 1) or not (alive >> v & 1):
        return False
    nu = g.adj[u] & alive
    nv = g.adj[v] & alive
    for x in bits(nv):
        if nu & ~g.adj[x]:
            return False
    return True


def verify_elimination_ordering(g: Graph, ordering: EliminationOrdering) -> bool:
    """Re-check pairwise disjointness, stepwise bisimpliciality, cumulative
    endpoint sets, and the edgeless remainder."""
    if bipartition(g) is None:
        return False
    if len(ordering.edges) != len(ordering.eliminated):
        return False
    alive = g.all_mask
    seen = 0
    for (u, v), cumulative in zip(ordering.edges, ordering.eliminated):
        if seen & (1 << u) or seen & (1 << v) or u == v:
            return False
        if not is_bisimplicial(g, u, v, alive):
            return False
        seen |= (1 << u) | (1 << v)
        alive &= ~((1 << u) | (1 << v))
        if frozenset(bits(seen)) != cumulative:
            return False
    for u in bits(alive):
        if g.adj[u] & alive:
            return False
    return True


def _alive_edges(g: Graph, alive: int):
    for u in bits(alive):
        for v in bits(g.adj[u] & alive):
            if v > u:
                yield (u, v)


_PEB_EXHAUSTIVE_LIMIT = 20
_PEB_STATE_CAP = 2_000_000


def perfect_edge_elimination(g: Graph) -> PebResult:
    """Find a perfect edge elimination ordering, certify that none exists,
    or report unresolved.

    Greedy elimination of the smallest bisimplicial edge is attempted first;
    if it stalls, graphs with at most 20 vertices get an exhaustive
    memoized search over elimination choices (greedy alone is not known to
    be a complete recognizer), larger ones come back unresolved.
    """
    if bipartition(g) is None:
        return PebResult(PebStatus.ABSENT)

    alive = g.all_mask
    chosen: list[tuple[int, int]] = []
    stalled = False
    while True:
        edges = list(_alive_edges(g, alive))
        if not edges:
            return PebResult(PebStatus.FOUND, _build_ordering(chosen))
        step = next(((u, v) for (u, v) in edges if is_bisimplicial(g, u, v, alive)), None)
        if step is None:
            stalled = True
            break
        chosen.append(step)
        alive &= ~((1 << step[0]) | (1 << step[1]))

    assert stalled
    if g.n > _PEB_EXHAUSTIVE_LIMIT:
        return PebResult(PebStatus.UNRESOLVED)

    dead_states: set[int] = set()

    def search(alive_mask: int, acc: list[tuple[int, int]]) -> bool:
        edges = list(_alive_edges(g, alive_mask))
        if not edges:
            return True
        if alive_mask in dead_states:
            return False
        if len(dead_states) > _PEB_STATE_CAP:
            raise MemoryError
        for (u, v) in edges:
            if not is_bisimplicial(g, u, v, alive_mask):
                continue
            acc.append((u, v))
            if search(alive_mask & ~((1 << u) | (1 << v)), acc):
                return True
            acc.pop()
        dead_states.add(alive_mask)
        return False

    acc: list[tuple[int, int]] = []
    try:
        if search(g.all_mask, acc):
            return PebResult(PebStatus.FOUND, _build_ordering(acc))
    except (MemoryError, RecursionError):
        return PebResult(PebStatus.UNRESOLVED)
    return PebResult(PebStatus.ABSENT)


def _build_ordering(pairs: list[tuple[int, int]]) -> EliminationOrdering:
    cumulative = []
    seen: set[int] = set()
    for (u, v) in pairs:
        seen |= {u, v}
        cumulative.append(frozenset(seen))
    return EliminationOrdering(tuple(pairs), tuple(cumulative))
