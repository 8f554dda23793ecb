"""Shared brute-force oracles and instance generators for the test suite.

The naive_* functions re-state the variant definitions with plain Python
sets, independent of the library's bitmask machinery, so they can serve as
oracles for it.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from secdom import Graph, SetCoverInstance
from secdom.verify import Variant

VARIANTS = (Variant.DOM, Variant.INDOM, Variant.IDOM, Variant.SDOM, Variant.INSDOM)


def adjacency_sets(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def naive_dominating(adj: list[set[int]], n: int, s: set[int]) -> bool:
    return all(u in s or adj[u] & s for u in range(n))


def naive_independent(adj: list[set[int]], s: set[int]) -> bool:
    return all(not (adj[u] & s) for u in s)


def naive_epn(adj: list[set[int]], n: int, s: set[int], v: int) -> set[int]:
    return {w for w in range(n) if w not in s and adj[w] & s == {v}}


def naive_defenders(adj: list[set[int]], n: int, s: set[int], u: int) -> set[int]:
    out = set()
    for v in adj[u] & s:
        if naive_dominating(adj, n, (s - {v}) | {u}):
            out.add(v)
    return out


def naive_secure(adj: list[set[int]], n: int, s: set[int]) -> bool:
    if not naive_dominating(adj, n, s):
        return False
    return all(naive_defenders(adj, n, s, u) for u in range(n) if u not in s)


def naive_isolate(adj: list[set[int]], n: int, s: set[int]) -> bool:
    if n == 0:
        return not s
    if not naive_dominating(adj, n, s):
        return False
    return any(not (adj[v] & s) for v in s)


def naive_feasible(g: Graph, s: set[int], variant: Variant) -> bool:
    adj = adjacency_sets(g)
    n = g.n
    if n == 0:
        return not s
    if not naive_dominating(adj, n, s):
        return False
    if variant.needs_independence and not naive_independent(adj, s):
        return False
    if variant.needs_isolate and not any(not (adj[v] & s) for v in s):
        return False
    if variant.needs_defense and not naive_secure(adj, n, s):
        return False
    return True


def brute_minimum(g: Graph, variant: Variant) -> tuple[int | None, frozenset[int] | None]:
    """Smallest feasible set by plain enumeration (oracle for the solver)."""
    if g.n == 0:
        return 0, frozenset()
    for k in range(1, g.n + 1):
        for comb in itertools.combinations(range(g.n), k):
            if naive_feasible(g, set(comb), variant):
                return k, frozenset(comb)
    return None, None


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_bipartite(rng: random.Random, nx: int, ny: int, p: float = 0.5):
    edges = [(a, nx + b) for a in range(nx) for b in range(ny) if rng.random() < p]
    g = Graph(nx + ny, edges)
    return g, frozenset(range(nx)), frozenset(range(nx, nx + ny))


def random_max_degree3(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, 0.4)
        if all(g.degree(v) <= 3 for v in range(n)):
            return g


def random_set_cover(rng: random.Random, max_n: int = 6, max_m: int = 5) -> SetCoverInstance:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    subsets = []
    for _ in range(m):
        size = rng.randint(1, n)
        subsets.append(set(rng.sample(range(n), size)))
    for x in range(n):
        if not any(x in sub for sub in subsets):
            subsets[rng.randrange(m)].add(x)
    return SetCoverInstance(n, tuple(frozenset(s) for s in subsets))


def brute_min_cover(inst: SetCoverInstance) -> int:
    universe = set(range(inst.universe_size))
    for k in range(1, inst.m + 1):
        for comb in itertools.combinations(range(inst.m), k):
            if set().union(*(inst.subsets[j] for j in comb)) == universe:
                return k
    raise AssertionError("instance invariant guarantees a cover")


def threshold_from_sequence(seq: tuple[str, ...]) -> Graph:
    """Build a threshold graph from a creation sequence over {'i', 'u'}
    (vertex 0 first; 'u' joins the new vertex to everything present)."""
    n = len(seq) + 1
    edges = []
    for j, op in enumerate(seq, start=1):
        if op == "u":
            edges.extend((i, j) for i in range(j))
    return Graph(n, edges)


def connected_threshold_graphs(max_n: int):
    """All connected threshold graphs up to max_n vertices, deduplicated.

    Degree sequences identify threshold graphs uniquely, so they serve as
    the deduplication key.  Connectivity needs the last creation step to be
    a join (or a single vertex).
    """
    for n in range(1, max_n + 1):
        seen = set()
        for seq in itertools.product("iu", repeat=n - 1):
            if n > 1 and seq[-1] != "u":
                continue
            g = threshold_from_sequence(seq)
            key = tuple(sorted(g.degree(v) for v in range(n)))
            if key in seen:
                continue
            seen.add(key)
            yield g


@lru_cache(maxsize=1)
def atlas_graphs() -> tuple[Graph, ...]:
    """All 1253 non-isomorphic graphs with up to 7 vertices."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        mapping = {node: i for i, node in enumerate(sorted(G.nodes()))}
        out.append(Graph(G.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in G.edges()]))
    return tuple(out)


@lru_cache(maxsize=1)
def connected_atlas_graphs() -> tuple[Graph, ...]:
    from secdom import is_connected

    return tuple(g for g in atlas_graphs() if g.n >= 1 and is_connected(g))


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test for tiny graphs (n <= 8)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    gset = set(g.edges())
    for perm in itertools.permutations(range(h.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in gset for u, v in h.edges()):
            return True
    return False


def spanning_subgraph(rng: random.Random, g: Graph, keep: float = 0.7) -> Graph:
    edges = [e for e in g.edges() if rng.random() < keep]
    return Graph(g.n, edges)
