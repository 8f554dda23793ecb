"""Executable hardness-reduction gadgets with forward witness maps and
reverse solution extraction.

Each construction returns a role-labeled gadget graph together with the
additive parameter offset of its size identity:

  set-cover -> split-graph isolate domination        offset m
  bipartite domination -> PEB isolate domination     offset l (#attached paths)
  independent domination -> secure independent dom.  offset n
  pendant-path ("GP") graph, plain domination        offset n  (and gamma_is = 2n)
  degree-3 independent domination -> degree-5 MInSDS offset 3n

Forward maps turn a source solution into a gadget witness; extraction maps a
verified gadget witness back to a source solution within the offset bound.
Both directions re-verify their outputs instead of trusting the identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import EliminationOrdering, bipartition
from .graphs import Graph, bits, mask_of
from .verify import Variant, verify_set

Y1_RULES = ("no-pendant-neighbor", "pendant-neighbor")


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe 0..n-1 plus a family of subsets whose union must be the
    whole universe (otherwise no cover exists and construction refuses)."""

    universe_size: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "subsets", tuple(frozenset(s) for s in self.subsets))
        if self.universe_size < 1:
            raise ValueError("universe must have at least one element")
        if not self.subsets:
            raise ValueError("at least one subset is required")
        for j, sub in enumerate(self.subsets):
            if not sub:
                raise ValueError(f"subset {j} is empty")
            for x in sub:
                if not (0 <= x < self.universe_size):
                    raise ValueError(f"subset {j} contains out-of-range element {x}")
        missing = set(range(self.universe_size)) - set().union(*self.subsets)
        if missing:
            raise ValueError(f"elements never covered by any subset: {sorted(missing)}")

    @property
    def m(self) -> int:
        return len(self.subsets)


def parse_set_cover(text: str) -> SetCoverInstance:
    """Parse 'n m' header plus m lines of 1-based element ids."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("empty set-cover text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} subsets, found {len(lines) - 1}")
    subsets = []
    for ln in lines[1:]:
        subsets.append(frozenset(int(tok) - 1 for tok in ln.split()))
    return SetCoverInstance(n, tuple(subsets))


def serialize_set_cover(inst: SetCoverInstance) -> str:
    lines = [f"{inst.universe_size} {inst.m}"]
    for sub in inst.subsets:
        lines.append(" ".join(str(x + 1) for x in sorted(sub)))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReductionOutput:
    """A gadget graph with role bookkeeping.

    ``offset``: a source bound k maps to gadget bound k + offset.
    ``roles``: role name (1-based subscripts, e.g. "c_2") -> vertex id.
    ``gadget_variant`` / ``source_variant``: the problems each side solves
    (source_variant is None for set cover, which is not a domination problem).
    """

    kind: str
    graph: Graph
    offset: int
    roles: dict[str, int]
    gadget_variant: Variant
    source_variant: Variant | None
    source_graph: Graph | None = None
    source_instance: SetCoverInstance | None = None
    ordering: EliminationOrdering | None = None
    attached: tuple[int, ...] = field(default_factory=tuple)


def setcover_to_split(inst: SetCoverInstance) -> ReductionOutput:
    """Split-graph gadget for isolate domination.

    Vertices: element vertices x_i (0..n-1), then per subset j a clique
    vertex c_j, a clique vertex u_j, and a pendant v_j hanging off u_j.
    Edges: x_i ~ c_j for x_i in C_j, a clique on all c/u vertices, u_j ~ v_j.
    Minimum isolate dominating set size = m + minimum cover size.
    """
    n, m = inst.universe_size, inst.m
    c0, u0, v0 = n, n + m, n + 2 * m
    edges = []
    for j, sub in enumerate(inst.subsets):
        edges.extend((x, c0 + j) for x in sorted(sub))
    clique = list(range(c0, v0))
    edges.extend((a, b) for i, a in enumerate(clique) for b in clique[i + 1 :])
    edges.extend((u0 + j, v0 + j) for j in range(m))

    roles = {f"x_{i + 1}": i for i in range(n)}
    roles.update({f"c_{j + 1}": c0 + j for j in range(m)})
    roles.update({f"u_{j + 1}": u0 + j for j in range(m)})
    roles.update({f"v_{j + 1}": v0 + j for j in range(m)})
    labels = _labels_from_roles(n + 3 * m, roles)
    return ReductionOutput(
        kind="setcover",
        graph=Graph(n + 3 * m, edges, labels),
        offset=m,
        roles=roles,
        gadget_variant=Variant.IDOM,
        source_variant=None,
        source_instance=inst,
    )


def extract_cover(out: ReductionOutput, ids) -> frozenset[int]:
    """Map a verified isolate dominating set of the gadget to a cover of size
    at most |ids| - m (0-based subset indices).

    Chosen subset vertices select their subsets; each chosen element vertex is
    replaced by its smallest containing subset.
    """
    if out.kind != "setcover":
        raise ValueError(f"not a set-cover gadget: {out.kind}")
    inst = out.source_instance
    witness = frozenset(ids)
    report = verify_set(out.graph, witness, Variant.IDOM)
    if not report.holds:
        raise ValueError("the provided set is not an isolate dominating set of the gadget")
    n, m = inst.universe_size, inst.m
    cover = {v - n for v in witness if n <= v < n + m}
    for v in witness:
        if v < n:
            cover.add(min(j for j, sub in enumerate(inst.subsets) if v in sub))
    covered = set().union(*(inst.subsets[j] for j in cover)) if cover else set()
    if covered != set(range(n)):
        raise RuntimeError("extraction produced a non-covering family")
    return frozenset(cover)


def bipartite_dom_to_peb(
    g: Graph,
    parts: tuple[frozenset[int], frozenset[int]] | None = None,
    y1_rule: str = "no-pendant-neighbor",
) -> ReductionOutput:
    """Attach a three-vertex pendant path to selected Y-side vertices, turning
    a bipartite domination instance into a perfect-elimination-bipartite
    isolate-domination instance with offset l = number of attached paths.

    The default rule attaches to the Y vertices none of whose neighbors is a
    pendant (degree-one) vertex: those are exactly the vertices with no
    naturally eliminable edge, and the resulting graph always admits the
    elimination ordering built here (pendant-path edges first, then the
    attachment edges, then one pendant edge per remaining Y vertex).  The
    alternative rule "pendant-neighbor" attaches to the complementary set
    instead; it preserves the size identity but generally not perfect
    eliminability, so no ordering is constructed for it.
    """
    if y1_rule not in Y1_RULES:
        raise ValueError(f"y1_rule must be one of {Y1_RULES}")
    if parts is None:
        parts = bipartition(g)
        if parts is None:
            raise ValueError("graph is not bipartite")
    x_side, y_side = parts
    _check_bipartition(g, x_side, y_side)

    def has_pendant_neighbor(y: int) -> bool:
        return any(g.degree(x) == 1 for x in bits(g.adj[y]))

    if y1_rule == "no-pendant-neighbor":
        y1 = sorted(y for y in y_side if not has_pendant_neighbor(y))
    else:
        y1 = sorted(y for y in y_side if has_pendant_neighbor(y))
    y2 = sorted(y_side - set(y1))
    ell = len(y1)

    n = g.n
    edges = list(g.edges())
    roles: dict[str, int] = {}
    for i, y in enumerate(y1):
        a, b, c = n + 3 * i, n + 3 * i + 1, n + 3 * i + 2
        edges.extend([(y, a), (a, b), (b, c)])
        roles[f"y_{i + 1}"] = y
        roles[f"a_{i + 1}"] = a
        roles[f"b_{i + 1}"] = b
        roles[f"c_{i + 1}"] = c
    total = n + 3 * ell
    labels = _labels_from_roles(total, roles)
    gadget = Graph(total, edges, labels)

    ordering = None
    if y1_rule == "no-pendant-neighbor":
        steps = [(n + 3 * i + 1, n + 3 * i + 2) for i in range(ell)]
        steps += [(min(y, n + 3 * i), max(y, n + 3 * i)) for i, y in enumerate(y1)]
        for y in y2:
            pend = min(x for x in bits(g.adj[y]) if g.degree(x) == 1)
            steps.append((min(pend, y), max(pend, y)))
        ordering = _ordering_from_pairs(steps)

    return ReductionOutput(
        kind="peb",
        graph=gadget,
        offset=ell,
        roles=roles,
        gadget_variant=Variant.IDOM,
        source_variant=Variant.DOM,
        source_graph=g,
        ordering=ordering,
        attached=tuple(y1),
    )


def indm_to_insdm(g: Graph) -> ReductionOutput:
    """Hang a two-vertex tail v_i ~ a_i ~ b_i off every vertex; a minimum
    independent dominating set of g of size k corresponds to a minimum secure
    independent dominating set of the gadget of size k + n."""
    n = g.n
    edges = list(g.edges())
    roles = {f"v_{i + 1}": i for i in range(n)}
    for i in range(n):
        a, b = n + 2 * i, n + 2 * i + 1
        edges.extend([(i, a), (a, b)])
        roles[f"a_{i + 1}"] = a
        roles[f"b_{i + 1}"] = b
    labels = _labels_from_roles(3 * n, roles)
    return ReductionOutput(
        kind="insdm",
        graph=Graph(3 * n, edges, labels),
        offset=n,
        roles=roles,
        gadget_variant=Variant.INSDOM,
        source_variant=Variant.INDOM,
        source_graph=g,
    )


def gp_graph(g: Graph) -> ReductionOutput:
    """Attach a three-vertex pendant path v_i ~ a_i ~ b_i ~ c_i to every
    vertex of a connected graph.

    The gadget's secure independent domination number is exactly 2n, while
    plain domination keeps its source hardness: gamma(gadget) = gamma(g) + n.
    """
    from .graphs import is_connected

    if not is_connected(g) or g.n == 0:
        raise ValueError("pendant-path construction requires a connected nonempty graph")
    n = g.n
    edges = list(g.edges())
    roles = {f"v_{i + 1}": i for i in range(n)}
    for i in range(n):
        a, b, c = n + 3 * i, n + 3 * i + 1, n + 3 * i + 2
        edges.extend([(i, a), (a, b), (b, c)])
        roles[f"a_{i + 1}"] = a
        roles[f"b_{i + 1}"] = b
        roles[f"c_{i + 1}"] = c
    labels = _labels_from_roles(4 * n, roles)
    return ReductionOutput(
        kind="gp",
        graph=Graph(4 * n, edges, labels),
        offset=n,
        roles=roles,
        gadget_variant=Variant.DOM,
        source_variant=Variant.DOM,
        source_graph=g,
    )


def apx_gadget(g: Graph) -> ReductionOutput:
    """Degree-5 gadget: each vertex v_i gains a path q_i ~ p_i and a cherry
    r_i with leaves s_i, t_i.  Requires max degree 3; the gadget then has max
    degree 5 and gamma_is(gadget) = i(g) + 3n."""
    if any(g.degree(v) > 3 for v in range(g.n)):
        raise ValueError("construction requires maximum degree 3")
    n = g.n
    edges = list(g.edges())
    roles = {f"v_{i + 1}": i for i in range(n)}
    for i in range(n):
        q, p, r, s, t = (n + 5 * i + d for d in range(5))
        edges.extend([(i, q), (q, p), (i, r), (r, s), (r, t)])
        roles[f"q_{i + 1}"] = q
        roles[f"p_{i + 1}"] = p
        roles[f"r_{i + 1}"] = r
        roles[f"s_{i + 1}"] = s
        roles[f"t_{i + 1}"] = t
    labels = _labels_from_roles(6 * n, roles)
    gadget = Graph(6 * n, edges, labels)
    if any(gadget.degree(v) > 5 for v in range(gadget.n)):
        raise RuntimeError("gadget exceeded maximum degree 5")
    return ReductionOutput(
        kind="apx",
        graph=gadget,
        offset=3 * n,
        roles=roles,
        gadget_variant=Variant.INSDOM,
        source_variant=Variant.INDOM,
        source_graph=g,
    )


def forward_witness(out: ReductionOutput, source_solution) -> frozenset[int]:
    """Map a source solution to a gadget witness realizing the size identity.

    set-cover: cover indices J -> {c_j : j in J} + all v pendants;
    peb: dominating set D -> D + all b vertices;
    insdm: independent dominating set D -> D + {a_i : v_i not in D}
           + {b_i : v_i in D};
    gp: dominating set D -> D + all b vertices;
    apx: independent dominating set D -> D + all s, t + {p_i : v_i in D}
         + {q_i : v_i not in D}.
    """
    kind = out.kind
    n = out.source_graph.n if out.source_graph is not None else out.source_instance.universe_size
    sol = set(source_solution)
    if kind == "setcover":
        m = out.source_instance.m
        return frozenset({n + j for j in sol} | {n + 2 * m + j for j in range(m)})
    if kind in ("peb",):
        ell = out.offset
        return frozenset(sol | {n + 3 * i + 1 for i in range(ell)})
    if kind == "gp":
        return frozenset(sol | {n + 3 * i + 1 for i in range(n)})
    if kind == "insdm":
        picks = {n + 2 * i + (1 if i in sol else 0) for i in range(n)}
        return frozenset(sol | picks)
    if kind == "apx":
        extra = set()
        for i in range(n):
            q, p, r, s, t = (n + 5 * i + d for d in range(5))
            extra.update((s, t, p if i in sol else q))
        return frozenset(sol | extra)
    raise ValueError(f"unknown reduction kind {kind!r}")


def gp_insds_witness(out: ReductionOutput) -> frozenset[int]:
    """The size-2n secure independent dominating set of a pendant-path gadget:
    all source vertices plus all middle pendant vertices b_i."""
    if out.kind != "gp":
        raise ValueError(f"not a pendant-path gadget: {out.kind}")
    n = out.source_graph.n
    return frozenset(set(range(n)) | {n + 3 * i + 1 for i in range(n)})


def extract_solution(out: ReductionOutput, witness, which: str | None = None) -> frozenset[int]:
    """Map a verified gadget witness back to a source solution of size at most
    |witness| - offset.

    set-cover delegates to extract_cover (returns subset indices); the others
    return source vertex sets, re-verified against the source problem.
    """
    if which is not None and which != out.kind:
        raise ValueError(f"reduction tag mismatch: output is {out.kind!r}, requested {which!r}")
    kind = out.kind
    if kind == "setcover":
        return extract_cover(out, witness)

    wit = frozenset(witness)
    report = verify_set(out.graph, wit, out.gadget_variant)
    if not report.holds:
        raise ValueError(f"witness fails {out.gadget_variant.value} verification on the gadget")
    g = out.source_graph
    n = g.n

    if kind == "peb":
        a_of = {out.roles[f"a_{i + 1}"]: y for i, y in enumerate(out.attached)}
        extracted = {v for v in wit if v < n}
        extracted |= {y for a, y in a_of.items() if a in wit and y not in wit}
    elif kind == "insdm":
        extracted = {v for v in wit if v < n}
    elif kind == "gp":
        replaced = {i for i in range(n) if (n + 3 * i) in wit}
        extracted = ({v for v in wit if v < n} | replaced)
    elif kind == "apx":
        extracted = {v for v in wit if v < n}
    else:
        raise ValueError(f"unknown reduction kind {kind!r}")

    if len(extracted) > len(wit) - out.offset:
        raise RuntimeError("extraction exceeded the size bound")
    source_report = verify_set(g, extracted, out.source_variant)
    if not source_report.holds:
        raise RuntimeError("extraction produced a set failing source verification")
    return frozenset(extracted)


def _check_bipartition(g: Graph, x_side: frozenset[int], y_side: frozenset[int]) -> None:
    if x_side & y_side or (x_side | y_side) != frozenset(range(g.n)):
        raise ValueError("parts must partition the vertex set")
    xm, ym = mask_of(x_side), mask_of(y_side)
    for v in bits(xm):
        if g.adj[v] & xm:
            raise ValueError("part X is not independent")
    for v in bits(ym):
        if g.adj[v] & ym:
            raise ValueError("part Y is not independent")


def _labels_from_roles(n: int, roles: dict[str, int]) -> list[str | None]:
    labels: list[str | None] = [None] * n
    for name, v in roles.items():
        labels[v] = name
    return labels


def _ordering_from_pairs(pairs: list[tuple[int, int]]) -> EliminationOrdering:
    cumulative = []
    seen: set[int] = set()
    for (u, v) in pairs:
        seen |= {u, v}
        cumulative.append(frozenset(seen))
    return EliminationOrdering(tuple(pairs), tuple(cumulative))
