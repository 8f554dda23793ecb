"""Definition-level verifiers for the five domination variants.

These are the correctness oracles of the library: every check re-tests the
defining condition directly (the secure-domination swap re-runs a full
domination test) rather than using incremental shortcuts.  Solvers are free
to be cleverer; their witnesses must pass these checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .graphs import Graph, bits


class Variant(Enum):
    """The five domination problems."""

    DOM = "dom"
    INDOM = "indom"
    IDOM = "idom"
    SDOM = "sdom"
    INSDOM = "insdom"

    @property
    def needs_independence(self) -> bool:
        return self in (Variant.INDOM, Variant.INSDOM)

    @property
    def needs_isolate(self) -> bool:
        return self is Variant.IDOM

    @property
    def needs_defense(self) -> bool:
        return self in (Variant.SDOM, Variant.INSDOM)


VARIANT_BY_TOKEN = {v.value: v for v in Variant}


@dataclass(frozen=True)
class Violation:
    """One witnessed failure of a variant condition.

    kinds: "undominated" (vertices = the uncovered vertex),
    "edge-in-set" (vertices = the adjacent pair inside S),
    "undefendable" (vertices = the outside vertex; failed_defenders = the
    neighbors in S whose swap breaks domination),
    "no-isolated-vertex" (the induced subgraph G[S] has no isolated vertex).
    """

    kind: str
    vertices: tuple[int, ...] = ()
    failed_defenders: tuple[int, ...] = ()


@dataclass(frozen=True)
class CertificateReport:
    variant: Variant
    holds: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def _set_mask(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        m |= 1 << v
    return m


def _dominates(g: Graph, smask: int) -> bool:
    for w in range(g.n):
        if not (g.closed(w) & smask):
            return False
    return True


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff N[S] covers every vertex (vacuously true on the empty graph)."""
    return _dominates(g, _set_mask(g, s))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff the induced subgraph G[S] has no edge."""
    smask = _set_mask(g, s)
    for v in bits(smask):
        if g.adj[v] & smask:
            return False
    return True


def external_private_neighbors(g: Graph, s: Iterable[int], v: int) -> frozenset[int]:
    """Vertices outside S whose only neighbor in S is v.  Requires v in S."""
    smask = _set_mask(g, s)
    if not (smask >> v & 1):
        raise ValueError(f"vertex {v} is not in the set")
    out = []
    for w in range(g.n):
        if smask >> w & 1:
            continue
        if g.adj[w] & smask == 1 << v:
            out.append(w)
    return frozenset(out)


def defenders(g: Graph, s: Iterable[int], u: int) -> frozenset[int]:
    """Neighbors v of u in S for which (S - {v}) + {u} still dominates.

    Requires u outside S.
    """
    smask = _set_mask(g, s)
    if smask >> u & 1:
        raise ValueError(f"vertex {u} is in the set")
    out = []
    for v in bits(g.adj[u] & smask):
        swap = (smask & ~(1 << v)) | (1 << u)
        if _dominates(g, swap):
            out.append(v)
    return frozenset(out)


def is_secure_dominating(g: Graph, s: Iterable[int]) -> bool:
    """Dominating, and every outside vertex has at least one defender."""
    smask = _set_mask(g, s)
    if not _dominates(g, smask):
        return False
    slist = frozenset(bits(smask))
    for u in range(g.n):
        if smask >> u & 1:
            continue
        if not defenders(g, slist, u):
            return False
    return True


def is_isolate_dominating(g: Graph, s: Iterable[int]) -> bool:
    """Dominating, and some member of S has no neighbor inside S.

    The empty set qualifies only on the empty graph.
    """
    smask = _set_mask(g, s)
    if g.n == 0:
        return smask == 0
    if not _dominates(g, smask):
        return False
    return any(not (g.adj[v] & smask) for v in bits(smask))


def verify_set(g: Graph, s: Iterable[int], variant: Variant) -> CertificateReport:
    """Check S against a variant and report every violation.

    Violations are exhaustive and deterministic: undominated vertices in
    ascending order, then edges inside S in ascending pair order, then
    undefendable vertices in ascending order, then the missing-isolate marker.
    """
    smask = _set_mask(g, s)
    violations: list[Violation] = []

    for w in range(g.n):
        if not (g.closed(w) & smask):
            violations.append(Violation("undominated", (w,)))

    if variant.needs_independence:
        for u in bits(smask):
            for v in bits(g.adj[u] & smask):
                if v > u:
                    violations.append(Violation("edge-in-set", (u, v)))

    if variant.needs_defense:
        slist = frozenset(bits(smask))
        for u in range(g.n):
            if smask >> u & 1:
                continue
            if not defenders(g, slist, u):
                tried = tuple(bits(g.adj[u] & smask))
                violations.append(Violation("undefendable", (u,), tried))

    if variant.needs_isolate and g.n > 0:
        if not any(not (g.adj[v] & smask) for v in bits(smask)):
            violations.append(Violation("no-isolated-vertex"))

    return CertificateReport(variant, holds=not violations, violations=tuple(violations))
