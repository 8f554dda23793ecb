"""Exact minimum-set search for the five domination variants.

The search iterates target sizes k from a degree lower bound upward; within
each k it extends prefixes in ascending vertex order, so the first feasible
set found is the lexicographically smallest minimum witness and results are
fully deterministic.

Pruning (all rules are sound, so disabling them cannot change any result):

* coverage deadlines -- a vertex w can only be dominated by a pick from N[w],
  so once the scan index passes max(N[w]) an undominated w is unreachable and
  the branch dies; this also forces isolated vertices into every set;
* a counting bound -- the undominated count must not exceed picks_left times
  the largest closed neighborhood;
* independence conflicts prune immediately for the independent variants.

Candidate-set feasibility at the leaves uses bitmask arithmetic only; the
secure-domination swap test tracks singly-covered vertices instead of
re-running a domination scan per swap.  Witnesses are meant to be re-checked
against the definitional verifiers in :mod:`secdom.verify` (the test suite
does exactly that).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, bits
from .verify import Variant


class BudgetExceededError(RuntimeError):
    """Raised internally when the search overruns its budget."""


class _Found(Exception):
    """Unwinds the recursion once the first feasible set is found."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps on exhaustive search: vertex count, visited candidates, wall clock."""

    max_n: int = 24
    max_candidates: int = 100_000_000
    time_limit: float = 60.0

    def __post_init__(self):
        if self.max_n <= 0 or self.max_candidates <= 0 or self.time_limit <= 0:
            raise ValueError("all budget caps must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Solution:
    """Outcome of a minimization run.

    ``value is None`` with ``exhausted=True`` certifies that no feasible set
    of any size exists (possible only for the secure independent variant);
    with ``exhausted=False`` it means the budget ran out first.
    """

    variant: Variant
    value: int | None
    witness: frozenset[int] | None
    explored: int
    exhausted: bool


@dataclass(frozen=True)
class Decision:
    """Outcome of a size-at-most-k decision: yes / no / unknown."""

    answer: str
    witness: frozenset[int] | None
    explored: int


def _is_secure_mask(adj, closed, all_mask: int, s: int) -> bool:
    """Secure-domination check for a dominating set mask.

    ``ones`` collects vertices covered by exactly one member of S; a swap
    (S - {v}) + {u} fails exactly when v was the sole cover of some vertex
    that u does not reach.
    """
    dom1 = dom2 = 0
    m = s
    while m:
        low = m & -m
        c = closed[low.bit_length() - 1]
        dom2 |= dom1 & c
        dom1 |= c
        m ^= low
    ones = dom1 & ~dom2
    outside = all_mask & ~s
    while outside:
        low = outside & -outside
        u = low.bit_length() - 1
        outside ^= low
        cu = closed[u]
        cand = adj[u] & s
        defended = False
        while cand:
            lv = cand & -cand
            v = lv.bit_length() - 1
            cand ^= lv
            if not (ones & closed[v] & ~cu):
                defended = True
                break
        if not defended:
            return False
    return True


def feasible_mask(g: Graph, variant: Variant, smask: int) -> bool:
    """Fast full-set feasibility test on a vertex bitmask."""
    n = g.n
    if n == 0:
        return smask == 0
    adj = g.adj
    closed = [adj[v] | (1 << v) for v in range(n)]
    dominated = 0
    for v in bits(smask):
        dominated |= closed[v]
    if dominated != (1 << n) - 1:
        return False
    if variant.needs_independence:
        for v in bits(smask):
            if adj[v] & smask:
                return False
    if variant.needs_isolate:
        if not any(not (adj[v] & smask) for v in bits(smask)):
            return False
    if variant.needs_defense:
        return _is_secure_mask(adj, closed, (1 << n) - 1, smask)
    return True


class _Engine:
    __slots__ = (
        "n",
        "adj",
        "closed",
        "all_mask",
        "last_cover",
        "max_cover",
        "independent",
        "need_isolate",
        "need_defense",
        "prune",
        "explored",
        "max_candidates",
        "deadline",
        "hits",
        "collect_all",
    )

    def __init__(self, g: Graph, variant: Variant, budget: SearchBudget, prune: bool):
        self.n = g.n
        self.adj = list(g.adj)
        self.closed = [g.adj[v] | (1 << v) for v in range(g.n)]
        self.all_mask = (1 << g.n) - 1
        self.last_cover = [c.bit_length() - 1 for c in self.closed]
        self.max_cover = max((c.bit_count() for c in self.closed), default=0)
        self.independent = variant.needs_independence
        self.need_isolate = variant.needs_isolate
        self.need_defense = variant.needs_defense
        self.prune = prune
        self.explored = 0
        self.max_candidates = budget.max_candidates
        self.deadline = time.monotonic() + budget.time_limit
        self.hits: list[int] = []
        self.collect_all = False

    def first_k(self, k: int) -> int | None:
        self.hits = []
        self.collect_all = False
        try:
            self._extend(0, k, 0, 0, 0)
        except _Found:
            pass
        return self.hits[0] if self.hits else None

    def all_k(self, k: int) -> list[int]:
        self.hits = []
        self.collect_all = True
        self._extend(0, k, 0, 0, 0)
        return self.hits

    def _extend(self, start: int, remaining: int, chosen: int, dominated: int, conflict: int):
        self.explored += 1
        if not self.explored & 0x3FF and time.monotonic() > self.deadline:
            raise BudgetExceededError("time limit exceeded")
        if self.explored > self.max_candidates:
            raise BudgetExceededError("candidate limit exceeded")

        if remaining == 0:
            if dominated == self.all_mask and self._leaf_ok(chosen):
                self.hits.append(chosen)
                if not self.collect_all:
                    raise _Found
            return

        vmax = self.n - remaining
        if self.prune:
            undom = self.all_mask & ~dominated
            if undom:
                if undom.bit_count() > remaining * self.max_cover:
                    return
                last_cover = self.last_cover
                lim = self.n
                m = undom
                while m:
                    low = m & -m
                    d = last_cover[low.bit_length() - 1]
                    if d < lim:
                        lim = d
                    m ^= low
                if lim < vmax:
                    vmax = lim
                if vmax < start:
                    return

        adj = self.adj
        closed = self.closed
        independent = self.prune and self.independent
        for v in range(start, vmax + 1):
            bit = 1 << v
            if independent and conflict & bit:
                continue
            self._extend(v + 1, remaining - 1, chosen | bit, dominated | closed[v], conflict | adj[v])

    def _leaf_ok(self, s: int) -> bool:
        adj = self.adj
        if self.independent and not self.prune:
            for v in bits(s):
                if adj[v] & s:
                    return False
        if self.need_isolate:
            if not any(not (adj[v] & s) for v in bits(s)):
                return False
        if self.need_defense:
            return _is_secure_mask(adj, self.closed, self.all_mask, s)
        return True


def _lower_bound(g: Graph) -> int:
    """Domination lower bound ceil(n / (max degree + 1)), at least 1."""
    maxdeg = max((a.bit_count() for a in g.adj), default=0)
    return max(1, -(-g.n // (maxdeg + 1)))


def solve(g: Graph, variant: Variant, budget: SearchBudget | None = None, *, prune: bool = True) -> Solution:
    """Find a minimum feasible set for the variant, or certify nonexistence.

    The witness is the lexicographically smallest minimum set.  Exceeding the
    budget yields value=None with exhausted=False.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    if g.n > budget.max_n:
        raise ValueError(f"graph has {g.n} vertices, budget allows {budget.max_n}")
    if g.n == 0:
        return Solution(variant, 0, frozenset(), 0, True)
    engine = _Engine(g, variant, budget, prune)
    try:
        for k in range(_lower_bound(g), g.n + 1):
            hit = engine.first_k(k)
            if hit is not None:
                return Solution(variant, k, frozenset(bits(hit)), engine.explored, True)
    except BudgetExceededError:
        return Solution(variant, None, None, engine.explored, False)
    return Solution(variant, None, None, engine.explored, True)


def solve_decision(
    g: Graph, variant: Variant, k: int, budget: SearchBudget | None = None, *, prune: bool = True
) -> Decision:
    """Decide whether a feasible set of size at most k exists."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    budget = DEFAULT_BUDGET if budget is None else budget
    if g.n > budget.max_n:
        raise ValueError(f"graph has {g.n} vertices, budget allows {budget.max_n}")
    if g.n == 0:
        return Decision("yes", frozenset(), 0)
    engine = _Engine(g, variant, budget, prune)
    lb = _lower_bound(g)
    if k < lb:
        return Decision("no", None, 0)
    try:
        for kk in range(lb, min(k, g.n) + 1):
            hit = engine.first_k(kk)
            if hit is not None:
                return Decision("yes", frozenset(bits(hit)), engine.explored)
    except BudgetExceededError:
        return Decision("unknown", None, engine.explored)
    return Decision("no", None, engine.explored)


def all_minimum_sets(g: Graph, variant: Variant, budget: SearchBudget | None = None) -> list[frozenset[int]]:
    """Every minimum feasible set, lexicographically sorted; [] if none exists.

    Raises BudgetExceededError if the budget runs out mid-enumeration.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    cap = min(budget.max_n, 16)
    if g.n > cap:
        raise ValueError(f"graph has {g.n} vertices, enumeration allows {cap}")
    base = solve(g, variant, budget)
    if base.value is None:
        if not base.exhausted:
            raise BudgetExceededError("budget exceeded while computing the minimum")
        return []
    if base.value == 0:
        return [frozenset()]
    engine = _Engine(g, variant, budget, prune=True)
    masks = engine.all_k(base.value)
    return [frozenset(bits(m)) for m in masks]
