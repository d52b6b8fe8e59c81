"""Exact complete-bipartite minor testing via branch decompositions.

A K_{s,t} minor of a host graph is witnessed by a branch model: s + t
pairwise disjoint, non-empty, connected vertex sets, split into a side of s
and a side of t, with at least one host edge between every cross pair.
``find_kst_minor`` is an exact backtracking search over such models;
``oracle_has_minor`` is an independent brute-force check used to validate it
on small hosts.  Witnesses are always re-verified before being returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .graph import Graph, bits, mask_of


@dataclass(frozen=True)
class MinorQuery:
    """A K_{s,t} target with 1 <= s <= t."""

    s: int
    t: int

    def __post_init__(self):
        if not (1 <= self.s <= self.t):
            raise ValueError("require 1 <= s <= t")


@dataclass(frozen=True)
class BranchModel:
    """Branch sets of a complete-bipartite minor inside ``host``."""

    side1: tuple[frozenset[int], ...]
    side2: tuple[frozenset[int], ...]
    host: Graph

    def to_json_dict(self) -> dict:
        return {
            "side1": [sorted(s) for s in self.side1],
            "side2": [sorted(s) for s in self.side2],
        }

    @classmethod
    def from_json_dict(cls, data: dict, host: Graph) -> "BranchModel":
        return cls(
            tuple(frozenset(s) for s in data["side1"]),
            tuple(frozenset(s) for s in data["side2"]),
            host,
        )


class SearchStatus(Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class MinorSearch:
    status: SearchStatus
    model: BranchModel | None
    nodes_expanded: int


def _connected_mask(adj, mask: int) -> bool:
    if mask == 0:
        return False
    start = mask & -mask
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= mask & ~reach
        reach |= nxt
        frontier = nxt
    return reach == mask


def model_violation(g: Graph, model: BranchModel, q: MinorQuery) -> str | None:
    """First violated branch-model clause, or None when the model is valid."""
    if len(model.side1) != q.s:
        return f"side1 has {len(model.side1)} sets, query wants s={q.s}"
    if len(model.side2) != q.t:
        return f"side2 has {len(model.side2)} sets, query wants t={q.t}"
    sets = list(model.side1) + list(model.side2)
    masks = []
    for i, s in enumerate(sets):
        if not s:
            return f"branch set {i} is empty"
        for v in s:
            if not (0 <= v < g.n):
                return f"branch set {i} contains out-of-range vertex {v}"
        masks.append(mask_of(s))
    seen = 0
    for i, m in enumerate(masks):
        if seen & m:
            return f"branch set {i} overlaps an earlier set"
        seen |= m
    for i, m in enumerate(masks):
        if not _connected_mask(g.adj, m):
            return f"branch set {i} is not connected in the host"
    for i in range(q.s):
        nbr = 0
        for v in bits(masks[i]):
            nbr |= g.adj[v]
        for j in range(q.t):
            if not (nbr & masks[q.s + j]):
                return f"no host edge between side1 set {i} and side2 set {j}"
    return None


def verify_model(g: Graph, model: BranchModel, q: MinorQuery) -> bool:
    return model_violation(g, model, q) is None


class _BudgetHit(Exception):
    pass


def find_kst_minor(g: Graph, q: MinorQuery, budget: int | None = None) -> MinorSearch:
    """Exact search for a K_{s,t} branch model in ``g``.

    Backtracks over assignments of vertices to one of the s + t branch sets
    or to an unused pool.  Vertices are chosen dynamically (fewest feasible
    sets first, lowest id on ties); sets are opened lowest-id first within a
    side, which breaks the set-relabeling symmetry.  All prunes are sound, so
    NOT_FOUND is an exhaustiveness certificate.  ``budget`` caps node
    expansions; exceeding it yields BUDGET_EXHAUSTED.  Deterministic: equal
    inputs explore the identical tree.
    """
    s, t = q.s, q.t
    k = s + t
    n = g.n
    if n < k or g.edge_count() < s * t:
        return MinorSearch(SearchStatus.NOT_FOUND, None, 0)

    adj = g.adj
    full = (1 << n) - 1
    cmask = [0] * k        # vertices committed to each branch set
    cnbr = [0] * k         # union of host neighbourhoods over each set
    nodes = 0
    out_model: list[BranchModel] = []

    def closure(seed: int, allowed: int) -> int:
        reach = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        return reach

    def dfs(und: int) -> bool:
        nonlocal nodes
        if budget is not None and nodes >= budget:
            raise _BudgetHit
        nodes += 1

        # Early success: current sets already witness the minor.
        if all(cmask):
            ok = True
            for i in range(s):
                nb = cnbr[i]
                for j in range(s, k):
                    if not (nb & cmask[j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok and all(_connected_mask(adj, cm) for cm in cmask):
                side1 = sorted((frozenset(bits(cm)) for cm in cmask[:s]), key=min)
                side2 = sorted((frozenset(bits(cm)) for cm in cmask[s:]), key=min)
                out_model.append(BranchModel(tuple(side1), tuple(side2), g))
                return True

        if und == 0:
            return False

        empties = sum(1 for cm in cmask if cm == 0)
        if und.bit_count() < empties:
            return False

        # Reachability closures: a set can only ever grow inside its closure
        # through undecided vertices, so a set split across closure
        # components is dead, and a vertex outside a closure can never join.
        reach = [0] * k
        for c in range(k):
            cm = cmask[c]
            if cm:
                r = closure(cm & -cm, cm | und)
                if cm & ~r:
                    return False
                reach[c] = r

        # Cross-pair liveness: an unlinked pair must still have a potential
        # host edge between the two closures.
        nbr_reach = [0] * k
        for c in range(k):
            if cmask[c]:
                nb = cnbr[c]
                for v in bits(reach[c] & und):
                    nb |= adj[v]
                nbr_reach[c] = nb
        for i in range(s):
            if not cmask[i]:
                continue
            for j in range(s, k):
                if cmask[j] and not (cnbr[i] & cmask[j]):
                    if not (nbr_reach[i] & reach[j]):
                        return False

        e1 = next((c for c in range(s) if not cmask[c]), None)
        e2 = next((c for c in range(s, k) if not cmask[c]), None)
        # With s == t the two sides are interchangeable, so the very first
        # set opened can be forced onto side 1.
        allow_e2 = e2 is not None and not (s == t and all(cm == 0 for cm in cmask))

        best_v = -1
        best_cand: list[int] = []
        best_score = k + 3
        for v in bits(und):
            cand = [c for c in range(k) if cmask[c] and (reach[c] >> v) & 1]
            if e1 is not None:
                cand.append(e1)
            if allow_e2:
                cand.append(e2)
            if len(cand) < best_score:
                best_score = len(cand)
                best_v = v
                best_cand = cand
                if best_score == 0:
                    break

        vbit = 1 << best_v
        nxt_und = und ^ vbit
        for c in sorted(best_cand):
            old_nbr = cnbr[c]
            cmask[c] |= vbit
            cnbr[c] |= adj[best_v]
            if dfs(nxt_und):
                return True
            cmask[c] ^= vbit
            cnbr[c] = old_nbr
        # leave best_v unused
        return dfs(nxt_und)

    try:
        found = dfs(full)
    except _BudgetHit:
        return MinorSearch(SearchStatus.BUDGET_EXHAUSTED, None, nodes)
    if not found:
        return MinorSearch(SearchStatus.NOT_FOUND, None, nodes)
    model = out_model[0]
    bad = model_violation(g, model, q)
    assert bad is None, f"search produced an invalid model: {bad}"
    return MinorSearch(SearchStatus.FOUND, model, nodes)


# --- independent oracle -------------------------------------------------

_ORACLE_MAX_N = 9
_CACHE_ROW_LIMIT = 1 << 22


@lru_cache(maxsize=16)
def _assignment_masks(n: int, k: int) -> tuple[np.ndarray, ...]:
    """All assignments of n vertices to k classes plus an unused pool, with
    every class non-empty, as per-class vertex bitmasks (one column array per
    class).  Cached; graph-independent."""
    total = (k + 1) ** n
    if total > _CACHE_ROW_LIMIT:
        raise ValueError("assignment table too large to cache")
    codes = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n), dtype=np.int64)
    rem = codes
    for v in range(n):
        digits[:, v] = rem % (k + 1)
        rem = rem // (k + 1)
    keep = np.ones(total, dtype=bool)
    for c in range(1, k + 1):
        keep &= (digits == c).any(axis=1)
    digits = digits[keep]
    powers = 1 << np.arange(n, dtype=np.int64)
    masks = tuple(((digits == c) * powers).sum(axis=1) for c in range(1, k + 1))
    return masks


def _mask_luts(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Per-subset connectivity and neighbourhood lookup tables for g."""
    n = g.n
    size = 1 << n
    adj = g.adj
    nbr = np.zeros(size, dtype=np.int64)
    conn = np.zeros(size, dtype=bool)
    for m in range(1, size):
        low = m & -m
        nbr[m] = nbr[m ^ low] | adj[low.bit_length() - 1]
        reach = low
        frontier = low
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                b = mm & -mm
                nxt |= adj[b.bit_length() - 1]
                mm ^= b
            nxt &= m & ~reach
            reach |= nxt
            frontier = nxt
        conn[m] = reach == m
    return conn, nbr


def _check_assignments(masks, conn, nbr, f_edges, k) -> bool:
    ok = conn[masks[0]]
    for c in range(1, k):
        ok = ok & conn[masks[c]]
        if not ok.any():
            return False
    for a, b in f_edges:
        ok = ok & ((nbr[masks[a]] & masks[b]) != 0)
        if not ok.any():
            return False
    return bool(ok.any())


def oracle_has_minor(g: Graph, f: Graph) -> bool:
    """Brute-force minor test: enumerate every assignment of g's vertices to
    |V(f)| branch classes plus an unused pool, keeping only the non-empty
    ones, and accept if some assignment has all classes connected with a host
    edge for every edge of f.  Exact by construction; host capped at 9
    vertices."""
    if g.n > _ORACLE_MAX_N:
        raise ValueError(f"oracle host cap is {_ORACLE_MAX_N} vertices, got {g.n}")
    k = f.n
    if k == 0:
        return True
    if g.n < k:
        return False
    f_edges = list(f.edges())
    conn, nbr = _mask_luts(g)
    total = (k + 1) ** g.n
    if total <= _CACHE_ROW_LIMIT:
        masks = _assignment_masks(g.n, k)
        return _check_assignments(masks, conn, nbr, f_edges, k)
    # stream in chunks for the largest hosts
    powers = 1 << np.arange(g.n, dtype=np.int64)
    chunk = 1 << 20
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        codes = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((stop - start, g.n), dtype=np.int64)
        rem = codes
        for v in range(g.n):
            digits[:, v] = rem % (k + 1)
            rem = rem // (k + 1)
        keep = np.ones(stop - start, dtype=bool)
        for c in range(1, k + 1):
            keep &= (digits == c).any(axis=1)
        if not keep.any():
            continue
        digits = digits[keep]
        masks = tuple(((digits == c) * powers).sum(axis=1) for c in range(1, k + 1))
        if _check_assignments(masks, conn, nbr, f_edges, k):
            return True
    return False


def kst_query_graph(q: MinorQuery) -> Graph:
    """The K_{s,t} pattern graph matching ``q`` (side A first)."""
    from .graph import complete_bipartite

    return complete_bipartite(q.s, q.t)


def all_graphs(n: int):
    """Iterate every labeled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (code >> i) & 1]
        yield Graph.from_edges(n, edges)
