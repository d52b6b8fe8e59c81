"""Random two-clique gadgets and glued list-assignment counterexamples.

Pipeline: sample a random bipartite graph with edge probability n**(-delta),
check that it has small maximum degree and that every small disjoint set
collection on the two sides contains a fully joined pair, take the
complement of an induced piece to get a gadget whose parts are cliques, then
glue many copies of the gadget along the shared B clique, one copy per
possible palette coloring of B, and punch each copied vertex's list by the
colors its non-neighbors received.  A pigeonhole argument then rules out
every proper list coloring of the glued graph, which gives explicit graphs
whose list chromatic number exceeds the palette guarantee their minors would
suggest.

Rational parameters (epsilon, C, delta) are carried exactly as Fractions
wherever they feed integer derivations, so floors and ceilings never suffer
float rounding.  All randomness flows through numpy Generators seeded from
explicit integers; per-trial and per-retry streams are derived from the
master seed, so reports are reproducible regardless of thread count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .graph import (
    LABEL_A,
    LABEL_B,
    Graph,
    bits,
    complement,
    complete,
    induced_subgraph,
    non_neighbor_count,
)
from .listcolor import ListAssignment, find_l_coloring


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


class EnumerationCapError(ValueError):
    """An exhaustive enumeration was requested above its configured cap."""


class AssemblyCapError(ValueError):
    """A counterexample assembly would exceed the vertex cap."""


@dataclass(frozen=True)
class GadgetParams:
    """Sampling parameters: edge exponent delta, side ratio C, slack epsilon.

    ``max_block_size`` caps the size of each set in the block-connection
    property; ``delta`` sets the edge probability n**(-delta).  Constructing
    directly only requires the hypothesis max_block_size**2 * delta < 1 (and
    sane ranges); ``derive`` pins the canonical choices
    max_block_size = ceil(C / epsilon) and delta = epsilon**2 / (4 C**2).
    """

    epsilon: Fraction
    c_const: Fraction
    max_block_size: int
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "epsilon", _frac(self.epsilon))
        object.__setattr__(self, "c_const", _frac(self.c_const))
        object.__setattr__(self, "delta", _frac(self.delta))
        if not (0 < self.epsilon < 1):
            raise ValueError("epsilon must lie in (0, 1)")
        if self.c_const < 1:
            raise ValueError("C must be at least 1")
        if self.max_block_size < 1:
            raise ValueError("max_block_size must be positive")
        if not (0 < self.delta < 1):
            raise ValueError("delta must lie in (0, 1)")
        if self.max_block_size ** 2 * self.delta >= 1:
            raise ValueError("require max_block_size**2 * delta < 1")

    @classmethod
    def derive(cls, epsilon, c_const) -> "GadgetParams":
        epsilon = _frac(epsilon)
        c_const = _frac(c_const)
        f = _ceil(c_const / epsilon)
        delta = epsilon ** 2 / (4 * c_const ** 2)
        return cls(epsilon, c_const, f, delta)

    def edge_probability(self, n: int) -> float:
        return float(n) ** (-float(self.delta))


def derive_gadget_params(epsilon, c_const) -> GadgetParams:
    return GadgetParams.derive(epsilon, c_const)


@dataclass(frozen=True)
class CounterexampleParams:
    """Target shape for the glued construction.

    Given slack epsilon and ratio bound C with 1 <= s <= t <= C*s, the glued
    graph uses a gadget with n = s - 1 B-vertices and
    m = floor((1 - epsilon) * (s + t)) A-vertices, palette m + n - 1, and the
    halved slack eps_prime = epsilon / 2 with ratio c_prime = 2C + 2.
    ``threshold`` records the (existential, instance-dependent) minimum s
    beyond which the asymptotic guarantees kick in; it is never fabricated,
    only carried when a caller supplies one.
    """

    epsilon: Fraction
    c_const: Fraction
    s: int
    t: int
    threshold: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "epsilon", _frac(self.epsilon))
        object.__setattr__(self, "c_const", _frac(self.c_const))
        if not (0 < self.epsilon < Fraction(1, 2)):
            raise ValueError("epsilon must lie in (0, 1/2)")
        if self.c_const < 1:
            raise ValueError("C must be at least 1")
        if not (2 <= self.s <= self.t):
            raise ValueError("require 2 <= s <= t")
        if self.t > self.c_const * self.s:
            raise ValueError("require t <= C * s")
        if not (self.n <= self.m <= self.c_prime * self.n):
            raise ValueError("derived sizes must satisfy n <= m <= C' * n")

    @property
    def eps_prime(self) -> Fraction:
        return self.epsilon / 2

    @property
    def c_prime(self) -> Fraction:
        return 2 * self.c_const + 2

    @property
    def n(self) -> int:
        return self.s - 1

    @property
    def m(self) -> int:
        return _floor((1 - self.epsilon) * (self.s + self.t))

    @property
    def palette_size(self) -> int:
        return self.m + self.n - 1


# --- sampling and the two structural properties --------------------------


def _derived_seed(*parts: int) -> int:
    state = np.random.SeedSequence(list(parts)).generate_state(2)
    return int(state[0]) << 32 | int(state[1])


def sample_bipartite(n: int, params: GadgetParams, seed: int) -> Graph:
    """Random bipartite graph: floor(C*n) A-vertices, n B-vertices, each
    cross pair an edge independently with probability n**(-delta).
    Deterministic in (n, params, seed)."""
    if n < 1:
        raise ValueError("n must be positive")
    ma = _floor(params.c_const * n)
    if ma < 1:
        raise ValueError("floor(C*n) must be positive")
    p = params.edge_probability(n)
    rng = np.random.default_rng(seed)
    hits = rng.random((ma, n)) < p
    edges = [(int(a), ma + int(b)) for a, b in np.argwhere(hits)]
    labels = (LABEL_A,) * ma + (LABEL_B,) * n
    return Graph.from_edges(ma + n, edges, labels)


@dataclass(frozen=True)
class DegreeCheck:
    passed: bool
    max_degree: int
    worst_vertex: int | None


def check_degree_property(g: Graph, epsilon, n: int) -> DegreeCheck:
    """Pass iff every vertex has degree <= epsilon * n (exact comparison)."""
    epsilon = _frac(epsilon)
    worst_v, worst_d = None, -1
    for v in range(g.n):
        d = g.degree(v)
        if d > worst_d:
            worst_v, worst_d = v, d
    if g.n == 0:
        return DegreeCheck(True, 0, None)
    return DegreeCheck(Fraction(worst_d) <= epsilon * n, worst_d, worst_v)


@dataclass(frozen=True)
class BlockWitness:
    """A disjoint set collection with no fully joined cross pair."""

    xs: tuple[tuple[int, ...], ...]
    ys: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BlockCheck:
    """status: 'verified' (exhaustive), 'falsified' (witness attached), or
    'unknown_sampled' (sampled trials only, no failure seen)."""

    status: str
    witness: BlockWitness | None
    trials: int
    failures: int


def block_collection_joined(g: Graph, xs, ys) -> bool:
    """True iff some (X_i, Y_j) pair is fully joined: every x in X_i adjacent
    to every y in Y_j.  This is the per-collection predicate behind the block
    property and is usable on its own to audit witnesses."""
    y_masks = []
    for ys_i in ys:
        m = 0
        for y in ys_i:
            m |= 1 << y
        y_masks.append(m)
    for xs_i in xs:
        common = ~0
        for x in xs_i:
            common &= g.adj[x]
        for ym in y_masks:
            if common & ym == ym:
                return True
    return False


def _disjoint_collections(pool: list[int], k: int, f: int, counter, cap: int):
    """Yield canonical collections of k pairwise disjoint non-empty subsets
    of ``pool``, each of size <= f, ordered by ascending minimum element.
    ``counter`` is a one-element list tracking enumeration nodes against
    ``cap``."""
    chosen: list[tuple[int, ...]] = []

    def rec(lo: int, remaining: int):
        if remaining == 0:
            yield tuple(chosen)
            return
        used = set()
        for c in chosen:
            used.update(c)
        for anchor_idx in range(lo, len(pool)):
            a = pool[anchor_idx]
            if a in used:
                continue
            rest = [v for v in pool[anchor_idx + 1:] if v not in used]
            for size in range(0, f):
                for extra in combinations(rest, size):
                    counter[0] += 1
                    if counter[0] > cap:
                        raise EnumerationCapError(
                            f"block-property enumeration exceeded cap {cap}")
                    chosen.append((a,) + extra)
                    yield from rec(anchor_idx + 1, remaining - 1)
                    chosen.pop()

    yield from rec(0, k)


def check_block_property(
    g: Graph,
    max_block_size: int,
    epsilon,
    n: int,
    *,
    mode: str = "sampled",
    trials: int = 100_000,
    seed: int | None = None,
    node_cap: int = 2_000_000,
) -> BlockCheck:
    """Check the block-connection property at k = ceil(epsilon * n).

    The property: for every choice of k disjoint non-empty subsets
    X_1..X_k of the A side and k disjoint non-empty subsets Y_1..Y_k of the
    B side, all of size <= max_block_size, some pair (X_i, Y_j) is fully
    joined.  Checking the single size k = ceil(epsilon * n) suffices for all
    larger collection sizes: any bad larger collection restricts to a bad
    k-collection by dropping sets, since losing sets can only lose pairs.

    mode='exhaustive' enumerates every collection (refusing beyond
    ``node_cap`` enumeration nodes); mode='sampled' draws ``trials`` random
    collections with a generator seeded by ``seed`` and reports
    'unknown_sampled' when no failure is seen.  A concrete failing
    collection, however found, is returned as a witness ('falsified').
    """
    epsilon = _frac(epsilon)
    k = _ceil(epsilon * n)
    if k < 1:
        raise ValueError("ceil(epsilon * n) must be at least 1")
    a_part = list(g.part(LABEL_A))
    b_part = list(g.part(LABEL_B))
    if len(a_part) < k or len(b_part) < k:
        raise ValueError("sides too small for the requested collection size")
    if mode == "exhaustive":
        counter = [0]
        for xs in _disjoint_collections(a_part, k, max_block_size, counter, node_cap):
            for ys in _disjoint_collections(b_part, k, max_block_size, counter, node_cap):
                if not block_collection_joined(g, xs, ys):
                    return BlockCheck("falsified", BlockWitness(xs, ys), 0, 1)
        return BlockCheck("verified", None, 0, 0)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    if seed is None:
        raise ValueError("sampled mode needs a seed")
    rng = np.random.default_rng(seed)
    failures = 0
    witness = None
    for _ in range(trials):
        xs = _sample_collection(rng, a_part, k, max_block_size)
        ys = _sample_collection(rng, b_part, k, max_block_size)
        if not block_collection_joined(g, xs, ys):
            failures += 1
            if witness is None:
                witness = BlockWitness(xs, ys)
    if failures:
        return BlockCheck("falsified", witness, trials, failures)
    return BlockCheck("unknown_sampled", None, trials, 0)


def _sample_collection(rng, pool: list[int], k: int, f: int):
    """k disjoint subsets of pool: sizes uniform on 1..f (truncated so they
    fit), carved from a random permutation."""
    sizes = [int(rng.integers(1, f + 1)) for _ in range(k)]
    total = sum(sizes)
    if total > len(pool):
        # shrink overflowing sets to singletons, largest first
        order = sorted(range(k), key=lambda i: -sizes[i])
        for i in order:
            if total <= len(pool):
                break
            total -= sizes[i] - 1
            sizes[i] = 1
    perm = [pool[i] for i in rng.permutation(len(pool))]
    out = []
    at = 0
    for sz in sizes:
        out.append(tuple(sorted(perm[at:at + sz])))
        at += sz
    return tuple(out)


# --- probability bound exponents (log space) ------------------------------


def block_failure_exponent(n: int, epsilon, c_const, max_block_size: int, delta) -> float:
    """log of the union bound on the probability that the block property
    fails: ln((C+1)n + 1) * (C+1) * n - epsilon**2 * n**(2 - f**2 * delta)."""
    epsilon = float(_frac(epsilon))
    c = float(_frac(c_const))
    d = float(_frac(delta))
    f = max_block_size
    return math.log((c + 1) * n + 1) * (c + 1) * n \
        - epsilon ** 2 * float(n) ** (2 - f * f * d)


def degree_failure_exponent(n: int, c_const, delta) -> float:
    """log of the tail bound on some vertex exceeding its expected degree
    scale: ln((C+1)n) - n**(1-delta) / 3."""
    c = float(_frac(c_const))
    d = float(_frac(delta))
    return math.log((c + 1) * n) - float(n) ** (1 - d) / 3


# --- gadget construction ---------------------------------------------------


@dataclass(frozen=True)
class SampleReport:
    """One sampling attempt: the seed actually used and both property checks."""

    seed: int
    n: int
    m: int
    p: float
    degree: DegreeCheck
    blocks: BlockCheck

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "degree": {
                "passed": self.degree.passed,
                "max_degree": self.degree.max_degree,
                "worst_vertex": self.degree.worst_vertex,
            },
            "blocks": {
                "status": self.blocks.status,
                "trials": self.blocks.trials,
                "failures": self.blocks.failures,
                "witness": None if self.blocks.witness is None else {
                    "xs": [list(x) for x in self.blocks.witness.xs],
                    "ys": [list(y) for y in self.blocks.witness.ys],
                },
            },
        }


@dataclass(frozen=True)
class GadgetBuild:
    """Outcome of build_gadget: ``graph`` is None when every retry failed."""

    graph: Graph | None
    attempts: tuple[SampleReport, ...]

    @property
    def ok(self) -> bool:
        return self.graph is not None


def build_gadget(
    m: int,
    n: int,
    params: GadgetParams,
    seed: int,
    *,
    max_retries: int = 32,
    block_mode: str = "sampled",
    block_trials: int = 2000,
    block_node_cap: int = 2_000_000,
) -> GadgetBuild:
    """Sample until a bipartite draw satisfies the degree property (and the
    block property does not falsify), then return the gadget: the complement
    of the induced graph on the first m A-vertices plus all n B-vertices.

    In the gadget both parts are cliques and each vertex has at most
    ceil(epsilon * n) non-neighbors, because a gadget non-neighbor is
    exactly a sampled cross edge.  Retry r uses a seed derived from
    (seed, r); all attempts are reported.
    """
    ma = _floor(params.c_const * n)
    if not (1 <= n <= m <= ma):
        raise ValueError("require 1 <= n <= m <= floor(C*n)")
    attempts = []
    for r in range(max_retries):
        s = _derived_seed(seed, r)
        gp = sample_bipartite(n, params, s)
        deg = check_degree_property(gp, params.epsilon, n)
        blocks = check_block_property(
            gp, params.max_block_size, params.epsilon, n,
            mode=block_mode,
            trials=block_trials,
            seed=_derived_seed(seed, r, 1),
            node_cap=block_node_cap,
        )
        attempts.append(SampleReport(s, n, ma, params.edge_probability(n), deg, blocks))
        if deg.passed and blocks.status != "falsified":
            a_keep = list(range(m)) + list(range(ma, ma + n))
            sub, _ = induced_subgraph(gp, a_keep)
            h = complement(sub)
            limit = _ceil(params.epsilon * n)
            for v in range(h.n):
                assert non_neighbor_count(h, v) <= limit
            return GadgetBuild(h, tuple(attempts))
    return GadgetBuild(None, tuple(attempts))


def tiny_gadget() -> Graph:
    """Four-vertex gadget: parts {0,1} (A) and {2,3} (B), both cliques, all
    cross edges except 0-2.  The smallest gadget with a punched list."""
    return Graph.from_edges(
        4, [(0, 1), (2, 3), (0, 3), (1, 2), (1, 3)],
        (LABEL_A, LABEL_A, LABEL_B, LABEL_B))


def clique_gadget(m: int, n: int) -> Graph:
    """Complete gadget on m A-vertices and n B-vertices: nothing punched."""
    return complete(m + n, (LABEL_A,) * m + (LABEL_B,) * n)


# --- glued counterexample ---------------------------------------------------


@dataclass(frozen=True)
class CounterexampleAssembly:
    """The glued graph, its list assignment, and the copy bookkeeping.

    B occupies vertex ids 0..n-1 (in base-graph B order).  Copy i of the A
    side occupies ids a_ranges[i][0]..a_ranges[i][1]-1, in base-graph A
    order, and corresponds to the B-coloring colorings[i].
    """

    graph: Graph
    lists: ListAssignment
    base: Graph
    palette_size: int
    base_a: tuple[int, ...]
    base_b: tuple[int, ...]
    colorings: tuple[tuple[int, ...], ...]
    a_ranges: tuple[tuple[int, int], ...]

    def copy_index(self, coloring) -> int:
        c = tuple(coloring)
        try:
            return self.colorings.index(c)
        except ValueError:
            raise KeyError(f"no copy for B-coloring {c}") from None

    def copy_vertices(self, i: int) -> tuple[int, ...]:
        """Vertex ids of copy i in the glued graph: shared B, then its A."""
        start, stop = self.a_ranges[i]
        return tuple(range(len(self.base_b))) + tuple(range(start, stop))

    def copy_correspondence(self, i: int) -> dict[int, int]:
        """base-graph vertex id -> glued-graph vertex id for copy i."""
        start, _ = self.a_ranges[i]
        out = {b: j for j, b in enumerate(self.base_b)}
        for j, a in enumerate(self.base_a):
            out[a] = start + j
        return out


def build_counterexample(
    h: Graph,
    palette_size: int,
    colorings: str | list = "all",
    *,
    max_vertices: int = 1_000_000,
) -> CounterexampleAssembly:
    """Glue one copy of ``h`` per B-coloring along the shared B clique and
    punch the lists.

    Every copy keeps B (ids 0..n-1) and gets fresh A vertices.  B-vertices
    receive the full palette; an A-vertex in the copy for coloring c loses
    exactly the colors c gives to its non-neighbors inside B.  With
    colorings='all', every map B -> palette gets a copy (palette**n copies);
    an explicit list of colorings builds just those copies.  Refuses to build
    beyond ``max_vertices`` total vertices.
    """
    if h.labels is None:
        raise ValueError("gadget must carry A/B labels")
    base_a = h.part(LABEL_A)
    base_b = h.part(LABEL_B)
    m, n = len(base_a), len(base_b)
    if m < 1 or n < 1:
        raise ValueError("gadget needs non-empty A and B parts")
    if palette_size != m + n - 1:
        raise ValueError(f"palette must equal |A|+|B|-1 = {m + n - 1}")
    if colorings == "all":
        count = palette_size ** n
        requested = None
    else:
        requested = [tuple(c) for c in colorings]
        for c in requested:
            if len(c) != n or any(not (0 <= x < palette_size) for x in c):
                raise ValueError(f"bad B-coloring {c}")
        count = len(requested)
    total = n + count * m
    if total > max_vertices:
        raise AssemblyCapError(
            f"assembly needs {total} vertices ({count} copies), cap is {max_vertices}")

    b_pos = {b: i for i, b in enumerate(base_b)}
    a_pos = {a: i for i, a in enumerate(base_a)}
    adj = [0] * total
    # B-side internal edges follow the gadget.
    for i, b in enumerate(base_b):
        for u in bits(h.adj[b]):
            j = b_pos.get(u)
            if j is not None:
                adj[i] |= 1 << j

    lists: list[frozenset[int]] = [frozenset(range(palette_size))] * n
    full_list = frozenset(range(palette_size))
    colorings_seq = (product(range(palette_size), repeat=n)
                     if requested is None else requested)
    ranges = []
    kept_colorings = []
    at = n
    for c in colorings_seq:
        c = tuple(c)
        kept_colorings.append(c)
        start = at
        for ai, a in enumerate(base_a):
            va = start + ai
            row = 0
            punched = set()
            for u in bits(h.adj[a]):
                j = b_pos.get(u)
                if j is not None:
                    row |= 1 << j          # cross edge into shared B
                else:
                    row |= 1 << (start + a_pos[u])  # A-side edge inside copy
            for j in range(n):
                if not (row >> j) & 1:
                    punched.add(c[j])      # non-neighbor's color is lost
            adj[va] = row
            for u in bits(row):
                adj[u] |= 1 << va
            lst = full_list - punched
            assert len(lst) >= palette_size - (n - ((row & ((1 << n) - 1)).bit_count()))
            lists.append(lst)
        at += m
        ranges.append((start, at))

    labels = (LABEL_B,) * n + (LABEL_A,) * (total - n)
    glued = Graph(total, tuple(adj), labels)
    return CounterexampleAssembly(
        graph=glued,
        lists=ListAssignment(tuple(lists)),
        base=h,
        palette_size=palette_size,
        base_a=base_a,
        base_b=base_b,
        colorings=tuple(kept_colorings),
        a_ranges=tuple(ranges),
    )


def verify_no_l_coloring_pigeonhole(
    assembly: CounterexampleAssembly, coloring
) -> bool:
    """True iff no proper list coloring of the copy for ``coloring`` extends
    it: fix B to the given proper palette coloring, restrict to that copy,
    and run the solver on the A side with neighbor colors struck out.
    Improper-on-B or out-of-palette colorings are rejected."""
    c = tuple(coloring)
    n = len(assembly.base_b)
    if len(c) != n:
        raise ValueError("coloring length must match |B|")
    if any(not (0 <= x < assembly.palette_size) for x in c):
        raise ValueError("coloring uses out-of-palette colors")
    g = assembly.graph
    for i in range(n):
        for j in bits(g.adj[i] & ((1 << n) - 1)):
            if c[i] == c[j]:
                raise ValueError("coloring must be proper on B")
    i = assembly.copy_index(c)
    start, stop = assembly.a_ranges[i]
    sub, kept = induced_subgraph(g, range(start, stop))
    punched = []
    for new_id, v in enumerate(kept):
        live = set(assembly.lists.lists[v])
        for b in bits(g.adj[v] & ((1 << n) - 1)):
            live.discard(c[b])
        punched.append(frozenset(live))
    return find_l_coloring(sub, ListAssignment.of_lists(punched)) is None


# --- the size bound ---------------------------------------------------------


@dataclass(frozen=True)
class LowerBound:
    value: int
    target: Fraction
    holds: bool


def choosability_lower_bound(s: int, t: int, epsilon) -> LowerBound:
    """Exact integer evaluation of the construction's guarantee.

    value = m + n - ceil(eps_prime * n) with n = s - 1,
    m = floor((1 - epsilon)(s + t)), eps_prime = epsilon / 2; the bound holds
    when value exceeds (1 - epsilon)(2s + t).
    """
    epsilon = _frac(epsilon)
    if not (0 < epsilon < Fraction(1, 2)):
        raise ValueError("epsilon must lie in (0, 1/2)")
    if not (1 <= s <= t):
        raise ValueError("require 1 <= s <= t")
    n = s - 1
    m = _floor((1 - epsilon) * (s + t))
    value = m + n - _ceil(epsilon / 2 * n)
    target = (1 - epsilon) * (2 * s + t)
    return LowerBound(value, target, Fraction(value) > target)


# --- Monte Carlo sweep -------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    n: int
    seed: int
    p: float
    max_degree: int
    degree_pass: bool
    block_status: str
    block_failures: int
    trials: int


def degree_property_sweep(
    ns,
    trials: int,
    *,
    epsilon,
    c_const,
    delta=None,
    seed: int,
    max_block_size: int = 1,
    block_trials: int = 0,
    threads: int = 1,
) -> list[SweepRow]:
    """Seeded Monte Carlo sweep of the degree property across sizes.

    One row per (n, trial).  Per-trial seeds derive from (seed, n, trial), so
    the report is identical for any thread count.  ``delta`` defaults to the
    canonical derived value; pass an explicit Fraction to rescale the sweep.
    With block_trials > 0 each draw also gets a sampled block-property check,
    otherwise the block columns read 'skipped'.
    """
    epsilon = _frac(epsilon)
    c_const = _frac(c_const)
    if delta is None:
        delta = GadgetParams.derive(epsilon, c_const).delta
    else:
        delta = _frac(delta)
    params = GadgetParams(epsilon, c_const, max_block_size, delta)

    jobs = [(n, trial) for n in ns for trial in range(trials)]

    def run(job):
        n, trial = job
        s = _derived_seed(seed, n, trial)
        g = sample_bipartite(n, params, s)
        deg = check_degree_property(g, epsilon, n)
        if block_trials > 0:
            blocks = check_block_property(
                g, max_block_size, epsilon, n,
                mode="sampled", trials=block_trials,
                seed=_derived_seed(seed, n, trial, 1))
            status, failures, bt = blocks.status, blocks.failures, blocks.trials
        else:
            status, failures, bt = "skipped", 0, 0
        return SweepRow(n, s, params.edge_probability(n), deg.max_degree,
                        deg.passed, status, failures, bt)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(run, jobs))
    else:
        rows = [run(job) for job in jobs]
    return rows
