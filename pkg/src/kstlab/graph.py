"""Immutable simple graphs over dense integer vertex ids, with bitset adjacency.

Vertices of an n-vertex graph are exactly 0..n-1.  Each adjacency row is a
Python int used as a bitset, which keeps neighbourhood intersection tests and
subset checks cheap for the exact searches built on top of this module.
Graphs are value objects: every operation returns a new Graph and never
mutates its inputs.  An optional per-vertex label partitions the vertices
into an "A" side and a "B" side; labels survive complement, induced
subgraphs, and gluing.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

LABEL_A = "A"
LABEL_B = "B"

FORMAT_VERSION = 1


class GraphFormatError(ValueError):
    """Malformed graph text or JSON; message carries a line/position hint."""


class DuplicateEdgeWarning(UserWarning):
    """A parsed edge list repeated an edge; duplicates are merged."""


class CliqueGlueError(ValueError):
    """A glue was requested along a shared vertex set that is not a clique."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: no loops, no parallel edges, undirected."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions out-of-range vertices")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("labels length must equal vertex count")
            for v, lab in enumerate(self.labels):
                if lab not in (LABEL_A, LABEL_B):
                    raise ValueError(f"vertex {v} has label {lab!r}, expected 'A' or 'B'")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} rejected")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        labs = tuple(labels) if labels is not None else None
        return cls(n, tuple(adj), labs)

    # --- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in bits(row):
                yield (u, u + 1 + off)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def part(self, label: str) -> tuple[int, ...]:
        """Vertices carrying ``label``; empty when the graph is unlabeled."""
        if self.labels is None:
            return ()
        return tuple(v for v in range(self.n) if self.labels[v] == label)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


# --- constructors ------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int, labels: Iterable[str] | None = None) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)),
                 tuple(labels) if labels is not None else None)


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with the s side labeled A (ids 0..s-1) and the t side B."""
    a_mask = (1 << s) - 1
    b_mask = ((1 << t) - 1) << s
    adj = [b_mask] * s + [a_mask] * t
    return Graph(s + t, tuple(adj), (LABEL_A,) * s + (LABEL_B,) * t)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle, inner pentagram, matched spokes."""
    es = [(i, (i + 1) % 5) for i in range(5)]
    es += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    es += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, es)


# --- pure operations ---------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)),
                 g.labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the kept-vertex list mapping new ids to old.

    ``kept[i]`` is the original id of new vertex ``i``; kept ids are sorted
    ascending so the correspondence is canonical.
    """
    kept = sorted(set(vertices))
    for v in kept:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    for i, v in enumerate(kept):
        row = 0
        for u in bits(g.adj[v]):
            j = pos.get(u)
            if j is not None:
                row |= 1 << j
        adj[i] = row
    labs = tuple(g.labels[v] for v in kept) if g.labels is not None else None
    return Graph(len(kept), tuple(adj), labs), tuple(kept)


def permuted(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel vertices: new id perm[v] for old id v (perm is a bijection)."""
    p = tuple(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError("perm must be a permutation of range(n)")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << p[u]
        adj[p[v]] = row
    labs = None
    if g.labels is not None:
        out = [""] * g.n
        for v in range(g.n):
            out[p[v]] = g.labels[v]
        labs = tuple(out)
    return Graph(g.n, tuple(adj), labs)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    for v in bits(m):
        need = m & ~(1 << v)
        if (g.adj[v] & need) != need:
            return False
    return True


def non_neighbor_count(g: Graph, v: int) -> int:
    """Number of vertices other than v not adjacent to v."""
    return g.n - 1 - g.degree(v)


@dataclass(frozen=True)
class GlueSpec:
    """Gluing instructions: identify clique vertices of g1 with ones of g2.

    ``shared`` lists pairs (v1, v2) meaning vertex v1 of g1 and vertex v2 of
    g2 become one vertex.  Both projections must be injective and both vertex
    sets must induce cliques in their own graphs.
    """

    g1: Graph
    g2: Graph
    shared: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        left = [p[0] for p in self.shared]
        right = [p[1] for p in self.shared]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise CliqueGlueError("shared correspondence must be injective on both sides")
        for v in left:
            if not (0 <= v < self.g1.n):
                raise CliqueGlueError(f"shared vertex {v} out of range in g1")
        for v in right:
            if not (0 <= v < self.g2.n):
                raise CliqueGlueError(f"shared vertex {v} out of range in g2")
        if not is_clique(self.g1, left):
            raise CliqueGlueError("shared vertices do not form a clique in g1")
        if not is_clique(self.g2, right):
            raise CliqueGlueError("shared vertices do not form a clique in g2")


def glue(spec: GlueSpec) -> Graph:
    """Clique-sum without edge deletion: union g1 and g2 along the shared clique.

    Result vertex order: all of g1 first (ids unchanged), then g2's
    non-shared vertices in ascending g2 order.  No edges beyond those of the
    two parts are added, so every new adjacency within the result traces back
    to exactly one side.
    """
    spec.validate()
    g1, g2 = spec.g1, spec.g2
    to_new = {}
    for v1, v2 in spec.shared:
        to_new[v2] = v1
    extra = [v for v in range(g2.n) if v not in to_new]
    for i, v in enumerate(extra):
        to_new[v] = g1.n + i
    n = g1.n + len(extra)
    adj = list(g1.adj) + [0] * len(extra)
    for u, v in g2.edges():
        nu, nv = to_new[u], to_new[v]
        adj[nu] |= 1 << nv
        adj[nv] |= 1 << nu
    labs = None
    if g1.labels is not None and g2.labels is not None:
        out = list(g1.labels) + [""] * len(extra)
        for v in extra:
            out[to_new[v]] = g2.labels[v]
        labs = tuple(out)
    return Graph(n, tuple(adj), labs)


# --- serialization -----------------------------------------------------
#
# Edge-list text format:
#   line 1:  n=<int> m=<int>
#   line 2:  A=<space separated vertex ids>     (optional; the rest are B)
#   then exactly m lines "u v" with 0 <= u,v < n, u != v.
# '#' starts a comment anywhere on a line.  A repeated edge is merged and
# reported through DuplicateEdgeWarning.


def to_edge_list(g: Graph) -> str:
    lines = [f"n={g.n} m={g.edge_count()}"]
    if g.labels is not None:
        lines.append("A=" + " ".join(str(v) for v in g.part(LABEL_A)))
    for u, v in g.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise GraphFormatError("line 1: missing 'n=<int> m=<int>' header")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("m="):
        raise GraphFormatError(f"line {lineno}: expected 'n=<int> m=<int>', got {head!r}")
    try:
        n = int(parts[0][2:])
        m = int(parts[1][2:])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer in header {head!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative count in header")
    rows = rows[1:]
    labels = None
    if rows and rows[0][1].startswith("A="):
        lineno, body = rows[0]
        spec = body[2:].split()
        try:
            a_set = {int(x) for x in spec}
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in A= line") from None
        for v in a_set:
            if not (0 <= v < n):
                raise GraphFormatError(f"line {lineno}: A-vertex {v} out of range")
        labels = tuple(LABEL_A if v in a_set else LABEL_B for v in range(n))
        rows = rows[1:]
    if len(rows) != m:
        raise GraphFormatError(
            f"header declares m={m} edges but {len(rows)} edge lines follow")
    adj = [0] * n
    for lineno, body in rows:
        fields = body.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {body!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {body!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u} rejected")
        if (adj[u] >> v) & 1:
            warnings.warn(f"line {lineno}: duplicate edge ({u},{v}) merged",
                          DuplicateEdgeWarning, stacklevel=2)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), labels)


def to_json_dict(g: Graph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "vertex_count": g.n,
        "edges": [[u, v] for u, v in g.edges()],
        "labels": list(g.labels) if g.labels is not None else None,
    }


def from_json_dict(data: dict) -> Graph:
    try:
        n = data["vertex_count"]
        edges = data["edges"]
        labels = data.get("labels")
    except (KeyError, TypeError) as exc:
        raise GraphFormatError(f"graph JSON missing field: {exc}") from None
    if not isinstance(n, int):
        raise GraphFormatError("vertex_count must be an integer")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphFormatError(f"edge entry {i} is not a pair")
        pairs.append((e[0], e[1]))
    return Graph.from_edges(n, pairs, labels)


def serialize(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return to_edge_list(g)
    if fmt == "json":
        return json.dumps(to_json_dict(g), sort_keys=True) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")


def parse(text: str, fmt: str | None = None) -> Graph:
    """Parse a graph; with fmt=None, sniff JSON by a leading '{'."""
    if fmt is None:
        fmt = "json" if text.lstrip()[:1] == "{" else "edge-list"
    if fmt == "edge-list":
        return from_edge_list(text)
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
        return from_json_dict(data)
    raise ValueError(f"unknown graph format {fmt!r}")
