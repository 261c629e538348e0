"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one int bitmask per vertex; bit ``v`` of ``adj[u]``
is set iff ``uv`` is an edge.  Graphs are immutable values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Malformed graph description (bad edge, bad family parameters, bad file)."""


# Distance between vertices in different components.
UNREACHABLE = None


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphInputError("adjacency length must equal n >= 0")
        full = (1 << self.n) - 1
        for u, mask in enumerate(self.adj):
            if mask >> u & 1:
                raise GraphInputError(f"self-loop at {u}")
            if mask & ~full:
                raise GraphInputError(f"vertex {u} has neighbour >= n")
            for v in iter_bits(mask):
                if not self.adj[v] >> u & 1:
                    raise GraphInputError(f"asymmetric adjacency {u}-{v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphInputError("need exactly one label per vertex")

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels else str(u)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; the i-th listed vertex becomes vertex i."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return from_edge_list(len(vertices), edges)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphInputError(f"self-loop in edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has endpoint outside 0..{n - 1}")
        if adj[u] >> v & 1:
            raise GraphInputError(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def read_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v`` (0-based)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphInputError("empty graph file")
    try:
        n, m = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphInputError(f"malformed edge list: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise GraphInputError("every edge line needs exactly two vertices")
    if len(edges) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# -- operations ---------------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = g.adj + tuple(mask << shift for mask in h.adj)
    labels = None
    if g.labels or h.labels:
        labels = tuple(g.label(u) for u in range(g.n)) + tuple(h.label(u) for u in range(h.n))
    return Graph(g.n + h.n, adj, labels)


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    left = (1 << g.n) - 1
    right = ((1 << h.n) - 1) << g.n
    adj = tuple(mask | (right if v < g.n else left) for v, mask in enumerate(u.adj))
    return Graph(u.n, adj, u.labels)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` gets index ``a * h.n + b``."""
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * h.n + b, a * h.n + c))
    for a, a2 in g.edges():
        for b in range(h.n):
            edges.append((a * h.n + b, a2 * h.n + b))
    labels = [f"({g.label(a)},{h.label(b)})" for a in range(g.n) for b in range(h.n)]
    return from_edge_list(g.n * h.n, edges, labels)


def corona(g: Graph) -> Graph:
    """Attach a pendant vertex ``n + i`` to every vertex ``i``."""
    n = g.n
    edges = g.edges() + [(i, n + i) for i in range(n)]
    labels = None
    if g.labels:
        labels = list(g.labels) + [f"{g.labels[i]}'" for i in range(n)]
    return from_edge_list(2 * n, edges, labels)


# -- distances ----------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances; entries are ints or ``UNREACHABLE``."""

    d: tuple[tuple[int | None, ...], ...]

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, uv: tuple[int, int]) -> int | None:
        u, v = uv
        return self.d[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.d[u][v] is not UNREACHABLE


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj[u]):
            if dist[v] is UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or all(x is not UNREACHABLE for x in bfs_distances(g, 0))


# -- trees ----------------------------------------------------------------------

def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def tree_centers(g: Graph) -> list[int]:
    """The one or two central vertices, found by repeatedly stripping leaves."""
    if g.n <= 2:
        return list(range(g.n))
    deg = [g.degree(u) for u in range(g.n)]
    layer = [u for u in range(g.n) if deg[u] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in iter_bits(g.adj[u]):
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for u in order:
        for v in iter_bits(g.adj[u]):
            if v not in parent:
                parent[v] = u
                order.append(v)
    codes: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(codes[v] for v in iter_bits(g.adj[u]) if parent.get(v) == u)
        codes[u] = "(" + "".join(kids) + ")"
    return codes[root]


def tree_canonical_form(g: Graph) -> str:
    """Center-rooted AHU encoding; two trees are isomorphic iff the codes match."""
    if not is_tree(g):
        raise GraphInputError("canonical form is only defined for trees")
    return min(_rooted_code(g, c) for c in tree_centers(g))


def trees_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and tree_canonical_form(g) == tree_canonical_form(h)
