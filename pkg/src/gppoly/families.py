"""Named parametric graph families and the ``name:p1,p2`` family DSL.

Vertex numbering of every builder is fixed so results are reproducible:

* ``path:n``, ``cycle:n``  - ``0..n-1`` along the path/cycle.
* ``complete_bipartite:m,n`` - first part ``0..m-1``, second ``m..m+n-1``.
* ``grid:r,s``  - ``P_r x P_s``, vertex ``(i, j)`` is ``i*s + j``.
* ``comb:n``   - path ``0..n-1``, the pendant of ``i`` is ``n+i``.
* ``broom:s,r`` - handle ``u_0..u_s`` is ``0..s``, bristle ``v_j`` is ``s+j``.
* ``kneser2:n`` - 2-subsets of ``{1..n}`` in lexicographic order.
* ``tstar:r,a`` - part ``p`` holds ``p*r .. p*r+r-1``; vertex ``p*r+j`` has index ``j``.
* ``tree1:k``/``tree2:k`` - spider centre ``0``, then each leg outward from the centre.
* ``petersen`` - outer cycle ``u_i = i``, spokes to ``v_i = 5+i``, inner pentagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    GraphInputError,
    corona,
    cartesian_product,
    empty_graph,
    from_edge_list,
    trees_isomorphic,
)

# family -> (parameter names, minimum value for each parameter)
FAMILIES: dict[str, tuple[tuple[str, ...], tuple[int, ...]]] = {
    "empty": (("n",), (0,)),
    "complete": (("n",), (1,)),
    "path": (("n",), (1,)),
    "cycle": (("n",), (3,)),
    "complete_bipartite": (("m", "n"), (1, 1)),
    "grid": (("r", "s"), (1, 1)),
    "comb": (("n",), (1,)),
    "broom": (("s", "r"), (0, 0)),
    "kneser2": (("n",), (2,)),
    "tstar": (("r", "a"), (1, 1)),
    "tree1": (("k",), (1,)),
    "tree2": (("k",), (1,)),
    "petersen": ((), ()),
}

# Leg lengths (edges) of the two spiders; 12+4+3 = 9+8+2 and 12*4*3 = 9*8*2.
TREE_LEGS = {"tree1": (12, 4, 3), "tree2": (9, 8, 2)}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    inner: FamilySpec | None = None

    def __post_init__(self):
        if self.name == "corona":
            if self.inner is None or self.params:
                raise GraphInputError("corona takes exactly one inner family")
            return
        if self.name not in FAMILIES:
            raise GraphInputError(f"unknown family {self.name!r}")
        names, mins = FAMILIES[self.name]
        if len(self.params) != len(names):
            raise GraphInputError(
                f"{self.name} expects {len(names)} parameter(s) {names}, got {len(self.params)}")
        for nm, lo, val in zip(names, mins, self.params):
            if val < lo:
                raise GraphInputError(f"{self.name}: {nm} must be >= {lo}, got {val}")

    def __str__(self) -> str:
        if self.name == "corona":
            return f"corona({self.inner})"
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(map(str, self.params))}"

    @property
    def param_names(self) -> tuple[str, ...]:
        return FAMILIES[self.name][0] if self.name in FAMILIES else ()


_DSL = re.compile(r"^([a-z_0-9]+)(?::\s*(\d+(?:\s*,\s*\d+)*))?$")


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    if text.startswith("corona(") and text.endswith(")"):
        return FamilySpec("corona", (), parse_family(text[len("corona("):-1]))
    m = _DSL.match(text)
    if not m:
        raise GraphInputError(f"cannot parse family {text!r}")
    name, params = m.groups()
    values = tuple(int(p) for p in params.split(",")) if params else ()
    return FamilySpec(name, values)


def build_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.name == "corona":
        return corona(build_family(spec.inner))
    builder = _BUILDERS[spec.name]
    return builder(*spec.params)


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return from_edge_list(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def grid(r: int, s: int) -> Graph:
    return cartesian_product(path(r), path(s))


def comb(n: int) -> Graph:
    return corona(path(n))


def broom(s: int, r: int) -> Graph:
    edges = [(i, i + 1) for i in range(s)] + [(0, s + j) for j in range(1, r + 1)]
    labels = [f"u{i}" for i in range(s + 1)] + [f"v{j}" for j in range(1, r + 1)]
    return from_edge_list(s + r + 1, edges, labels)


def kneser2(n: int) -> Graph:
    verts = list(combinations(range(1, n + 1), 2))
    edges = [(i, j) for i, j in combinations(range(len(verts)), 2)
             if not set(verts[i]) & set(verts[j])]
    return from_edge_list(len(verts), edges, [f"{{{a},{b}}}" for a, b in verts])


def tstar(r: int, a: int) -> Graph:
    """Complete a-partite graph with parts of size r, minus the edges between
    equally-indexed vertices of different parts."""
    edges = [(p * r + i, q * r + j)
             for p, q in combinations(range(a), 2)
             for i in range(r) for j in range(r) if i != j]
    labels = [f"{p + 1}_{j + 1}" for p in range(a) for j in range(r)]
    return from_edge_list(r * a, edges, labels)


def spider(legs: tuple[int, ...]) -> Graph:
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return from_edge_list(nxt, edges)


def tree1(k: int) -> Graph:
    return spider(tuple(k * x for x in TREE_LEGS["tree1"]))


def tree2(k: int) -> Graph:
    return spider(tuple(k * x for x in TREE_LEGS["tree2"]))


def petersen() -> Graph:
    edges = ([(i, (i + 1) % 5) for i in range(5)]
             + [(i, 5 + i) for i in range(5)]
             + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    labels = [f"u{i}" for i in range(5)] + [f"v{i}" for i in range(5)]
    return from_edge_list(10, edges, labels)


_BUILDERS = {
    "empty": empty_graph,
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "grid": grid,
    "comb": comb,
    "broom": broom,
    "kneser2": kneser2,
    "tstar": tstar,
    "tree1": tree1,
    "tree2": tree2,
    "petersen": petersen,
}


def trees_equal_nonisomorphic_check(k: int) -> tuple[bool, bool]:
    """(equal polynomials, isomorphic) for the spider pair tree1(k), tree2(k)."""
    from .engine import gp_polynomial

    t1, t2 = tree1(k), tree2(k)
    return gp_polynomial(t1) == gp_polynomial(t2), trees_isomorphic(t1, t2)
