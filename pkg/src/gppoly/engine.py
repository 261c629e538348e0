"""Enumeration of general position sets.

A vertex triple is *collinear* when one of its vertices lies on a shortest
path between the other two.  Vertices in different components are never
collinear with anything across the gap, so disconnected graphs need no
special casing.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .graph import UNREACHABLE, DistanceMatrix, Graph, bits_to_tuple, distance_matrix, iter_bits
from .poly import Polynomial, binomial_power


class ResourceLimitError(RuntimeError):
    """A configured safety limit would be exceeded."""


DEFAULT_MAX_MAXIMAL_SETS = 25


@dataclass(frozen=True)
class CollinearTriples:
    """Per-pair bitmasks over an ``n``-vertex graph.

    ``between[u][w]`` holds the vertices strictly inside some ``u,w``-geodesic.
    ``collinear[u][v]`` holds every ``w`` for which ``{u, v, w}`` is collinear,
    whichever of the three sits in the middle.
    """

    n: int
    between: tuple[tuple[int, ...], ...]
    collinear: tuple[tuple[int, ...], ...]

    def is_collinear(self, u: int, v: int, w: int) -> bool:
        return bool(self.collinear[u][v] >> w & 1)

    def between_set(self, u: int, w: int) -> tuple[int, ...]:
        return bits_to_tuple(self.between[u][w])


def collinear_triples(g: Graph, d: DistanceMatrix | None = None) -> CollinearTriples:
    if d is None:
        d = distance_matrix(g)
    n = g.n
    dist = d.d
    between = [[0] * n for _ in range(n)]
    for u in range(n):
        du = dist[u]
        for w in range(u + 1, n):
            duw = du[w]
            if duw is UNREACHABLE or duw < 2:
                continue
            dw = dist[w]
            mask = 0
            for v in range(n):
                a, b = du[v], dw[v]
                if a and b and a + b == duw:
                    mask |= 1 << v
            between[u][w] = between[w][u] = mask
    collinear = [[0] * n for _ in range(n)]
    for u in range(n):
        for w in range(u + 1, n):
            for v in iter_bits(between[u][w]):
                # {u, v, w} with v in the middle: register under all three pairs
                collinear[u][w] |= 1 << v
                collinear[w][u] |= 1 << v
                collinear[u][v] |= 1 << w
                collinear[v][u] |= 1 << w
                collinear[v][w] |= 1 << u
                collinear[w][v] |= 1 << u
    return CollinearTriples(n, tuple(map(tuple, between)), tuple(map(tuple, collinear)))


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def is_general_position(g: Graph, s: Iterable[int],
                        ct: CollinearTriples | None = None) -> bool:
    verts = sorted(set(s))
    if any(not 0 <= v < g.n for v in verts):
        raise ValueError(f"vertex set {verts} not contained in 0..{g.n - 1}")
    if len(verts) < 3:
        return True
    if ct is None:
        ct = collinear_triples(g)
    smask = _mask_of(verts)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if ct.collinear[u][v] & smask:
                return False
    return True


# -- depth-first enumeration ------------------------------------------------------
#
# A node is a general position set S (built in increasing vertex order) plus
# ``forbidden``: every vertex collinear with some pair of S.  A child adds the
# next candidate v and ORs in collinear[s][v] for s in S.

def _count_subtree(col: Sequence[Sequence[int]], n: int, first: int) -> list[int]:
    counts = [0] * (n + 2)
    stack_s: list[int] = [first]

    def extend(cand: int, forbidden: int, size: int) -> None:
        counts[size] += 1
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            forb = forbidden
            for s in stack_s:
                forb |= col[s][v]
            stack_s.append(v)
            extend(cand & ~forb, forb, size + 1)
            stack_s.pop()

    full = (1 << n) - 1
    extend(full & ~((2 << first) - 1), 0, 1)
    return counts


def _count_worker(args):
    col, n, first = args
    return _count_subtree(col, n, first)


def gp_polynomial(g: Graph, workers: int = 1) -> Polynomial:
    """Count general position sets of every size.

    With ``workers > 1`` the top-level branches (one per smallest vertex) are
    spread over a process pool; the summed counts are identical either way.
    """
    n = g.n
    col = collinear_triples(g).collinear
    totals = [1] + [0] * (n + 1)
    if workers > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_worker, [(col, n, v) for v in range(n)]))
    else:
        parts = [_count_subtree(col, n, v) for v in range(n)]
    for part in parts:
        for i, c in enumerate(part):
            totals[i] += c
    return Polynomial(totals)


def gp_number(g: Graph) -> int:
    return gp_polynomial(g).degree


def gp_census_bruteforce(g: Graph) -> Polynomial:
    """Reference count over all 2**n subsets, each tested pairwise."""
    n = g.n
    ct = collinear_triples(g)
    counts = [0] * (n + 1)
    for mask in range(1 << n):
        verts = bits_to_tuple(mask)
        ok = True
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if ct.collinear[u][v] & mask:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            counts[len(verts)] += 1
    return Polynomial(counts)


def maximal_gp_set_masks(g: Graph) -> list[int]:
    n = g.n
    col = collinear_triples(g).collinear
    full = (1 << n) - 1
    found: list[int] = []
    chosen: list[int] = []

    def extend(cand: int, forbidden: int, smask: int) -> None:
        if (smask | forbidden) == full:
            found.append(smask)
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            forb = forbidden
            for s in chosen:
                forb |= col[s][v]
            chosen.append(v)
            extend(cand & ~forb, forb, smask | low)
            chosen.pop()

    extend(full, 0, 0)
    return found


def maximal_gp_sets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal general position sets, as sorted tuples in
    lexicographic order."""
    return sorted(bits_to_tuple(m) for m in maximal_gp_set_masks(g))


def _subfamily_intersections(masks: Sequence[int]):
    """List of ``(k, t, count)``: ``count`` subfamilies of size ``k >= 1`` meet in
    exactly ``t`` vertices.

    Once a running intersection is empty, every extension is empty too, so the
    remaining ``r`` later sets contribute ``comb(r, j)`` subfamilies of size
    ``k + j`` in one step instead of being walked.
    """
    N = len(masks)
    out: list[tuple[int, int, int]] = []

    def rec(start: int, inter: int, k: int) -> None:
        for i in range(start, N):
            new = inter & masks[i]
            if new == 0:
                rest = N - i - 1
                for j in range(rest + 1):
                    out.append((k + 1 + j, 0, comb(rest, j)))
                continue
            out.append((k + 1, new.bit_count(), 1))
            rec(i + 1, new, k + 1)

    full = (1 << max((m.bit_length() for m in masks), default=0)) - 1
    rec(0, full, 0)
    return out


def intersection_census(sets: Sequence[Iterable[int]]) -> dict[int, dict[int, int]]:
    """``table[k][t]`` = number of ``k``-element subfamilies whose common
    intersection has exactly ``t`` vertices, for ``k >= 2``."""
    masks = [_mask_of(s) for s in sets]
    table: dict[int, Counter] = defaultdict(Counter)
    for k, t, c in _subfamily_intersections(masks):
        if k >= 2:
            table[k][t] += c
    return {k: dict(sorted(table[k].items())) for k in sorted(table)}


def psi_inclusion_exclusion(g: Graph, max_sets: int = DEFAULT_MAX_MAXIMAL_SETS) -> Polynomial:
    """General position polynomial as the alternating sum of (1+x)^|X_I| over
    subfamilies I of the maximal general position sets."""
    masks = maximal_gp_set_masks(g)
    if len(masks) > max_sets:
        raise ResourceLimitError(
            f"{len(masks)} maximal general position sets exceed the limit of {max_sets}")
    by_size: Counter = Counter()
    for k, t, c in _subfamily_intersections(masks):
        by_size[t] += c if k % 2 else -c
    top = max(by_size, default=0)
    acc = [0] * (top + 1)
    for t, c in by_size.items():
        for i, b in enumerate(binomial_power(t)):
            acc[i] += c * b
    return Polynomial(acc)
