"""Closed-form general position polynomials for the named families, the clique
and independent-union-of-cliques polynomials, and the join identity."""

from __future__ import annotations

from math import factorial, isqrt
from math import comb as _comb

from .families import TREE_LEGS, FamilySpec, parse_family
from .graph import Graph
from .poly import ONE, Polynomial, binomial_power, multiply, subtract


class UnsupportedFamilyError(ValueError):
    """No closed form is known for the requested family or parameters."""


def C(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return _comb(a, b)


def _poly(coeffs: dict[int, int]) -> Polynomial:
    top = max(coeffs, default=0)
    return Polynomial(coeffs.get(i, 0) for i in range(top + 1))


def _first_three(n: int) -> dict[int, int]:
    return {0: 1, 1: n, 2: C(n, 2)}


def psi_complete(n: int) -> Polynomial:
    return binomial_power(n)


def psi_path(n: int) -> Polynomial:
    return _poly(_first_three(n))


def psi_cycle(n: int) -> Polynomial:
    if n < 3:
        raise UnsupportedFamilyError("cycle needs n >= 3")
    c = _first_three(n)
    if n % 2:
        c[3] = C(n, 3) - n * C(n // 2, 2)
    else:
        c[3] = C(n, 3) - n * C(n // 2 - 1, 2) - n * (n - 2) // 2
    return _poly(c)


def psi_complete_bipartite(m: int, n: int) -> Polynomial:
    if m < n:
        m, n = n, m
    c = _first_three(m + n)
    for i in range(3, m + 1):
        c[i] = C(m, i) + C(n, i)
    return _poly(c)


def psi_grid(r: int, s: int) -> Polynomial:
    if min(r, s) < 2:
        raise UnsupportedFamilyError("grid closed form needs r, s >= 2")
    if r == s == 2:
        return Polynomial([1, 4, 6])
    c = _first_three(r * s)
    if min(r, s) == 2:
        t = max(r, s)
        c[3] = t * (t - 1) * (t - 2) // 3
        return _poly(c)
    # evaluated as displayed, in the given (r, s) order
    num3 = (r - 1) * r * (s - 1) * s * (r * (2 * s - 1) - s - 4)
    num4 = r * s * (r - 1) * (r - 2) * (s - 1) * (s - 2) * (r * (s - 3) - s + 7)
    assert num3 % 18 == 0 and num4 % 144 == 0
    c[3] = num3 // 18
    c[4] = num4 // 144
    return _poly(c)


def grid_max_gp_count(r: int, s: int) -> int:
    """Number of maximum general position sets of P_r x P_s for r, s >= 3."""
    return r * s * (r - 1) * (r - 2) * (s - 1) * (s - 2) * (r * (s - 3) - s + 7) // 144


def comb_coefficient(n: int, k: int) -> int:
    """a_k of the comb G_n for k >= 3: zero, one or two path vertices."""
    none_on_path = C(n, k)
    one = sum(C(i - 1, k - 1) + C(n - i, k - 1) for i in range(1, n + 1))
    two = sum(C(j - i - 1, k - 2) for i in range(1, n) for j in range(i + 1, n + 1))
    return none_on_path + one + two


def psi_comb(n: int) -> Polynomial:
    c = _first_three(2 * n)
    for k in range(3, n + 1):
        c[k] = comb_coefficient(n, k)
    return _poly(c)


def psi_broom(s: int, r: int) -> Polynomial:
    c = _first_three(s + r + 1)
    for k in range(3, r + 2):
        c[k] = s * C(r, k - 1) + C(r, k)
    return _poly(c)


def broom_pattern(s: int, r: int) -> bool:
    """Whether b_1 < b_2 > b_3 < b_4 holds for the broom B_{s,r}."""
    b = psi_broom(s, r)
    return b[1] < b[2] > b[3] < b[4]


def broom_threshold(r: int) -> int:
    """Least integer s >= ceil((r^2-3r-1)/2 + sqrt(D)/(2 sqrt 3)) where
    D = 3r^4 - 14r^3 - 3r^2 + 14r + 3, computed without floating point."""
    if r < 6:
        raise ValueError("broom threshold is stated for r >= 6")
    lead = r * r - 3 * r - 1
    disc = 3 * r ** 4 - 14 * r ** 3 - 3 * r ** 2 + 14 * r + 3

    # s >= lead/2 + sqrt(disc/12)  <=>  2s - lead >= 0 and 3 (2s - lead)^2 >= disc
    def ok(s: int) -> bool:
        t = 2 * s - lead
        return t >= 0 and 3 * t * t >= disc

    s = max(0, (lead + isqrt(disc // 3)) // 2 - 1)
    while ok(s):
        s -= 1
    while not ok(s):
        s += 1
    return s


def kneser_clique_count(n: int, j: int) -> int:
    """Cliques on j vertices of K(n,2): perfect matchings of 2j chosen points."""
    return C(n, 2 * j) * factorial(2 * j) // (2 ** j * factorial(j))


def psi_kneser2(n: int) -> Polynomial:
    if n < 2:
        raise UnsupportedFamilyError("kneser2 needs n >= 2")
    c = {0: 1, 1: C(n, 2)}
    q = C(n, 4)
    c[3] = C(n, 3) + 12 * q
    c[4] = 15 * q
    c[5] = 6 * q
    c[6] = q
    for j in range(2, n):
        c[j] = c.get(j, 0) + kneser_clique_count(n, j) + n * C(n - 1, j)
    return _poly(c)


def psi_tstar(r: int, a: int) -> Polynomial:
    n = r * a
    c = _first_three(n)
    c[3] = 2 * a * (a - 1) * C(r, 2)
    c[4] = C(a, 2) * C(r, 2)
    for i in range(3, n + 1):
        c[i] = c.get(i, 0) + a * C(r, i) + r ** i * C(a, i)
    return _poly(c)


def psi_spider3(legs: tuple[int, int, int]) -> Polynomial:
    """Tree with three leaves: a general position triple takes one vertex
    from each leg."""
    n = sum(legs) + 1
    c = _first_three(n)
    c[3] = legs[0] * legs[1] * legs[2]
    return _poly(c)


def psi_tree(name: str, k: int) -> Polynomial:
    return psi_spider3(tuple(k * x for x in TREE_LEGS[name]))


_CLOSED = {
    "complete": psi_complete,
    "path": psi_path,
    "cycle": psi_cycle,
    "complete_bipartite": psi_complete_bipartite,
    "grid": psi_grid,
    "comb": psi_comb,
    "broom": psi_broom,
    "kneser2": psi_kneser2,
    "tstar": psi_tstar,
    "tree1": lambda k: psi_tree("tree1", k),
    "tree2": lambda k: psi_tree("tree2", k),
}


def has_closed_form(spec: FamilySpec | str) -> bool:
    if isinstance(spec, str):
        spec = parse_family(spec)
    return spec.name in _CLOSED


def closed_form(spec: FamilySpec | str) -> Polynomial:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.name not in _CLOSED:
        raise UnsupportedFamilyError(f"no closed form for family {spec}")
    return _CLOSED[spec.name](*spec.params)


# -- clique polynomials ---------------------------------------------------------

def clique_polynomial(g: Graph) -> Polynomial:
    """c_i = number of cliques on i vertices, with c_0 = 1 for the empty clique."""
    counts = [0] * (g.n + 1)
    counts[0] = 1

    def grow(cand: int, size: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            counts[size + 1] += 1
            # only later vertices, so each clique is counted once
            grow(cand & g.adj[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return Polynomial(counts)


def icliques_polynomial(g: Graph) -> Polynomial:
    """Counts vertex subsets inducing a disjoint union of complete graphs,
    i.e. subsets inducing no path on three vertices."""
    counts = [0] * (g.n + 1)
    adj = g.adj

    def fits(v: int, smask: int) -> bool:
        touch = adj[v] & smask
        if not touch:
            return True
        s = (touch & -touch).bit_length() - 1
        # v must join exactly the clique of s and see nothing else in S
        return touch == (adj[s] & smask) | (1 << s)

    def extend(start: int, smask: int, size: int) -> None:
        counts[size] += 1
        for v in range(start, g.n):
            if fits(v, smask):
                extend(v + 1, smask | (1 << v), size + 1)

    extend(0, 0, 0)
    return Polynomial(counts)


def psi_join(g: Graph, h: Graph) -> Polynomial:
    """(C(g) - 1)(C(h) - 1) + Ci(g) + Ci(h) - 1, for non-empty g and h."""
    if g.n == 0 or h.n == 0:
        # joining with the null graph is the identity, the formula does not apply
        raise ValueError("join identity needs both graphs non-empty")
    cross = multiply(subtract(clique_polynomial(g), ONE), subtract(clique_polynomial(h), ONE))
    return subtract(cross + icliques_polynomial(g) + icliques_polynomial(h), ONE)
