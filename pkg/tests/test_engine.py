import itertools
from math import comb

import pytest

from gppoly.engine import (
    ResourceLimitError,
    collinear_triples,
    gp_census_bruteforce,
    gp_number,
    gp_polynomial,
    intersection_census,
    is_general_position,
    maximal_gp_set_masks,
    maximal_gp_sets,
    psi_inclusion_exclusion,
)
from gppoly.families import build_family, cycle, path, petersen
from gppoly.graph import cartesian_product, disjoint_union, empty_graph
from gppoly.poly import Polynomial, binomial_power, multiply

from conftest import random_graph
from oracle import psi_bruteforce


def by_labels(g, *names):
    index = {g.label(u): u for u in range(g.n)}
    return [index[x] for x in names]


class TestCollinear:
    def test_path(self):
        ct = collinear_triples(path(3))
        assert ct.is_collinear(0, 1, 2)
        assert ct.between_set(0, 2) == (1,)

    def test_triangle(self):
        ct = collinear_triples(build_family("complete:3"))
        assert not any(ct.is_collinear(*t) for t in itertools.permutations(range(3)))

    def test_c4_antipodal(self):
        ct = collinear_triples(cycle(4))
        assert ct.is_collinear(0, 1, 2)
        assert ct.between_set(0, 2) == (1, 3)
        assert ct.between_set(0, 1) == ()

    def test_disconnected_never_collinear(self):
        g = disjoint_union(path(2), path(2))
        ct = collinear_triples(g)
        assert not any(ct.is_collinear(*t) for t in itertools.combinations(range(4), 3))

    def test_between_invariants(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 9))
            ct = collinear_triples(g)
            for u, w in itertools.combinations(range(g.n), 2):
                b = ct.between_set(u, w)
                assert u not in b and w not in b
                if g.has_edge(u, w):
                    assert b == ()


class TestGeneralPosition:
    def test_petersen_six_set(self):
        p = petersen()
        assert is_general_position(p, by_labels(p, "u0", "u1", "u3", "v2", "v3", "v4"))

    def test_path_triple(self):
        assert not is_general_position(path(4), [0, 1, 2])

    def test_small_sets(self, rng):
        for _ in range(20):
            g = random_graph(rng, 6)
            for k in range(3):
                for s in itertools.combinations(range(6), k):
                    assert is_general_position(g, s)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_general_position(path(3), [0, 3])


class TestPolynomial:
    def test_petersen(self):
        assert gp_polynomial(petersen()).coeffs == (1, 10, 45, 90, 80, 30, 5)
        assert gp_number(petersen()) == 6

    def test_k4(self):
        assert gp_polynomial(build_family("complete:4")).coeffs == (1, 4, 6, 4, 1)

    def test_c5(self):
        # 10 triples, 5 of them are a vertex with both its neighbours
        assert gp_polynomial(cycle(5)).coeffs == (1, 5, 10, 5)
        assert psi_bruteforce(cycle(5)).coeffs == (1, 5, 10, 5)

    def test_empty_graph_zero_vertices(self):
        assert gp_polynomial(empty_graph(0)).coeffs == (1,)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_gp_two(self, n):
        assert gp_number(path(n)) == 2
        assert gp_number(cycle(4)) == 2

    @pytest.mark.parametrize("r, s", [(3, 3), (3, 4), (4, 4), (3, 5)])
    def test_grid_gp_four(self, r, s):
        assert gp_number(build_family(f"grid:{r},{s}")) == 4

    def test_union_p2_p3(self):
        g = disjoint_union(path(2), path(3))
        assert gp_polynomial(g) == psi_bruteforce(g) == multiply(Polynomial([1, 2, 1]),
                                                                Polynomial([1, 3, 3]))

    def test_parallel_matches_sequential(self):
        g = build_family("kneser2:6")
        assert gp_polynomial(g, workers=3) == gp_polynomial(g)


class TestOracleEquivalence:
    def test_random_small(self, rng):
        for _ in range(300):
            g = random_graph(rng, rng.randint(0, 7))
            assert gp_polynomial(g) == psi_bruteforce(g) == gp_census_bruteforce(g)

    @pytest.mark.parametrize("spec", [
        "petersen", "cycle:9", "cycle:10", "grid:3,4", "comb:6", "broom:3,5",
        "tstar:3,3", "tstar:4,2", "kneser2:4", "complete_bipartite:5,4", "corona(cycle:5)",
    ])
    def test_families(self, spec):
        g = build_family(spec)
        assert g.n <= 14
        assert gp_polynomial(g) == psi_bruteforce(g)

    def test_isomorphism_invariance(self, rng):
        graphs = [petersen(), build_family("grid:3,3"), build_family("broom:2,4")]
        graphs += [random_graph(rng, 8) for _ in range(5)]
        for g in graphs:
            base = gp_polynomial(g)
            for _ in range(20):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert gp_polynomial(g.relabel(perm)) == base

    def test_first_three_and_lower_bound(self, rng):
        for _ in range(100):
            g = random_graph(rng, rng.randint(0, 10))
            p = gp_polynomial(g)
            assert (p[0], p[1], p[2]) == (1, g.n, comb(g.n, 2))
            gp = p.degree
            assert all(p[i] >= comb(gp, i) for i in range(gp + 1))

    def test_union_multiplicative(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 8))
            h = random_graph(rng, rng.randint(0, 8))
            assert gp_polynomial(disjoint_union(g, h)) == gp_polynomial(g) * gp_polynomial(h)


class TestMaximal:
    def test_petersen(self):
        p = petersen()
        sets = maximal_gp_sets(p)
        assert len(sets) == 10
        assert sorted(len(s) for s in sets) == [4] * 5 + [6] * 5

    def test_complete(self):
        assert maximal_gp_sets(build_family("complete:5")) == [(0, 1, 2, 3, 4)]

    def test_p3(self):
        assert maximal_gp_sets(path(3)) == [(0, 1), (0, 2), (1, 2)]

    def test_canonical_order_and_maximality(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 8))
            sets = maximal_gp_sets(g)
            assert sets == sorted(sets)
            assert len(set(sets)) == len(sets)
            for s in sets:
                assert is_general_position(g, s)
                for v in set(range(g.n)) - set(s):
                    assert not is_general_position(g, s + (v,))

    def test_matches_bruteforce(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 7))
            gp_sets = [s for k in range(g.n + 1) for s in itertools.combinations(range(g.n), k)
                       if is_general_position(g, s)]
            as_sets = [set(s) for s in gp_sets]
            maximal = sorted(s for s in gp_sets
                             if not any(set(s) < t for t in as_sets))
            assert maximal_gp_sets(g) == maximal


class TestInclusionExclusion:
    def test_census_single(self):
        assert intersection_census([(0, 1)]) == {}

    def test_census_matches_walk(self, rng):
        for _ in range(20):
            fam = [tuple(v for v in range(7) if rng.random() < 0.5) for _ in range(rng.randint(1, 7))]
            expected = {}
            for k in range(2, len(fam) + 1):
                row = {}
                for sub in itertools.combinations(fam, k):
                    t = len(set.intersection(*map(set, sub)))
                    row[t] = row.get(t, 0) + 1
                expected[k] = dict(sorted(row.items()))
            assert intersection_census(fam) == expected

    def test_p3(self):
        # 3(1+x)^2 - 3(1+x) + 1
        assert psi_inclusion_exclusion(path(3)).coeffs == (1, 3, 3)

    def test_complete(self):
        assert psi_inclusion_exclusion(build_family("complete:6")) == binomial_power(6)

    def test_random(self, rng):
        checked = 0
        for _ in range(150):
            g = random_graph(rng, rng.randint(0, 8))
            if len(maximal_gp_set_masks(g)) <= 20:
                checked += 1
                assert psi_inclusion_exclusion(g) == gp_polynomial(g)
        assert checked > 100

    def test_limit(self):
        g = cartesian_product(path(4), path(4))
        with pytest.raises(ResourceLimitError):
            psi_inclusion_exclusion(g, max_sets=5)
