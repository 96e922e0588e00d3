import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlap import cheeger, core, limits
from hyperlap.core import Hyperedge, HypergraphError, OrientedHypergraph
from hyperlap.limits import EnumerationLimitError

from conftest import hypergraphs


def brute_cheeger(g):
    """Direct recomputation of every ratio from the definition."""
    total = int(g.degrees.sum())
    h = hp = nu_max = None
    for r in range(1, g.n + 1):
        for S in itertools.combinations(range(g.n), r):
            e = sum((len(set(S) & e_.inputs) - len(set(S) & e_.outputs)) ** 2 for e_ in g.hyperedges)
            vol = sum(int(g.degrees[v]) for v in S)
            ratio = Fraction(e, vol)
            hp = ratio if hp is None else min(hp, ratio)
            nu_max = ratio if nu_max is None else max(nu_max, ratio)
            if r < g.n and 2 * vol <= total:
                h = ratio if h is None else min(h, ratio)
    return h, hp, nu_max


def test_singletons_have_ratio_one():
    g = core.remark_4_3()
    for i in range(g.n):
        assert cheeger.nu_tilde(g, {i}) == 1.0


def test_graph_cut_count():
    g = core.complete_graph(5)
    for S in [{0}, {0, 1}, {1, 3, 4}]:
        assert cheeger.e_tilde(g, S) == cheeger.cut_size(g, S)


def test_balanced_zero():
    g = OrientedHypergraph.from_pairs(4, [({0, 1}, {2, 3})])
    assert cheeger.e_tilde(g, {0, 2}) == 0
    assert cheeger.cheeger_constants(g).h_tilde == 0.0


def test_empty_subset_rejected():
    with pytest.raises(ValueError):
        cheeger.e_tilde(core.complete_graph(2), set())


class TestConstants:
    def test_k2(self):
        res = cheeger.cheeger_constants(core.complete_graph(2))
        assert res.h_tilde == 1.0 and res.argmin_subset.members == (0,)

    def test_k4_classical(self):
        g = core.complete_graph(4)
        classical = min(
            Fraction(cheeger.cut_size(g, S), g.vol(S))
            for r in (1, 2)
            for S in itertools.combinations(range(4), r)
        )
        res = cheeger.cheeger_constants(g)
        assert res.h_tilde == float(classical) == pytest.approx(2 / 3)
        assert res.argmin_subset.members == (0, 1)

    def test_full_hyperedge_max(self):
        res = cheeger.cheeger_constants(core.full_hyperedge(3))
        assert res.nu_max == 3.0 and res.argmax_subset.members == (0, 1, 2)

    def test_limits(self, monkeypatch):
        g = core.complete_graph(5)
        with pytest.raises(EnumerationLimitError):
            cheeger.cheeger_constants(g, limit=4)
        monkeypatch.setenv("HYPERLAP_LIMITS", "cheeger=3")
        assert limits.resolve("cheeger", 10) == 3
        with pytest.raises(EnumerationLimitError):
            cheeger.cheeger_constants(g)

    def test_needs_two_vertices(self):
        with pytest.raises(HypergraphError):
            cheeger.cheeger_constants(core.full_hyperedge(1))

    @given(hypergraphs(max_n=7, max_m=7))
    def test_against_brute_force(self, g):
        h, hp, nu_max = brute_cheeger(g)
        res = cheeger.cheeger_constants(g)
        assert Fraction(res.argmin_subset.e_tilde, res.argmin_subset.vol) == h
        assert res.argmin_subset_prime.ratio == hp and res.nu_max == float(nu_max)
        assert 2 * res.argmin_subset.vol <= g.degrees.sum()
        assert res.h_tilde <= 1.0 and res.h_tilde_prime <= res.h_tilde
        assert cheeger.e_tilde(g, res.argmin_subset.members) == res.argmin_subset.e_tilde

    @given(hypergraphs(max_n=6, max_m=6))
    def test_tie_break_is_lexicographic(self, g):
        res = cheeger.cheeger_constants(g)
        target = res.argmin_subset_prime.ratio
        ties = [
            S
            for r in range(1, g.n + 1)
            for S in itertools.combinations(range(g.n), r)
            if Fraction(cheeger.e_tilde(g, S), g.vol(S)) == target
        ]
        assert res.argmin_subset_prime.members == min(ties)


@given(hypergraphs(max_n=6, max_m=6), st.data())
def test_reversing_everything_keeps_e_tilde(g, data):
    S = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    assert cheeger.e_tilde(g.reverse_all(), S) == cheeger.e_tilde(g, S)


@given(hypergraphs(max_n=6, max_m=6), st.data())
def test_weak_addition_never_increases_h(g, data):
    memberships = data.draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=g.m, max_size=g.m))
    if not any(memberships):
        memberships[0] = 1
    bigger = core.weak_add(g, memberships)
    assert cheeger.cheeger_constants(bigger).h_tilde <= cheeger.cheeger_constants(g).h_tilde + 1e-15


class TestUpperBounds:
    def test_k2_tight(self):
        r = cheeger.verify_cheeger_upper(core.complete_graph(2))
        assert r.name == "cheeger_upper_balanced" and r.passed
        assert (r.lhs, r.rhs) == pytest.approx((2.0, 2.0))

    def test_singletons_tight(self):
        r = cheeger.verify_cheeger_upper(core.singleton_hyperedges(4))
        assert r.name == "cheeger_upper_no_kernel" and r.passed
        assert (r.lhs, r.rhs) == pytest.approx((1.0, 1.0))

    def test_not_applicable(self):
        assert not cheeger.verify_cheeger_upper(core.full_hyperedge(3)).applicable

    def test_nu_upper_examples(self):
        r = cheeger.verify_nu_upper_any(core.full_hyperedge(3))
        assert r.passed and r.lhs == pytest.approx(3.0) and r.rhs == pytest.approx(3.0)
        r = cheeger.verify_nu_upper_any(core.complete_graph(3))
        assert r.passed and r.lhs == pytest.approx(1.0) and r.rhs == pytest.approx(1.5)

    @given(hypergraphs(max_n=7, max_m=8))
    def test_random(self, g):
        assert cheeger.verify_nu_upper_any(g).passed
        assert cheeger.verify_h_tilde_at_most_one(g).passed
        assert not cheeger.verify_cheeger_upper(g).failed

    @given(hypergraphs(max_n=7, max_m=6, balanced=True))
    def test_random_balanced(self, g):
        assert not cheeger.verify_cheeger_upper(g).failed


class TestLowerBounds:
    def test_graph_without_deletion(self):
        r = cheeger.verify_cheeger_lower_via_graph(core.cycle_graph(5), ())
        assert r.passed and r.witnesses["k"] == 2

    def test_k4(self):
        r = cheeger.verify_cheeger_lower_via_graph(core.complete_graph(4), ())
        assert r.passed

    def test_premise_violations(self):
        assert not cheeger.verify_cheeger_lower_via_graph(core.full_hyperedge(3), ()).applicable
        # deleting one vertex needs k >= 3
        g = core.weak_add(core.cycle_graph(4), [1, 0, 0, 0])
        assert not cheeger.verify_cheeger_lower_via_graph(g, {4}).applicable

    def test_underlying_graphs(self):
        g = OrientedHypergraph.from_pairs(4, [({0, 1}, {2, 3})])
        (canon,) = cheeger.underlying_graphs(g)
        assert list(canon.graph.hyperedges) == [Hyperedge({0}, {2}), Hyperedge({1}, {3})]
        assert len(cheeger.underlying_graphs(g, "all")) == 2
        k4 = core.symmetric_2c_complete(4, 1)
        assert cheeger.underlying_graphs(k4)[0].graph.hyperedges == k4.hyperedges
        with pytest.raises(HypergraphError):
            cheeger.underlying_graphs(core.full_hyperedge(3))
        with pytest.raises(EnumerationLimitError):
            cheeger.underlying_graphs(core.symmetric_2c_complete(6, 2), "all", limit=100)

    def test_underlying_bound_on_graph(self):
        r = cheeger.verify_cheeger_lower_underlying(core.cycle_graph(6))
        assert r.passed and r.witnesses["c"] == 1

    def test_zero_claim_counterexample(self):
        # m_V = 3 here, but the canonical underlying graph has only two components
        g = OrientedHypergraph.from_pairs(4, [({0, 1}, {2, 3})])
        r = cheeger.verify_underlying_zero_claim(g)
        assert r.failed
        assert all(p.witnesses["m_V_graph"] == 2 for p in r.parts)

    def test_search_finds_connecting_pairing(self):
        # the canonical pairing of the second hyperedge repeats edges (0,2),(1,3);
        # a crossed pairing connects the graph
        g = OrientedHypergraph.from_pairs(4, [({0, 1}, {2, 3}), ({0, 1}, {2, 3})])
        r = cheeger.verify_cheeger_lower_underlying(g)
        assert r.applicable and r.status in ("pass", "inconclusive")
        if r.passed:
            assert r.witnesses["searched"] >= 1

    @given(hypergraphs(max_n=8, max_m=5, balanced=True))
    def test_random_balanced(self, g):
        r = cheeger.verify_cheeger_lower_underlying(g)
        assert not r.failed, r.to_dict()
