import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlap import core, nodal
from hyperlap.core import REMARK_4_3_EIGENFUNCTION

from conftest import hypergraphs


def test_remark_4_3_function():
    g = core.remark_4_3()
    f = REMARK_4_3_EIGENFUNCTION
    assert nodal.signless_nodal_count(g, f) == 1
    assert nodal.signed_nodal_counts(g, f) == (2, 2)


def test_zero_components_not_counted():
    assert nodal.signless_nodal_count(core.complete_graph(3), [1.0, 0.0, 0.0]) == 1


def test_small_cases():
    assert nodal.signed_nodal_counts(core.complete_graph(2), [1.0, -1.0]) == (1, 1)
    assert nodal.signed_nodal_counts(core.complete_graph(4), np.ones(4)) == (1, 0)
    assert nodal.signless_nodal_count(core.copies(core.complete_graph(3), 2), np.arange(1, 7)) == 2


def test_support_threshold():
    g = core.complete_graph(3)
    f = np.array([1.0, 1e-9, -1.0])
    # 1e-9 is below 1e-7 * max|f|, so vertex 1 is treated as zero
    assert nodal.signed_nodal_counts(g, f) == (1, 1)
    assert nodal.signed_nodal_counts(g, f, zero_tol=1e-12) == (1, 1)


def test_zero_function_rejected():
    with pytest.raises(ValueError):
        nodal.signless_nodal_count(core.complete_graph(2), [0.0, 0.0])


def test_remark_4_3_reports():
    reports = nodal.verify_courant(core.remark_4_3())
    assert all(r.passed for r in reports)
    first = reports[0]
    assert (first.eigen_index, first.multiplicity, first.signless_count) == (1, 1, 1)
    assert first.bound_signed == 8 and first.signed_pass


def test_signed_bound_only_for_all_inputs():
    reports = nodal.verify_courant(core.complete_graph(4))
    assert all(r.signed_pass is None for r in reports)


def test_c_complete_signless():
    assert all(r.passed for r in nodal.verify_courant(core.c_complete_signless(4, 2)))


@given(hypergraphs(max_n=7, max_m=7), st.data())
def test_count_invariances(g, data):
    f = np.array(data.draw(st.lists(st.sampled_from([-2.0, -1.0, 0.0, 1.0, 3.0]), min_size=g.n, max_size=g.n)))
    if not f.any():
        f[0] = 1.0
    base = nodal.signless_nodal_count(g, f)
    pos, neg = nodal.signed_nodal_counts(g, f)
    k = data.draw(st.integers(0, g.m - 1))
    assert nodal.signless_nodal_count(g.reverse_hyperedge(k), f) == base
    assert nodal.signless_nodal_count(g, 3.5 * f) == base
    assert nodal.signed_nodal_counts(g, -f) == (neg, pos)
    support = {i for i in range(g.n) if f[i] != 0}
    comps = core.components_from_sets(g.n, (h.members & support for h in g.hyperedges))
    assert base <= len(comps)


@given(hypergraphs(max_n=7, max_m=7))
def test_full_support_connected(g):
    if core.is_connected(g):
        assert nodal.signless_nodal_count(g, np.linspace(1, 2, g.n)) == 1


@given(hypergraphs(max_n=7, max_m=8, only_inputs=True))
def test_courant_all_inputs(g):
    assert all(r.passed for r in nodal.verify_courant(g))
