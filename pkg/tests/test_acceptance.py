"""Acceptance criteria 1-10, one PASS/FAIL line each.

Each test collects every violated check into ``problems`` before asserting, so
the printed line reports how many checks ran and which ones failed.
"""

import itertools
from math import comb

import numpy as np
import pytest

from hyperlap import bounds, cheeger, core, nodal, operators, spectra
from hyperlap.core import OrientedHypergraph
from hyperlap.spectra import spectrum_hyperedge, spectrum_normalized, spectrum_unnormalized

TOL = 1e-7


@pytest.fixture
def report(capsys):
    def _report(number: int, title: str, checks: int, problems: list[str]):
        status = "PASS" if not problems else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {status}  {title}  ({checks} checks, {len(problems)} failed)")
            for p in problems[:10]:
                print(f"    - {p}")
        assert not problems, problems

    return _report


class Checks:
    def __init__(self):
        self.count = 0
        self.problems: list[str] = []

    def __call__(self, ok, message: str):
        self.count += 1
        if not ok:
            self.problems.append(message)


def spectrum_is(values, expected, tol=TOL) -> bool:
    values, expected = np.sort(values), np.sort(np.asarray(expected, dtype=float))
    return values.shape == expected.shape and bool(np.all(np.abs(values - expected) <= tol))


def k4_plus_pendant():
    pairs = [({i}, {j}) for i, j in itertools.combinations(range(4), 2)] + [({3}, {4})]
    return OrientedHypergraph.from_pairs(5, pairs, name="K4+pendant")


def test_criterion_01_families(report):
    check = Checks()
    for n in (3, 4, 5):
        ev = spectrum_normalized(core.complete_graph(n)).eigenvalues
        check(spectrum_is(ev, [0] + [n / (n - 1)] * (n - 1)), f"K{n}: {ev}")
    for n in (2, 3, 4, 5):
        ev = spectrum_normalized(core.full_hyperedge(n)).eigenvalues
        check(spectrum_is(ev, [0] * (n - 1) + [n]), f"full_hyperedge({n}): {ev}")
    for n in (1, 3, 6):
        g = core.singleton_hyperedges(n)
        check(np.array_equal(operators.normalized_laplacian(g), np.eye(n)), f"singletons({n}): L != I")
        check(spectrum_is(spectrum_normalized(g).eigenvalues, [1] * n), f"singletons({n}) spectrum")
    for n, r in ((6, 2), (8, 4)):
        sp = spectrum_normalized(core.copies(core.complete_graph(n // r), r))
        check(sp.zero_mult == r, f"union({n},{r}): m_V={sp.zero_mult}")
        check(spectrum_is(sp.eigenvalues, [0] * r + [n / (n - r)] * (n - r)), f"union({n},{r}): {sp.eigenvalues}")
    for n, c in ((4, 2), (5, 2), (5, 3)):
        ev = spectrum_normalized(core.c_complete_signless(n, c)).eigenvalues
        check(spectrum_is(ev, [(n - c) / (n - 1)] * (n - 1) + [c]), f"signless({n},{c}): {ev}")
    for n, c in ((4, 1), (5, 2), (6, 2)):
        g = core.symmetric_2c_complete(n, c)
        ev = spectrum_normalized(g).eigenvalues
        check(spectrum_is(ev, [0] + [n / (n - 1)] * (n - 1)), f"symmetric({n},{c}): {ev}")
        degree = comb(n - 1, 2 * c - 1) * comb(2 * c, c) // 2
        check(g.is_regular() == degree, f"symmetric({n},{c}): degrees {g.degrees.tolist()} != {degree}")
        check(g.is_uniform() == 2 * c, f"symmetric({n},{c}): not {2 * c}-uniform")
    report(1, "named families reproduce exactly", check.count, check.problems)


def test_criterion_02_remark(report):
    check = Checks()
    g = core.remark_4_3()
    sp = spectrum_normalized(g)
    check(sp.zero_mult == 1, f"m_V={sp.zero_mult}")
    f = core.REMARK_4_3_EIGENFUNCTION
    lam = float(f @ operators.normalized_laplacian(g).T @ f) / float(f @ f)
    check(np.allclose(operators.normalized_laplacian(g) @ f, lam * f, atol=1e-12), "f is not an eigenfunction")
    k = int(np.searchsorted(sp.eigenvalues, lam - spectra.DEFAULT.cluster_tol)) + 1
    r = sp.multiplicity_near(lam, spectra.DEFAULT.cluster_tol)
    signless = nodal.signless_nodal_count(g, f)
    check(signless == 1 and signless <= k + r - 1, f"signless={signless}, k={k}, r={r}")
    check(nodal.signed_nodal_counts(g, f) == (2, 2), f"signed={nodal.signed_nodal_counts(g, f)}")
    report(2, "remark instance: m_V=1, signless 1, signed (2,2)", check.count, check.problems)


def test_criterion_03_structural(report, corpus):
    check = Checks()
    for idx, g in enumerate(corpus):
        L = operators.normalized_laplacian(g)
        sp = spectrum_normalized(g)
        check(abs(np.trace(L) - g.n) <= 1e-8 * g.n, f"[{idx}] trace")
        check(abs(sp.eigenvalues.sum() - g.n) <= 1e-8 * g.n, f"[{idx}] eigenvalue sum")
        zm = spectra.zero_multiplicities(g)
        check(zm.m_V - zm.m_H == g.n - g.m, f"[{idx}] m_V-m_H={zm.m_V - zm.m_H}, n-m={g.n - g.m}")
        # independent oracle: numpy rank of the incidence matrix
        rank = np.linalg.matrix_rank(operators.incidence(g))
        check(zm.m_V == g.n - rank, f"[{idx}] m_V={zm.m_V} vs numpy rank {rank}")
        sh = spectrum_hyperedge(g)
        check(
            spectrum_is(sp.eigenvalues[sp.zero_mult:], sh.eigenvalues[sh.zero_mult:]),
            f"[{idx}] nonzero spectra differ",
        )
        check(sp.lambda_max <= g.max_cardinality + TOL, f"[{idx}] lambda_n={sp.lambda_max} > {g.max_cardinality}")
        A = operators.adjacency(g)
        nullity = g.n - np.linalg.matrix_rank(A, tol=1e-8)
        mult_one = int(np.sum(np.abs(np.linalg.eigvalsh(operators.sym_laplacian(g)) - 1) <= 1e-8))
        check(sp.multiplicity_near(1.0, 1e-8) == nullity == mult_one, f"[{idx}] mult(1) vs nullity(A)={nullity}")
        check(bounds.verify_eigenvalue_one(g).passed, f"[{idx}] eigenvalue_one report")
    report(3, "structural identities on 200 instances", check.count, check.problems)


def test_criterion_04_interlacing(report, corpus):
    check = Checks()
    rng = np.random.default_rng(4)
    for idx, g in enumerate(corpus):
        before = spectrum_normalized(g).eigenvalues
        for r in (1, 2):
            if r >= g.n:
                continue
            vs = sorted(rng.choice(g.n, size=r, replace=False).tolist())
            after = spectrum_normalized(core.weak_delete(g, vs)).eigenvalues
            for k in range(g.n - r):
                check(before[k] <= after[k] + TOL, f"[{idx}] r={r} lower k={k + 1}")
                check(after[k] <= before[k + r] + TOL, f"[{idx}] r={r} upper k={k + 1}")
            check(spectra.interlacing_check(g, vs).passed, f"[{idx}] r={r} interlacing report")
    report(4, "weak-deletion interlacing, r in {1,2}", check.count, check.problems)


def test_criterion_05_courant(report, corpus, inputs_corpus):
    check = Checks()
    for idx, g in enumerate(corpus):
        for r in nodal.verify_courant(g):
            check(r.signless_pass, f"[{idx}] {r.operator} k={r.eigen_index}: {r.signless_count} > {r.bound_signless}")
    for idx, g in enumerate(inputs_corpus):
        for r in nodal.verify_courant(g):
            check(r.signed_pass is True, f"[inputs {idx}] {r.operator} k={r.eigen_index} signed bound")
            check(r.signless_pass, f"[inputs {idx}] {r.operator} k={r.eigen_index} signless bound")
    report(5, "nodal domain bounds (signless corpus-wide, signed on all-input corpus)", check.count, check.problems)


def test_criterion_06_cheeger(report, corpus):
    check = Checks()
    applicable = 0
    for idx, g in enumerate(corpus):
        if g.n > 12:
            continue
        lam_n = spectrum_normalized(g).lambda_max
        res = cheeger.cheeger_constants(g)
        check(res.nu_max <= lam_n + TOL, f"[{idx}] nu_max={res.nu_max} > lambda_n={lam_n}")
        check(res.h_tilde <= 1.0 + TOL, f"[{idx}] h_tilde={res.h_tilde}")
        up = cheeger.verify_cheeger_upper(g)
        applicable += up.applicable
        check(not up.failed, f"[{idx}] {up.name} lhs={up.lhs} rhs={up.rhs}")
    check(applicable > 0, "no instance met either upper-bound premise")
    k2 = core.complete_graph(2)
    sp = spectrum_normalized(k2)
    h = cheeger.cheeger_constants(k2).h_tilde
    check(abs(sp.lambda_min - 2.0) <= TOL and abs(2 * h - 2.0) <= TOL, f"K2: lambda_min={sp.lambda_min}, h={h}")
    up = cheeger.verify_cheeger_upper(k2)
    check(up.passed and abs(up.slack) <= TOL, f"K2 upper bound not tight: {up.to_dict()}")
    report(6, f"Cheeger bounds ({applicable} instances with an applicable upper bound)", check.count, check.problems)


def test_criterion_07_general(report, corpus):
    check = Checks()
    for idx, g in enumerate(corpus):
        check(bounds.c_quantities(g).report.passed, f"[{idx}] C1/C2/C3 sandwich")
        if g.n <= 10:
            check(bounds.sign_vector_bound(g).passed, f"[{idx}] sign-vector bound")
        check(bounds.sandwich_bound(g).passed, f"[{idx}] zero-multiplicity sandwich")
    equal = [core.full_hyperedge(n) for n in (2, 3, 4, 5)] + [
        core.copies(core.complete_graph(n // r), r) for n, r in ((6, 2), (8, 4))
    ]
    for g in equal:
        r = bounds.sandwich_bound(g)
        lo_gap, hi_gap = r.parts[0].slack, r.parts[1].slack
        check(r.passed and r.witnesses["flat"], f"{g.name}: not flat")
        check(abs(lo_gap) <= TOL and abs(hi_gap) <= TOL, f"{g.name}: no equality ({lo_gap}, {hi_gap})")
    r = bounds.sandwich_bound(k4_plus_pendant())
    check(r.passed and not r.witnesses["flat"], "K4+pendant: spectrum flat")
    check(r.parts[0].slack > TOL and r.parts[1].slack > TOL, f"K4+pendant: not strict ({r.parts[0].slack}, {r.parts[1].slack})")
    report(7, "C-quantities, sign-vector and zero-multiplicity sandwich bounds", check.count, check.problems)


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(len({colors[v] for v in h.members}) == h.cardinality for h in g.hyperedges):
                return k
    raise AssertionError("no coloring found")


def test_criterion_08_coloring(report, corpus):
    check = Checks()
    small = core.random_corpus(88, 50, max_n=6, max_m=8)
    for idx, g in enumerate(small):
        chi, coloring = bounds.chromatic_number(g)
        check(chi == brute_chromatic(g) and coloring.is_proper(g), f"[small {idx}] chi={chi}")
    for idx, g in enumerate(corpus):
        for r in bounds.verify_coloring_bounds(g, all_subsets=False):
            if r.name in ("coloring_main_V", "coloring_h_tilde_prime"):
                check(not r.failed, f"[{idx}] {r.name}: {r.to_dict()}")
    families = [core.complete_graph(n) for n in (3, 4, 5)] + [
        core.symmetric_2c_complete(n, c) for n, c in ((4, 1), (5, 2), (6, 2))
    ]
    for g in families:
        chi, coloring = bounds.chromatic_number(g)
        ok, why = bounds.sharpness_conditions(g, coloring)
        lam_n = spectrum_normalized(g).lambda_max
        check(ok, f"{g.name}: conditions fail ({why})")
        check(abs(lam_n - chi / (chi - 1)) <= TOL, f"{g.name}: lambda_n={lam_n}, chi/(chi-1)={chi / (chi - 1)}")
        check(bounds.verify_sharpness_characterization(g).passed, f"{g.name}: sharpness report")
    report(8, "coloring number, main coloring bound and sharpness", check.count, check.problems)


def test_criterion_09_products(report):
    check = Checks()
    rng = np.random.default_rng(9)
    for t in range(30):
        g1 = core.random_hypergraph(rng, int(rng.integers(2, 6)), int(rng.integers(1, 6)))
        g2 = core.random_hypergraph(rng, int(rng.integers(2, 6)), int(rng.integers(1, 6)))
        a = np.linalg.eigvalsh(operators.unnormalized_laplacian(g1))
        b = np.linalg.eigvalsh(operators.unnormalized_laplacian(g2))
        prod = spectrum_unnormalized(core.cartesian_product(g1, g2)).eigenvalues
        check(spectrum_is(prod, (a[:, None] + b[None, :]).ravel()), f"pair {t}")
        check(spectra.product_spectrum_check(g1, g2).passed, f"pair {t} report")
    k2 = core.complete_graph(2)
    ev = spectrum_unnormalized(core.cartesian_product(k2, k2)).eigenvalues
    check(spectrum_is(ev, [0, 2, 2, 4]), f"K2xK2: {ev}")
    report(9, "Cartesian product spectra are pairwise sums", check.count, check.problems)


def test_criterion_10_dual_scaling(report):
    check = Checks()
    cases = [(core.cycle_graph(n), 1.0) for n in range(3, 9)] + [(core.symmetric_2c_complete(4, 1), 1.5)]
    for g, scale in cases:
        r = spectra.dual_scaling_check(g)
        check(r.passed, f"{g.name}: {r.to_dict()}")
        check(abs(r.parts[0].witnesses["scale"] - scale) <= 1e-15, f"{g.name}: scale {r.parts[0].witnesses['scale']}")
        # direct comparison of nonzero spectra, independent of zero reconciliation
        sp, dsp = spectrum_normalized(g), spectrum_normalized(core.dual(g))
        check(
            spectrum_is(scale * sp.eigenvalues[sp.zero_mult:], dsp.eigenvalues[dsp.zero_mult:]),
            f"{g.name}: nonzero dual spectrum",
        )
    report(10, "dual spectrum scales by degree/uniformity", check.count, check.problems)
