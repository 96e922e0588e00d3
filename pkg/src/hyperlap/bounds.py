"""Eigenvalue bounds that need no Cheeger constant.

Three groups: the eigenvalue 1 and duplicate vertices; general bounds from
the adjacency entries, sign vectors and the zero multiplicity; and bounds in
terms of the vertex coloring number.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import limits
from . import operators as ops
from .cheeger import gray_code_subsets, cheeger_constants
from .core import HypergraphError, OrientedHypergraph, validate, weak_delete
from .limits import EnumerationLimitError
from .reports import (
    UNRESOLVED,
    BoundReport,
    combine,
    compare,
    flag,
    not_applicable,
)
from .spectra import DEFAULT, EigenConfig, eigen_sym, spectrum_normalized

# subsets whose coloring number is computed in the all-S coloring check
SUBSET_COLORING_LIMIT = 12
_SIGN_CHUNK = 1 << 15


# ---------------------------------------------------------------- eigenvalue 1


def duplicate_classes(g: OrientedHypergraph) -> list[list[int]]:
    """Vertices grouped by identical adjacency rows, ordered by least member."""
    A = ops.adjacency(g).astype(np.int64)
    groups: dict[tuple, list[int]] = {}
    for i in range(g.n):
        groups.setdefault(tuple(A[i].tolist()), []).append(i)
    return sorted(groups.values(), key=lambda c: c[0])


def _duplicate_pairs(classes) -> list[tuple[int, int]]:
    return [p for c in classes for p in itertools.combinations(c, 2)]


def verify_eigenvalue_one(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """Multiplicity of 1 equals the nullity of A; duplicates force the eigenvalue 1."""
    zero = cfg.zero_tol_for(g.n)
    sp = spectrum_normalized(g, cfg)
    mult_one = int(np.sum(np.abs(sp.eigenvalues - 1.0) <= zero))
    A = ops.adjacency(g)
    nullity = eigen_sym(A, cfg, zero_dim=g.n)
    nullity_A = int(np.sum(np.abs(nullity.eigenvalues) <= zero))
    parts = [compare("mult_one==nullity_A", mult_one, "==", nullity_A, 0.0)]
    classes = duplicate_classes(g)
    for cls in classes:
        if len(cls) >= 2:
            parts.append(compare(f"mult_one>=class_size-1[{cls[0]}]", mult_one, ">=", len(cls) - 1, 0.0, duplicate_class=cls))
    for i, j in _duplicate_pairs(classes):
        f = np.zeros(g.n)
        f[i], f[j] = 1.0, -1.0
        resid = float(np.max(np.abs(ops.apply_normalized(g, f) - f)))
        parts.append(compare(f"duplicate_eigenfunction[{i},{j}]", resid, "<=", 0.0, cfg.bound_tol))
    return combine(
        "eigenvalue_one",
        parts,
        mult_one=mult_one,
        nullity_A=nullity_A,
        duplicate_classes=[c for c in classes if len(c) >= 2],
    )


def verify_duplicate_ratio(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """On eigenfunctions for eigenvalues other than 1, ``deg(i) f(i) = deg(j) f(j)`` for duplicates."""
    name = "duplicate_ratio"
    pairs = _duplicate_pairs(duplicate_classes(g))
    if not pairs:
        return not_applicable(name, "no duplicate vertices")
    sp = spectrum_normalized(g, cfg)
    F = sp.eigenfunctions
    deg = g.degrees
    parts = []
    for k, lam in enumerate(sp.eigenvalues):
        if abs(lam - 1.0) <= cfg.cluster_tol:
            continue
        f = F[:, k]
        scale = float(np.max(np.abs(f)))
        worst = max(abs(deg[i] * f[i] - deg[j] * f[j]) for i, j in pairs)
        parts.append(compare(f"eigenfunction[{k + 1}]", worst / scale, "<=", 0.0, cfg.bound_tol, eigenvalue=float(lam)))
    if not parts:
        return not_applicable(name, "every eigenvalue equals 1", pairs=pairs)
    return combine(name, parts, pairs=pairs)


# ---------------------------------------------------------------- general bounds


class CQuantities(NamedTuple):
    c1: np.ndarray
    c2: float
    c3: float
    report: BoundReport


def c_quantities(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> CQuantities:
    """Per-vertex C1, its mean C2 and degree-weighted mean C3, all inside [lam_min, lam_n]."""
    A = ops.adjacency(g)
    deg = g.degrees.astype(float)
    sq = A**2
    c1 = 1.0 + (sq / deg[None, :]).sum(axis=1) / deg
    c2 = 1.0 + float((sq / np.outer(deg, deg)).sum()) / g.n
    c3 = 1.0 + float((sq.sum(axis=0) / deg).sum()) / float(deg.sum())

    sp = spectrum_normalized(g, cfg)
    lo, hi = sp.lambda_min, sp.lambda_max
    tol, eq = cfg.bound_tol, cfg.cluster_tol
    parts = []
    for i, v in enumerate(c1):
        parts.append(compare(f"lambda_min<=C1[{i}]", lo, "<=", v, tol))
        parts.append(compare(f"C1[{i}]<=lambda_n", v, "<=", hi, tol))
    for label, v in (("C2", c2), ("C3", c3)):
        parts.append(compare(f"lambda_min<={label}", lo, "<=", v, tol))
        parts.append(compare(f"{label}<=lambda_n", v, "<=", hi, tol))
    parts.append(compare("C2==mean(C1)", c2, "==", float(np.mean(c1)), 1e-10))
    parts.append(compare("C3==weighted_mean(C1)", c3, "==", float(np.dot(deg, c1) / deg.sum()), 1e-10))
    all_equal = {side: bool(np.all(np.abs(c1 - lam) <= eq)) for side, lam in (("lambda_min", lo), ("lambda_n", hi))}
    for side, lam in (("lambda_min", lo), ("lambda_n", hi)):
        for label, v in (("C2", c2), ("C3", c3)):
            hit = abs(v - lam) <= eq
            parts.append(
                flag(
                    f"{side}=={label}<=>all_C1=={side}",
                    hit == all_equal[side],
                    mean_equal=hit,
                    all_equal=all_equal[side],
                )
            )
    report = combine("c_quantities", parts, C1=c1, C2=c2, C3=c3, lambda_min=lo, lambda_n=hi)
    return CQuantities(c1, c2, c3, report)


def sign_vectors(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows ``eps`` with ``eps[0] = +1``; row k has ``eps[i] = -1`` where bit ``i-1`` of k is set."""
    stop = (1 << max(n - 1, 0)) if stop is None else stop
    codes = np.arange(start, stop, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n - 1, dtype=np.int64)[None, :]) & 1
    return np.hstack([np.ones((len(codes), 1)), 1.0 - 2.0 * bits])


def sign_vector_bound(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, limit: int | None = None) -> BoundReport:
    """``lam_n >= M / n`` with ``M`` the largest ``||sum_i eps_i v_i||^2``, ``v_i`` the scaled incidence rows.

    Half the sign vectors suffice since negating ``eps`` keeps the norm.
    """
    name = "sign_vector_bound"
    cap = limits.resolve("sign", limit)
    if g.n > cap:
        raise EnumerationLimitError(f"n={g.n} exceeds the sign-vector limit {cap}")
    V = ops.incidence(g) / np.sqrt(g.degrees.astype(float))[:, None]
    total = 1 << (g.n - 1)
    best, best_code = -1.0, 0
    for start in range(0, total, _SIGN_CHUNK):
        eps = sign_vectors(g.n, start, min(start + _SIGN_CHUNK, total))
        norms = np.sum((eps @ V) ** 2, axis=1)
        k = int(np.argmax(norms))
        if norms[k] > best + 1e-12:
            best, best_code = float(norms[k]), start + k
    eps = sign_vectors(g.n, best_code, best_code + 1)[0]
    mirror = float(np.sum((-eps @ V) ** 2))
    sp = spectrum_normalized(g, cfg)
    lam_n = sp.lambda_max
    parts = [
        compare("lambda_n>=M/n", lam_n, ">=", best / g.n, cfg.bound_tol),
        compare("M>=n", best, ">=", g.n, cfg.bound_tol),
        compare("negated_sign_vector_attains_M", mirror, "==", best, 1e-9),
    ]
    if sp.zero_mult == 0:
        parts.append(compare("lambda_n>=1_when_m_V=0", lam_n, ">=", 1.0, cfg.bound_tol))
    return combine(name, parts, M=best, sign_vector=eps.astype(int), m_V=sp.zero_mult)


def sandwich_bound(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """``lam_min <= n/(n - m_V) <= lam_n``, equality on either side iff the nonzero spectrum is flat."""
    sp = spectrum_normalized(g, cfg)
    n, m_V = g.n, sp.zero_mult
    if m_V >= n:
        raise ValueError("every eigenvalue is zero")
    mid = n / (n - m_V)
    lo, hi = sp.lambda_min, sp.lambda_max
    tol, eq = cfg.bound_tol, cfg.cluster_tol
    flat = hi - lo <= eq
    parts = [
        compare("lambda_min<=n/(n-m_V)", lo, "<=", mid, tol),
        compare("n/(n-m_V)<=lambda_n", mid, "<=", hi, tol),
        flag("lower_equality<=>flat", (abs(lo - mid) <= eq) == flat, lower_equal=abs(lo - mid) <= eq, flat=flat),
        flag("upper_equality<=>flat", (abs(hi - mid) <= eq) == flat, upper_equal=abs(hi - mid) <= eq, flat=flat),
        compare("m_V<=n(1-1/max|h|)", m_V, "<=", n * (1 - 1 / g.max_cardinality), 1e-12),
    ]
    return combine("zero_multiplicity_sandwich", parts, m_V=m_V, n_over_rank=mid, flat=flat)


# ---------------------------------------------------------------- coloring


@dataclass(frozen=True)
class Coloring:
    classes: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def color_of(self) -> dict[int, int]:
        return {v: c for c, cls in enumerate(self.classes) for v in cls}

    def is_proper(self, g: OrientedHypergraph) -> bool:
        color = self.color_of()
        if sorted(color) != list(range(g.n)) or any(not c for c in self.classes):
            return False
        return all(len({color[v] for v in h.members}) == h.cardinality for h in g.hyperedges)

    @classmethod
    def from_colors(cls, colors) -> Coloring:
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        return cls(tuple(sorted(tuple(c) for c in groups.values())))


def expanded_neighbors(g: OrientedHypergraph) -> list[int]:
    """Neighbor bitmasks of the clique expansion (each hyperedge becomes a clique)."""
    nbr = [0] * g.n
    for h in g.hyperedges:
        mask = sum(1 << v for v in h.members)
        for v in h.members:
            nbr[v] |= mask & ~(1 << v)
    return nbr


def _color_search(nbr: list[int], vertices: list[int], lower: int) -> tuple[int, dict[int, int]]:
    """Exact coloring of the masked graph on ``vertices`` by branch and bound."""
    if not vertices:
        return 0, {}
    order = sorted(vertices, key=lambda v: (-bin(nbr[v]).count("1"), v))
    # greedy start gives the first upper bound
    best_colors: dict[int, int] = {}
    for v in order:
        used = {best_colors[u] for u in best_colors if nbr[v] >> u & 1}
        best_colors[v] = next(c for c in itertools.count() if c not in used)
    best = max(best_colors.values()) + 1
    if best <= lower:
        return best, best_colors

    colors: dict[int, int] = {}

    def extend(pos: int, used: int) -> bool:
        nonlocal best, best_colors
        if used >= best:
            return False
        if pos == len(order):
            best, best_colors = used, dict(colors)
            return best <= lower
        v = order[pos]
        taken = {colors[u] for u in colors if nbr[v] >> u & 1}
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            colors[v] = c
            if extend(pos + 1, max(used, c + 1)):
                return True
            del colors[v]
        return False

    extend(0, 0)
    return best, best_colors


def chromatic_number(g: OrientedHypergraph, limit: int | None = None) -> tuple[int, Coloring]:
    """Exact coloring number via the clique expansion."""
    cap = limits.resolve("chromatic", limit)
    if g.n > cap:
        raise EnumerationLimitError(f"n={g.n} exceeds the coloring limit {cap}")
    chi, colors = _color_search(expanded_neighbors(g), list(range(g.n)), max(g.max_cardinality, 1))
    return chi, Coloring.from_colors([colors[v] for v in range(g.n)])


def _restricted_chromatic(nbr: list[int], mask: int, lower: int) -> int:
    vertices = [v for v in range(len(nbr)) if mask >> v & 1]
    sub = [nbr[v] & mask for v in range(len(nbr))]
    return _color_search(sub, vertices, lower)[0]


def enumerate_colorings(g: OrientedHypergraph, k: int) -> Iterator[Coloring]:
    """All proper colorings with at most ``k`` colors, up to renaming colors."""
    nbr = expanded_neighbors(g)
    colors = [-1] * g.n

    def walk(v: int, used: int):
        if v == g.n:
            yield Coloring.from_colors(colors)
            return
        taken = {colors[u] for u in range(v) if nbr[v] >> u & 1}
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                yield from walk(v + 1, max(used, c + 1))
        colors[v] = -1

    yield from walk(0, 0)


def _main_form(chi: int, ratio: float) -> float:
    return 1.0 + (1.0 - ratio) / (chi - 1)


def _main_theorem_all_subsets(g: OrientedHypergraph, lam1: float, lam_n: float, tol: float) -> BoundReport:
    name = "coloring_main_all_subsets"
    if g.n > SUBSET_COLORING_LIMIT:
        return BoundReport(name, status=UNRESOLVED, note=f"n={g.n} over the subset coloring limit {SUBSET_COLORING_LIMIT}")
    nbr = expanded_neighbors(g)
    members = [sum(1 << v for v in h.members) for h in g.hyperedges]
    lo_worst = hi_worst = None
    checked = 0
    for mask, e, vol in gray_code_subsets(g):
        lower = max(bin(mask & hm).count("1") for hm in members)
        if lower < 2:
            continue  # independent set: one color, no bound
        chi_S = _restricted_chromatic(nbr, mask, lower)
        value = _main_form(chi_S, e / vol)
        checked += 1
        if hi_worst is None or lam_n - value < hi_worst[0]:
            hi_worst = (lam_n - value, mask, value, chi_S)
        if lo_worst is None or value - lam1 < lo_worst[0]:
            lo_worst = (value - lam1, mask, value, chi_S)
    if not checked:
        return not_applicable(name, "every vertex set is independent")

    def members_of(mask):
        return [v for v in range(g.n) if mask >> v & 1]

    parts = [
        compare("lambda_n>=bound(S)", lam_n, ">=", hi_worst[2], tol, S=members_of(hi_worst[1]), chi_S=hi_worst[3]),
        compare("bound(S)>=lambda_1", lo_worst[2], ">=", lam1, tol,
                S=members_of(lo_worst[1]), chi_S=lo_worst[3]),
    ]
    return combine(name, parts, subsets_checked=checked)


def _is_c_complete(g: OrientedHypergraph, c: int) -> bool:
    sets = {h.members for h in g.hyperedges}
    return len(sets) == g.m == math.comb(g.n, c) and all(len(s) == c for s in sets)


def verify_coloring_bounds(
    g: OrientedHypergraph,
    cfg: EigenConfig = DEFAULT,
    delete_set=None,
    all_subsets: bool = True,
    limit: int | None = None,
) -> list[BoundReport]:
    """Coloring-number bounds on ``lam_n`` (and ``lam_1``), each with its own applicability."""
    try:
        chi, coloring = chromatic_number(g, limit)
    except EnumerationLimitError as exc:
        return [BoundReport("coloring_bounds", status=UNRESOLVED, note=str(exc))]
    sp = spectrum_normalized(g, cfg)
    lam = sp.eigenvalues
    lam1, lam_n = float(lam[0]), sp.lambda_max
    tol, eq = cfg.bound_tol, cfg.cluster_tol
    vol = float(g.degrees.sum())
    e_all = float(sum(h.balance**2 for h in g.hyperedges))
    ctx = {"chi": chi, "coloring": [list(c) for c in coloring.classes]}
    out: list[BoundReport] = []

    # main inequality on S = V and its h̃' form
    if chi < 2:
        out.append(not_applicable("coloring_main_V", "coloring number 1", **ctx))
        out.append(not_applicable("coloring_h_tilde_prime", "coloring number 1", **ctx))
    else:
        value = _main_form(chi, e_all / vol)
        out.append(combine("coloring_main_V", [
            compare("lambda_n>=bound(V)", lam_n, ">=", value, tol),
            compare("bound(V)>=lambda_1", value, ">=", lam1, tol),
        ], **ctx))
        try:
            hp = cheeger_constants(g).h_tilde_prime
        except EnumerationLimitError as exc:
            out.append(BoundReport("coloring_h_tilde_prime", status=UNRESOLVED, note=str(exc)))
        else:
            out.append(compare("coloring_h_tilde_prime", lam_n, ">=", (chi - hp) / (chi - 1), tol, h_tilde_prime=hp, **ctx))
    if all_subsets:
        out.append(_main_theorem_all_subsets(g, lam1, lam_n, tol))

    # |#in - #out| = c on every hyperedge
    diffs = {abs(h.balance) for h in g.hyperedges}
    name = "coloring_constant_difference"
    if len(diffs) != 1 or chi < 2:
        out.append(not_applicable(name, "needs the same |#in - #out| on every hyperedge and chi >= 2"))
    else:
        c = diffs.pop()
        value = 1.0 + (vol - c * c * g.m) / vol / (chi - 1)
        parts = [
            compare("lambda_n>=bound", lam_n, ">=", value, tol),
            compare("bound>=lambda_1", value, ">=", lam1, tol),
        ]
        r = g.is_uniform()
        if r is not None:
            refined = chi / (chi - 1) - (c * c / r) / (chi - 1)
            parts += [
                compare("lambda_n>=uniform_bound", lam_n, ">=", refined, tol, r=r),
                compare("uniform_bound>=lambda_1", refined, ">=", lam1, tol, r=r),
            ]
        out.append(combine(name, parts, c=c, **ctx))

    # all-input hyperedges of one size c
    name = "coloring_signless"
    shapes = {(len(h.inputs), len(h.outputs)) for h in g.hyperedges}
    if len(shapes) != 1 or next(iter(shapes))[1] != 0:
        out.append(not_applicable(name, "needs #in = c and #out = 0 on every hyperedge"))
    else:
        c = next(iter(shapes))[0]
        parts = [compare("lambda_n==c", lam_n, "==", c, eq)]
        if chi >= 2:
            parts.append(compare("lambda_1<=(chi-c)/(chi-1)", lam1, "<=", (chi - c) / (chi - 1), tol))
        complete = _is_c_complete(g, c)
        if complete and g.n >= 2:
            target = (g.n - c) / (g.n - 1)
            gap = float(np.max(np.abs(lam[:-1] - target)))
            parts.append(compare("lambda_1..n-1==(n-c)/(n-1)", gap, "<=", 0.0, eq, target=target))
            if c >= 2:
                parts.append(compare("chi==n", chi, "==", g.n, 0.0))
        out.append(combine(name, parts, c=c, c_complete=complete, **ctx))

    # #in = #out on every hyperedge
    name = "coloring_balanced"
    if not g.is_balanced or chi < 2:
        out.append(not_applicable(name, "needs #in = #out on every hyperedge"))
    else:
        out.append(compare(name, lam_n, ">=", chi / (chi - 1), tol, **ctx))

    if delete_set is not None:
        out.append(_deletion_corollary(g, sorted(set(delete_set)), chi, lam_n, tol, limit, ctx))
    return out


def _deletion_corollary(g, drop, chi, lam_n, tol, limit, ctx) -> BoundReport:
    name = "coloring_after_deletion"
    if any(not 0 <= v < g.n for v in drop):
        raise HypergraphError(f"deletion set {drop} out of range for n={g.n}")
    if len(drop) >= g.n:
        return not_applicable(name, "deletion removes every vertex", deleted=drop)
    gh = weak_delete(g, drop)
    if not gh.is_balanced:
        return not_applicable(name, "deletion does not leave #in = #out on every hyperedge", deleted=drop)
    if validate(gh):
        return not_applicable(name, "deletion leaves isolated vertices", deleted=drop)
    if chi < 2:
        return not_applicable(name, "coloring number 1", deleted=drop)
    chi_hat = chromatic_number(gh, limit)[0]
    parts = [
        compare("lambda_n>=chi/(chi-1)", lam_n, ">=", chi / (chi - 1), tol),
        compare("chi(deleted)<=chi", chi_hat, "<=", chi, 0.0),
    ]
    return combine(name, parts, deleted=drop, chi_deleted=chi_hat, **ctx)


def sharpness_conditions(g: OrientedHypergraph, coloring: Coloring) -> tuple[bool, str]:
    """Whether a coloring meets the partition conditions that make the balanced bound sharp."""
    chi = coloring.k
    if not coloring.is_proper(g):
        return False, "some class meets a hyperedge twice"
    deg = g.degrees
    for i in range(g.n):
        if deg[i] % (chi - 1):
            return False, f"chi-1={chi - 1} does not divide deg({i})={deg[i]}"
    A = ops.adjacency(g)
    for k, cls in enumerate(coloring.classes):
        inside = set(cls)
        for i in range(g.n):
            if i in inside:
                continue
            count = int(round(sum(A[i, j] for j in cls)))
            if count * (chi - 1) != deg[i]:
                return False, f"class {k}, vertex {i}: count {count} != deg/(chi-1) = {deg[i]}/{chi - 1}"
    return True, "all conditions hold"


def verify_sharpness_characterization(
    g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, limit: int | None = None
) -> BoundReport:
    """``lam_n = chi/(chi-1)`` exactly when some chi-coloring meets the sharpness conditions."""
    name = "coloring_sharpness"
    if not g.is_balanced:
        return not_applicable(name, "needs #in = #out on every hyperedge")
    chi, coloring = chromatic_number(g)
    if chi < 2:
        return not_applicable(name, "coloring number 1")
    lam_n = spectrum_normalized(g, cfg).lambda_max
    target = chi / (chi - 1)
    sharp = abs(lam_n - target) <= cfg.cluster_tol
    ok, why = sharpness_conditions(g, coloring)
    ctx = {"chi": chi, "lambda_n": lam_n, "target": target, "sharp": sharp}
    if ok:
        return flag(name, sharp, note="conditions hold on the computed coloring", coloring=[list(c) for c in coloring.classes], **ctx)

    cap = limits.resolve("colorings", limit)
    searched = 0
    for alt in enumerate_colorings(g, chi):
        if searched >= cap:
            return BoundReport(
                name, status=UNRESOLVED, note=f"search stopped after {cap} colorings", witnesses={"searched": searched, **ctx}
            )
        searched += 1
        alt_ok, _ = sharpness_conditions(g, alt)
        if alt_ok:
            return flag(
                name, sharp, note="conditions hold on an alternative coloring",
                coloring=[list(c) for c in alt.classes], searched=searched, **ctx,
            )
    return flag(
        name, not sharp, note=f"no chi-coloring meets the conditions ({why} on the first)", searched=searched, **ctx
    )


# ---------------------------------------------------------------- suites


SUITES = ("eigen1", "general", "coloring")


def run_suite(
    g: OrientedHypergraph, suite: str = "all", cfg: EigenConfig = DEFAULT, delete_set=None
) -> list[BoundReport]:
    """Reports of one named group of bounds (or all of them), in a fixed order."""
    if suite not in SUITES + ("all",):
        raise ValueError(f"unknown suite {suite!r}")
    chosen = SUITES if suite == "all" else (suite,)
    out: list[BoundReport] = []
    if "eigen1" in chosen:
        out += [verify_eigenvalue_one(g, cfg), verify_duplicate_ratio(g, cfg)]
    if "general" in chosen:
        out.append(c_quantities(g, cfg).report)
        try:
            out.append(sign_vector_bound(g, cfg))
        except EnumerationLimitError as exc:
            out.append(BoundReport("sign_vector_bound", status=UNRESOLVED, note=str(exc)))
        out.append(sandwich_bound(g, cfg))
    if "coloring" in chosen:
        out += verify_coloring_bounds(g, cfg, delete_set)
        try:
            out.append(verify_sharpness_characterization(g, cfg))
        except EnumerationLimitError as exc:
            out.append(BoundReport("coloring_sharpness", status=UNRESOLVED, note=str(exc)))
    return out
