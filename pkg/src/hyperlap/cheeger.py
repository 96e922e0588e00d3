"""Generalized Cheeger constants by exhaustive subset enumeration, and their bounds.

For a vertex set S, ``e_tilde(S)`` sums over hyperedges the square of
(inputs in S - outputs in S); ``nu_tilde(S) = e_tilde(S) / vol(S)``. The
Cheeger constant minimizes ``nu_tilde`` over nonempty S with
``vol(S) <= vol(V)/2``; the primed constant drops the volume cap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import limits
from .core import HypergraphError, OrientedHypergraph, weak_delete
from .limits import EnumerationLimitError
from .reports import INCONCLUSIVE, UNRESOLVED, BoundReport, combine, compare, not_applicable
from .spectra import DEFAULT, EigenConfig, spectrum_normalized


@dataclass(frozen=True)
class VertexSubset:
    members: tuple[int, ...]
    vol: int
    e_tilde: int

    @property
    def nu_tilde(self) -> float:
        return self.e_tilde / self.vol

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.e_tilde, self.vol)


def _members(g: OrientedHypergraph, S) -> set[int]:
    S = set(int(v) for v in S)
    if not S:
        raise ValueError("subset must be nonempty")
    for v in S:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    return S


def e_tilde(g: OrientedHypergraph, S) -> int:
    S = _members(g, S)
    return sum((len(h.inputs & S) - len(h.outputs & S)) ** 2 for h in g.hyperedges)


def nu_tilde(g: OrientedHypergraph, S) -> float:
    S = _members(g, S)
    vol = g.vol(S)
    if vol == 0:
        raise ValueError("subset has zero volume")
    return e_tilde(g, S) / vol


def vertex_subset(g: OrientedHypergraph, S) -> VertexSubset:
    S = _members(g, S)
    return VertexSubset(tuple(sorted(S)), g.vol(S), e_tilde(g, S))


def cut_size(g: OrientedHypergraph, S) -> int:
    """Hyperedges with members both inside and outside S (edge cut for graphs)."""
    S = set(S)
    return sum(1 for h in g.hyperedges if h.members & S and h.members - S)


def _mask_members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def gray_code_subsets(g: OrientedHypergraph) -> Iterator[tuple[int, int, int]]:
    """Yield ``(mask, e_tilde, vol)`` for every nonempty subset, in Gray-code order.

    Each step toggles one vertex and updates the per-hyperedge balances in
    O(deg) time.
    """
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for k, h in enumerate(g.hyperedges):
        for v in h.inputs:
            incident[v].append((k, 1))
        for v in h.outputs:
            incident[v].append((k, -1))
    deg = [int(d) for d in g.degrees]
    balance = [0] * g.m
    e = 0
    vol = 0
    mask = 0
    for step in range(1, 1 << g.n):
        v = (step & -step).bit_length() - 1
        bit = 1 << v
        if mask & bit:
            mask ^= bit
            vol -= deg[v]
            for k, s in incident[v]:
                b = balance[k]
                balance[k] = b - s
                e += (b - s) * (b - s) - b * b
        else:
            mask |= bit
            vol += deg[v]
            for k, s in incident[v]:
                b = balance[k]
                balance[k] = b + s
                e += (b + s) * (b + s) - b * b
        yield mask, e, vol


@dataclass
class CheegerResult:
    h_tilde: float
    argmin_subset: VertexSubset
    h_tilde_prime: float
    argmin_subset_prime: VertexSubset
    nu_max: float
    argmax_subset: VertexSubset

    def to_dict(self) -> dict:
        def sub(s: VertexSubset):
            return {"members": list(s.members), "vol": s.vol, "e_tilde": s.e_tilde}

        return {
            "h_tilde": self.h_tilde,
            "argmin_subset": sub(self.argmin_subset),
            "h_tilde_prime": self.h_tilde_prime,
            "argmin_subset_prime": sub(self.argmin_subset_prime),
            "nu_max": self.nu_max,
            "argmax_subset": sub(self.argmax_subset),
        }


def _lex_less(a: int, b: int) -> bool:
    """Compare the sorted member tuples of two bitmasks lexicographically."""
    if a == b:
        return False
    low = (a ^ b) & -(a ^ b)
    above = ~((low << 1) - 1)
    if a & low:
        return bool(b & above)
    return not a & above


def _better(e1, v1, m1, e2, v2, m2, smaller: bool) -> bool:
    """Is ratio e1/v1 strictly better than e2/v2, ties to the lexicographically smaller set?"""
    lhs, rhs = e1 * v2, e2 * v1
    if lhs != rhs:
        return lhs < rhs if smaller else lhs > rhs
    return _lex_less(m1, m2)


def cheeger_constants(g: OrientedHypergraph, limit: int | None = None) -> CheegerResult:
    """Exact h̃, h̃′ and max ν̃ over all nonempty subsets.

    Ties go to the lexicographically smallest sorted index tuple.
    """
    limit = limits.resolve("cheeger", limit)
    if g.n < 2:
        raise HypergraphError("Cheeger constants need at least two vertices")
    if g.n > limit:
        raise EnumerationLimitError(
            f"n={g.n} exceeds the subset enumeration limit {limit}; use the bound-only checks"
        )
    if np.any(g.degrees == 0):
        raise HypergraphError("Cheeger ratios need positive degrees")
    total = int(np.sum(g.degrees))
    full = (1 << g.n) - 1
    best = best_p = worst = None
    for mask, e, vol in gray_code_subsets(g):
        cand = (e, vol, mask)
        if best_p is None or _better(*cand, *best_p, smaller=True):
            best_p = cand
        if worst is None or _better(*cand, *worst, smaller=False):
            worst = cand
        if mask != full and 2 * vol <= total:
            if best is None or _better(*cand, *best, smaller=True):
                best = cand

    def subset(c):
        return VertexSubset(_mask_members(c[2]), c[1], c[0])

    return CheegerResult(
        h_tilde=best[0] / best[1],
        argmin_subset=subset(best),
        h_tilde_prime=best_p[0] / best_p[1],
        argmin_subset_prime=subset(best_p),
        nu_max=worst[0] / worst[1],
        argmax_subset=subset(worst),
    )


def _cheeger_or_none(g: OrientedHypergraph, limit: int | None = None) -> CheegerResult | None:
    try:
        return cheeger_constants(g, limit)
    except EnumerationLimitError:
        return None


def _over_limit(name: str, g: OrientedHypergraph) -> BoundReport:
    return BoundReport(name, status=UNRESOLVED, note=f"n={g.n} over the subset enumeration limit")


# ---------------------------------------------------------------- upper bounds


def verify_cheeger_upper(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, limit: int | None = None) -> BoundReport:
    """``lam_min <= 2 h̃`` when m_V = 1 and every hyperedge is balanced; ``lam_min <= h̃`` when m_V = 0."""
    sp = spectrum_normalized(g, cfg)
    m_V = sp.zero_mult
    if m_V == 1 and g.is_balanced:
        name, factor = "cheeger_upper_balanced", 2.0
    elif m_V == 0:
        name, factor = "cheeger_upper_no_kernel", 1.0
    else:
        return not_applicable(
            "cheeger_upper", f"needs m_V=0, or m_V=1 with balanced hyperedges (m_V={m_V})"
        )
    res = _cheeger_or_none(g, limit)
    if res is None:
        return _over_limit(name, g)
    return compare(
        name,
        sp.lambda_min,
        "<=",
        factor * res.h_tilde,
        cfg.bound_tol,
        m_V=m_V,
        h_tilde=res.h_tilde,
        argmin=list(res.argmin_subset.members),
    )


def verify_nu_upper_any(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, limit: int | None = None) -> BoundReport:
    """Every indicator function gives ``nu_tilde(S) <= lam_n``."""
    res = _cheeger_or_none(g, limit)
    if res is None:
        return _over_limit("nu_below_lambda_max", g)
    lam_n = spectrum_normalized(g, cfg).lambda_max
    return compare(
        "nu_below_lambda_max",
        res.nu_max,
        "<=",
        lam_n,
        cfg.bound_tol,
        argmax=list(res.argmax_subset.members),
    )


def verify_h_tilde_at_most_one(g: OrientedHypergraph, limit: int | None = None) -> BoundReport:
    res = _cheeger_or_none(g, limit)
    if res is None:
        return _over_limit("h_tilde_at_most_one", g)
    parts = [
        compare("h_tilde<=1", res.h_tilde, "<=", 1.0, 0.0),
        compare("h_tilde_prime<=h_tilde", res.h_tilde_prime, "<=", res.h_tilde, 0.0),
    ]
    return combine("h_tilde_at_most_one", parts, h_tilde=res.h_tilde, h_tilde_prime=res.h_tilde_prime)


# ---------------------------------------------------------------- lower bounds


def verify_cheeger_lower_via_graph(
    g: OrientedHypergraph, vertices, cfg: EigenConfig = DEFAULT, limit: int | None = None
) -> BoundReport:
    """``h̃^2 / 2 <= lam_min`` when weak-deleting ``vertices`` leaves a graph.

    Premises: every hyperedge of the result has exactly one input and one
    output, and ``r = len(vertices) <= k - 2`` where ``lam_min = lam_k``.
    """
    name = "cheeger_lower_via_graph"
    vs = sorted(set(vertices))
    r = len(vs)
    if r >= g.n - 1:
        return not_applicable(name, "deletion leaves fewer than two vertices")
    G = weak_delete(g, vs)
    if not G.is_graph():
        return not_applicable(name, "weak deletion does not leave a graph")
    sp = spectrum_normalized(g, cfg)
    k = sp.zero_mult + 1
    if k > g.n:
        return not_applicable(name, "no nonzero eigenvalue")
    if r > k - 2:
        return not_applicable(name, f"needs r <= k - 2 (r={r}, k={k})")
    res = _cheeger_or_none(g, limit)
    res_G = _cheeger_or_none(G, limit)
    if res is None or res_G is None:
        return _over_limit(name, g)
    sp_G = spectrum_normalized(G, cfg)
    lam_min = sp.lambda_min
    tol = cfg.bound_tol
    parts = [
        compare("half_h_tilde_squared<=lambda_min", 0.5 * res.h_tilde**2, "<=", lam_min, tol),
        compare("weak_addition_monotone", res.h_tilde, "<=", res_G.h_tilde, 0.0),
        compare("graph_cheeger_lower", 0.5 * res_G.h_tilde**2, "<=", float(sp_G.eigenvalues[1]), tol),
        compare("graph_cheeger_upper", float(sp_G.eigenvalues[1]), "<=", 2 * res_G.h_tilde, tol),
        compare("interlacing_step", float(sp_G.eigenvalues[k - r - 1]), "<=", lam_min, tol),
    ]
    return combine(name, parts, deleted=vs, k=k, h_tilde=res.h_tilde, h_graph=res_G.h_tilde)


@dataclass(frozen=True)
class UnderlyingGraph:
    pairing: tuple[tuple[tuple[int, int], ...], ...]
    graph: OrientedHypergraph = field(compare=False)


def balance_constant(g: OrientedHypergraph) -> int | None:
    """The common value of ``#in == #out`` over all hyperedges, if there is one."""
    values = {(len(h.inputs), len(h.outputs)) for h in g.hyperedges}
    if len(values) != 1:
        return None
    a, b = values.pop()
    return a if a == b else None


def _graph_from_pairing(g: OrientedHypergraph, pairing) -> UnderlyingGraph:
    pairs = [({a}, {b}) for per_edge in pairing for a, b in per_edge]
    return UnderlyingGraph(tuple(pairing), OrientedHypergraph.from_pairs(g.n, pairs))


def underlying_graphs(g: OrientedHypergraph, mode: str = "canonical", limit: int | None = None) -> list[UnderlyingGraph]:
    """Graphs obtained by matching each input of a hyperedge to one of its outputs.

    ``canonical`` pairs sorted inputs with sorted outputs; ``all`` lists every
    matching, hyperedge by hyperedge, with the canonical one first.
    """
    c = balance_constant(g)
    if c is None or c == 0:
        raise HypergraphError("underlying graphs need #in == #out == c >= 1 on every hyperedge")
    ins = [sorted(h.inputs) for h in g.hyperedges]
    outs = [sorted(h.outputs) for h in g.hyperedges]
    if mode == "canonical":
        pairing = tuple(tuple(zip(a, b)) for a, b in zip(ins, outs))
        return [_graph_from_pairing(g, pairing)]
    if mode != "all":
        raise ValueError(f"unknown mode {mode!r}")
    limit = limits.resolve("pairings", limit)
    count = math.factorial(c) ** g.m
    if count > limit:
        raise EnumerationLimitError(f"{count} pairings exceed the limit {limit}")
    per_edge = [
        [tuple(zip(a, perm)) for perm in itertools.permutations(b)] for a, b in zip(ins, outs)
    ]
    return [_graph_from_pairing(g, combo) for combo in itertools.product(*per_edge)]


def verify_underlying_zero_claim(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, limit: int | None = None) -> BoundReport:
    """Literal claim: every underlying graph G has ``lam_{k-1}(G) = 0`` where ``lam_min = lam_k``.

    Since the incidence columns of the hypergraph are sums of those of G,
    ``m_V(G) <= m_V`` always, so the claim fails whenever the inequality is
    strict; such cases are reported as failures of the claim.
    """
    name = "underlying_graph_zero_claim"
    c = balance_constant(g)
    if c is None or c == 0:
        return not_applicable(name, "needs #in == #out == c >= 1 on every hyperedge")
    sp = spectrum_normalized(g, cfg)
    k = sp.zero_mult + 1
    if k < 2:
        return not_applicable(name, "lam_min = lam_1, nothing to check")
    try:
        graphs = underlying_graphs(g, "all", limit)
    except EnumerationLimitError:
        graphs = underlying_graphs(g, "canonical")
    parts = []
    for idx, ug in enumerate(graphs):
        sp_G = spectrum_normalized(ug.graph, cfg)
        parts.append(
            compare(
                f"G[{idx}]",
                float(sp_G.eigenvalues[k - 2]),
                "==",
                0.0,
                cfg.zero_tol_for(g.n),
                m_V_graph=sp_G.zero_mult,
            )
        )
    return combine(name, parts, k=k, m_V=sp.zero_mult, graphs_checked=len(graphs))


def verify_cheeger_lower_underlying(
    g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, limit: int | None = None, pair_limit: int | None = None
) -> BoundReport:
    """``lam_min >= h̃^2 / (2c)`` given an underlying graph G with ``lam_k(G) > 0``.

    Searches the canonical matching first, then all matchings within
    ``pair_limit``. The status also covers ``h̃ <= c h(G)``. Two steps of the
    published argument, ``lam_{k-1}(G) = 0`` and ``lam_min >= c lam_k(G)``,
    are false on many instances; they are recorded under
    ``witnesses["findings"]`` and do not decide the status.
    """
    name = "cheeger_lower_underlying"
    c = balance_constant(g)
    if c is None or c == 0:
        return not_applicable(name, "needs #in == #out == c >= 1 on every hyperedge")
    sp = spectrum_normalized(g, cfg)
    k = sp.zero_mult + 1
    if k > g.n:
        return not_applicable(name, "no nonzero eigenvalue")
    zero = cfg.zero_tol_for(g.n)
    try:
        candidates = underlying_graphs(g, "all", pair_limit)
    except EnumerationLimitError:
        candidates = underlying_graphs(g, "canonical")
    found = found_sp = None
    searched = 0
    for ug in candidates:
        searched += 1
        sp_G = spectrum_normalized(ug.graph, cfg)
        if sp_G.eigenvalues[k - 1] > zero:
            found, found_sp = ug, sp_G
            break
    if found is None:
        return BoundReport(name, status=INCONCLUSIVE, note=f"no underlying graph with lam_k > 0 among {searched}")
    res = _cheeger_or_none(g, limit)
    res_G = _cheeger_or_none(found.graph, limit)
    if res is None or res_G is None:
        return _over_limit(name, g)
    lam_min = sp.lambda_min
    lam_k_G = float(found_sp.eigenvalues[k - 1])
    tol = cfg.bound_tol
    parts = [
        compare("lambda_min>=h_tilde^2/(2c)", lam_min, ">=", res.h_tilde**2 / (2 * c), tol),
        compare("h_tilde<=c*h(G)", res.h_tilde, "<=", c * res_G.h_tilde, tol),
    ]
    findings = {
        "lambda_{k-1}(G)==0": bool(k < 2 or found_sp.eigenvalues[k - 2] <= zero),
        "lambda_min>=c*lambda_k(G)": bool(lam_min >= c * lam_k_G - tol),
        "lambda_k(G)": lam_k_G,
    }
    return combine(
        name,
        parts,
        c=c,
        k=k,
        pairing=[[list(pair) for pair in edge] for edge in found.pairing],
        searched=searched,
        findings=findings,
    )
