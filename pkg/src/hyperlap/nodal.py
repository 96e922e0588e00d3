"""Nodal domain counts of vertex functions and the two Courant-type bounds.

A nodal domain is a connected component of ``(V, {h ∩ supp f})`` that meets
the support of ``f``; components made only of zero vertices are not counted.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np

from .core import OrientedHypergraph, components_from_sets
from .spectra import DEFAULT, EigenConfig, Spectrum, spectrum_normalized, spectrum_unnormalized

SUPPORT_RTOL = 1e-7


def _support_tol(f: np.ndarray, zero_tol: float | None) -> float:
    scale = float(np.max(np.abs(f))) if f.size else 0.0
    if scale == 0.0:
        raise ValueError("nodal domains of the zero function are undefined")
    return SUPPORT_RTOL * scale if zero_tol is None else zero_tol


def _count_on(g: OrientedHypergraph, support: set[int]) -> int:
    groups = (h.members & support for h in g.hyperedges)
    comps = components_from_sets(g.n, groups)
    return sum(1 for comp in comps if any(v in support for v in comp))


def signless_nodal_count(g: OrientedHypergraph, f, zero_tol: float | None = None) -> int:
    """Number of nodal domains of ``f``; entries with ``|f(i)| <= zero_tol`` count as zero.

    ``zero_tol`` defaults to ``1e-7 * max|f|``.
    """
    f = np.asarray(f, dtype=float)
    tol = _support_tol(f, zero_tol)
    support = {i for i in range(g.n) if abs(f[i]) > tol}
    return _count_on(g, support)


def signed_nodal_counts(g: OrientedHypergraph, f, zero_tol: float | None = None) -> tuple[int, int]:
    """(positive, negative) nodal domain counts, built on ``supp_+`` and ``supp_-``."""
    f = np.asarray(f, dtype=float)
    tol = _support_tol(f, zero_tol)
    pos = {i for i in range(g.n) if f[i] > tol}
    neg = {i for i in range(g.n) if f[i] < -tol}
    return _count_on(g, pos), _count_on(g, neg)


@dataclass
class NodalReport:
    operator: str
    vector_index: int
    eigenvalue: float
    eigen_index: int
    multiplicity: int
    signless_count: int
    positive_count: int
    negative_count: int
    bound_signless: int
    bound_signed: int
    signless_pass: bool
    # None when the hypergraph has outputs, where the signed bound is not claimed
    signed_pass: bool | None

    @property
    def passed(self) -> bool:
        return self.signless_pass and self.signed_pass is not False

    def to_dict(self) -> dict:
        return asdict(self)


def _reports_for(g: OrientedHypergraph, sp: Spectrum, functions: np.ndarray, operator: str) -> list[NodalReport]:
    out = []
    n = g.n
    signed_applies = g.only_inputs
    for idx in range(n):
        f = functions[:, idx]
        start, r = sp.cluster_of(idx)
        k = start + 1
        signless = signless_nodal_count(g, f)
        pos, neg = signed_nodal_counts(g, f)
        out.append(
            NodalReport(
                operator=operator,
                vector_index=idx + 1,
                eigenvalue=float(sp.eigenvalues[idx]),
                eigen_index=k,
                multiplicity=r,
                signless_count=signless,
                positive_count=pos,
                negative_count=neg,
                bound_signless=k + r - 1,
                bound_signed=n - k + r,
                signless_pass=signless <= k + r - 1,
                signed_pass=(pos + neg <= n - k + r) if signed_applies else None,
            )
        )
    return out


def verify_courant(
    g: OrientedHypergraph, cfg: EigenConfig = DEFAULT, operators=("normalized", "unnormalized")
) -> list[NodalReport]:
    """Check both nodal bounds on every eigenvector the solver returns.

    ``k`` is the first index of the eigenvalue's cluster and ``r`` the cluster
    size. The signed bound ``n - k + r`` is only claimed for all-input
    hypergraphs.
    """
    out: list[NodalReport] = []
    if "normalized" in operators:
        sp = spectrum_normalized(g, cfg)
        out.extend(_reports_for(g, sp, sp.eigenfunctions, "normalized"))
    if "unnormalized" in operators:
        sp = spectrum_unnormalized(g, cfg)
        out.extend(_reports_for(g, sp, sp.eigenvectors, "unnormalized"))
    return out
