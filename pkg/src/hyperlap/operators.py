"""Incidence, degree and adjacency matrices and the three Laplacians.

Matrices are dense ``float64`` numpy arrays. ``incidence``, ``degree_matrix``
and ``adjacency`` are built by counting, so their entries are exact integers.
"""

from __future__ import annotations

import numpy as np

from .core import HypergraphError, OrientedHypergraph

SYMMETRY_RTOL = 1e-12


class IsolatedVertexError(HypergraphError):
    """A degree-zero vertex makes a normalized operator undefined."""


class OperatorMismatch(AssertionError):
    """Matrix form and pointwise definition of an operator disagree."""


def _require_positive_degrees(g: OrientedHypergraph) -> np.ndarray:
    deg = g.degrees
    zero = np.flatnonzero(deg == 0)
    if zero.size:
        raise IsolatedVertexError(f"vertices {zero.tolist()} have degree 0")
    return deg.astype(float)


def check_symmetric(M: np.ndarray, rtol: float = SYMMETRY_RTOL) -> None:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    scale = float(np.max(np.abs(M))) if M.size else 0.0
    if M.size and np.max(np.abs(M - M.T)) > rtol * scale:
        raise ValueError("matrix is not symmetric")


def incidence(g: OrientedHypergraph) -> np.ndarray:
    """n x m matrix: +1 input, -1 output, 0 absent; columns follow the hyperedge list."""
    out = np.zeros((g.n, g.m))
    for k, h in enumerate(g.hyperedges):
        for v in h.inputs:
            out[v, k] = 1.0
        for v in h.outputs:
            out[v, k] = -1.0
    return out


def degree_matrix(g: OrientedHypergraph) -> np.ndarray:
    return np.diag(g.degrees.astype(float))


def adjacency(g: OrientedHypergraph) -> np.ndarray:
    """Anti-oriented minus co-oriented hyperedge counts per vertex pair."""
    A = np.zeros((g.n, g.n))
    for h in g.hyperedges:
        members = [(v, h.sign(v)) for v in h.members]
        for a, (i, si) in enumerate(members):
            for j, sj in members[a + 1:]:
                # same role: co-oriented (-1); different roles: anti-oriented (+1)
                delta = -1.0 if si == sj else 1.0
                A[i, j] += delta
                A[j, i] += delta
    return A


def unnormalized_laplacian(g: OrientedHypergraph, check: bool = True) -> np.ndarray:
    """``D - A``, optionally compared column by column with :func:`apply_unnormalized`."""
    M = degree_matrix(g) - adjacency(g)
    if check:
        basis = np.eye(g.n)
        pointwise = np.column_stack([apply_unnormalized(g, basis[:, k]) for k in range(g.n)]) if g.n else M
        if not np.array_equal(pointwise, M):
            raise OperatorMismatch("D - A differs from the pointwise unnormalized Laplacian")
    return M


def normalized_laplacian(g: OrientedHypergraph) -> np.ndarray:
    """Random-walk form ``I - D^{-1} A`` (not symmetric in general)."""
    deg = _require_positive_degrees(g)
    return np.eye(g.n) - adjacency(g) / deg[:, None]


def sym_laplacian(g: OrientedHypergraph) -> np.ndarray:
    """Symmetric form ``I - D^{-1/2} A D^{-1/2}``, similar to the random-walk one."""
    deg = _require_positive_degrees(g)
    s = 1.0 / np.sqrt(deg)
    M = np.eye(g.n) - s[:, None] * adjacency(g) * s[None, :]
    # enforce exact symmetry; the two triangles differ only by rounding order
    return (M + M.T) / 2


def hyperedge_laplacian(g: OrientedHypergraph, check: bool = True) -> np.ndarray:
    """m x m operator ``I^T D^{-1} I`` on hyperedge functions."""
    deg = _require_positive_degrees(g)
    inc = incidence(g)
    M = inc.T @ (inc / deg[:, None])
    M = (M + M.T) / 2
    if check and g.m:
        basis = np.eye(g.m)
        pointwise = np.column_stack([apply_hyperedge_laplacian(g, basis[:, k]) for k in range(g.m)])
        if not np.allclose(pointwise, M, rtol=0, atol=1e-12):
            raise OperatorMismatch("I^T D^-1 I differs from the pointwise hyperedge Laplacian")
    return M


# ---------------------------------------------------------------- pointwise forms


def _hyperedge_flows(g: OrientedHypergraph, f: np.ndarray) -> np.ndarray:
    """Per hyperedge: sum of f over inputs minus sum over outputs."""
    return np.array(
        [sum(f[v] for v in h.inputs) - sum(f[v] for v in h.outputs) for h in g.hyperedges],
        dtype=float,
    )


def apply_unnormalized(g: OrientedHypergraph, f) -> np.ndarray:
    """Unnormalized Laplacian applied to a vertex function, straight from its definition."""
    f = np.asarray(f, dtype=float)
    flow = _hyperedge_flows(g, f)
    out = np.zeros(g.n)
    for k, h in enumerate(g.hyperedges):
        for v in h.inputs:
            out[v] += flow[k]
        for v in h.outputs:
            out[v] -= flow[k]
    return out


def apply_normalized(g: OrientedHypergraph, f) -> np.ndarray:
    deg = _require_positive_degrees(g)
    return apply_unnormalized(g, f) / deg


def apply_hyperedge_laplacian(g: OrientedHypergraph, gamma) -> np.ndarray:
    deg = _require_positive_degrees(g)
    gamma = np.asarray(gamma, dtype=float)
    # per vertex: sum of gamma over hyperedges where it is input minus output
    node = np.zeros(g.n)
    for k, h in enumerate(g.hyperedges):
        for v in h.inputs:
            node[v] += gamma[k]
        for v in h.outputs:
            node[v] -= gamma[k]
    node /= deg
    out = np.zeros(g.m)
    for k, h in enumerate(g.hyperedges):
        out[k] = sum(node[v] for v in h.inputs) - sum(node[v] for v in h.outputs)
    return out


def rayleigh_quotient_V(g: OrientedHypergraph, f) -> float:
    """Sum of squared hyperedge flows over the degree-weighted norm of ``f``."""
    deg = _require_positive_degrees(g)
    f = np.asarray(f, dtype=float)
    denom = float(np.sum(deg * f**2))
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero function")
    return float(np.sum(_hyperedge_flows(g, f) ** 2)) / denom


def rayleigh_quotient_H(g: OrientedHypergraph, gamma) -> float:
    deg = _require_positive_degrees(g)
    gamma = np.asarray(gamma, dtype=float)
    denom = float(np.sum(gamma**2))
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero function")
    node = incidence(g) @ gamma
    return float(np.sum(node**2 / deg)) / denom
