"""Cyclic Jacobi eigensolver and spectral bookkeeping for oriented hypergraphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from . import operators as ops
from .core import OrientedHypergraph, cartesian_product, dual, weak_delete
from .reports import BoundReport, combine, compare, flag, not_applicable


class NonConvergenceError(RuntimeError):
    pass


class SpectralInconsistency(RuntimeError):
    """Two independent zero-multiplicity computations disagree."""


@dataclass(frozen=True)
class EigenConfig:
    off_diag_tol: float = 1e-12
    # None means 1e-8 * n for the instance at hand
    zero_tol: float | None = None
    cluster_tol: float = 1e-7
    bound_tol: float = 1e-7
    max_sweeps: int = 100

    def __post_init__(self):
        for name in ("off_diag_tol", "cluster_tol", "bound_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.zero_tol is not None and not self.zero_tol > 0:
            raise ValueError("zero_tol must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be at least 1")

    def zero_tol_for(self, n: int) -> float:
        return self.zero_tol if self.zero_tol is not None else 1e-8 * max(n, 1)

    def with_(self, **changes) -> EigenConfig:
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {
            "off_diag_tol": self.off_diag_tol,
            "zero_tol": self.zero_tol if self.zero_tol is not None else "1e-8*n",
            "cluster_tol": self.cluster_tol,
            "bound_tol": self.bound_tol,
            "max_sweeps": self.max_sweeps,
        }


DEFAULT = EigenConfig()


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with orthonormal eigenvector columns.

    For the normalized Laplacian ``degrees`` is set and ``eigenfunctions``
    maps each column ``v`` to ``D^{-1/2} v``, an eigenfunction of ``I - D^{-1}A``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    zero_mult: int
    clusters: tuple[tuple[int, int], ...]
    degrees: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def eigenfunctions(self) -> np.ndarray:
        if self.degrees is None:
            return self.eigenvectors
        return self.eigenvectors / np.sqrt(self.degrees.astype(float))[:, None]

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def lambda_min(self) -> float | None:
        """Smallest eigenvalue above the zero threshold, or None if all vanish."""
        if self.zero_mult >= len(self.eigenvalues):
            return None
        return float(self.eigenvalues[self.zero_mult])

    def cluster_of(self, index: int) -> tuple[int, int]:
        """``(start, size)`` of the cluster holding 0-based ``index``."""
        for start, size in self.clusters:
            if start <= index < start + size:
                return start, size
        raise IndexError(index)

    def multiplicity_near(self, value: float, tol: float) -> int:
        return int(np.sum(np.abs(self.eigenvalues - value) <= tol))


# ---------------------------------------------------------------- solver


def _off_diagonal_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi_eigh(M, off_diag_tol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic-by-row Jacobi diagonalization of a real symmetric matrix.

    Returns unsorted ``(eigenvalues, V)`` with ``M = V diag(w) V^T``. Sweeps stop
    once the off-diagonal Frobenius norm is below ``off_diag_tol * ||M||_F``.
    """
    A = np.array(M, dtype=float, copy=True)
    n = A.shape[0]
    V = np.eye(n)
    norm = float(np.linalg.norm(A))
    if n < 2 or norm == 0.0:
        return np.diag(A).copy(), V
    target = off_diag_tol * norm
    negligible = 1e-20 * norm
    for _ in range(max_sweeps):
        off = _off_diagonal_norm(A)
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= negligible:
                    A[p, q] = A[q, p] = 0.0
                    continue
                app, aqq = A[p, p], A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q]
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                A[p, :] = A[:, p]
                A[q, :] = A[:, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0
                vp = V[:, p].copy()
                V[:, p] = c * vp - s * V[:, q]
                V[:, q] = s * vp + c * V[:, q]
    else:
        off = _off_diagonal_norm(A)
        if off > target:
            raise NonConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
    return np.diag(A).copy(), V


def cluster_indices(values: np.ndarray, tol: float) -> tuple[tuple[int, int], ...]:
    """Runs of sorted values whose consecutive gaps are at most ``tol``."""
    clusters = []
    start = 0
    for k in range(1, len(values) + 1):
        if k == len(values) or values[k] - values[k - 1] > tol:
            clusters.append((start, k - start))
            start = k
    return tuple(clusters)


def eigen_sym(M, cfg: EigenConfig = DEFAULT, zero_dim: int | None = None) -> Spectrum:
    """Ascending spectrum of a symmetric matrix via :func:`jacobi_eigh`.

    Eigenvector signs are fixed so that each column's largest-magnitude entry
    (first one on ties) is positive.
    """
    M = np.asarray(M, dtype=float)
    ops.check_symmetric(M)
    w, V = jacobi_eigh(M, cfg.off_diag_tol, cfg.max_sweeps)
    order = np.argsort(w, kind="stable")
    w, V = w[order], V[:, order]
    for k in range(V.shape[1]):
        j = int(np.argmax(np.abs(V[:, k]) - 1e-12 * np.arange(V.shape[0])))
        if V[j, k] < 0:
            V[:, k] = -V[:, k]
    zero_tol = cfg.zero_tol_for(zero_dim if zero_dim is not None else len(w))
    zero_mult = int(np.sum(w < zero_tol))
    return Spectrum(w, V, zero_mult, cluster_indices(w, cfg.cluster_tol))


def spectrum_normalized(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> Spectrum:
    sp = eigen_sym(ops.sym_laplacian(g), cfg, zero_dim=g.n)
    return replace(sp, degrees=np.array(g.degrees))


def spectrum_unnormalized(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> Spectrum:
    return eigen_sym(ops.unnormalized_laplacian(g), cfg, zero_dim=g.n)


def spectrum_hyperedge(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> Spectrum:
    # trace of I^T D^-1 I is n, so the zero threshold scales with n as well
    return eigen_sym(ops.hyperedge_laplacian(g), cfg, zero_dim=g.n)


def matrix_rank(M, tol: float) -> int:
    """Rank by Gaussian elimination with partial pivoting; pivots <= tol count as zero."""
    A = np.array(M, dtype=float, copy=True)
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = rank + int(np.argmax(np.abs(A[rank:, col])))
        if abs(A[pivot, col]) <= tol:
            continue
        A[[rank, pivot]] = A[[pivot, rank]]
        A[rank + 1:] -= np.outer(A[rank + 1:, col] / A[rank, col], A[rank])
        rank += 1
    return rank


class ZeroMultiplicities(NamedTuple):
    m_V: int
    m_H: int
    rank: int


def zero_multiplicities(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> ZeroMultiplicities:
    """Zero multiplicities of the vertex and hyperedge Laplacians, cross-checked by rank."""
    m_V = spectrum_normalized(g, cfg).zero_mult
    m_H = spectrum_hyperedge(g, cfg).zero_mult
    rank = matrix_rank(ops.incidence(g), cfg.zero_tol_for(g.n))
    if m_V != g.n - rank or m_H != g.m - rank:
        raise SpectralInconsistency(
            f"m_V={m_V}, m_H={m_H} but rank(I)={rank} with n={g.n}, m={g.m}; adjust zero_tol"
        )
    return ZeroMultiplicities(m_V, m_H, rank)


def multiset_report(name: str, left, right, tol: float, **witnesses) -> BoundReport:
    """Elementwise comparison of two sorted value lists."""
    a = np.sort(np.asarray(left, dtype=float))
    b = np.sort(np.asarray(right, dtype=float))
    if a.shape != b.shape:
        return flag(name, False, note=f"sizes differ: {a.size} vs {b.size}", left=a, right=b, **witnesses)
    if a.size == 0:
        return flag(name, True, note="both empty", **witnesses)
    gap = np.abs(a - b)
    k = int(np.argmax(gap))
    return compare(name, a[k], "==", b[k], tol, max_gap=float(gap[k]), left=a, right=b, **witnesses)


def nonzero_spectra_report(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """Nonzero eigenvalues of the vertex and hyperedge Laplacians agree."""
    sv = spectrum_normalized(g, cfg)
    sh = spectrum_hyperedge(g, cfg)
    return multiset_report(
        "nonzero_spectra_coincide",
        sv.eigenvalues[sv.zero_mult:],
        sh.eigenvalues[sh.zero_mult:],
        cfg.cluster_tol,
    )


def interlacing_check(g: OrientedHypergraph, vertices, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """Eigenvalues before and after weak deletion of ``r`` vertices interlace.

    Checks ``lam_k(g) <= lam_k(g - vs) <= lam_{k+r}(g)`` for every ``k <= n - r``.
    """
    vs = sorted(set(vertices))
    r = len(vs)
    if r >= g.n:
        return not_applicable("weak_deletion_interlacing", "need fewer deletions than vertices")
    before = spectrum_normalized(g, cfg).eigenvalues
    after = spectrum_normalized(weak_delete(g, vs), cfg).eigenvalues
    parts = []
    for k in range(g.n - r):
        parts.append(compare(f"lower[k={k + 1}]", before[k], "<=", after[k], cfg.cluster_tol))
        parts.append(compare(f"upper[k={k + 1}]", after[k], "<=", before[k + r], cfg.cluster_tol))
    return combine("weak_deletion_interlacing", parts, deleted=vs, before=before, after=after)


def dual_scaling_check(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """For d-regular u-uniform ``g``: dual spectrum equals ``(d/u)`` times that of ``g``.

    The zero count on the ``g`` side is first reset to ``m_H(g)``, the
    multiplicity of zero for the hyperedge Laplacian, since the dual's vertex
    Laplacian is ``(d/u)`` times the hyperedge Laplacian of ``g``.
    """
    d = g.is_regular()
    u = g.is_uniform()
    if d is None or u is None:
        raise ValueError("dual scaling needs a regular, uniform hypergraph")
    sp = spectrum_normalized(g, cfg)
    m_H = sp.zero_mult - g.n + g.m
    reconciled = np.concatenate([np.zeros(m_H), sp.eigenvalues[sp.zero_mult:]]) * (d / u)
    dual_sp = spectrum_normalized(dual(g), cfg)
    values = multiset_report("dual_spectrum_scaling", reconciled, dual_sp.eigenvalues, cfg.cluster_tol, scale=d / u)
    zeros = flag(
        "dual_zero_count",
        dual_sp.zero_mult == m_H,
        note="zero multiplicity of the dual equals m_H of the original",
        dual_m_V=dual_sp.zero_mult,
        m_H=m_H,
    )
    return combine(
        "dual_scaling",
        [values, zeros],
        note="zero multiplicities reconciled through m_V - m_H = n - m",
        degree=d,
        uniformity=u,
    )


def product_spectrum_check(g1: OrientedHypergraph, g2: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> BoundReport:
    """Unnormalized spectrum of the Cartesian product is all pairwise sums."""
    a = spectrum_unnormalized(g1, cfg).eigenvalues
    b = spectrum_unnormalized(g2, cfg).eigenvalues
    sums = (a[:, None] + b[None, :]).ravel()
    prod = spectrum_unnormalized(cartesian_product(g1, g2), cfg).eigenvalues
    return multiset_report("product_spectrum_sums", sums, prod, cfg.cluster_tol)


def structural_reports(g: OrientedHypergraph, cfg: EigenConfig = DEFAULT) -> list[BoundReport]:
    """Identities every valid instance satisfies: trace, zero counts, shared spectrum, range."""
    sp = spectrum_normalized(g, cfg)
    L = ops.normalized_laplacian(g)
    zm = zero_multiplicities(g, cfg)
    out = [
        compare("trace_equals_n", float(np.trace(L)), "==", g.n, 1e-10 * g.n),
        compare("eigenvalue_sum_equals_n", float(np.sum(sp.eigenvalues)), "==", g.n, 1e-8 * g.n),
        compare("zero_multiplicity_difference", zm.m_V - zm.m_H, "==", g.n - g.m, 0.0, m_V=zm.m_V, m_H=zm.m_H, rank=zm.rank),
        nonzero_spectra_report(g, cfg),
        compare("lambda_max_below_max_cardinality", sp.lambda_max, "<=", g.max_cardinality, cfg.bound_tol),
        compare("lambda_min_nonnegative", float(sp.eigenvalues[0]), ">=", 0.0, cfg.bound_tol),
    ]
    return out
