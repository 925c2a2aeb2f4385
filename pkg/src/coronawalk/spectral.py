"""Symmetric eigendecomposition into distinct eigenvalues and orthogonal
eigenprojectors, plus eigenvalue supports and strong cospectrality of vertex
pairs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Membership threshold for ||F_lambda e_u||: projector entries of desk-scale
# graphs are rationals or quadratic irrationals bounded well away from 0.
SUPPORT_TOL = 1e-8

# Residual tolerance for F_lambda e_u = +/- F_lambda e_v.
STRONG_COSPECTRAL_TOL = 1e-8

# Eigenvalues whose gap is at most this (scaled by the matrix max-norm) are
# clustered into one eigenspace.
CLUSTER_TOL_SCALE = 1e-8


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Distinct ascending eigenvalues with their orthogonal eigenprojectors.

    projectors[i] is the dim x dim symmetric projector onto the eigenspace of
    eigenvalues[i]; multiplicities[i] is its rank.
    """

    dim: int
    eigenvalues: np.ndarray
    projectors: np.ndarray
    multiplicities: tuple


@dataclass(frozen=True)
class SupportInfo:
    """Eigenvalue support of a vertex: the eigenvalue indices i with
    ||F_i e_vertex|| above SUPPORT_TOL, plus the weight <u|F_i|u> for every
    eigenvalue (the weights sum to 1)."""

    vertex: int
    support: tuple
    weights: tuple


@dataclass(frozen=True)
class CospectralityReport:
    """Per-eigenvalue sign comparison of F e_u against F e_v.

    signs[i] is +1 or -1 (the minimizer of ||F_i e_u - sign * F_i e_v||), or
    None when both projections vanish and the sign is arbitrary.
    """

    u: int
    v: int
    strongly_cospectral: bool
    signs: tuple


def default_cluster_tol(mat: np.ndarray) -> float:
    return CLUSTER_TOL_SCALE * max(1.0, float(np.max(np.abs(mat))) if mat.size else 1.0)


def eigendecompose(mat: np.ndarray, cluster_tol: float | None = None) -> SpectralDecomposition:
    """Decompose a real symmetric matrix into distinct eigenvalues and
    projectors.

    Numerically equal eigenvalues are merged by single-linkage over the
    ascending list: a gap <= cluster_tol joins two neighbors into one
    eigenspace. Raises np.linalg.LinAlgError if the eigensolver fails.
    """
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("expected a square matrix")
    scale = max(1.0, float(np.max(np.abs(mat))) if mat.size else 1.0)
    if mat.size and float(np.max(np.abs(mat - mat.T))) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(mat)
    elif cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")

    dim = mat.shape[0]
    if dim == 0:
        return SpectralDecomposition(0, np.zeros(0), np.zeros((0, 0, 0)), ())

    w, vecs = np.linalg.eigh((mat + mat.T) / 2.0)
    splits = [0]
    for i in range(1, dim):
        if w[i] - w[i - 1] > cluster_tol:
            splits.append(i)
    splits.append(dim)

    values = []
    projectors = []
    mults = []
    for a, b in zip(splits[:-1], splits[1:]):
        block = vecs[:, a:b]
        proj = block @ block.T
        projectors.append((proj + proj.T) / 2.0)
        values.append(float(np.mean(w[a:b])))
        mults.append(b - a)
    return SpectralDecomposition(
        dim=dim,
        eigenvalues=np.array(values),
        projectors=np.array(projectors),
        multiplicities=tuple(mults),
    )


def reconstruct(d: SpectralDecomposition) -> np.ndarray:
    """Sum of eigenvalue * projector; recovers the decomposed matrix."""
    return np.tensordot(d.eigenvalues, d.projectors, axes=1)


def eigenvalue_support(d: SpectralDecomposition, u: int) -> SupportInfo:
    """Eigenvalues whose projector does not annihilate e_u.

    For the Laplacian of a connected graph the support always contains the
    eigenvalue 0 (its projector is the all-ones matrix / n).
    """
    if not (0 <= u < d.dim):
        raise ValueError(f"vertex {u} out of range for dim {d.dim}")
    cols = d.projectors[:, :, u]
    norms = np.linalg.norm(cols, axis=1)
    support = tuple(int(i) for i in np.nonzero(norms > SUPPORT_TOL)[0])
    weights = tuple(float(d.projectors[i, u, u]) for i in range(len(d.eigenvalues)))
    return SupportInfo(vertex=u, support=support, weights=weights)


def strongly_cospectral(d: SpectralDecomposition, u: int, v: int) -> CospectralityReport:
    """Check F e_u = +/- F e_v per eigenvalue.

    The sign is the residual minimizer; when both projections vanish the
    eigenvalue is outside the joint support and the sign is reported None.
    The report is symmetric in u and v, including the signs.
    """
    if u == v:
        raise ValueError("strong cospectrality is a property of distinct vertices")
    for x in (u, v):
        if not (0 <= x < d.dim):
            raise ValueError(f"vertex {x} out of range for dim {d.dim}")
    signs = []
    ok = True
    for proj in d.projectors:
        a = proj[:, u]
        b = proj[:, v]
        if np.linalg.norm(a) <= SUPPORT_TOL and np.linalg.norm(b) <= SUPPORT_TOL:
            signs.append(None)
            continue
        res_plus = float(np.linalg.norm(a - b))
        res_minus = float(np.linalg.norm(a + b))
        sign = 1 if res_plus <= res_minus else -1
        signs.append(sign)
        if min(res_plus, res_minus) > STRONG_COSPECTRAL_TOL:
            ok = False
    return CospectralityReport(u=u, v=v, strongly_cospectral=ok, signs=tuple(signs))
