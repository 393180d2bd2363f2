"""Dense complex-matrix primitives.

Bipartite flattening convention used throughout the package: for a system
of dimensions ``(n1, n2)`` the flat index is ``i_A * n2 + i_B`` (subsystem A
is the slow index), which is what ``np.kron`` and C-order reshapes give.
"""

import numpy as np

from .exceptions import DimensionMismatch, NonHermitian, NonSquare

HERMITIAN_TOL = 1e-9


def _check_square(H):
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {H.shape}")


def hermitian_eig(H, tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues in descending
    order and eigenvectors as the columns of the second array. The input is
    symmetrized as ``(H + H^dagger)/2`` once it passes the tolerance check.
    """
    H = np.asarray(H, dtype=np.complex128)
    _check_square(H)
    if not np.all(np.isfinite(H)):
        raise ValueError("matrix has non-finite entries")
    err = np.abs(H - H.conj().T).max(initial=0.0)
    if err > tol:
        raise NonHermitian(f"max |H_ij - conj(H_ji)| = {err:.3g} exceeds {tol:.1g}")
    EVL, EVC = np.linalg.eigh((H + H.conj().T) / 2)
    # stable: tied eigenvalues keep the backend order
    order = np.argsort(-EVL, kind="stable")
    return EVL[order], EVC[:, order]


def singular_values(K):
    """Singular values of ``K`` in descending order."""
    K = np.asarray(K, dtype=np.complex128)
    if not np.all(np.isfinite(K)):
        raise ValueError("matrix has non-finite entries")
    return np.linalg.svd(K, compute_uv=False)


def kron(A, B):
    return np.kron(np.asarray(A), np.asarray(B))


def partial_trace(M, dims, keep="A"):
    """Trace out one side of a bipartite operator.

    Parameters
    ----------
    M : array_like
        Square operator of size ``n1*n2``.
    dims : tuple of int
        ``(n1, n2)``.
    keep : {"A", "B"}
        Which subsystem survives.
    """
    M = np.asarray(M)
    n1, n2 = (int(x) for x in dims)
    if M.ndim != 2 or M.shape != (n1 * n2, n1 * n2):
        raise DimensionMismatch(f"operator shape {M.shape} does not match dims {dims}")
    tmp0 = M.reshape(n1, n2, n1, n2)
    if keep == "A":
        return np.einsum("ijkj->ik", tmp0)
    if keep == "B":
        return np.einsum("ijil->jl", tmp0)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
