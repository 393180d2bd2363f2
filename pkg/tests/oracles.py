"""Reference computations kept independent of the library code paths."""

import itertools

import numpy as np

SX = np.array([[0, 1], [1, 0]])
SY = np.array([[0, -1j], [1j, 0]])


def partial_trace_loops(M, n1, n2, keep="A"):
    if keep == "A":
        ret = np.zeros((n1, n1), dtype=complex)
        for i, k, j in itertools.product(range(n1), range(n1), range(n2)):
            ret[i, k] += M[i * n2 + j, k * n2 + j]
    else:
        ret = np.zeros((n2, n2), dtype=complex)
        for j, l, i in itertools.product(range(n2), range(n2), range(n1)):
            ret[j, l] += M[i * n2 + j, i * n2 + l]
    return ret


def abs_generator(n, k, l):
    ret = np.zeros((n, n))
    ret[k, l] = ret[l, k] = 1
    return ret


def spectral_lambda(sigma, k, l):
    """Two largest square-root eigenvalues of ``sigma |S| sigma* |S|``."""
    S = abs_generator(sigma.shape[0], k, l)
    EVL = np.linalg.eigvals(sigma @ S @ sigma.conj() @ S)
    tmp0 = np.sort(np.sqrt(np.clip(EVL.real, 0, None)))[::-1]
    return tmp0[0], tmp0[1]


def qubit_lambda_eq12(rho):
    """Roots of the characteristic quadratic, then square roots."""
    a, c, b = rho[0, 0].real, rho[1, 1].real, abs(rho[1, 0])
    roots = np.roots([1, -2 * (a * c + b**2), (a * c - b**2) ** 2]).real
    tmp0 = np.sort(np.sqrt(np.clip(roots, 0, None)))[::-1]
    return tmp0[0], tmp0[1]


def qubit_lambda_svd(rho):
    """Singular values of ``M^{1/2} Phi^T sx Phi M^{1/2}``."""
    EVL, EVC = np.linalg.eigh(rho)
    half = np.sqrt(np.clip(EVL, 0, None))
    K = half[:, None] * (EVC.T @ SX @ EVC) * half[None, :]
    return tuple(np.linalg.svd(K, compute_uv=False))


def wootters_eig(rho):
    """Two-qubit concurrence from eigenvalues of ``rho yy rho* yy``."""
    yy = np.kron(SY, SY)
    EVL = np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)
    mu = np.sort(np.sqrt(np.clip(EVL.real, 0, None)))[::-1]
    return max(0.0, mu[0] - mu[1] - mu[2] - mu[3])


def werner(p):
    phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    return p * np.outer(phi, phi) + (1 - p) * np.eye(4) / 4


def offdiag_l1_loops(rho):
    n = rho.shape[0]
    return sum(abs(rho[i, j]) for i in range(n) for j in range(n) if i != j)


def average_coherence_direct(rho, U, pair=(0, 1)):
    """Average subspace coherence for the decomposition labelled by ``U``.

    Builds each member vector explicitly and the 2x2 restricted projector,
    then applies the entrywise l1 measure to it.
    """
    EVL, EVC = np.linalg.eigh(rho)
    EVL, EVC = EVL[::-1], EVC[:, ::-1]  # U columns label eigenvalues in descending order
    keep = EVL > 1e-12
    EVL, EVC = EVL[keep], EVC[:, keep]
    k, l = pair
    total = 0
    for i in range(U.shape[0]):
        v = sum(U[i, j] * np.sqrt(EVL[j]) * EVC[:, j] for j in range(len(EVL)))
        sub = np.outer(v, v.conj())[np.ix_([k, l], [k, l])]
        total += abs(sub[0, 1]) + abs(sub[1, 0])
    return total


def spectral_lambda_factored(sigma, k, l, tol=1e-12):
    """Same quantities as :func:`spectral_lambda`, via singular values.

    The square roots of the eigenvalues of ``sigma |S| sigma* |S|`` are the
    singular values of ``M^{1/2} Phi^T |S| Phi M^{1/2}``; the SVD resolves
    a vanishing second value to ~1e-16 instead of ~1e-8.
    """
    EVL, EVC = np.linalg.eigh(sigma)
    keep = EVL > tol
    half = np.sqrt(EVL[keep])
    Phi = EVC[:, keep]
    S = abs_generator(sigma.shape[0], k, l)
    K = half[:, None] * (Phi.T @ S @ Phi) * half[None, :]
    tmp0 = np.zeros(2)
    sv = np.linalg.svd(K, compute_uv=False)[:2]
    tmp0[: sv.size] = sv
    return tmp0[0], tmp0[1]
