"""Validated state types, random states, ensembles and purification."""

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    BadRank,
    DimensionMismatch,
    NonUnitTrace,
    NotIsometry,
    NotPSD,
    RankMismatch,
)
from .numerics import HERMITIAN_TOL, hermitian_eig

TRACE_TOL = 1e-9
PSD_TOL = 1e-10
RANK_TOL = 1e-12
ZERO_WEIGHT = 1e-14
NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix.

    Build instances with :func:`validate_density` rather than directly.
    """

    mat: np.ndarray

    @property
    def dim(self):
        return self.mat.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)

    def eig(self):
        return hermitian_eig(self.mat)

    def rank(self, tol=RANK_TOL):
        return int((self.eig()[0] >= tol).sum())


@dataclass(frozen=True, eq=False)
class PureState:
    vec: np.ndarray
    split: tuple | None = None

    def __post_init__(self):
        vec = np.asarray(self.vec, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(vec)
        if abs(norm - 1) > NORM_TOL:
            raise ValueError(f"state vector norm {norm:.12g} is not 1")
        object.__setattr__(self, "vec", vec)
        if self.split is not None:
            split = tuple(int(x) for x in self.split)
            if len(split) != 2 or split[0] * split[1] != vec.size:
                raise DimensionMismatch(f"split {split} incompatible with dimension {vec.size}")
            object.__setattr__(self, "split", split)

    @property
    def dim(self):
        return self.vec.size

    def projector(self):
        return np.outer(self.vec, self.vec.conj())


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Pure-state realization ``{(p_i, |psi_i>)}``.

    ``states`` holds one normalized state per row.
    """

    weights: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        states = np.atleast_2d(np.asarray(self.states, dtype=np.complex128))
        if states.shape[0] != weights.size:
            raise DimensionMismatch("number of weights and states differ")
        if np.any(weights < 0) or abs(weights.sum() - 1) > TRACE_TOL:
            raise ValueError("weights must be nonnegative and sum to 1")
        if np.abs(np.linalg.norm(states, axis=1) - 1).max(initial=0) > NORM_TOL:
            raise ValueError("ensemble members must have unit norm")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "states", states)

    def __len__(self):
        return self.weights.size

    def __iter__(self):
        return iter(zip(self.weights, self.states))

    @property
    def dim(self):
        return self.states.shape[1]


def validate_density(mat):
    """Check that ``mat`` is a density matrix and wrap it.

    Eigenvalues in ``[-1e-10, 0)`` are clamped to zero and the matrix is
    renormalized; anything more negative raises :class:`NotPSD`.
    """
    if isinstance(mat, DensityMatrix):
        return mat
    EVL, EVC = hermitian_eig(mat, tol=HERMITIAN_TOL)
    trace = EVL.sum()
    if abs(trace - 1) > TRACE_TOL:
        raise NonUnitTrace(f"trace {trace:.12g} differs from 1")
    if EVL[-1] < -PSD_TOL:
        raise NotPSD(f"smallest eigenvalue {EVL[-1]:.3g} is negative")
    mat = np.asarray(mat, dtype=np.complex128)
    mat = (mat + mat.conj().T) / 2
    if EVL[-1] < 0:
        EVL = np.clip(EVL, 0, None)
        EVL = EVL / EVL.sum()
        mat = (EVC * EVL) @ EVC.conj().T
    return DensityMatrix(mat)


def as_density(rho):
    return rho if isinstance(rho, DensityMatrix) else validate_density(rho)


def _rng(rng):
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_pure(dim, rng=None, split=None):
    """Haar-random pure state, normalized complex Gaussian vector."""
    rng = _rng(rng)
    tmp0 = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return PureState(tmp0 / np.linalg.norm(tmp0), split)


def random_density(dim, rank=None, rng=None):
    """Random density matrix from the induced measure.

    Obtained by tracing a random pure state on ``dim*rank`` over its
    ``rank``-dimensional factor, so the result has rank ``rank`` almost
    surely.
    """
    rank = dim if rank is None else int(rank)
    if not 1 <= rank <= dim:
        raise BadRank(f"rank must lie in [1, {dim}], got {rank}")
    psi = random_pure(dim * rank, rng).vec.reshape(dim, rank)
    return validate_density(psi @ psi.conj().T)


def random_isometry(m, r, rng=None, size=None):
    """Haar-random ``m x r`` isometry (``U^dagger U = I_r``).

    With ``size`` given, a stack of shape ``(size, m, r)`` is returned.
    """
    if r > m:
        raise ValueError(f"isometry needs m >= r, got m={m}, r={r}")
    rng = _rng(rng)
    shape = (m, r) if size is None else (size, m, r)
    Z = (rng.normal(size=shape) + 1j * rng.normal(size=shape)) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R, axis1=-2, axis2=-1)
    return Q * (d / np.abs(d))[..., None, :]


def random_unitary(n, rng=None):
    return random_isometry(n, n, rng)


def mix(ens):
    vec = ens.states
    return validate_density((vec.T * ens.weights) @ vec.conj())


def eigen_factor(rho, tol=RANK_TOL):
    """Return ``B = diag(sqrt(M)) Phi^T`` restricted to the support of ``rho``.

    Rows of ``U @ B`` are the unnormalized members ``sqrt(p_i)|psi_i>`` of
    the ensemble labelled by the isometry ``U``.
    """
    EVL, EVC = as_density(rho).eig()
    r = int((EVL >= tol).sum())
    return np.sqrt(EVL[:r])[:, None] * EVC[:, :r].T


def ensemble_from_unitary(rho, U):
    """Pure-state realization of ``rho`` labelled by an ``m x r`` isometry.

    Member ``i`` is proportional to ``sum_j U_ij sqrt(M_j) |phi_j>`` where
    ``M_j, |phi_j>`` are the nonzero eigenpairs of ``rho``. Members with
    weight below 1e-14 are dropped.
    """
    B = eigen_factor(rho)
    U = np.asarray(U, dtype=np.complex128)
    if U.ndim != 2 or U.shape[1] != B.shape[0]:
        raise RankMismatch(f"isometry shape {U.shape} does not match rank {B.shape[0]}")
    err = np.abs(U.conj().T @ U - np.eye(U.shape[1])).max()
    if err > 1e-9:
        raise NotIsometry(f"U^dagger U deviates from identity by {err:.3g}")
    V = U @ B
    weights = np.linalg.norm(V, axis=1) ** 2
    keep = weights >= ZERO_WEIGHT
    weights = weights[keep]
    states = V[keep] / np.sqrt(weights)[:, None]
    return Ensemble(weights / weights.sum(), states)


def purify(rho):
    """Minimal purification ``sum_j sqrt(M_j) |phi_j> (x) |j>``.

    The ancilla has dimension ``rank(rho)``; the returned state carries the
    split ``(dim, rank)``.
    """
    rho = as_density(rho)
    B = eigen_factor(rho)
    r = B.shape[0]
    vec = B.T.reshape(-1)
    return PureState(vec / np.linalg.norm(vec), (rho.dim, r))
