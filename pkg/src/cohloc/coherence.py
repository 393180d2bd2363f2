"""Coherence functionals on density matrices and ensembles.

Conventions
-----------
``d_l1`` and ``d_frob`` are the entrywise-l1 and Frobenius distances to the
diagonal part of the state. ``d_F`` and ``d_FL`` are built from the 2x2
principal subspaces: with ``P_j = s_kk + s_ll`` and the per-subspace extremes
``2|s_kl|`` (minimal average) and ``2 sqrt(s_kk s_ll)`` (maximal average),

    d_F  = sqrt(sum_j (2|s_kl|)^2)          = sqrt(2) * d_frob
    d_FL = sqrt(sum_j 4 s_kk s_ll)

so that ``d_FL^2 - d_F^2`` is the squared concurrence of any purification.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .exceptions import BadDimension, DimensionMismatch, WrongDimension
from .states import ZERO_WEIGHT, DensityMatrix, as_density

MEASURES = ("l1", "frob")


@dataclass(frozen=True)
class LambdaPair:
    """Ordered pair ``lambda1 >= lambda2 >= 0``.

    ``difference`` and ``total`` are kept as given by the closed forms
    (``2|b|`` and ``2 sqrt(ac)``) rather than recomputed from the pair, so
    that the total does not pick up rounding from the off-diagonal entry.
    """

    lambda1: float
    lambda2: float
    difference: float = None
    total: float = None

    def __post_init__(self):
        if self.lambda2 < 0 or self.lambda1 < self.lambda2:
            raise ValueError(f"need lambda1 >= lambda2 >= 0, got ({self.lambda1}, {self.lambda2})")
        if self.difference is None:
            object.__setattr__(self, "difference", self.lambda1 - self.lambda2)
        if self.total is None:
            object.__setattr__(self, "total", self.lambda1 + self.lambda2)


@dataclass(frozen=True)
class PairProjector:
    """Row selector onto the basis pair ``(k, l)`` of an ``n``-level system."""

    n: int
    pair: tuple

    @property
    def L(self):
        ret = np.zeros((2, self.n))
        ret[0, self.pair[0]] = 1
        ret[1, self.pair[1]] = 1
        return ret

    @property
    def abs_generator(self):
        """Symmetric ``n x n`` matrix with ones at ``(k,l)`` and ``(l,k)``."""
        k, l = self.pair
        ret = np.zeros((self.n, self.n))
        ret[k, l] = ret[l, k] = 1
        return ret


@dataclass(frozen=True, eq=False)
class CoherenceVectors:
    """Per-subspace weights and extreme average coherences.

    ``d_min``/``d_max`` are the normalized-subspace values; ``weighted_min``
    and ``weighted_max`` their products with ``weights``.
    """

    n: int
    pairs: list
    weights: np.ndarray
    d_min: np.ndarray
    d_max: np.ndarray
    weighted_min: np.ndarray
    weighted_max: np.ndarray


class SubspaceState(NamedTuple):
    weight: float
    state: DensityMatrix
    degenerate: bool


def _offdiag(mat):
    return mat[~np.eye(mat.shape[0], dtype=bool)]


def d_l1(rho):
    """Sum of absolute off-diagonal entries."""
    return float(np.abs(_offdiag(np.asarray(as_density(rho).mat))).sum())


def d_frob(rho):
    """Frobenius norm of the off-diagonal part."""
    return float(np.linalg.norm(_offdiag(as_density(rho).mat)))


def pure_coherence(vec, measure="l1"):
    """Coherence of ``|vec><vec|`` without forming the projector."""
    amp = np.abs(np.asarray(vec).reshape(-1))
    total = amp.sum()
    if measure == "l1":
        return float(total**2 - (amp**2).sum())
    if measure == "frob":
        tmp0 = amp**2
        return float(np.sqrt(max(tmp0.sum() ** 2 - (tmp0**2).sum(), 0)))
    raise ValueError(f"unknown measure {measure!r}, expected one of {MEASURES}")


def avg_coherence(ens, measure="l1"):
    """Ensemble average ``sum_i p_i D(|psi_i>)``."""
    return float(sum(p * pure_coherence(psi, measure) for p, psi in ens))


def _qubit(rho):
    rho = as_density(rho)
    if rho.dim != 2:
        raise WrongDimension(f"expected a qubit state, got dimension {rho.dim}")
    return rho.mat


def _lambda_from_entries(a, c, b_abs):
    root = float(np.sqrt(max(a * c, 0.0)))
    return LambdaPair(root + b_abs, max(root - b_abs, 0.0), 2 * b_abs, 2 * root)


def qubit_lambda(rho):
    """Square roots of the eigenvalues of ``rho sx rho* sx``, descending.

    Evaluated from the entries: ``sqrt(ac) +- |b|``.
    """
    mat = _qubit(rho)
    return _lambda_from_entries(mat[0, 0].real, mat[1, 1].real, abs(mat[1, 0]))


def min_avg_coherence_qubit(rho):
    return qubit_lambda(rho).difference


def localizable_coherence_qubit(rho):
    return qubit_lambda(rho).total


def pair_projectors(n):
    if n < 2:
        raise BadDimension(f"need at least two levels, got {n}")
    return [PairProjector(n, pair) for pair in combinations(range(n), 2)]


def subspace_state(rho, proj):
    """Normalized restriction of ``rho`` to the subspace selected by ``proj``.

    A subspace with vanishing weight is flagged ``degenerate`` and returned
    as the maximally mixed qubit with weight 0.
    """
    rho = as_density(rho)
    if proj.n != rho.dim:
        raise DimensionMismatch(f"projector on {proj.n} levels, state has {rho.dim}")
    k, l = proj.pair
    sub = rho.mat[np.ix_([k, l], [k, l])]
    weight = float((sub[0, 0] + sub[1, 1]).real)
    if weight < ZERO_WEIGHT:
        return SubspaceState(0.0, DensityMatrix(np.eye(2, dtype=np.complex128) / 2), True)
    return SubspaceState(weight, DensityMatrix(sub / weight), False)


def lambda_pairs(rho):
    """Per-subspace lambda pairs ``sqrt(s_kk s_ll) +- |s_kl|`` for all pairs."""
    mat = as_density(rho).mat
    diag = mat.diagonal().real
    return [
        _lambda_from_entries(diag[k], diag[l], abs(mat[k, l]))
        for k, l in combinations(range(mat.shape[0]), 2)
    ]


def coherence_vectors(rho):
    rho = as_density(rho)
    n = rho.dim
    if n < 2:
        raise BadDimension(f"need at least two levels, got {n}")
    pairs = list(combinations(range(n), 2))
    diag = rho.mat.diagonal().real
    weights = np.array([diag[k] + diag[l] for k, l in pairs])
    lam = lambda_pairs(rho)
    lo = np.array([x.difference for x in lam])
    hi = np.array([x.total for x in lam])
    ok = weights >= ZERO_WEIGHT
    weights = np.where(ok, weights, 0.0)
    safe = np.where(ok, weights, 1.0)
    lo = np.where(ok, lo, 0.0)
    hi = np.where(ok, hi, 0.0)
    return CoherenceVectors(n, pairs, weights, lo / safe, hi / safe, lo, hi)


def d_F(rho):
    """Length of the weighted minimal-average coherence vector."""
    return float(np.linalg.norm(coherence_vectors(rho).weighted_min))


def d_FL(rho):
    """Length of the weighted maximal-average (localizable) coherence vector."""
    return float(np.linalg.norm(coherence_vectors(rho).weighted_max))
