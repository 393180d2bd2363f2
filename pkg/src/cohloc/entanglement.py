"""Concurrence and the coherence/concurrence relations."""

from dataclasses import asdict, dataclass, field

import numpy as np

from . import coherence
from .exceptions import BadDimension, MissingSplit, WrongDimension
from .numerics import partial_trace
from .states import DensityMatrix, PureState, as_density, eigen_factor, purify

IDENTITY_TOL = 1e-9

_SIGMA_YY = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])


@dataclass
class TheoremReport:
    """Outcome of checking one relation on one input.

    ``kind`` is ``"identity"`` (residual ``|lhs - rhs|``), ``"inequality"``
    (residual ``max(0, lhs - rhs)``), ``"bound-only"`` (no lhs available)
    or ``"oracle"`` (optimizer reach, see :mod:`cohloc.oracle`).
    """

    theorem_id: str
    lhs: float
    rhs: float
    residual: float
    passed: bool
    tolerance: float
    kind: str = "identity"
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


def _identity_report(theorem_id, lhs, rhs, tol, **details):
    residual = abs(lhs - rhs)
    return TheoremReport(theorem_id, float(lhs), float(rhs), float(residual), bool(residual <= tol), tol, "identity", details)


def reduced_state(psi, keep="A"):
    if psi.split is None:
        raise MissingSplit("pure state carries no bipartite split")
    n1, n2 = psi.split
    tmp0 = psi.vec.reshape(n1, n2)
    if keep == "A":
        return DensityMatrix(tmp0 @ tmp0.conj().T)
    return DensityMatrix(tmp0.T @ tmp0.conj())


def concurrence_pure(psi):
    """``sqrt(2 (1 - Tr rho_A^2))`` for a bipartite pure state.

    Evaluated as ``2 sqrt(sum_{i<j} s_i^2 s_j^2)`` over the Schmidt
    coefficients, which avoids the cancellation in ``1 - Tr rho_A^2`` near
    product states.
    """
    if psi.split is None:
        raise MissingSplit("pure state carries no bipartite split")
    s2 = np.linalg.svd(psi.vec.reshape(psi.split), compute_uv=False) ** 2
    cross = float(s2[1:] @ np.cumsum(s2)[:-1])
    return 2 * float(np.sqrt(cross))


def concurrence_from_reduced(rho_a):
    """Concurrence of any purification of ``rho_a``, from its entries.

    ``sqrt(4 sum_{k<l} (s_kk s_ll - |s_kl|^2))``.
    """
    mat = as_density(rho_a).mat
    diag = mat.diagonal().real
    cross = (diag.sum() ** 2 - (diag**2).sum()) / 2
    off = (np.abs(mat) ** 2).sum() - (diag**2).sum()
    return float(np.sqrt(max(4 * cross - 2 * off, 0.0)))


def _split(psi, split):
    if split is not None:
        psi = PureState(psi.vec if isinstance(psi, PureState) else psi, split)
    if not isinstance(psi, PureState) or psi.split is None:
        raise MissingSplit("a bipartite split (n1, n2) is required")
    return psi


def theorem2_check(psi, split=None, tol=IDENTITY_TOL):
    """Compare ``C^2`` with ``D_L^2 - D^2`` of the qubit reduced state."""
    psi = _split(psi, split)
    if psi.split[0] != 2:
        raise WrongDimension(f"subsystem A must be a qubit, got split {psi.split}")
    rho_a = reduced_state(psi)
    c2 = concurrence_pure(psi) ** 2
    lam = coherence.qubit_lambda(rho_a)
    rhs = lam.total**2 - coherence.d_l1(rho_a) ** 2
    return _identity_report("T2", c2, rhs, tol)


def theorem4_check(psi, split=None, tol=IDENTITY_TOL, convention="lambda"):
    """Compare ``C^2`` with ``d_FL^2 - d_F^2`` of the reduced state.

    ``convention="frobenius"`` substitutes ``d_frob`` for ``d_F``; the
    identity then fails by ``sum_{i != j} |s_ij|^2``.
    """
    psi = _split(psi, split)
    rho_a = reduced_state(psi)
    if rho_a.dim < 2:
        raise BadDimension("subsystem A needs at least two levels")
    c2 = concurrence_pure(psi) ** 2
    if convention == "lambda":
        off = coherence.d_F(rho_a)
    elif convention == "frobenius":
        off = coherence.d_frob(rho_a)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return _identity_report("T4", c2, coherence.d_FL(rho_a) ** 2 - off**2, tol, convention=convention)


def wootters_concurrence(sigma):
    """Two-qubit mixed-state concurrence ``max(0, mu1 - mu2 - mu3 - mu4)``.

    The ``mu`` are the singular values of ``T_ij = v_i^T (sy x sy) v_j`` for
    the eigen-factors ``v_i = sqrt(M_i) phi_i``; these equal the square
    roots of the eigenvalues of ``sigma (sy x sy) sigma* (sy x sy)``.
    """
    sigma = as_density(sigma)
    if sigma.dim != 4:
        raise WrongDimension(f"expected a 2x2 bipartite state, got dimension {sigma.dim}")
    B = eigen_factor(sigma)
    mu = np.zeros(4)
    tmp0 = np.linalg.svd(B @ _SIGMA_YY @ B.T, compute_uv=False)
    mu[: tmp0.size] = tmp0
    return float(max(0.0, mu[0] - mu[1:].sum()))


def coherence_gap(rho_a):
    """``D_L^2 - D^2`` for a qubit, ``d_FL^2 - d_F^2`` otherwise."""
    rho_a = as_density(rho_a)
    if rho_a.dim == 2:
        return coherence.localizable_coherence_qubit(rho_a) ** 2 - coherence.d_l1(rho_a) ** 2
    return coherence.d_FL(rho_a) ** 2 - coherence.d_F(rho_a) ** 2


def theorem5_check(sigma_ab, split, tol=IDENTITY_TOL):
    """Mixed-state bound ``C^2(sigma_AB) <= gap(sigma_A)``.

    The left side is only available for 2x2 systems (Wootters); other
    splits report ``kind="bound-only"``. In every case the bound is also
    checked to hold with equality on the minimal purification split as
    ``A | (B ancilla)``.
    """
    sigma_ab = as_density(sigma_ab)
    n1, n2 = (int(x) for x in split)
    if n1 < 2 or n1 * n2 != sigma_ab.dim:
        raise WrongDimension(f"split {split} incompatible with dimension {sigma_ab.dim}")
    sigma_a = DensityMatrix(partial_trace(sigma_ab.mat, (n1, n2), keep="A"))
    rhs = coherence_gap(sigma_a)

    psi = purify(sigma_ab)
    psi = PureState(psi.vec, (n1, n2 * psi.split[1]))
    purif_c2 = concurrence_pure(psi) ** 2
    purif_residual = abs(purif_c2 - rhs)
    details = {"purification_c2": purif_c2, "purification_residual": purif_residual}

    if (n1, n2) == (2, 2):
        lhs = wootters_concurrence(sigma_ab) ** 2
        kind = "inequality"
    else:
        lhs = 0.0
        kind = "bound-only"
    residual = max(0.0, lhs - rhs)
    passed = residual <= tol and purif_residual <= tol
    return TheoremReport("T5", float(lhs), float(rhs), float(residual), bool(passed), tol, kind, details)
