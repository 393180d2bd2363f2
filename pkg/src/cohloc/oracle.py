"""Brute-force extremes of the average coherence over decompositions.

Every pure-state realization of ``rho`` with at most ``m`` members is
labelled by an ``m x r`` isometry ``U`` (``r = rank(rho)``): the rows of
``U @ B`` with ``B = diag(sqrt(M)) Phi^T`` are the unnormalized members.
This module samples such isometries uniformly, keeps the best ones and
polishes them by two-row unitary rotations, giving numerical min/max values
that can be set against the closed-form extremes.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .coherence import pair_projectors
from .entanglement import TheoremReport
from .exceptions import BadEnsembleSize, WrongDimension
from .states import _rng, as_density, eigen_factor, random_isometry

BRACKET_TOL = 1e-9
REACH_TOL = 1e-3
STEP_FLOOR = 1e-10
_GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(eq=False)
class ExtremeSearchResult:
    measure: str
    m: int
    best_min: float
    best_max: float
    closed_min: float
    closed_max: float
    samples: int
    refine_steps: int
    argmin_isometry: np.ndarray
    argmax_isometry: np.ndarray
    max_excursion: float = 0.0
    n_violations: int = 0
    history_min: list = field(default_factory=list)
    history_max: list = field(default_factory=list)

    @property
    def reach(self):
        """Largest distance between a refined extreme and its closed form."""
        return max(abs(self.best_min - self.closed_min), abs(self.best_max - self.closed_max))

    def to_dict(self, isometries=False):
        ret = {
            "measure": self.measure,
            "m": self.m,
            "best_min": self.best_min,
            "best_max": self.best_max,
            "closed_min": self.closed_min,
            "closed_max": self.closed_max,
            "samples": self.samples,
            "refine_steps": self.refine_steps,
            "max_excursion": self.max_excursion,
            "n_violations": self.n_violations,
            "reach": self.reach,
        }
        if isometries:
            for key in ("argmin_isometry", "argmax_isometry"):
                U = getattr(self, key)
                ret[key] = {"re": U.real.tolist(), "im": U.imag.tolist()}
        return ret


def _resolve_pairs(measure, n):
    if measure == "l1_qubit":
        if n != 2:
            raise WrongDimension(f"measure 'l1_qubit' needs a qubit, got dimension {n}")
        return [(0, 1)], "l1_qubit"
    if measure == "weighted_vector":
        return list(combinations(range(n), 2)), "weighted_vector"
    if isinstance(measure, tuple) and measure[0] == "subspace":
        proj = pair_projectors(n)[measure[1]]
        return [proj.pair], f"subspace({measure[1]})"
    raise ValueError(f"unknown measure {measure!r}")


def closed_forms(rho, pairs):
    """Per-pair closed-form extremes ``2|s_kl|`` and ``2 sqrt(s_kk s_ll)``."""
    mat = as_density(rho).mat
    diag = mat.diagonal().real
    lo = np.array([2 * abs(mat[k, l]) for k, l in pairs])
    hi = np.array([2 * math.sqrt(max(diag[k] * diag[l], 0)) for k, l in pairs])
    return lo, hi


class _Objective:
    """Weighted subspace average coherence ``||(sum_i 2|v_ik||v_il|)_j||``.

    For a single pair this is the plain average coherence of that subspace.
    """

    def __init__(self, pairs):
        self.ks = np.array([k for k, _ in pairs])
        self.ls = np.array([l for _, l in pairs])

    def terms(self, V):
        # V: (..., m, n) -> (..., m, J)
        return 2 * np.abs(V[..., self.ks]) * np.abs(V[..., self.ls])

    def __call__(self, V):
        return np.linalg.norm(self.terms(V).sum(axis=-2), axis=-1)


def _golden(fun, lo, hi):
    """Minimize a scalar function on ``[lo, hi]`` down to ``STEP_FLOOR``."""
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = fun(x1), fun(x2)
    while b - a > STEP_FLOOR:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = fun(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = fun(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def _rotate(vp, vq, theta, phi):
    c, s = math.cos(theta), math.sin(theta)
    e = complex(math.cos(phi), math.sin(phi))
    return c * vp + e * s * vq, -s / e * vp + c * vq


class _Refiner:
    """Cyclic two-row rotations of ``U`` for one optimization direction."""

    def __init__(self, objective, B, sign, n_grid=12, max_sweeps=200):
        self.obj = objective
        self.B = B
        self.sign = sign  # +1 minimizes, -1 maximizes
        self.n_grid = n_grid
        self.max_sweeps = max_sweeps

    def _pair_fun(self, totals, vp, vq):
        """Objective after rotating rows ``p, q``, as scalar and grid callables."""
        ks, ls = self.obj.ks, self.obj.ls
        pk, pl, qk, ql = vp[ks], vp[ls], vq[ks], vq[ls]
        base = totals - 2 * (np.abs(pk * pl) + np.abs(qk * ql))
        sign = self.sign

        if len(ks) == 1:
            b0 = float(base[0])
            pk, pl, qk, ql = complex(pk[0]), complex(pl[0]), complex(qk[0]), complex(ql[0])

            def fun(theta, phi):
                c, s = math.cos(theta), math.sin(theta)
                e = complex(math.cos(phi), math.sin(phi))
                es, sie = e * s, s / e
                return sign * abs(b0 + 2 * (abs((c * pk + es * qk) * (c * pl + es * ql))
                                            + abs((c * qk - sie * pk) * (c * ql - sie * pl))))
        else:

            def fun(theta, phi):
                c, s = math.cos(theta), math.sin(theta)
                e = complex(math.cos(phi), math.sin(phi))
                es, sie = e * s, s / e
                tmp0 = base + 2 * (np.abs((c * pk + es * qk) * (c * pl + es * ql))
                                   + np.abs((c * qk - sie * pk) * (c * ql - sie * pl)))
                return sign * math.sqrt(float(tmp0 @ tmp0))

        def grid(theta, phi):
            c, s = np.cos(theta)[..., None], np.sin(theta)[..., None]
            e = np.exp(1j * phi)[..., None]
            tmp0 = base + 2 * (np.abs((c * pk + e * s * qk) * (c * pl + e * s * ql))
                               + np.abs((c * qk - s / e * pk) * (c * ql - s / e * pl)))
            return sign * np.linalg.norm(tmp0, axis=-1)

        return fun, grid

    def _line_search(self, fun, grid):
        # coarse grid, then alternating golden-section refinements
        thetas, phis = np.meshgrid(
            np.linspace(-np.pi / 2, np.pi / 2, self.n_grid, endpoint=False),
            np.linspace(0, 2 * np.pi, self.n_grid, endpoint=False),
            indexing="ij",
        )
        values = grid(thetas, phis)
        idx = np.unravel_index(np.argmin(values), values.shape)
        t, p, val = float(thetas[idx]), float(phis[idx]), float(values[idx])
        current = fun(0.0, 0.0)
        if current <= val:
            t, p, val = 0.0, 0.0, current
        dt, dp = np.pi / self.n_grid, 2 * np.pi / self.n_grid
        for _ in range(3):
            t1, v1 = _golden(lambda x: fun(x, p), t - dt, t + dt)
            if v1 < val:
                t, val = t1, v1
            p1, v2 = _golden(lambda x: fun(t, x), p - dp, p + dp)
            if v2 < val:
                p, val = p1, v2
            dt, dp = dt / 4, dp / 4
        return t, p, val

    def run(self, U):
        U = np.array(U, dtype=np.complex128)
        V = U @ self.B
        m = U.shape[0]
        current = self.sign * float(self.obj(V))
        history = [self.sign * current]
        steps = 0
        for _ in range(self.max_sweeps):
            start = current
            for p, q in combinations(range(m), 2):
                totals = self.obj.terms(V).sum(axis=0)
                theta, phi, val = self._line_search(*self._pair_fun(totals, V[p], V[q]))
                if val < current - 1e-15:
                    V[p], V[q] = _rotate(V[p], V[q], theta, phi)
                    U[p], U[q] = _rotate(U[p], U[q], theta, phi)
                    # recompute instead of trusting the incremental value
                    current = self.sign * float(self.obj(V))
                    history.append(self.sign * current)
                    steps += 1
            if start - current < STEP_FLOOR:
                break
        return U, self.sign * current, history, steps


def search_extremes(rho, measure="l1_qubit", m=None, n_samples=500, rng=None,
                    refine_starts=3, init=None, tol=BRACKET_TOL):
    """Sample and refine decompositions of ``rho`` to find extreme averages.

    Parameters
    ----------
    rho : DensityMatrix or array_like
    measure : "l1_qubit", "weighted_vector" or ("subspace", j)
        Quantity averaged over the decomposition. ``("subspace", j)`` is the
        weighted average coherence of the ``j``-th 2x2 subspace (pairs in
        lexicographic order).
    m : int, optional
        Number of ensemble members, at least ``rank(rho)`` (the default).
    n_samples : int
        Number of Haar-random isometries drawn.
    rng : int or numpy.random.Generator
    refine_starts : int
        How many of the best samples (per direction) are refined.
    init : sequence of arrays, optional
        Extra ``m x r`` isometries added to the candidate pool.
    tol : float
        Slack for the bracket check on every evaluated decomposition.
    """
    rho = as_density(rho)
    rng = _rng(rng)
    pairs, name = _resolve_pairs(measure, rho.dim)
    B = eigen_factor(rho)
    r = B.shape[0]
    m = r if m is None else int(m)
    if m < r:
        raise BadEnsembleSize(f"ensemble size {m} below rank {r}")
    if n_samples < 1:
        raise BadEnsembleSize("need at least one sample")

    lo, hi = closed_forms(rho, pairs)
    closed_min, closed_max = float(np.linalg.norm(lo)), float(np.linalg.norm(hi))
    obj = _Objective(pairs)

    Us = random_isometry(m, r, rng, size=n_samples)
    if init is not None:
        Us = np.concatenate([Us, np.asarray(init, dtype=np.complex128).reshape(-1, m, r)])
    values = obj(Us @ B)

    excursions = [np.maximum(closed_min - values, values - closed_max)]
    order = np.argsort(values)
    k = min(refine_starts, len(values))
    steps = 0
    results = {}
    for sign, picks in ((1, order[:k]), (-1, order[::-1][:k])):
        refiner = _Refiner(obj, B, sign)
        best = None
        for idx in picks:
            U, val, hist, nstep = refiner.run(Us[idx])
            steps += nstep
            excursions.append(np.maximum(closed_min - np.array(hist), np.array(hist) - closed_max))
            if best is None or sign * val < sign * best[1]:
                best = (U, val, hist)
        results[sign] = best

    excursions = np.concatenate(excursions)
    return ExtremeSearchResult(
        measure=name,
        m=m,
        best_min=float(results[1][1]),
        best_max=float(results[-1][1]),
        closed_min=closed_min,
        closed_max=closed_max,
        samples=len(values),
        refine_steps=steps,
        argmin_isometry=results[1][0],
        argmax_isometry=results[-1][0],
        max_excursion=float(max(excursions.max(), 0.0)),
        n_violations=int((excursions > tol).sum()),
        history_min=results[1][2],
        history_max=results[-1][2],
    )


def verify_thompson(rho, m=None, n_samples=500, rng=None, reach_tol=REACH_TOL,
                    bracket_tol=BRACKET_TOL, refine_starts=3):
    """Check the closed-form extremes against the brute-force search.

    Qubits are checked on the average coherence itself ("T1"); higher
    dimensions on every 2x2 subspace objective ("T3"). The report passes
    when no evaluated decomposition leaves the closed-form bracket and the
    refined extremes land within ``reach_tol`` of the closed forms.
    """
    rho = as_density(rho)
    rng = _rng(rng)
    if rho.dim == 2:
        theorem_id, measures = "T1", ["l1_qubit"]
    else:
        theorem_id = "T3"
        measures = [("subspace", j) for j in range(len(pair_projectors(rho.dim)))]
    found = [
        search_extremes(rho, x, m=m, n_samples=n_samples, rng=rng, refine_starts=refine_starts, tol=bracket_tol)
        for x in measures
    ]
    reach = max(x.reach for x in found)
    bracket_ok = all(x.n_violations == 0 for x in found)
    return TheoremReport(
        theorem_id,
        lhs=float(reach),
        rhs=0.0,
        residual=float(reach),
        passed=bool(bracket_ok and reach <= reach_tol),
        tolerance=reach_tol,
        kind="oracle",
        details={"bracket_ok": bracket_ok, "searches": [x.to_dict() for x in found]},
    )
