import numpy as np
import pytest

from cohloc.exceptions import DimensionMismatch, NonHermitian, NonSquare
from cohloc.numerics import hermitian_eig, kron, partial_trace, singular_values
from cohloc.states import random_density

from oracles import partial_trace_loops


def _rand_herm(n, rng):
    tmp0 = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return tmp0 + tmp0.conj().T


def test_hermitian_eig_identity():
    EVL, EVC = hermitian_eig(np.eye(2))
    assert np.allclose(EVL, [1, 1])
    assert np.abs(EVC.conj().T @ EVC - np.eye(2)).max() < 1e-12


def test_hermitian_eig_2x2_hand_solved():
    # characteristic polynomial x^2 - x + 0.17
    EVL, _ = hermitian_eig([[0.7, 0.2], [0.2, 0.3]])
    assert np.abs(EVL - [0.5 + np.sqrt(0.08), 0.5 - np.sqrt(0.08)]).max() < 1e-12


def test_hermitian_eig_diagonal():
    EVL, EVC = hermitian_eig(np.diag([0.2, 0.5, 0.3]))
    assert np.allclose(EVL, [0.5, 0.3, 0.2])
    assert np.allclose(np.abs(EVC), np.eye(3)[:, [1, 2, 0]])


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_hermitian_eig_reconstruction(n, rng):
    for _ in range(20):
        H = _rand_herm(n, rng)
        EVL, EVC = hermitian_eig(H)
        assert np.all(np.diff(EVL) <= 0)
        assert np.abs((EVC * EVL) @ EVC.conj().T - H).max() < 1e-9
        assert np.abs(EVC.conj().T @ EVC - np.eye(n)).max() < 1e-9


def test_hermitian_eig_errors():
    with pytest.raises(NonHermitian):
        hermitian_eig([[1, 1e-6], [0, 1]])
    with pytest.raises(NonSquare):
        hermitian_eig(np.zeros((2, 3)))
    # rounding below tolerance is symmetrized away
    EVL, _ = hermitian_eig([[1, 1e-11], [0, 1]])
    assert np.allclose(EVL, [1, 1])


def test_singular_values_examples():
    assert np.allclose(singular_values(np.eye(4)), np.ones(4))
    assert np.allclose(singular_values(np.diag([3, -4])), [4, 3])


@pytest.mark.parametrize("shape", [(1, 1), (3, 5), (16, 16)])
def test_singular_values_match_gram_spectrum(shape, rng):
    for _ in range(10):
        K = rng.normal(size=shape) + 1j * rng.normal(size=shape)
        s = singular_values(K)
        assert np.all(s >= 0) and np.all(np.diff(s) <= 0)
        EVL, _ = hermitian_eig(K.conj().T @ K)
        assert np.abs(s**2 - EVL[: s.size]).max() < 1e-9


def test_kron_examples():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    B = np.arange(6).reshape(2, 3)
    assert np.array_equal(kron([[1]], B), B)
    assert np.array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))


def test_partial_trace_examples():
    ket00 = np.zeros(4)
    ket00[0] = 1
    assert np.allclose(partial_trace(np.outer(ket00, ket00), (2, 2)), np.diag([1, 0]))
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.allclose(partial_trace(np.outer(bell, bell), (2, 2)), np.eye(2) / 2)


@pytest.mark.parametrize("dims", [(2, 3), (3, 2), (4, 4)])
def test_partial_trace_against_loops(dims, rng):
    n1, n2 = dims
    for _ in range(5):
        rho = random_density(n1, rng=rng).mat
        sigma = random_density(n2, rng=rng).mat
        M = np.kron(rho, sigma)
        assert np.abs(partial_trace(M, dims, "A") - rho).max() < 1e-12
        assert np.abs(partial_trace(M, dims, "B") - sigma).max() < 1e-12
        G = rng.normal(size=(n1 * n2,) * 2) + 1j * rng.normal(size=(n1 * n2,) * 2)
        for keep in "AB":
            ret = partial_trace(G, dims, keep)
            assert np.abs(ret - partial_trace_loops(G, n1, n2, keep)).max() < 1e-12
            assert abs(np.trace(ret) - np.trace(G)) < 1e-12


def test_partial_trace_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        partial_trace(np.eye(5), (2, 2))
    with pytest.raises(ValueError):
        partial_trace(np.eye(4), (2, 2), keep="C")
