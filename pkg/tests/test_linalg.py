import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqkd3.linalg import (basis_vectors, haar_unitary, shannon_entropy3,
                          tensor, von_neumann_entropy3)

# frozen oracle value: -sum p log3 p at 40 digits (mpmath)
H3_08_01_01 = 0.5816718657178868


def test_basis_a_is_canonical():
    a = basis_vectors("A")
    assert np.allclose(a.vectors, np.eye(3))


def test_basis_t_orthonormal():
    t = basis_vectors("T").vectors
    assert np.max(np.abs(t.conj().T @ t - np.eye(3))) < 1e-12


@pytest.mark.parametrize("alt", ["T", "K"])
def test_mutual_unbiasedness_with_a(alt):
    v = basis_vectors(alt).vectors
    overlaps = np.abs(basis_vectors("A").vectors.conj().T @ v) ** 2
    assert np.max(np.abs(overlaps - 1.0 / 3.0)) < 1e-12


def test_unknown_basis_rejected():
    with pytest.raises(ValueError):
        basis_vectors("B")


def test_shannon_uniform_and_deterministic():
    assert shannon_entropy3([1 / 3, 1 / 3, 1 / 3]) == pytest.approx(1.0, abs=1e-12)
    assert shannon_entropy3([1.0, 0.0, 0.0]) == 0.0


def test_shannon_frozen_oracle_value():
    assert shannon_entropy3([0.8, 0.1, 0.1]) == pytest.approx(H3_08_01_01,
                                                              abs=1e-12)


def test_shannon_not_renormalized():
    # twice the mass is not the same entropy
    assert shannon_entropy3([2 / 3, 2 / 3, 2 / 3]) != pytest.approx(
        shannon_entropy3([1 / 3, 1 / 3, 1 / 3]), abs=1e-3)


def test_shannon_rejects_negative():
    with pytest.raises(ValueError):
        shannon_entropy3([0.5, -0.1, 0.6])


def test_von_neumann_maximally_mixed_and_pure():
    assert von_neumann_entropy3(np.eye(3) / 3) == pytest.approx(1.0, abs=1e-12)
    proj = np.zeros((3, 3), dtype=complex)
    proj[0, 0] = 1.0
    assert von_neumann_entropy3(proj) == pytest.approx(0.0, abs=1e-12)


def test_von_neumann_matches_shannon_on_diagonal():
    probs = [0.5, 0.3, 0.2]
    assert von_neumann_entropy3(np.diag(probs).astype(complex)) == pytest.approx(
        shannon_entropy3(probs), abs=1e-10)


def test_von_neumann_rejects_bad_input():
    m = np.eye(3, dtype=complex)
    m[0, 1] = 0.5  # not Hermitian
    with pytest.raises(ValueError):
        von_neumann_entropy3(m)
    with pytest.raises(ValueError):
        von_neumann_entropy3(np.eye(3, dtype=complex))  # trace 3


def test_tensor_index_convention():
    e0, e1 = np.eye(3)[0].astype(complex), np.eye(3)[1].astype(complex)
    out = tensor(e0, e1)
    expected = np.zeros(9)
    expected[1] = 1.0
    assert np.allclose(out, expected)
    assert np.allclose(tensor(np.eye(3), np.eye(3)), np.eye(9))


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_tensor_inner_product_factorizes(seed):
    rng = np.random.default_rng(seed)
    x, xp = (rng.normal(size=3) + 1j * rng.normal(size=3) for _ in range(2))
    y, yp = (rng.normal(size=4) + 1j * rng.normal(size=4) for _ in range(2))
    lhs = np.vdot(tensor(x, y), tensor(xp, yp))
    rhs = np.vdot(x, xp) * np.vdot(y, yp)
    assert abs(lhs - rhs) < 1e-10


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=25, deadline=None)
def test_haar_unitary_is_unitary(seed):
    rng = np.random.default_rng(seed)
    u = haar_unitary(int(rng.integers(2, 10)), rng)
    assert np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) < 1e-12


@given(st.integers(min_value=0, max_value=10_000), st.sampled_from([3, 9]))
@settings(max_examples=25, deadline=None)
def test_entropy_invariant_under_conjugation(seed, dim):
    rng = np.random.default_rng(seed)
    probs = rng.dirichlet(np.ones(dim))
    rho = np.diag(probs).astype(complex)
    u = haar_unitary(dim, rng)
    rotated = u @ rho @ u.conj().T
    assert von_neumann_entropy3(rotated) == pytest.approx(
        shannon_entropy3(probs), abs=1e-9)


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=25, deadline=None)
def test_shannon_equals_von_neumann_on_diagonals(seed):
    rng = np.random.default_rng(seed)
    probs = rng.dirichlet(np.ones(3))
    assert von_neumann_entropy3(np.diag(probs).astype(complex)) == pytest.approx(
        shannon_entropy3(probs), abs=1e-10)
