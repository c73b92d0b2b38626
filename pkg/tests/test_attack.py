import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqkd3.attack import (AttackModel, ChannelScenario, compose_f, compose_g,
                          compose_h, extract_e, extract_ekij, identity_attack,
                          pauli_twirl_attack, pauli_twirl_isometry,
                          random_attack, ternary_channel_apply,
                          vector_families)
from sqkd3.linalg import haar_unitary

DIMS = st.sampled_from([1, 3, 9])


def norm2(v):
    return np.vdot(v, v).real


def test_identity_attack_forward_records():
    e = extract_e(identity_attack())
    for idx in range(9):
        expected = 1.0 if idx in (0, 4, 8) else 0.0
        assert norm2(e[idx]) == pytest.approx(expected, abs=1e-14)


def test_twirl_forward_record_norm():
    q = 0.12
    e = extract_e(pauli_twirl_attack(q, q))
    assert norm2(e[0]) == pytest.approx(1 - 2 * q, abs=1e-12)


def test_identity_attack_reverse_records():
    ek = extract_ekij(identity_attack())
    assert norm2(ek[(0, 0, 0)]) == pytest.approx(1.0, abs=1e-14)
    assert norm2(ek[(1, 1, 4)]) == pytest.approx(1.0, abs=1e-14)


def test_twirl_reverse_record_norm():
    ek = extract_ekij(pauli_twirl_attack(0.1, 0.1))
    assert norm2(ek[(0, 0, 0)]) == pytest.approx(0.64, abs=1e-12)


def test_identity_attack_round_trip_records():
    f = compose_f(identity_attack())
    for idx in range(9):
        expected = 1.0 if idx in (0, 4, 8) else 0.0
        assert norm2(f[idx]) == pytest.approx(expected, abs=1e-14)


def test_identity_attack_alternative_basis_records():
    fams = vector_families(identity_attack())
    assert norm2(fams.g[1]) == pytest.approx(0.0, abs=1e-14)
    assert norm2(fams.g[0]) == pytest.approx(1.0, abs=1e-12)
    assert norm2(fams.h[1]) == pytest.approx(0.0, abs=1e-14)


@given(st.integers(min_value=0, max_value=10_000), DIMS, DIMS)
@settings(max_examples=40, deadline=None)
def test_record_sum_rules(seed, d_f, d_r):
    fams = vector_families(random_attack(d_f, d_r, seed))
    for vecs in (fams.e, fams.f):
        for row in range(3):
            total = sum(norm2(vecs[3 * row + j]) for j in range(3))
            assert total == pytest.approx(1.0, abs=1e-10)
        for r1, r2 in ((0, 1), (1, 2), (0, 2)):
            cross = sum(np.vdot(vecs[3 * r1 + j], vecs[3 * r2 + j])
                        for j in range(3))
            assert abs(cross) < 1e-10


@given(st.integers(min_value=0, max_value=10_000), DIMS, DIMS)
@settings(max_examples=20, deadline=None)
def test_reverse_stage_preserves_record_norms(seed, d_f, d_r):
    attack = random_attack(d_f, d_r, seed)
    e = extract_e(attack)
    ek = extract_ekij(attack)
    for i in range(3):
        for j in range(9):
            total = sum(norm2(ek[(k, i, j)]) for k in range(3))
            assert total == pytest.approx(norm2(e[j]), abs=1e-10)


@given(st.integers(min_value=0, max_value=10_000), DIMS, DIMS)
@settings(max_examples=20, deadline=None)
def test_round_trip_records_two_paths_agree(seed, d_f, d_r):
    attack = random_attack(d_f, d_r, seed)
    f = compose_f(attack)
    ek = extract_ekij(attack)
    for i in range(3):
        for j in range(3):
            alt = ek[(j, 0, 3 * i)] + ek[(j, 1, 3 * i + 1)] + ek[(j, 2, 3 * i + 2)]
            assert np.max(np.abs(f[3 * i + j] - alt)) < 1e-12


@given(st.integers(min_value=0, max_value=10_000), DIMS, DIMS)
@settings(max_examples=20, deadline=None)
def test_alternative_basis_records_total_mass(seed, d_f, d_r):
    f = compose_f(random_attack(d_f, d_r, seed))
    for family in (compose_g(f), compose_h(f)):
        total = sum(norm2(v) for v in family)
        assert total == pytest.approx(3.0, abs=1e-10)


def test_ternary_channel_basics():
    rho0 = np.zeros((3, 3), dtype=complex)
    rho0[0, 0] = 1.0
    q = 0.07
    assert np.allclose(ternary_channel_apply(rho0, q),
                       np.diag([1 - 2 * q, q, q]))
    rng = np.random.default_rng(5)
    u = haar_unitary(3, rng)
    rho = u @ np.diag(rng.dirichlet(np.ones(3))).astype(complex) @ u.conj().T
    assert np.allclose(ternary_channel_apply(rho, 0.0), rho)
    assert np.allclose(ternary_channel_apply(rho, 1 / 3), np.eye(3) / 3)
    assert np.trace(ternary_channel_apply(rho, 0.2)) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        ternary_channel_apply(rho, 0.5)


def test_twirl_isometry_properties():
    v0 = pauli_twirl_isometry(0.0)
    # noiseless dilation embeds the state with the ancilla cleared
    expected = np.zeros((27, 3), dtype=complex)
    for i in range(3):
        expected[i * 9, i] = 1.0
    assert np.allclose(v0, expected)
    for q in (0.05, 0.2, 0.375):
        v = pauli_twirl_isometry(q)
        assert np.max(np.abs(v.conj().T @ v - np.eye(3))) < 1e-12
    with pytest.raises(ValueError):
        pauli_twirl_isometry(0.4)


def test_twirl_dilation_reduces_to_channel():
    v = pauli_twirl_isometry(0.1)
    rho0 = np.zeros((3, 3), dtype=complex)
    rho0[0, 0] = 1.0
    big = v @ rho0 @ v.conj().T
    reduced = np.einsum("aibi->ab", big.reshape(3, 9, 3, 9))
    assert np.allclose(reduced, np.diag([0.8, 0.1, 0.1]), atol=1e-12)


def test_attack_model_validation():
    with pytest.raises(ValueError):
        AttackModel(np.zeros((9, 3), dtype=complex),
                    np.eye(9, dtype=complex), 3, 1)


def test_attack_json_round_trip():
    attack = random_attack(3, 3, seed=11)
    clone = AttackModel.from_json(attack.to_json())
    assert clone.d_f == attack.d_f and clone.d_r == attack.d_r
    assert np.allclose(clone.forward, attack.forward)
    assert np.allclose(clone.reverse, attack.reverse)


def test_scenario_validation_and_noise_values():
    with pytest.raises(ValueError):
        ChannelScenario(q=0.5)
    with pytest.raises(ValueError):
        ChannelScenario(q=0.1, model="both")
    s = ChannelScenario(q=0.1, model="dependent")
    assert s.basis_error_value() == pytest.approx(0.1)
    s = ChannelScenario(q=0.1, model="independent")
    assert s.basis_error_value() == pytest.approx(2 * 0.1 * 1.7)
    s = ChannelScenario(q=0.1, model="dependent", basis_noise_convention="total")
    assert s.basis_error_value() == pytest.approx(0.05)
