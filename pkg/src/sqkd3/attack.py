"""Two-stage collective attacks on the qutrit round trip.

An attack is a pair of isometries: `forward` acts while the qutrit travels
to the receiver (3 -> 3*d_f, appending an ancilla of dimension d_f) and
`reverse` acts on the way back (3*d_f -> 3*d_f*d_r, appending a second
ancilla).  All output indices are row-major with the qutrit most
significant, so block j of an output vector is the eavesdropper record
attached to the qutrit being found in state |j>.

The canonical symmetric attack is a generalized-Pauli twirl in each
direction, which realizes the ternary symmetric channel
rho -> (1-3Q) rho + Q I exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .linalg import OMEGA, basis_vectors, haar_isometry

ISOMETRY_TOL = 1e-12


def shift_matrix() -> np.ndarray:
    """Generalized Pauli X: |k> -> |k+1 mod 3>."""
    x = np.zeros((3, 3), dtype=complex)
    for k in range(3):
        x[(k + 1) % 3, k] = 1.0
    return x


def clock_matrix() -> np.ndarray:
    """Generalized Pauli Z: |k> -> omega^k |k>."""
    return np.diag([1.0, OMEGA, OMEGA**2]).astype(complex)


@dataclass(frozen=True)
class AttackModel:
    """Eve's forward/reverse isometries with their ancilla dimensions."""

    forward: np.ndarray   # (3*d_f, 3)
    reverse: np.ndarray   # (3*d_f*d_r, 3*d_f)
    d_f: int
    d_r: int

    def __post_init__(self):
        fw, rv = self.forward, self.reverse
        if fw.shape != (3 * self.d_f, 3):
            raise ValueError(f"forward shape {fw.shape} != (3*d_f, 3)")
        if rv.shape != (3 * self.d_f * self.d_r, 3 * self.d_f):
            raise ValueError(f"reverse shape {rv.shape} != (3*d_f*d_r, 3*d_f)")
        for name, m in (("forward", fw), ("reverse", rv)):
            gram = m.conj().T @ m
            if np.max(np.abs(gram - np.eye(m.shape[1]))) > ISOMETRY_TOL:
                raise ValueError(f"{name} stage is not an isometry")

    def composed(self) -> np.ndarray:
        """V = U_R U_F as a (3*d_f*d_r, 3) isometry (receiver reflecting)."""
        return self.reverse @ self.forward

    def to_json(self) -> str:
        def pairs(m):
            return [[float(z.real), float(z.imag)] for z in m.ravel()]
        return json.dumps({"d_f": self.d_f, "d_r": self.d_r,
                           "forward": pairs(self.forward),
                           "reverse": pairs(self.reverse)})

    @classmethod
    def from_json(cls, text: str) -> "AttackModel":
        doc = json.loads(text)
        d_f, d_r = int(doc["d_f"]), int(doc["d_r"])

        def unpairs(entries, shape):
            flat = np.array([complex(re, im) for re, im in entries])
            return flat.reshape(shape)
        return cls(unpairs(doc["forward"], (3 * d_f, 3)),
                   unpairs(doc["reverse"], (3 * d_f * d_r, 3 * d_f)),
                   d_f, d_r)


@dataclass(frozen=True)
class VectorFamilies:
    """Eve's unnormalized record vectors for one attack.

    e[3i+j]      : forward record when |i> was sent and |j> arrives.
    ekij[(k,i,j)]: record after the reverse stage maps |i, e_j> onto |k>.
    f[3i+j]      : records of the composed round trip V|i,0>.
    g[3i+j]      : same, expressed on the T basis (all nine computed).
    h[3i+j]      : same, expressed on the K basis (all nine computed).
    """

    e: list = field(repr=False)
    ekij: dict = field(repr=False)
    f: list = field(repr=False)
    g: list = field(repr=False)
    h: list = field(repr=False)


@dataclass(frozen=True)
class ChannelScenario:
    """Noise scenario for the analytic key-rate evaluation.

    q is the per-pair flip probability of the ternary symmetric channel in
    each direction.  `model` picks how the alternative-basis (T or K) noise
    relates to q, `variant` picks the alternative basis, and the remaining
    flags select formula conventions (see keyrate module).
    """

    q: float
    model: str = "dependent"            # dependent | independent
    variant: str = "phi1"               # phi1 | phi2
    basis_noise_convention: str = "per-pair"   # per-pair | total
    joint_weighting: str = "as-printed"        # as-printed | normalized
    p_mode: str = "as-printed"                 # as-printed | corrected

    def __post_init__(self):
        if not 0.0 <= self.q <= 0.375:
            raise ValueError(f"q={self.q} outside [0, 3/8]")
        if self.model not in ("dependent", "independent"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.variant not in ("phi1", "phi2"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.basis_noise_convention not in ("per-pair", "total"):
            raise ValueError("convention must be per-pair or total")
        if self.joint_weighting not in ("as-printed", "normalized"):
            raise ValueError("weighting must be as-printed or normalized")
        if self.p_mode not in ("as-printed", "corrected"):
            raise ValueError("p_mode must be as-printed or corrected")

    def basis_error_value(self) -> float:
        """Per-pair alternative-basis error probability for this scenario."""
        q = self.q
        if self.model == "dependent":
            value = q
        else:
            value = 2.0 * q * (2.0 - 3.0 * q)
        if self.basis_noise_convention == "total":
            value /= 2.0
        return value

    def flags(self) -> dict:
        return {"variant": self.variant, "model": self.model,
                "basis_noise_convention": self.basis_noise_convention,
                "joint_weighting": self.joint_weighting,
                "p_mode": self.p_mode}


def ternary_channel_apply(rho: np.ndarray, q: float) -> np.ndarray:
    """Apply the ternary symmetric channel rho -> (1-3q) rho + q I."""
    if not 0.0 <= q <= 1.0 / 3.0:
        raise ValueError(f"channel parameter {q} outside [0, 1/3]")
    rho = np.asarray(rho, dtype=complex)
    return (1.0 - 3.0 * q) * rho + q * np.eye(3)


def twirl_weights(q: float) -> np.ndarray:
    """3x3 weights over shift/clock error patterns realizing the channel."""
    if not 0.0 <= q <= 0.375:
        raise ValueError(f"twirl weight would be negative for q={q}")
    w = np.full((3, 3), q / 3.0)
    w[0, 0] = 1.0 - 8.0 * q / 3.0
    return w


def pauli_twirl_isometry(q: float) -> np.ndarray:
    """Dilation |psi> -> sum_ab sqrt(w_ab) (X^a Z^b |psi>) x |ab>, (27 x 3).

    Tracing out the 9-dimensional ancilla reproduces ternary_channel_apply.
    """
    w = twirl_weights(q)
    x, z = shift_matrix(), clock_matrix()
    v = np.zeros((27, 3), dtype=complex)
    for a in range(3):
        for b in range(3):
            op = np.sqrt(w[a, b]) * np.linalg.matrix_power(x, a) \
                @ np.linalg.matrix_power(z, b)
            for qq in range(3):
                for i in range(3):
                    v[qq * 9 + (a * 3 + b), i] += op[qq, i]
    return v


def pauli_twirl_attack(q_forward: float, q_reverse: float) -> AttackModel:
    """Symmetric two-stage attack: a Pauli twirl in each direction."""
    fw = pauli_twirl_isometry(q_forward)            # (27, 3), d_f = 9
    w = twirl_weights(q_reverse)
    x, z = shift_matrix(), clock_matrix()
    d_f = 9
    rv = np.zeros((3 * d_f * 9, 3 * d_f), dtype=complex)
    for c in range(3):
        for d in range(3):
            op = np.sqrt(w[c, d]) * np.linalg.matrix_power(x, c) \
                @ np.linalg.matrix_power(z, d)
            for qout in range(3):
                for qin in range(3):
                    if op[qout, qin] == 0:
                        continue
                    for af in range(d_f):
                        row = (qout * d_f + af) * 9 + (c * 3 + d)
                        col = qin * d_f + af
                        rv[row, col] += op[qout, qin]
    return AttackModel(fw, rv, d_f, 9)


def identity_attack() -> AttackModel:
    """No-op attack (d_f = d_r = 1)."""
    eye = np.eye(3, dtype=complex)
    return AttackModel(eye.copy(), eye.copy(), 1, 1)


def random_attack(d_f: int, d_r: int, seed: int) -> AttackModel:
    """Haar-random two-stage attack; seed is required for reproducibility."""
    rng = np.random.default_rng(seed)
    fw = haar_isometry(3 * d_f, 3, rng)
    rv = haar_isometry(3 * d_f * d_r, 3 * d_f, rng)
    return AttackModel(fw, rv, d_f, d_r)


def extract_e(attack: AttackModel) -> list:
    """Forward records: e[3i+j] = (<j| x I) forward |i>, each of dim d_f."""
    return [attack.forward[:, i].reshape(3, attack.d_f)[j]
            for i in range(3) for j in range(3)]


def extract_ekij(attack: AttackModel) -> dict:
    """Reverse records e^k_{i,j} = (<k| x I) reverse (|i> x e_j)."""
    e = extract_e(attack)
    d_f, d_r = attack.d_f, attack.d_r
    out = {}
    for i in range(3):
        for j in range(9):
            vin = np.zeros(3 * d_f, dtype=complex)
            vin[i * d_f:(i + 1) * d_f] = e[j]
            blocks = (attack.reverse @ vin).reshape(3, d_f * d_r)
            for k in range(3):
                out[(k, i, j)] = blocks[k]
    return out


def compose_f(attack: AttackModel) -> list:
    """Round-trip records: V|i,0> = sum_j |j, f_{3i+j}>."""
    v = attack.composed()
    dim = attack.d_f * attack.d_r
    return [v[:, i].reshape(3, dim)[j] for i in range(3) for j in range(3)]


def _compose_on_basis(f: list, basis: np.ndarray) -> list:
    """Express the round-trip records on an alternative basis.

    If V|i,0> = sum_j |j, f_{3i+j}> on the canonical basis, then on a basis
    with kets b_i the same operator reads V|b_i,0> = sum_j |b_j, v_{3i+j}>
    with v_{3i+j} = sum_{a,b} B[a,i] conj(B[b,j]) f_{3a+b}.
    """
    out = []
    for i in range(3):
        for j in range(3):
            vec = np.zeros_like(f[0])
            for a in range(3):
                coeff_row = basis[a, i]
                for b in range(3):
                    c = coeff_row * np.conj(basis[b, j])
                    if c != 0:
                        vec = vec + c * f[3 * a + b]
            out.append(vec)
    return out


def compose_g(f: list) -> list:
    """T-basis round-trip records (all nine, index 3i+j)."""
    return _compose_on_basis(f, basis_vectors("T").vectors)


def compose_h(f: list) -> list:
    """K-basis round-trip records (all nine, index 3i+j)."""
    return _compose_on_basis(f, basis_vectors("K").vectors)


def vector_families(attack: AttackModel) -> VectorFamilies:
    """Extract every record family of an attack in one pass."""
    e = extract_e(attack)
    ekij = extract_ekij(attack)
    f = compose_f(attack)
    return VectorFamilies(e=e, ekij=ekij, f=f, g=compose_g(f), h=compose_h(f))
