"""Qutrit linear algebra: the three measurement bases and base-3 entropies.

Everything works on plain complex numpy arrays. Vectors are 1-d arrays,
operators 2-d; dimensions are carried at runtime so the same kernels serve
the 3-dimensional qutrit space and the composite eavesdropper spaces
(up to 3 x 81).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

LN3 = np.log(3.0)

#: primitive third root of unity
OMEGA = np.exp(2j * np.pi / 3)

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
EIGENVALUE_CLAMP = 1e-10


@dataclass(frozen=True)
class BasisSet:
    """An orthonormal qutrit basis: id in {"A", "T", "K"}, vectors as columns."""

    id: str
    vectors: np.ndarray  # 3x3 complex, column j = ket j

    def ket(self, j: int) -> np.ndarray:
        return self.vectors[:, j]


def _build_bases() -> dict[str, np.ndarray]:
    w = OMEGA
    a = np.eye(3, dtype=complex)
    t = np.stack([
        np.array([w, 1, 1], dtype=complex),
        np.array([1, w, 1], dtype=complex),
        np.array([1, 1, w], dtype=complex),
    ], axis=1) / np.sqrt(3)
    k = np.stack([
        np.array([1, 1, 1], dtype=complex),
        np.array([1, w, np.conj(w)], dtype=complex),
        np.array([1, np.conj(w), w], dtype=complex),
    ], axis=1) / np.sqrt(3)
    return {"A": a, "T": t, "K": k}


_BASES = _build_bases()


def basis_vectors(basis_id: str) -> BasisSet:
    """Return one of the three qutrit bases.

    "A" is the canonical basis; "T" and "K" are the two alternative bases,
    each mutually unbiased with A (all cross overlaps have squared
    magnitude 1/3).
    """
    if basis_id not in _BASES:
        raise ValueError(f"unknown basis id {basis_id!r}, expected A, T or K")
    return BasisSet(basis_id, _BASES[basis_id].copy())


def shannon_entropy3(probs) -> float:
    """Base-3 Shannon entropy -sum p_i log3 p_i with 0 log 0 := 0.

    The input is used as given: no renormalisation. Entries may sum to
    anything nonnegative; entries in [-1e-12, 0) are clamped to 0.
    """
    p = np.asarray(probs, dtype=float).ravel()
    if np.any(p < -1e-12):
        raise ValueError(f"negative probability {p.min()} in entropy argument")
    p = np.clip(p, 0.0, None)
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum() / LN3)


def von_neumann_entropy3(rho: np.ndarray) -> float:
    """Base-3 von Neumann entropy of a density matrix.

    The input is Hermitized as (M + M^dag)/2 before eigendecomposition;
    eigenvalues in [-1e-10, 0) are clamped to 0.
    """
    rho = np.asarray(rho, dtype=complex)
    if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
        raise ValueError("operator is not Hermitian within tolerance")
    if abs(np.trace(rho).real - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {np.trace(rho)} is not 1 within tolerance")
    herm = (rho + rho.conj().T) / 2
    evals = np.linalg.eigvalsh(herm)
    if evals.min() < -EIGENVALUE_CLAMP:
        raise ValueError(f"negative eigenvalue {evals.min()} beyond tolerance")
    return shannon_entropy3(np.clip(evals, 0.0, None))


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, left factor most significant (row-major indexing)."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(m: np.ndarray) -> np.ndarray:
    return np.asarray(m).conj().T


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random unitary via QR of a Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def haar_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Random isometry (rows x cols, rows >= cols) with V^dag V = I."""
    if rows < cols:
        raise ValueError("isometry needs rows >= cols")
    z = rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q[:, :cols] * (d / np.abs(d))
