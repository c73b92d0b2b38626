"""Self-check groups behind the `verify` CLI command.

Each group returns (ok, detail).  Groups marked gating decide the exit
code; the conditioned-entropy upper-bound comparison is reported but not
gated because the printed bound expression is not a valid upper bound for
the symmetric attack (see the README), so it would stay red on
a perfectly healthy build.
"""
from __future__ import annotations

import numpy as np

from . import term_tables as tables
from .attack import (pauli_twirl_attack, random_attack, ternary_channel_apply,
                     vector_families)
from .keyrate import (Sigma1Decomposition, conditional_entropies, lemma1_check,
                      s_ec_upper, sigma1_eigenvalues)
from .linalg import basis_vectors, haar_unitary
from .stats import (basis_error_direct, basis_error_expanded, f_gram,
                    p_table_from_attack, t_values)

_DIMS = (1, 3, 9)


def check_mub() -> tuple[bool, str]:
    worst = 0.0
    a = basis_vectors("A").vectors
    for bid in ("A", "T", "K"):
        v = basis_vectors(bid).vectors
        worst = max(worst, float(np.max(np.abs(v.conj().T @ v - np.eye(3)))))
    for bid in ("T", "K"):
        v = basis_vectors(bid).vectors
        overlaps = np.abs(a.conj().T @ v) ** 2
        worst = max(worst, float(np.max(np.abs(overlaps - 1.0 / 3.0))))
    return worst < 1e-12, f"max deviation {worst:.3e}"


def check_sum_rules(n_attacks: int = 200, seed: int = 1000) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for trial in range(n_attacks):
        att = random_attack(int(rng.choice(_DIMS)), int(rng.choice(_DIMS)),
                            seed + 1 + trial)
        fams = vector_families(att)
        for vecs in (fams.e, fams.f):
            for row in range(3):
                s = sum(np.vdot(vecs[3 * row + j], vecs[3 * row + j]).real
                        for j in range(3))
                worst = max(worst, abs(s - 1.0))
            for r1, r2 in ((0, 1), (1, 2), (0, 2)):
                s = sum(np.vdot(vecs[3 * r1 + j], vecs[3 * r2 + j])
                        for j in range(3))
                worst = max(worst, abs(s))
        # reverse stage preserves each forward record's norm
        for i in range(3):
            for j in range(9):
                total = sum(np.vdot(fams.ekij[(k, i, j)],
                                    fams.ekij[(k, i, j)]).real for k in range(3))
                ref = np.vdot(fams.e[j], fams.e[j]).real
                worst = max(worst, abs(total - ref))
    return worst < 1e-10, f"{n_attacks} attacks, max violation {worst:.3e}"


def check_channel_dilation() -> tuple[bool, str]:
    rng = np.random.default_rng(7)
    worst = 0.0
    for q in (0.0, 0.05, 0.1, 0.3):
        att = pauli_twirl_attack(q, q)
        fw = att.forward
        for _ in range(4):
            u = haar_unitary(3, rng)
            rho = u @ np.diag(rng.dirichlet(np.ones(3))).astype(complex) @ u.conj().T
            big = fw @ rho @ fw.conj().T
            reduced = np.einsum("aibi->ab", big.reshape(3, 9, 3, 9))
            worst = max(worst, float(np.max(np.abs(
                reduced - ternary_channel_apply(rho, q)))))
        # covariance: the induced channel in the T and K bases is identical
        for bid in ("T", "K"):
            b = basis_vectors(bid).vectors
            for col in range(3):
                rho = np.outer(b[:, col], b[:, col].conj())
                big = fw @ rho @ fw.conj().T
                reduced = np.einsum("aibi->ab", big.reshape(3, 9, 3, 9))
                expected = b @ np.diag(
                    [1 - 2 * q if i == col else q for i in range(3)]
                ).astype(complex) @ b.conj().T
                worst = max(worst, float(np.max(np.abs(reduced - expected))))
    return worst < 1e-12, f"max deviation {worst:.3e}"


def check_lemma1(n_cases: int = 50, seed: int = 2000) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_cases):
        n_blocks = int(rng.integers(1, 5))
        weights = rng.dirichlet(np.ones(n_blocks))
        blocks = []
        for w in weights:
            u = haar_unitary(3, rng)
            rho = u @ np.diag(rng.dirichlet(np.ones(3))).astype(complex) @ u.conj().T
            blocks.append((float(w), rho))
        lhs, rhs = lemma1_check(blocks)
        worst = max(worst, abs(lhs - rhs))
    return worst < 1e-10, f"{n_cases} cases, max |lhs-rhs| {worst:.3e}"


def check_expansion_equivalence(n_attacks: int = 100,
                               seed: int = 3000) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for trial in range(n_attacks):
        att = random_attack(int(rng.choice(_DIMS)), int(rng.choice(_DIMS)),
                            seed + 1 + trial)
        fams = vector_families(att)
        gram = f_gram(fams)
        for variant in ("phi1", "phi2"):
            direct = basis_error_direct(fams, variant)
            expanded = basis_error_expanded(gram, variant)
            worst = max(worst, float(np.max(np.abs(direct - expanded))))
    return worst < 1e-10, f"{n_attacks} attacks, max |direct-expanded| {worst:.3e}"


def check_eigenvalue_oracle(n_cases: int = 100,
                            seed: int = 4000) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_cases):
        chi, sg, rh = (rng.normal() + 1j * rng.normal() for _ in range(3))
        dec = Sigma1Decomposition(chi, sg, rh,
                                  p111=float(rng.uniform(0.05, 1.0)),
                                  p222=float(rng.uniform(0.05, 1.0)))
        lam1, lam2 = sigma1_eigenvalues(dec.p000, dec.p111, dec.p222,
                                        dec.p_value)
        evals = np.sort(np.linalg.eigvalsh(dec.matrix()))
        worst = max(worst, abs(evals[-1] - lam1), abs(evals[-2] - lam2),
                    abs(evals[0]))
    return worst < 1e-10, f"{n_cases} cases, max |closed-form - eig| {worst:.3e}"


def check_entropy_inequalities() -> tuple[bool, str]:
    """Gates on strong sub-additivity; reports the upper-bound comparison."""
    notes = []
    ok = True
    for q in (0.02, 0.05):
        fams = vector_families(pauli_twirl_attack(q, q))
        ents = conditional_entropies(fams)
        gap = ents["S_B_given_E"] - ents["S_B_given_EC"]
        ok = ok and gap >= -1e-9
        p_tab = p_table_from_attack(fams)
        overlaps = [(fams.ekij[(0, 0, 0)], fams.ekij[(1, 1, 4)]),
                    (fams.ekij[(0, 0, 0)], fams.ekij[(2, 2, 8)]),
                    (fams.ekij[(1, 1, 4)], fams.ekij[(2, 2, 8)])]
        p_exact = sum(abs(np.vdot(a, b)) ** 2 for a, b in overlaps)
        lam1, lam2 = sigma1_eigenvalues(p_tab[0, 0, 0], p_tab[1, 1, 1],
                                        p_tab[2, 2, 2], p_exact)
        bound = s_ec_upper(t_values(p_tab), lam1, lam2)
        slack = bound - ents["S_EC_exact"]
        status = "holds" if slack >= -1e-9 else "VIOLATED (known formula defect)"
        notes.append(f"Q={q}: S(B|E)-S(B|EC)={gap:+.3e}; "
                     f"upper-bound slack {slack:+.3e} {status}")
    return ok, "; ".join(notes)


GROUPS = [
    ("mub", check_mub),
    ("unitarity-sum-rules", check_sum_rules),
    ("channel-dilation", check_channel_dilation),
    ("lemma1", check_lemma1),
    ("expansion-equivalence", check_expansion_equivalence),
    ("eigenvalue-oracle", check_eigenvalue_oracle),
    ("entropy-inequalities", check_entropy_inequalities),
]


def run_all(report=print) -> bool:
    all_ok = True
    for name, fn in GROUPS:
        ok, detail = fn()
        all_ok = all_ok and ok
        report(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return all_ok
