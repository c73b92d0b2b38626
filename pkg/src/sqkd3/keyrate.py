"""Asymptotic key-rate lower bound for the qutrit two-way protocol.

The bound combines the entropy of the joint record ensemble, an upper
bound on the conditioned eavesdropper entropy built from the closed-form
eigenvalues of the no-error block, and the raw-key conditional entropy
H(B|A).  Two evaluation semantics are exposed:

* "as-printed": the statistic X feeds p = max(X, 0)^2 directly and the
  closed-form eigenvalues are evaluated wherever the formulas take them
  (including complex or out-of-[0,1] values), with the real part of
  -lam log3 lam used for the entropy terms.  This mode reproduces the numeric
  behaviour behind the reference noise-tolerance curves that the acceptance suite pins.
* "corrected": p = max(X, 0)^2 / 3 capped at the Cauchy-Schwarz
  feasibility ceiling, discriminant floored at zero and eigenvalues
  clamped to [0, 1].  All entropy terms are then genuine entropies.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import term_tables as tables
from .attack import ChannelScenario, VectorFamilies
from .linalg import LN3, shannon_entropy3, von_neumann_entropy3
from .stats import (JointDistribution, StatTable, joint_and_marginal,
                    stat_table_for_scenario, t_values)

Q_MAX = 0.375


@dataclass(frozen=True)
class KeyRateReport:
    """Every intermediate of one key-rate evaluation."""

    t: tuple
    X: float
    S_clamped: float
    p_lower: float
    lambda1: float
    lambda2: float
    S_BEC: float
    S_EC_upper: float
    H_B_given_A: float
    r: float
    convention_flags: dict

    def to_json(self) -> str:
        doc = {k: (list(v) if isinstance(v, tuple) else v)
               for k, v in self.__dict__.items()}
        return json.dumps(doc)


@dataclass(frozen=True)
class Sigma1Decomposition:
    """Parameters of the no-error block written on an auxiliary basis.

    The block is chi|a> + sigma|b> + rho_c|c> together with two vectors of
    squared lengths p111 and p222 lying along |c>.
    """

    chi: complex
    sigma: complex
    rho_c: complex
    p111: float
    p222: float

    @property
    def p000(self) -> float:
        return abs(self.chi) ** 2 + abs(self.sigma) ** 2 + abs(self.rho_c) ** 2

    @property
    def p_value(self) -> float:
        """Sum of squared overlaps between the three block vectors."""
        return (abs(self.rho_c) ** 2 * (self.p111 + self.p222)
                + self.p111 * self.p222)

    def matrix(self) -> np.ndarray:
        """The normalized block operator on the auxiliary basis {a, b, c}."""
        chi, sg, rh = self.chi, self.sigma, self.rho_c
        m = np.array([
            [abs(chi) ** 2, chi * np.conj(sg), chi * np.conj(rh)],
            [sg * np.conj(chi), abs(sg) ** 2, sg * np.conj(rh)],
            [rh * np.conj(chi), rh * np.conj(sg),
             self.p111 + self.p222 + abs(rh) ** 2],
        ], dtype=complex)
        return m / (self.p000 + self.p111 + self.p222)


def x_bound(table: StatTable) -> float:
    """The observable statistic bounding the no-error block overlaps."""
    p = table.p
    c54 = tables.X54_COEFFICIENT[table.variant]
    pos = sum(np.sqrt(p[a] * p[b]) for a, b in tables.X_SQRT_POS)
    neg = sum(np.sqrt(p[a] * p[b]) for a, b in tables.X_SQRT_NEG)
    return float(3.0 - 1.5 * table.basis_err.sum() + c54 * pos - neg)


def feasibility_ceiling(table: StatTable) -> float:
    """Largest overlap sum compatible with the three diagonal entries."""
    p000, p111, p222 = table.p[0, 0, 0], table.p[1, 1, 1], table.p[2, 2, 2]
    return float(p000 * p111 + p000 * p222 + p111 * p222)


def p_lower_bound(x: float, table: StatTable, mode: str = "as-printed") -> float:
    """Lower bound on the overlap quantity entering the eigenvalue forms.

    as-printed: max(x, 0)^2; corrected: max(x, 0)^2 / 3, which is a valid
    bound on the sum of squared overlap moduli.  Both are capped at the
    feasibility ceiling.  Note the replication path in key_rate feeds the
    eigenvalue forms the uncapped square instead (see module docstring).
    """
    s = max(x, 0.0) ** 2
    if mode == "as-printed":
        return min(s, feasibility_ceiling(table))
    if mode == "corrected":
        return min(s / 3.0, feasibility_ceiling(table))
    raise ValueError(f"unknown p mode {mode!r}")


def _discriminant(p000: float, p111: float, p222: float, p: float) -> float:
    return (4.0 * p + p000**2 - 2.0 * p000 * p111 + p111**2
            - 2.0 * p000 * p222 - 2.0 * p111 * p222 + p222**2)


def sigma1_eigenvalues(p000: float, p111: float, p222: float,
                       p: float) -> tuple[float, float]:
    """Closed-form nonzero eigenvalues of the normalized no-error block.

    Discriminant floored at zero, results clamped to [0, 1]; the third
    eigenvalue is identically zero.
    """
    total = p000 + p111 + p222
    if total <= 0:
        raise ValueError("eigenvalue forms need p000 + p111 + p222 > 0")
    disc = max(_discriminant(p000, p111, p222, p), 0.0)
    half_spread = np.sqrt(disc) / (2.0 * total)
    lam1 = min(max(0.5 + half_spread, 0.0), 1.0)
    lam2 = min(max(0.5 - half_spread, 0.0), 1.0)
    return float(lam1), float(lam2)


def _entropy_term_analytic(lam: complex) -> float:
    """Re(-lam log3 lam), principal branch; 0 at lam = 0."""
    if lam == 0:
        return 0.0
    return float((-lam * np.log(complex(lam))).real / LN3)


def sigma1_entropy_terms(p000: float, p111: float, p222: float, p: float,
                         mode: str) -> tuple[float, float, float]:
    """(lambda1, lambda2, entropy term sum) under the chosen semantics."""
    if mode == "corrected":
        lam1, lam2 = sigma1_eigenvalues(p000, p111, p222, p)
        ent = shannon_entropy3([lam1]) + shannon_entropy3([lam2])
        return lam1, lam2, ent
    if mode != "as-printed":
        raise ValueError(f"unknown p mode {mode!r}")
    total = p000 + p111 + p222
    if total <= 0:
        raise ValueError("eigenvalue forms need p000 + p111 + p222 > 0")
    half_spread = np.sqrt(complex(_discriminant(p000, p111, p222, p))) / (2 * total)
    lam1, lam2 = 0.5 + half_spread, 0.5 - half_spread
    ent = _entropy_term_analytic(lam1) + _entropy_term_analytic(lam2)
    return float(lam1.real), float(lam2.real), ent


def s_bec(table: StatTable) -> float:
    """Entropy of the full record ensemble: H3 of the 27 entries over 3."""
    return shannon_entropy3(table.p.ravel() / 3.0)


def s_ec_upper(t: tuple, lam1: float, lam2: float) -> float:
    """Upper-bound expression for the conditioned eavesdropper entropy."""
    t1, t2, t3, t4 = t
    return (shannon_entropy3([t1 / 3, t2 / 3, t3 / 3, t4 / 3])
            + (t2 + t3 + t4) / 3.0
            + t1 / 3.0 * (shannon_entropy3([lam1]) + shannon_entropy3([lam2])))


def h_b_given_a(jd: JointDistribution) -> float:
    """Conditional entropy H(B|A) = H(joint) - H(marginal of A)."""
    return shannon_entropy3(jd.joint.ravel()) - shannon_entropy3(jd.marginal_a)


def key_rate_from_table(table: StatTable, weighting: str = "as-printed",
                        p_mode: str = "as-printed",
                        convention_flags: dict | None = None) -> KeyRateReport:
    """Evaluate the key-rate bound on an explicit statistics table."""
    t = t_values(table.p)
    x = x_bound(table)
    if p_mode == "as-printed":
        p_low = max(x, 0.0) ** 2
    else:
        p_low = p_lower_bound(x, table, p_mode)
    p000, p111, p222 = table.p[0, 0, 0], table.p[1, 1, 1], table.p[2, 2, 2]
    lam1, lam2, ent = sigma1_entropy_terms(p000, p111, p222, p_low, p_mode)
    bec = s_bec(table)
    if p_mode == "corrected":
        ec_upper = s_ec_upper(t, lam1, lam2)
    else:
        # entropy terms carry the analytic continuation, not clamped values
        ec_upper = (shannon_entropy3([t[0] / 3, t[1] / 3, t[2] / 3, t[3] / 3])
                    + (t[1] + t[2] + t[3]) / 3.0 + t[0] / 3.0 * ent)
    jd = joint_and_marginal(table.p, weighting)
    hba = h_b_given_a(jd)
    flags = dict(convention_flags or {})
    flags.setdefault("joint_weighting", weighting)
    flags.setdefault("p_mode", p_mode)
    return KeyRateReport(t=t, X=x, S_clamped=max(x, 0.0) ** 2, p_lower=p_low,
                         lambda1=lam1, lambda2=lam2, S_BEC=bec,
                         S_EC_upper=ec_upper, H_B_given_A=hba,
                         r=bec - ec_upper - hba, convention_flags=flags)


def key_rate(scenario: ChannelScenario) -> KeyRateReport:
    """Key-rate bound of a symmetric-noise scenario."""
    table = stat_table_for_scenario(scenario)
    return key_rate_from_table(table, scenario.joint_weighting,
                               scenario.p_mode, scenario.flags())


def find_threshold(variant: str, model: str,
                   basis_noise_convention: str = "per-pair",
                   joint_weighting: str = "as-printed",
                   p_mode: str = "as-printed",
                   tol: float = 1e-6, grid_points: int = 400) -> float | None:
    """Smallest noise level at which the key-rate bound hits zero.

    Scans a grid over [0, 3/8] for the first sign change, then bisects to
    |dQ| < tol.  Returns None when the rate stays positive on the whole
    range.
    """
    def rate(q: float) -> float:
        return key_rate(ChannelScenario(
            q=q, model=model, variant=variant,
            basis_noise_convention=basis_noise_convention,
            joint_weighting=joint_weighting, p_mode=p_mode)).r

    grid = np.linspace(0.0, Q_MAX, grid_points)
    prev = rate(grid[0])
    lo = hi = None
    for q in grid[1:]:
        cur = rate(q)
        if prev > 0.0 >= cur:
            lo, hi = q - (grid[1] - grid[0]), q
            break
        prev = cur
    if lo is None:
        return None
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if rate(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lemma1_check(blocks: list) -> tuple[float, float]:
    """Entropy of a classically labelled mixture, two ways.

    blocks is a list of (weight, density matrix).  Returns (lhs, rhs) with
    lhs the entropy of the assembled block-diagonal operator and rhs the
    label entropy plus the average block entropy; the two agree for exact
    inputs.
    """
    weights = [w for w, _ in blocks]
    if any(w < 0 for w in weights) or abs(sum(weights) - 1.0) > 1e-10:
        raise ValueError("weights must be nonnegative and sum to 1")
    dims = [b.shape[0] for _, b in blocks]
    full = np.zeros((sum(dims), sum(dims)), dtype=complex)
    offset = 0
    for (w, b), d in zip(blocks, dims):
        full[offset:offset + d, offset:offset + d] = w * np.asarray(b)
        offset += d
    lhs = von_neumann_entropy3(full)
    rhs = shannon_entropy3(weights) + sum(
        w * (von_neumann_entropy3(b) if w > 0 else 0.0) for w, b in blocks)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Explicit conditioned states for entropy-inequality verification
# ---------------------------------------------------------------------------

def _c_register_index(i: int, j: int, k: int) -> int:
    """0: match 0 flips, 1: match 1 flip, 2: mismatch 1 flip, 3: mismatch 2."""
    flips = int(i != j) + int(j != k)
    if j == k:
        return 0 if flips == 0 else 1
    return 2 if flips == 1 else 3


def rho_be(fams: VectorFamilies) -> np.ndarray:
    """Joint receiver/eavesdropper state of the raw-key rounds."""
    dim_e = fams.ekij[(0, 0, 0)].shape[0]
    rho = np.zeros((3 * dim_e, 3 * dim_e), dtype=complex)
    for j in range(3):
        block = np.zeros((dim_e, dim_e), dtype=complex)
        for i in range(3):
            for k in range(3):
                v = fams.ekij[(k, j, 3 * i + j)]
                block += np.outer(v, v.conj())
        rho[j * dim_e:(j + 1) * dim_e, j * dim_e:(j + 1) * dim_e] = block / 3.0
    return rho


def rho_bec(fams: VectorFamilies) -> np.ndarray:
    """Same state with the four-dimensional error-pattern register attached."""
    dim_e = fams.ekij[(0, 0, 0)].shape[0]
    dim = 3 * dim_e * 4
    rho = np.zeros((dim, dim), dtype=complex)
    for j in range(3):
        for i in range(3):
            for k in range(3):
                v = fams.ekij[(k, j, 3 * i + j)]
                c = _c_register_index(i, j, k)
                big = np.zeros(dim, dtype=complex)
                start = (j * dim_e) * 4 + c
                big[start:start + dim_e * 4:4] = v
                rho += np.outer(big, big.conj()) / 3.0
    return rho


def trace_out_receiver(rho: np.ndarray, dim_rest: int) -> np.ndarray:
    """Partial trace over the leading qutrit factor."""
    r = rho.reshape(3, dim_rest, 3, dim_rest)
    return np.einsum("jajb->ab", r)


def conditional_entropies(fams: VectorFamilies) -> dict:
    """S(B|E) and S(B|EC) from the explicitly assembled states."""
    be = rho_be(fams)
    dim_e = be.shape[0] // 3
    e = trace_out_receiver(be, dim_e)
    bec = rho_bec(fams)
    ec = trace_out_receiver(bec, dim_e * 4)
    return {
        "S_B_given_E": von_neumann_entropy3(be) - von_neumann_entropy3(e),
        "S_B_given_EC": von_neumann_entropy3(bec) - von_neumann_entropy3(ec),
        "S_EC_exact": von_neumann_entropy3(ec),
    }
