"""Hilbert-Schmidt entanglement geometry.

Closed-form nearest separable states, distances and optimal witnesses for the
isotropic and two-parameter families, the witness-candidate construction and
its verification (analytically through the qubit/qutrit separable-expectation
lemmas, or numerically through a seesaw over product states), and PPT
verdicts.

For every closed-form result the optimal-witness identities hold:
D = B = -<rho_ent, A_opt> and <rho_0, A_opt> = 0, where B is the maximal
violation of the witness inequality over separable states.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .gilbert import min_product_expectation
from .linalg import (BipartiteState, hs_inner, hs_norm, is_hermitian,
                     min_eigenvalue, partial_transpose, tensor, TOL_PSD)
from .states import (PAULI, CompositeKind, composite_operator, isotropic_state,
                     qubit_plane_physical, qutrit_plane_physical,
                     two_param_qubit, two_param_qutrit)

TOL_WIT = 1e-9
_EDGE = 1e-12   # boundary points count as separable


class RegionLabel(str, Enum):
    UNPHYSICAL = "Unphysical"
    SEPARABLE = "Separable"
    ENTANGLED_I = "EntangledRegionI"
    ENTANGLED_II = "EntangledRegionII"


class WitnessVerdict(str, Enum):
    WITNESS = "Witness"
    NOT_WITNESS = "NotWitness"
    INCONCLUSIVE = "Inconclusive"


class WitnessMethod(str, Enum):
    LEMMA_QUBIT = "LemmaQubit"
    LEMMA_QUTRIT = "LemmaQutrit"
    SEESAW = "SeesawNumeric"


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of testing a Hermitian operator against one entangled state.

    ``sep_min_estimate`` is 0 when a lemma certifies nonnegativity on all
    separable states, otherwise the smallest product-state expectation found
    by the seesaw (an upper bound on the true separable minimum).
    """

    operator: np.ndarray
    ent_expectation: float
    sep_min_estimate: float
    verdict: WitnessVerdict
    method: WitnessMethod


@dataclass(frozen=True)
class HSMeasureResult:
    """Distance to the separable set with its optimal-witness data."""

    distance: float
    nearest_separable: BipartiteState
    witness: WitnessReport
    max_violation: float


def ppt_verdict(rho, subdim: int | None = None) -> tuple[bool, float]:
    """(is_ppt, smallest eigenvalue of the partial transpose)."""
    pt = partial_transpose(rho, "B", subdim)
    lo = min_eigenvalue(pt)
    return lo >= -TOL_PSD, lo


def witness_candidate(rho_tilde, rho_ent) -> np.ndarray:
    """Witness candidate built from a separable guess and an entangled state.

    C = (rho_tilde - rho_ent - <rho_tilde, rho_tilde - rho_ent> 1) / ||rho_tilde - rho_ent||.
    By construction <rho_ent, C> = -||rho_tilde - rho_ent|| < 0; C is a
    genuine witness iff rho_tilde is the nearest separable state.
    """
    mt = rho_tilde.matrix if isinstance(rho_tilde, BipartiteState) else np.asarray(rho_tilde, dtype=complex)
    me = rho_ent.matrix if isinstance(rho_ent, BipartiteState) else np.asarray(rho_ent, dtype=complex)
    diff = mt - me
    dist = hs_norm(diff)
    if dist <= 1e-14:
        raise ValueError("witness candidate undefined for coinciding states")
    shift = hs_inner(mt, diff).real
    return (diff - shift * np.eye(mt.shape[0])) / dist


def _pauli_corr_components(a: np.ndarray) -> tuple[float, float, float, float]:
    g = [hs_inner(tensor(PAULI[i], PAULI[i]), a).real / 4 for i in (1, 2, 3)]
    return float(np.trace(a).real / 4), g[0], g[1], g[2]


def _match_lemma_qubit(a: np.ndarray, tol: float = TOL_WIT):
    """Fit A = s(1 + c1(s1s1 - s2s2) + c2 s3s3); None if it is not of that form."""
    s, g11, g22, g33 = _pauli_corr_components(a)
    if s <= tol:
        return None
    c1 = (g11 - g22) / (2 * s)
    c2 = g33 / s
    form = s * (np.eye(4, dtype=complex)
                + c1 * (tensor(PAULI[1], PAULI[1]) - tensor(PAULI[2], PAULI[2]))
                + c2 * tensor(PAULI[3], PAULI[3]))
    if np.abs(a - form).max() > 1e-9 or abs(c1) > 1 + tol or abs(c2) > 1 + tol:
        return None
    return s, c1, c2


def _match_lemma_qutrit(a: np.ndarray, tol: float = TOL_WIT):
    """Fit A = s(2*1 + c1 U1 + c2 U2); None if it is not of that form."""
    u1 = composite_operator(CompositeKind.U1, 3)
    u2 = composite_operator(CompositeKind.U2, 3)
    s = float(np.trace(a).real) / 18
    if s <= tol:
        return None
    c1 = hs_inner(u1, a).real / (54 * s)
    c2 = hs_inner(u2, a).real / (18 * s)
    form = s * (2 * np.eye(9, dtype=complex) + c1 * u1 + c2 * u2)
    if np.abs(a - form).max() > 1e-9 or abs(c1) > 1 + tol or abs(c2) > 1 + tol:
        return None
    return s, c1, c2


def verify_witness(a: np.ndarray, rho_ent, method=WitnessMethod.SEESAW,
                   restarts: int = 20, seed: int = 0) -> WitnessReport:
    """Test whether a Hermitian operator witnesses the entanglement of rho_ent.

    The lemma methods certify nonnegativity on all separable states when the
    operator matches the corresponding closed form; the seesaw only produces
    an upper bound on the separable minimum, so it can refute
    (``NotWitness``) but never certify (at best ``Inconclusive``).
    """
    a = np.asarray(a, dtype=complex)
    if not is_hermitian(a):
        raise ValueError("witness operators must be Hermitian")
    method = WitnessMethod(method)
    me = rho_ent.matrix if isinstance(rho_ent, BipartiteState) else np.asarray(rho_ent, dtype=complex)
    if a.shape != me.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {me.shape}")
    ent = hs_inner(me, a).real
    d = int(round(np.sqrt(a.shape[0])))
    if d * d != a.shape[0]:
        raise ValueError(f"witness of dimension {a.shape[0]} is not a d x d bipartite operator")

    fit = None
    if method is WitnessMethod.LEMMA_QUBIT and a.shape[0] == 4:
        fit = _match_lemma_qubit(a)
    elif method is WitnessMethod.LEMMA_QUTRIT and a.shape[0] == 9:
        fit = _match_lemma_qutrit(a)

    if fit is not None:
        sep_min = 0.0
        verdict = WitnessVerdict.WITNESS if ent < -TOL_WIT else WitnessVerdict.NOT_WITNESS
        return WitnessReport(a, ent, sep_min, verdict, method)

    # no lemma form matched: fall back to the one-sided numeric bound
    rng = np.random.default_rng(seed)
    sep_min = min_product_expectation(a, d, rng, restarts=restarts)
    if ent >= -TOL_WIT or sep_min < -TOL_WIT:
        verdict = WitnessVerdict.NOT_WITNESS
    else:
        verdict = WitnessVerdict.INCONCLUSIVE
    return WitnessReport(a, ent, sep_min, verdict, WitnessMethod.SEESAW)


def _report_for(a_opt: np.ndarray, rho_ent, d: int) -> WitnessReport:
    if d == 2:
        return verify_witness(a_opt, rho_ent, WitnessMethod.LEMMA_QUBIT)
    if d == 3:
        return verify_witness(a_opt, rho_ent, WitnessMethod.LEMMA_QUTRIT)
    return verify_witness(a_opt, rho_ent, WitnessMethod.SEESAW)


def hs_measure_isotropic(d: int, alpha: float) -> HSMeasureResult:
    """Closed-form measure for the entangled isotropic state (alpha > 1/(d+1)).

    The nearest separable state sits on the separability boundary
    alpha0 = 1/(d+1); the distance is sqrt(d^2-1)/d * (alpha - alpha0) and
    the optimal witness is
    (1/d) sqrt((d-1)/(d+1)) 1x1 - LAMBDA / (2 sqrt(d^2-1)).
    """
    threshold = 1.0 / (d + 1)
    if not (threshold < alpha <= 1 + 1e-12):
        raise ValueError(f"isotropic alpha={alpha} is not in the entangled range ({threshold}, 1]")
    rho_ent = isotropic_state(d, alpha)
    rho0 = isotropic_state(d, threshold)
    lam = composite_operator(CompositeKind.LAMBDA, d)
    a_opt = (np.sqrt((d - 1.0) / (d + 1.0)) / d * np.eye(d * d, dtype=complex)
             - lam / (2 * np.sqrt(d * d - 1.0)))
    distance = np.sqrt(d * d - 1.0) / d * (alpha - threshold)
    report = _report_for(a_opt, rho_ent, d)
    return HSMeasureResult(float(distance), rho0, report, -report.ent_expectation)


def classify_qubit_plane(alpha: float, beta: float) -> RegionLabel:
    """Region of a point of the two-qubit plane; boundaries count as separable."""
    if not qubit_plane_physical(alpha, beta):
        return RegionLabel.UNPHYSICAL
    if alpha > beta / 3 + 1 / 3 + _EDGE:
        return RegionLabel.ENTANGLED_I
    if alpha < -beta - 1 - _EDGE:
        return RegionLabel.ENTANGLED_II
    return RegionLabel.SEPARABLE


def hs_measure_qubit_plane(alpha: float, beta: float) -> tuple[RegionLabel, HSMeasureResult | None]:
    """Region label and, for entangled points, the closed-form measure.

    Region I (around phi+): nearest separable point (1/3 + beta/3, beta),
    D = (sqrt 3 / 2)(alpha - 1/3 - beta/3). Region II (around phi-): nearest
    point ((-1 + 2 alpha - beta)/3, (-2 - 2 alpha + beta)/3),
    D = (-alpha - 1 - beta) / (2 sqrt 3).
    """
    label = classify_qubit_plane(alpha, beta)
    if label in (RegionLabel.UNPHYSICAL, RegionLabel.SEPARABLE):
        return label, None
    rho_ent = two_param_qubit(alpha, beta)
    if label is RegionLabel.ENTANGLED_I:
        rho0 = two_param_qubit(1 / 3 + beta / 3, beta)
        distance = np.sqrt(3) / 2 * (alpha - 1 / 3 - beta / 3)
    else:
        rho0 = two_param_qubit((-1 + 2 * alpha - beta) / 3, (-2 - 2 * alpha + beta) / 3)
        distance = (-alpha - 1 - beta) / (2 * np.sqrt(3))
    a_opt = witness_candidate(rho0, rho_ent)
    report = verify_witness(a_opt, rho_ent, WitnessMethod.LEMMA_QUBIT)
    return label, HSMeasureResult(float(distance), rho0, report, -report.ent_expectation)


def classify_qutrit_plane(alpha: float, beta: float) -> RegionLabel:
    """Region of a point of the two-qutrit plane; for this family the PPT
    states are exactly the separable ones."""
    if not qutrit_plane_physical(alpha, beta):
        return RegionLabel.UNPHYSICAL
    if alpha > beta / 8 + 1 / 4 + _EDGE:
        return RegionLabel.ENTANGLED_I
    if alpha < 5 * beta / 4 - 1 / 2 - _EDGE:
        return RegionLabel.ENTANGLED_II
    return RegionLabel.SEPARABLE


def hs_measure_qutrit_plane(alpha: float, beta: float) -> tuple[RegionLabel, HSMeasureResult | None]:
    """Region label and, for entangled points, the closed-form measure.

    Region I: nearest separable point (1/4 + beta/8, beta),
    D = (2 sqrt 2 / 3)(alpha - 1/4 - beta/8). Region II: nearest point
    ((-2 + 20 alpha + 5 beta)/24, (2 + 4 alpha + beta)/6),
    D = (-4 alpha - 2 + 5 beta) / (6 sqrt 2).
    """
    label = classify_qutrit_plane(alpha, beta)
    if label in (RegionLabel.UNPHYSICAL, RegionLabel.SEPARABLE):
        return label, None
    rho_ent = two_param_qutrit(alpha, beta)
    if label is RegionLabel.ENTANGLED_I:
        rho0 = two_param_qutrit(1 / 4 + beta / 8, beta)
        distance = 2 * np.sqrt(2) / 3 * (alpha - 1 / 4 - beta / 8)
    else:
        rho0 = two_param_qutrit((-2 + 20 * alpha + 5 * beta) / 24, (2 + 4 * alpha + beta) / 6)
        distance = (-4 * alpha - 2 + 5 * beta) / (6 * np.sqrt(2))
    a_opt = witness_candidate(rho0, rho_ent)
    report = verify_witness(a_opt, rho_ent, WitnessMethod.LEMMA_QUTRIT)
    return label, HSMeasureResult(float(distance), rho0, report, -report.ent_expectation)
