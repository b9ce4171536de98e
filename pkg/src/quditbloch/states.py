"""State families and composite two-qudit operators.

Bell states, Weyl Bell projectors, isotropic states, the two-parameter
two-qubit and two-qutrit families, the composite basis operators that carry
their correlation parts, and samplers for random density matrices and random
separable states.

Parameterized constructors validate their physicality constraints by
default; ``checked=False`` skips the check so boundary and unphysical points
can be probed (the matrices are still built, they just may fail positivity).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .bases import BasisKind, get_basis, wob_basis
from .linalg import BipartiteState, DensityMatrix, tensor

PAULI = {
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}


def bell_state(d: int) -> BipartiteState:
    """Projector onto the maximally entangled state (1/sqrt d) sum_j |jj>."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    psi = np.zeros(d * d, dtype=complex)
    psi[:: d + 1] = 1.0 / np.sqrt(d)
    return BipartiteState(np.outer(psi, psi.conj()), d, validate=False)


def isotropic_state(d: int, alpha: float, checked: bool = True) -> BipartiteState:
    """alpha * Bell projector + (1 - alpha)/d^2 * identity.

    Positivity holds exactly for -1/(d^2 - 1) <= alpha <= 1; outside that
    range construction requires ``checked=False``.
    """
    lo = -1.0 / (d * d - 1)
    if checked and not (lo - 1e-12 <= alpha <= 1 + 1e-12):
        raise ValueError(f"isotropic alpha={alpha} outside physical range [{lo}, 1]")
    mat = alpha * bell_state(d).matrix + (1 - alpha) / (d * d) * np.eye(d * d)
    return BipartiteState(mat, d, validate=False)


def weyl_bell_projector(d: int, n: int, k: int) -> BipartiteState:
    """Maximally entangled projector P_nk = (U_nk (x) 1) P_00 (U_nk^dag (x) 1)."""
    if not (0 <= n < d and 0 <= k < d):
        raise ValueError(f"projector index ({n}, {k}) out of range 0..{d - 1}")
    u = wob_basis(d).element((n, k))
    a = tensor(u, np.eye(d))
    return BipartiteState(a @ bell_state(d).matrix @ a.conj().T, d, validate=False)


def _bell_basis_qubit() -> dict[str, np.ndarray]:
    s = 1 / np.sqrt(2)
    phi_p = s * np.array([1, 0, 0, 1], dtype=complex)
    phi_m = s * np.array([1, 0, 0, -1], dtype=complex)
    psi_p = s * np.array([0, 1, 1, 0], dtype=complex)
    psi_m = s * np.array([0, 1, -1, 0], dtype=complex)
    return {k: np.outer(v, v.conj()) for k, v in
            [("phi+", phi_p), ("phi-", phi_m), ("psi+", psi_p), ("psi-", psi_m)]}


def qubit_plane_physical(alpha: float, beta: float) -> bool:
    """Positivity constraints of the two-parameter two-qubit family."""
    return (alpha <= -beta + 1 + 1e-12
            and alpha >= beta / 3 - 1 / 3 - 1e-12
            and alpha <= beta + 1 + 1e-12)


def two_param_qubit(alpha: float, beta: float, checked: bool = True) -> BipartiteState:
    """Two-qubit mixture (1-a-b)/4 * 1 + a phi+ + (b/2)(psi+ + psi-).

    Physical iff a <= -b + 1, a >= b/3 - 1/3 and a <= b + 1 (a triangle in
    the (a, b) plane). Equals the isotropic qubit state at b = 0.
    """
    if checked and not qubit_plane_physical(alpha, beta):
        raise ValueError(f"qubit plane point ({alpha}, {beta}) is unphysical")
    bb = _bell_basis_qubit()
    mat = ((1 - alpha - beta) / 4 * np.eye(4, dtype=complex)
           + alpha * bb["phi+"]
           + beta / 2 * (bb["psi+"] + bb["psi-"]))
    return BipartiteState(mat, 2, validate=False)


def two_param_qubit_pauli(alpha: float, beta: float) -> np.ndarray:
    """The same family written in the Pauli basis:
    (1/4)(1 + a(s1 x s1 - s2 x s2) + (a - b) s3 x s3)."""
    mat = np.eye(4, dtype=complex)
    mat += alpha * (tensor(PAULI[1], PAULI[1]) - tensor(PAULI[2], PAULI[2]))
    mat += (alpha - beta) * tensor(PAULI[3], PAULI[3])
    return mat / 4


def qutrit_plane_physical(alpha: float, beta: float) -> bool:
    """Positivity constraints of the two-parameter two-qutrit family."""
    return (alpha <= 3.5 * beta + 1 + 1e-12
            and alpha <= -beta + 1 + 1e-12
            and alpha >= beta / 8 - 1 / 8 - 1e-12)


def two_param_qutrit(alpha: float, beta: float, checked: bool = True) -> BipartiteState:
    """Two-qutrit mixture (1-a-b)/9 * 1 + a P_00 + (b/2)(P_10 + P_20).

    Physical iff a <= 7b/2 + 1, a <= -b + 1 and a >= b/8 - 1/8. In the Weyl
    basis the state reads (1/9)(1 + (a - b/2) U1 + (a + b) U2).
    """
    if checked and not qutrit_plane_physical(alpha, beta):
        raise ValueError(f"qutrit plane point ({alpha}, {beta}) is unphysical")
    mat = ((1 - alpha - beta) / 9 * np.eye(9, dtype=complex)
           + alpha * weyl_bell_projector(3, 0, 0).matrix
           + beta / 2 * (weyl_bell_projector(3, 1, 0).matrix
                         + weyl_bell_projector(3, 2, 0).matrix))
    return BipartiteState(mat, 3, validate=False)


class CompositeKind(str, Enum):
    LAMBDA = "lambda"   # GGB correlation operator, any d
    T = "t"             # POB correlation operator, any d
    U = "u"             # WOB correlation operator, any d
    U1 = "u1"           # WOB shift part (m != 0), d = 3 only
    U2 = "u2"           # WOB clock part (m == 0, l != 0), d = 3 only
    SIGMA = "sigma"     # s1 x s1 - s2 x s2 + s3 x s3, d = 2 only

COMPOSITE_NORMS = {
    CompositeKind.LAMBDA: lambda d: 2 * np.sqrt(d * d - 1.0),
    CompositeKind.T: lambda d: np.sqrt(d * d - 1.0),
    CompositeKind.U: lambda d: d * np.sqrt(d * d - 1.0),
    CompositeKind.U1: lambda d: np.sqrt(54.0),
    CompositeKind.U2: lambda d: np.sqrt(18.0),
    CompositeKind.SIGMA: lambda d: 2 * np.sqrt(3.0),
}


def composite_operator(kind, d: int) -> np.ndarray:
    """Hermitian traceless d^2 x d^2 correlation operators.

    LAMBDA = sum_{j<k} S_jk x S_jk - sum_{j<k} A_jk x A_jk + sum_l D_l x D_l
    over the GGB families, T is its POB analogue sum T_LM x T_LM (identity
    excluded), and U = sum U_lm x U_{-l,m} over nonzero Weyl labels. They are
    proportional: LAMBDA = 2 T = (2/d) U. U1/U2 split U for d = 3 into the
    m != 0 and m == 0 parts; SIGMA is the d = 2 form of LAMBDA.
    """
    kind = CompositeKind(kind)
    if kind is CompositeKind.SIGMA:
        if d != 2:
            raise ValueError("SIGMA is defined for d = 2 only")
        return (tensor(PAULI[1], PAULI[1]) - tensor(PAULI[2], PAULI[2])
                + tensor(PAULI[3], PAULI[3]))
    if kind in (CompositeKind.U1, CompositeKind.U2):
        if d != 3:
            raise ValueError(f"{kind.name} is defined for d = 3 only")
        basis = wob_basis(3)
        out = np.zeros((9, 9), dtype=complex)
        ms = (1, 2) if kind is CompositeKind.U1 else (0,)
        for l in range(3):
            for m in ms:
                if (l, m) == (0, 0):
                    continue
                out += tensor(basis.element((l, m)), basis.element(((-l) % 3, m)))
        return out
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    n2 = d * d
    out = np.zeros((n2, n2), dtype=complex)
    if kind is CompositeKind.LAMBDA:
        basis = get_basis(BasisKind.GGB, d)
        for a in basis.labels[1:]:
            sign = -1.0 if a[0] == "a" else 1.0
            el = basis.element(a)
            out += sign * tensor(el, el)
        return out
    if kind is CompositeKind.T:
        basis = get_basis(BasisKind.POB, d)
        for a in basis.labels[1:]:
            el = basis.element(a)
            out += tensor(el, el)
        return out
    basis = wob_basis(d)
    for (l, m) in basis.labels[1:]:
        out += tensor(basis.element((l, m)), basis.element(((-l) % d, m)))
    return out


def random_density_matrix(d: int, rng: np.random.Generator) -> DensityMatrix:
    """Ginibre-distributed random density matrix G G^dag / Tr(G G^dag)."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    mat = g @ g.conj().T
    return DensityMatrix(mat / np.trace(mat).real, validate=False)


def random_ket(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state vector."""
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_product_state(d: int, rng: np.random.Generator) -> np.ndarray:
    """Projector onto a Haar-random pure product state |a> (x) |b>."""
    a = random_ket(d, rng)
    b = random_ket(d, rng)
    ab = np.kron(a, b)
    return np.outer(ab, ab.conj())


def sample_separable(d: int, seed, mixture_count: int = 4) -> BipartiteState:
    """Random separable state: a convex mixture of Haar-random pure product
    states with flat-Dirichlet weights.

    A membership sampler for tests, not a uniform measure on the separable
    set. Deterministic for a given seed; PPT by construction.
    """
    if mixture_count < 1:
        raise ValueError("mixture_count must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(mixture_count))
    mat = np.zeros((d * d, d * d), dtype=complex)
    for w in weights:
        mat += w * random_product_state(d, rng)
    return BipartiteState(mat, d, validate=False)
