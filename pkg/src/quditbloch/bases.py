"""The three operator bases for d-dimensional systems.

* GGB -- generalized Gell-Mann basis: Hermitian SU(d) generators in symmetric,
  antisymmetric and diagonal families, plus the identity. Tr A_i A_j = 2 d_ij
  for the traceless elements.
* POB -- polarization operator basis: irreducible tensor operators T_LM built
  from Clebsch-Gordan coefficients; orthonormal (N = 1), generally
  non-Hermitian, T_00 = 1/sqrt(d) * identity.
* WOB -- Weyl operator basis: unitary shift-and-phase operators U_nm with
  Tr U_nm^dag U_lj = d d_nl d_mj.

Element 0 of every basis is the identity-type element. Orderings are fixed
for deterministic serialization:

* GGB: identity, symmetric (j,k) lexicographic, antisymmetric (j,k)
  lexicographic, diagonal l ascending. Labels ``("I",)``, ``("s", j, k)``,
  ``("a", j, k)``, ``("l", l)`` with 1-based j < k.
* POB: (L ascending, M ascending from -L); labels ``(L, M)``.
* WOB: (n, m) lexicographic; labels ``(n, m)`` with 0-based indices.

Standard-matrix expansion helpers return ``{label: coefficient}`` maps whose
reconstruction reproduces the standard matrix exactly. GGB and POB
expansions use the 1-based index convention ``1 <= j, k <= d``; the WOB
expansion uses 0-based ``0 <= j, k <= d - 1``.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from functools import lru_cache

import numpy as np

from .cg import clebsch_gordan
from .linalg import _frozen

Label = tuple


class BasisKind(str, Enum):
    GGB = "ggb"
    POB = "pob"
    WOB = "wob"


class OperatorBasis:
    """Ordered collection of d^2 basis matrices with their orthogonality constant."""

    __slots__ = ("kind", "dim", "elements", "labels", "ortho_const", "_index", "_stack")

    def __init__(self, kind: BasisKind, dim: int, elements, labels, ortho_const: float):
        self.kind = kind
        self.dim = dim
        self.elements = tuple(_frozen(m) for m in elements)
        self.labels = tuple(labels)
        self.ortho_const = float(ortho_const)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._stack = None
        if len(self.elements) != dim * dim or len(self.labels) != dim * dim:
            raise ValueError("a basis of dimension d needs exactly d^2 elements")

    @property
    def stacked(self) -> np.ndarray:
        """All elements as one (d^2, d, d) array (cached, read-only)."""
        if self._stack is None:
            self._stack = _frozen(np.stack(self.elements))
        return self._stack

    def element(self, label: Label) -> np.ndarray:
        return self.elements[self.index(label)]

    def index(self, label: Label) -> int:
        try:
            return self._index[tuple(label)]
        except KeyError:
            raise KeyError(f"no element labelled {label!r} in "
                           f"{self.kind.value} d={self.dim}") from None

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"OperatorBasis({self.kind.value}, dim={self.dim}, N={self.ortho_const})"


def _check_dim(d: int) -> int:
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValueError(f"basis dimension must be an integer >= 2, got {d!r}")
    return int(d)


@lru_cache(maxsize=None)
def ggb_basis(d: int) -> OperatorBasis:
    """Generalized Gell-Mann basis in dimension d (N = 2)."""
    d = _check_dim(d)
    elements = [np.eye(d, dtype=complex)]
    labels: list[Label] = [("I",)]
    for j in range(1, d + 1):          # symmetric: |j><k| + |k><j|
        for k in range(j + 1, d + 1):
            m = np.zeros((d, d), dtype=complex)
            m[j - 1, k - 1] = 1
            m[k - 1, j - 1] = 1
            elements.append(m)
            labels.append(("s", j, k))
    for j in range(1, d + 1):          # antisymmetric: -i|j><k| + i|k><j|
        for k in range(j + 1, d + 1):
            m = np.zeros((d, d), dtype=complex)
            m[j - 1, k - 1] = -1j
            m[k - 1, j - 1] = 1j
            elements.append(m)
            labels.append(("a", j, k))
    for l in range(1, d):              # diagonal: sqrt(2/(l(l+1))) (sum_j<=l |j><j| - l|l+1><l+1|)
        m = np.zeros((d, d), dtype=complex)
        c = math.sqrt(2.0 / (l * (l + 1)))
        for j in range(l):
            m[j, j] = c
        m[l, l] = -l * c
        elements.append(m)
        labels.append(("l", l))
    return OperatorBasis(BasisKind.GGB, d, elements, labels, 2.0)


def _pob_m(d: int) -> list:
    # m_1 = s, m_2 = s - 1, ..., m_d = -s with s = (d - 1)/2
    s = (d - 1) / 2.0
    return [s - k for k in range(d)]


@lru_cache(maxsize=None)
def pob_basis(d: int) -> OperatorBasis:
    """Polarization operator basis in dimension d (N = 1).

    T_LM = sqrt((2L+1)/d) * sum_{k,l} <s m_l; L M | s m_k> |k><l| with
    s = (d-1)/2, L = 0..2s, M = -L..L.
    """
    d = _check_dim(d)
    s = (d - 1) / 2.0
    ms = _pob_m(d)
    elements = []
    labels: list[Label] = []
    for L in range(0, d):
        scale = math.sqrt((2 * L + 1) / d)
        for M in range(-L, L + 1):
            m = np.zeros((d, d), dtype=complex)
            for k in range(d):
                for l in range(d):
                    c = clebsch_gordan(s, ms[l], L, M, s, ms[k])
                    if c != 0.0:
                        m[k, l] = scale * c
            elements.append(m)
            labels.append((L, M))
    return OperatorBasis(BasisKind.POB, d, elements, labels, 1.0)


@lru_cache(maxsize=None)
def wob_basis(d: int) -> OperatorBasis:
    """Weyl operator basis in dimension d (N = d).

    U_nm = sum_k exp(2 pi i k n / d) |k><(k+m) mod d|.
    """
    d = _check_dim(d)
    elements = []
    labels: list[Label] = []
    for n in range(d):
        for m in range(d):
            u = np.zeros((d, d), dtype=complex)
            for k in range(d):
                u[k, (k + m) % d] = cmath.exp(2j * cmath.pi * k * n / d)
            elements.append(u)
            labels.append((n, m))
    return OperatorBasis(BasisKind.WOB, d, elements, labels, float(d))


_BUILDERS = {
    BasisKind.GGB: ggb_basis,
    BasisKind.POB: pob_basis,
    BasisKind.WOB: wob_basis,
}


def get_basis(kind, d: int) -> OperatorBasis:
    """Basis of the given kind and dimension (memoized, immutable)."""
    return _BUILDERS[BasisKind(kind)](d)


def weyl_product(d: int, nm: tuple[int, int], lk: tuple[int, int]) -> tuple[complex, tuple[int, int]]:
    """Composition rule of Weyl operators.

    ``U_nm U_lk = phase * U_index`` with ``phase = exp(2 pi i m l / d)`` and
    ``index = ((n + l) mod d, (m + k) mod d)``.
    """
    d = _check_dim(d)
    n, m = nm
    l, k = lk
    for x in (n, m, l, k):
        if not 0 <= x < d:
            raise ValueError(f"Weyl index {x} out of range 0..{d - 1}")
    phase = cmath.exp(2j * cmath.pi * m * l / d)
    return phase, ((n + l) % d, (m + k) % d)


def expand_standard_ggb(d: int, j: int, k: int) -> dict[Label, complex]:
    """GGB coefficient map of the standard matrix |j><k| (1-based indices).

    For j < k: (1/2)(S_jk + i A_jk); for j > k the conjugate combination; the
    diagonal case combines the diagonal elements with the identity through
    the recurrence-derived formula.
    """
    d = _check_dim(d)
    if not (1 <= j <= d and 1 <= k <= d):
        raise ValueError(f"standard-matrix index out of range 1..{d}: ({j}, {k})")
    if j < k:
        return {("s", j, k): 0.5, ("a", j, k): 0.5j}
    if j > k:
        return {("s", k, j): 0.5, ("a", k, j): -0.5j}
    out: dict[Label, complex] = {("I",): 1.0 / d}
    if j > 1:
        out[("l", j - 1)] = -math.sqrt((j - 1) / (2.0 * j))
    for n in range(0, d - j):
        out[("l", j + n)] = 1.0 / math.sqrt(2.0 * (j + n) * (j + n + 1))
    return out


def expand_standard_pob(d: int, i: int, j: int) -> dict[Label, complex]:
    """POB coefficient map of |i><j| (1-based indices).

    Only M = m_i - m_j contributes: |i><j| = sum_L sqrt((2L+1)/d)
    <s m_j; L M | s m_i> T_LM.
    """
    d = _check_dim(d)
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"standard-matrix index out of range 1..{d}: ({i}, {j})")
    s = (d - 1) / 2.0
    ms = _pob_m(d)
    M = int(round(ms[i - 1] - ms[j - 1]))
    out: dict[Label, complex] = {}
    for L in range(abs(M), d):
        c = clebsch_gordan(s, ms[j - 1], L, M, s, ms[i - 1])
        if c != 0.0:
            out[(L, M)] = math.sqrt((2 * L + 1) / d) * c
    return out


def expand_standard_wob(d: int, j: int, k: int) -> dict[Label, complex]:
    """WOB coefficient map of |j><k| (0-based indices).

    |j><k| = (1/d) sum_l exp(-2 pi i l j / d) U_{l, (k-j) mod d}; every
    coefficient has modulus 1/d.
    """
    d = _check_dim(d)
    if not (0 <= j < d and 0 <= k < d):
        raise ValueError(f"standard-matrix index out of range 0..{d - 1}: ({j}, {k})")
    m = (k - j) % d
    return {
        (l, m): cmath.exp(-2j * cmath.pi * l * j / d) / d
        for l in range(d)
    }


def reconstruct(basis: OperatorBasis, coeffs: dict[Label, complex]) -> np.ndarray:
    """Assemble sum coeff * element from a coefficient map."""
    out = np.zeros((basis.dim, basis.dim), dtype=complex)
    for label, c in coeffs.items():
        out += c * basis.element(label)
    return out


def expand_matrix(basis: OperatorBasis, mat: np.ndarray) -> np.ndarray:
    """Coefficients of an arbitrary matrix over all d^2 basis elements.

    coeff_i = Tr(A_i^dag M) / Tr(A_i^dag A_i), so that
    sum_i coeff_i A_i == M for every basis (the GGB identity element has
    normalization d rather than N = 2).
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.shape != (basis.dim, basis.dim):
        raise ValueError(f"matrix shape {mat.shape} does not match basis dim {basis.dim}")
    stack = basis.stacked
    raw = np.einsum("kab,ab->k", stack.conj(), mat)
    norms = np.einsum("kab,kab->k", stack.conj(), stack).real
    return raw / norms
