"""Tour of the three operator bases.

Builds the generalized Gell-Mann, polarization, and Weyl bases for small
dimensions, checks the orthogonality relation Tr A_i^dag A_j = N d_ij, and
shows how an arbitrary matrix decomposes over each of them.
"""

import numpy as np

import quditbloch as qb

np.set_printoptions(precision=4, suppress=True, linewidth=120)

# ---------------------------------------------------------------------------
# The three bases in dimension 3
# ---------------------------------------------------------------------------
for kind in ("ggb", "pob", "wob"):
    basis = qb.get_basis(kind, 3)
    print(f"{kind.upper()}: {len(basis)} elements, orthogonality constant N = {basis.ortho_const}")
    print(f"  labels: {list(basis.labels)}")

print("\nSymmetric Gell-Mann element ('s', 1, 2):")
print(qb.ggb_basis(3).element(("s", 1, 2)).real)

print("\nPolarization operator (L, M) = (2, 1):")
print(qb.pob_basis(3).element((2, 1)).real)

print("\nWeyl operator (n, m) = (1, 1):")
print(qb.wob_basis(3).element((1, 1)))

# ---------------------------------------------------------------------------
# Orthogonality: the Gram matrix of each basis is N * identity
# (the GGB identity element is the one exception with Tr 1 = d)
# ---------------------------------------------------------------------------
for kind in ("ggb", "pob", "wob"):
    for d in (2, 3, 4, 5, 6):
        basis = qb.get_basis(kind, d)
        stack = basis.stacked
        gram = np.einsum("iab,jab->ij", stack.conj(), stack)
        off = np.abs(gram - np.diag(np.diag(gram))).max()
        print(f"{kind} d={d}: max off-diagonal Gram entry {off:.2e}")

# ---------------------------------------------------------------------------
# Weyl algebra: products close up to a phase
# ---------------------------------------------------------------------------
d = 3
basis = qb.wob_basis(d)
phase, idx = qb.weyl_product(d, (1, 2), (2, 2))
print(f"\nU_12 U_22 = exp(i arg {phase:.4f}) * U_{idx}")
direct = basis.element((1, 2)) @ basis.element((2, 2))
print("matrix check:", np.abs(direct - phase * basis.element(idx)).max())

# ---------------------------------------------------------------------------
# Standard matrices expand with closed-form coefficient maps
# ---------------------------------------------------------------------------
print("\n|1><2| over the GGB:", qb.expand_standard_ggb(3, 1, 2))
print("|1><1| over the WOB:", qb.expand_standard_wob(3, 0, 0))

# a random matrix reconstructs from any basis
rng = np.random.default_rng(0)
m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
for kind in ("ggb", "pob", "wob"):
    basis = qb.get_basis(kind, 4)
    coeff = qb.expand_matrix(basis, m)
    rebuilt = np.einsum("k,kab->ab", coeff, basis.stacked)
    print(f"completeness residual ({kind}, random 4x4): {np.abs(rebuilt - m).max():.2e}")
