#!/usr/bin/env python3
"""Tour of the matrix family A_alpha = alpha*D + (1-alpha)*A.

Builds the family for a few graphs, checks the identities that make it a
useful interpolation (adjacency at alpha=0, half the signless Laplacian at
alpha=1/2, degree matrix at alpha=1), and shows the energy identity on a
regular graph.
"""

from fractions import Fraction

import numpy as np

from alphacentral import (a_alpha_energy, a_alpha_matrix, adjacency_matrix,
                          degree_matrix, eigenvalues_sym, generate)

pet = generate("petersen")
print(f"graph: {pet.label}, n={pet.n}, m={pet.m}")

A = adjacency_matrix(pet)
D = degree_matrix(pet)

print("\nendpoints of the family:")
print("  A_0   == A:        ", np.array_equal(a_alpha_matrix(pet, 0.0), A))
print("  A_1/2 == (D + A)/2:", np.array_equal(a_alpha_matrix(pet, 0.5), (D + A) / 2))
print("  A_1   == D:        ", np.array_equal(a_alpha_matrix(pet, 1.0), D))

print("\nrow sums equal degrees at every alpha; trace equals 2 m alpha:")
for a in (0.0, 0.3, 0.75):
    M = a_alpha_matrix(pet, a)
    print(f"  alpha={a}: max row-sum error "
          f"{np.abs(M.sum(axis=1) - 3).max():.1e}, trace {np.trace(M):.6g} "
          f"(expected {2 * pet.m * a:.6g})")

print("\nspectra across the interpolation (grouped by multiplicity):")
for a in (0.0, 0.25, 0.5, 1.0):
    spec = eigenvalues_sym(a_alpha_matrix(pet, a))
    pretty = ", ".join(f"{v:.4g} (x{m})" for v, m in spec.groups)
    print(f"  alpha={a:<5} {pretty}")

print("\nexact mode: pass alpha as a Fraction to get a Fraction-valued matrix")
M = a_alpha_matrix(generate("complete", [3]), Fraction(1, 3))
print(f"  A_(1/3)(K3) row: {list(M[0])}")

print("\nenergy identity on regular graphs: e_alpha = (1 - alpha) * e_0")
e0 = a_alpha_energy(pet, 0.0)
for a in (0.0, 0.25, 0.5, 0.75):
    ea = a_alpha_energy(pet, a)
    print(f"  alpha={a:<5} e_alpha={ea:>6.3f}  (1-alpha)*e_0={(1 - a) * e0:>6.3f}")
