"""
Coherence of a single state
===========================

Off-diagonal measures of a density matrix in a fixed basis, and the
two-level-subspace picture used for higher dimensions.
"""

import numpy as np

import cohloc

# A qubit state with a = 0.7, c = 0.3 and off-diagonal b = 0.2
rho = cohloc.validate_density([[0.7, 0.2], [0.2, 0.3]])

print("entrywise l1 coherence :", cohloc.d_l1(rho))
print("Frobenius coherence    :", cohloc.d_frob(rho))

# The lambda pair sqrt(ac) +- |b| carries both extremes of the average
# coherence over decompositions: difference = minimum, sum = maximum.
lam = cohloc.qubit_lambda(rho)
print("lambda pair            :", lam.lambda1, lam.lambda2)
print("min average coherence  :", lam.difference, "(equals the l1 coherence)")
print("localizable coherence  :", lam.total, "= 2 sqrt(0.21)")

# %%
# Qudits: split into 2x2 subspaces
# --------------------------------
# Each basis pair (k, l) contributes a weight s_kk + s_ll and the two
# extremes 2|s_kl| and 2 sqrt(s_kk s_ll).

sigma = np.array([[0.5, 0.1, 0.0], [0.1, 0.3, 0.1], [0.0, 0.1, 0.2]])
vec = cohloc.coherence_vectors(sigma)
for pair, w, lo, hi in zip(vec.pairs, vec.weights, vec.weighted_min, vec.weighted_max):
    print(f"pair {pair}: weight {w:.2f}  min {lo:.4f}  max {hi:.4f}")

print("d_F  =", cohloc.d_F(sigma), " (sqrt 0.08)")
print("d_FL =", cohloc.d_FL(sigma), " (sqrt 1.24)")

# d_F is sqrt(2) times the plain Frobenius off-diagonal norm
print("d_F / d_frob =", cohloc.d_F(sigma) / cohloc.d_frob(sigma))
