"""
Concurrence as a coherence gap
==============================

For a bipartite pure state the squared concurrence equals the difference
between the squared localizable coherence and the squared coherence of the
reduced state on side A.
"""

import numpy as np

import cohloc

rng = np.random.default_rng(1)

bell = cohloc.PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))
rep = cohloc.theorem2_check(bell)
print(f"Bell state: C^2 = {rep.lhs:.3f}, D_L^2 - D^2 = {rep.rhs:.3f}")

for dims in [(2, 3), (3, 3), (4, 4)]:
    residuals = []
    for _ in range(500):
        psi = cohloc.random_pure(dims[0] * dims[1], rng, dims)
        check = cohloc.theorem2_check if dims[0] == 2 else cohloc.theorem4_check
        residuals.append(check(psi).residual)
    print(f"{dims[0]}x{dims[1]}: largest residual over 500 states {max(residuals):.1e}")

# %%
# Which off-diagonal norm?
# ------------------------
# Using the plain Frobenius off-diagonal norm instead of d_F breaks the
# identity by exactly sum_{i != j} |s_ij|^2.

psi = cohloc.random_pure(9, rng, (3, 3))
sigma = cohloc.reduced_state(psi).mat
frob = cohloc.theorem4_check(psi, convention="frobenius")
offdiag = (np.abs(sigma) ** 2).sum() - (np.abs(np.diag(sigma)) ** 2).sum()
print("residual with d_frob:", frob.residual, " sum |s_ij|^2:", offdiag)
