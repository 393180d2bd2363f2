"""
Upper bound for mixed-state concurrence
=======================================

For mixed states the coherence gap of the reduced state bounds the squared
concurrence from above. Werner states show how loose the bound can be.
"""

import numpy as np

import cohloc

phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
print(" p     C^2     bound")
for p in np.linspace(0, 1, 6):
    werner = p * np.outer(phi, phi) + (1 - p) * np.eye(4) / 4
    rep = cohloc.theorem5_check(werner, (2, 2))
    print(f"{p:.1f}  {rep.lhs:.4f}  {rep.rhs:.4f}")

# %%
# The bound is what the purification achieves
# -------------------------------------------

rng = np.random.default_rng(2)
sigma = cohloc.random_density(9, 4, rng)
rep = cohloc.theorem5_check(sigma, (3, 3))
print("3x3 rank-4 state:", rep.kind, " bound", rep.rhs,
      " purification C^2", rep.details["purification_c2"])

slack = []
for i in range(1000):
    rep = cohloc.theorem5_check(cohloc.random_density(4, 1 + i % 4, rng), (2, 2))
    slack.append(rep.rhs - rep.lhs)
print("smallest slack over 1000 two-qubit states:", min(slack))
