"""Elementary symmetric functions, mean curvatures and Newton tensors.

Run with: python3 demos/01_symmetric_functions.py
"""

import numpy as np

from warpcurv.symfunc import (
    cone_membership_batch,
    newton_tensor,
    normalized_h,
    normalized_h_batch,
    sigma,
)

# A spectrum is just a vector of principal curvatures.
kappa = np.array([0.5, 1.2, 2.0, 0.8])
d = kappa.size

print("spectrum:", kappa)
for k in range(d + 1):
    print(f"  sigma_{k} = {sigma(kappa, k):+.6f}   "
          f"H_{k} = {normalized_h(kappa, k):+.6f}")

# The normalized functions H_k = sigma_k / C(d, k) satisfy H_k = c^k on
# isotropic spectra (c, c, ..., c), which makes them the natural scale
# for inequalities.
iso = np.full(d, 0.7)
print("\nisotropic H_k vs c^k:")
for k in range(1, d + 1):
    print(f"  H_{k} = {normalized_h(iso, k):.12f}  c^{k} = {0.7 ** k:.12f}")

# Batched evaluation returns the full table of H_0..H_d per row.
batch = np.array([[1.0, 1.0, 1.0, 1.0], [2.0, 0.5, 1.0, 1.5]])
print("\nbatched H table:\n", normalized_h_batch(batch))

# Garding cone membership: sigma_1, ..., sigma_k all positive.
mixed = np.array([[1.0, 1.0, 1.0, -0.5], [1.0, 1.0, 1.0, -2.5]])
print("\n2-convex flags:", cone_membership_batch(mixed, 2))

# Newton tensors of a shape matrix B follow the recurrence
# T_k = sigma_k I - B T_{k-1}; their traces reproduce sigma_{k-1} up to
# the dimensional constant d - k + 1.
rng = np.random.default_rng(0)
B = rng.standard_normal((d, d))
B = 0.5 * (B + B.T)
for k in (1, 2):
    T = newton_tensor(B, k)
    expect = (d - k) * sigma(np.linalg.eigvalsh(B), k)
    print(f"tr T_{k} = {np.trace(T):+.8f}   (d-k) sigma_{k} = {expect:+.8f}")
