# # Weighted shifts on a two-sided sequence space
#
# A vector is a finitely supported sequence indexed by the integers. The
# weighted shift sends b_n to (u_{n+1}/u_n) b_{n+1}, and its powers act by
# ratios of weights.

import numpy as np

from kreinorbit import BiSequence, adjoint_inverse_power_apply, geometric, power_norm, shift_power_apply

# ## Geometric weights u_n = 2^|n|

w = geometric(2.0)
v = BiSequence({0: 1.0, 1: 1j})
print("v          =", dict(v.items()))
print("U v        =", dict(shift_power_apply(w, 1, v).items()))
print("U^-1 v     =", dict(shift_power_apply(w, -1, v).items()))
print("U^{*-1} v  =", dict(adjoint_inverse_power_apply(w, 1, v).items()))

# Moving away from the origin multiplies by rho, moving toward it divides.
# The operator norm of U^N is rho^|N|:

for N in range(4):
    print(f"|U^{N}| = {power_norm(w, N, 16).value}")

# ## A dense sanity check
#
# On a finite window the same operator is a subdiagonal matrix. Its largest
# singular value matches the formula above.

L = 20
n = np.arange(-L, L + 1)
U = np.zeros((2 * L + 1, 2 * L + 1))
U[np.arange(1, 2 * L + 1), np.arange(2 * L)] = [w(k + 1) / w(k) for k in n[:-1]]
print("sigma_max(U^3) on the window:", np.linalg.norm(np.linalg.matrix_power(U, 3), 2))
