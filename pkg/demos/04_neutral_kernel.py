# # When do the two invariant lineals fill the space?
#
# The model space contains two orbits, one through b0 + f0 and one through
# b0 - f0. They are orthogonal for the form, one is positive and the other
# negative. Whether together they are total is governed by the Toeplitz form
# T[N, n] = c(n - N): a nonzero kernel signals a neutral invariant subspace.

import numpy as np

from kreinorbit import hermitian_extend, make_weights, model_vector, neutral_kernel, totality_defect
from kreinorbit.seq_core import toeplitz_matrix

cases = {
    "delta": hermitian_extend([(0, 1.0)]),
    "ones": hermitian_extend([(N, 1.0) for N in range(17)]),
    "e^iN": hermitian_extend([(N, np.exp(1j * N)) for N in range(17)]),
}

for name, c in cases.items():
    m = model_vector(c, make_weights(c, 1.0))
    dims = [len(neutral_kernel(c, W)) for W in (2, 4, 8)]
    eigs = np.linalg.eigvalsh(toeplitz_matrix(c, 4))
    print(f"{name:6s} kernel dims at W=2,4,8: {dims}  smallest |eig| at W=4: {np.abs(eigs).min():.1e}")
    print(f"       totality defect (K=W=4): {totality_defect(m, 4, 4):.3e}")

# For c = delta the kernel is empty and the generators are far from
# degenerate. The rank-one sequences have a 2W-dimensional kernel, and the
# generator matrix collapses accordingly.
