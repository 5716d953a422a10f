# # The doubled orbit space
#
# Pairs of finitely supported coefficient sequences (a, a') carry the
# difference of two Toeplitz forms. Omega sends (delta_N, delta_M) to
# U_hat^N (b0 + f0) + U_hat^M (b0 - f0), and is an isometry onto its image.

import numpy as np

from kreinorbit import BiSequence, hermitian_extend, krein_form, make_weights, model_vector
from kreinorbit.doubling import DoubledOrbitVector, injectivity_defect, minus_form_eval, omega_apply

c = hermitian_extend([(0, 2.0), (1, 0.5 + 0.5j), (2, -0.25)])
m = model_vector(c, make_weights(c, 1.0))

rng = np.random.default_rng(1)
for _ in range(3):
    a = DoubledOrbitVector(
        BiSequence({int(k): complex(*rng.normal(size=2)) for k in rng.integers(-3, 4, size=3)}),
        BiSequence({int(k): complex(*rng.normal(size=2)) for k in rng.integers(-3, 4, size=3)}),
    )
    lhs = krein_form(omega_apply(a, m), omega_apply(a, m))
    print(f"{{Omega a, Omega a}} = {lhs.real:+.12f}   difference form = {minus_form_eval(a, a, c).real:+.12f}")

# Shifting both coordinates commutes with Omega:

a = DoubledOrbitVector(BiSequence({0: 1}), BiSequence({1: 1j}))
print(omega_apply(a.shifted(1), m) == omega_apply(DoubledOrbitVector(BiSequence({1: 1}), BiSequence({2: 1j})), m))

# Injectivity on a finite window is measured by a normalized smallest singular value.

for K in (1, 2, 4):
    print(f"K={K}: injectivity defect {injectivity_defect(m, K):.3e}")
