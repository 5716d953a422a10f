# # Reproducing a moment sequence
#
# Start from a Hermitian-symmetric sequence c(N) = conj(c(-N)). The model
# vector x1 = b0 + f0 is built so that {x1, U_hat^N x1} = c(N) for every N.

from kreinorbit import hermitian_extend, make_weights, model_vector, moment_residuals, validate_moments
from kreinorbit.model import computed_moment

c = hermitian_extend([(0, 1.0), (1, 1j), (2, -0.5), (3, 4 - 2j)])
growth = validate_moments(c)
print("growth slope a_hat =", growth.a_hat, " M_hat =", growth.M_hat)

# The weights must outgrow the moments, so rho is chosen from the slope plus a margin.

w = make_weights(c, margin=1.0)
print("rho =", w.rho)

m = model_vector(c, w)
print("f0 =", {n: complex(round(v.real, 6), round(v.imag, 6)) for n, v in m.f0.items()})

for N in range(-4, 5):
    print(f"N={N:+d}  target {c[N]}  model {computed_moment(m, N)}")
print("max residual over |N| <= 12:", moment_residuals(m, 12).max_abs())
