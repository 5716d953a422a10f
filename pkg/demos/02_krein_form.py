# # The indefinite form on H + H
#
# Pairs x + y carry {x + y, x1 + y1} = (x, y1) + (y, x1). It is linear in the
# second slot and has vectors of every sign.

from kreinorbit import BiSequence, KreinVector, geometric, hat_u_power, krein_form

b0 = BiSequence.delta(0)
pos = KreinVector(b0, b0)
neg = KreinVector(b0, -b0)
null = KreinVector(b0, BiSequence())
print("positive:", krein_form(pos, pos), " negative:", krein_form(neg, neg), " neutral:", krein_form(null, null))

# ## U + U^{*-1} preserves the form
#
# The top slot is shifted by U and the bottom by the inverse adjoint, so the
# weight ratios cancel in every product.

w = geometric(3.0)
v = KreinVector(BiSequence({0: 1, 2: 1j}), BiSequence({-1: 2, 0: 0.5}))
x = KreinVector(BiSequence({-1: 1j}), BiSequence({0: 1, 2: -1}))
for N in (-5, 0, 3, 10):
    print(N, krein_form(hat_u_power(w, N, v), hat_u_power(w, N, x)))
