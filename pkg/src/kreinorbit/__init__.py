"""Models of Z-orbits of unitaries in indefinite inner product spaces.

Bilateral weighted shifts, the doubled operator ``U + U^{*-1}`` on ``H + H``
with the form ``{x+y, x1+y1} = (x, y1) + (y, x1)``, the moment-matching model
vector ``b_0 + f_0``, and finite-window checks of the invariant lineals.
"""

from .errors import (
    DuplicateIndex,
    GaugeViolation,
    KreinOrbitError,
    NonRealC0,
    ParseError,
    SymmetryHypothesisViolated,
    SymmetryViolation,
    WeightError,
)
from .seq_core import BiSequence, GrowthEstimate, MomentSequence, hermitian_extend, load_moments, validate_moments
from .shift import (
    Vector,
    WeightSequence,
    adjoint_inverse_power_apply,
    geometric,
    make_weights,
    power_norm,
    shift_power_apply,
    table,
)
from .krein import KreinVector, hat_u_power, hilbert_pairing, krein_form, symmetric_form, symmetric_form_transform
from .model import ModelOrbit, build_f0, f0_symmetry_residual, model_vector, moment_residuals
from .subspaces import (
    GeneratorFamily,
    GramReport,
    OrbitVector,
    annihilator_probe,
    krein_gram,
    model_lineal_generators,
    neutral_kernel,
    orbit_form,
    orbit_shift,
    plus_minus_generators,
    tilde_g,
    totality_defect,
)
from .doubling import DoubledOrbitVector, injectivity_defect, minus_form_eval, omega_apply, omega_isometry_residual

__version__ = "0.1.0"
