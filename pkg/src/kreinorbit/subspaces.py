"""Invariant lineals, their Gram matrices, and neutral directions of the orbit.

Two kinds of objects live here:

* generator families ``N -> U_hat^N seed`` in the doubled shift space, for the
  seeds ``b_0 +- b_0`` (the positive/negative lineals) and ``b_0 +- f_0``
  (the model lineals);
* vectors of the abstract orbit space ``span{U_0^n x_0}``, stored as
  coefficient sequences, with the Hermitian Toeplitz form
  ``{a, b}_0 = sum conj(a(N)) b(n) c(n - N)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SymmetryHypothesisViolated
from .krein import KreinVector, hat_u_power, hilbert_pairing, krein_form
from .model import ModelOrbit, f0_symmetry_residual
from .seq_core import BiSequence, MomentSequence, toeplitz_matrix
from .shift import Vector, WeightSequence, shift_power_apply

# coefficients of sum_n g(n) U_0^n x_0; x_0 itself is BiSequence.delta(0)
OrbitVector = BiSequence

KERNEL_TOL = 1e-10


@dataclass(frozen=True)
class GeneratorFamily:
    w: WeightSequence
    seed: KreinVector
    K: int
    members: tuple[KreinVector, ...] = field(repr=False)

    @property
    def indices(self) -> range:
        return range(-self.K, self.K + 1)

    def member(self, N: int) -> KreinVector:
        if abs(N) > self.K:
            raise IndexError(f"member {N} outside [-{self.K}, {self.K}]")
        return self.members[N + self.K]


def generator_family(w: WeightSequence, seed: KreinVector, K: int) -> GeneratorFamily:
    if K < 0:
        raise ValueError("K must be nonnegative")
    return GeneratorFamily(w, seed, K, tuple(hat_u_power(w, N, seed) for N in range(-K, K + 1)))


def plus_minus_generators(w: WeightSequence, K: int) -> tuple[GeneratorFamily, GeneratorFamily]:
    """Families spanning the positive and negative lineals (seeds ``b_0 +- b_0``)."""
    b0 = BiSequence.delta(0)
    return generator_family(w, KreinVector(b0, b0), K), generator_family(w, KreinVector(b0, -b0), K)


def shift_stability_defect(fam: GeneratorFamily) -> float:
    """Largest deviation of ``U_hat^{+-1} member(N)`` from ``member(N +- 1)``."""
    worst = 0.0
    for N in fam.indices:
        for step in (1, -1):
            if abs(N + step) > fam.K:
                continue
            d = hat_u_power(fam.w, step, fam.member(N)) - fam.member(N + step)
            scale = max(1.0, fam.member(N + step).hilbert_norm())
            worst = max(worst, max(d.top.max_abs(), d.bottom.max_abs()) / scale)
    return worst


@dataclass(frozen=True)
class GramReport:
    matrix: np.ndarray = field(repr=False)
    classification: str
    eig_min: float
    eig_max: float
    kernel_dim: int
    tol: float
    hermitian_defect: float


def classify_gram(matrix: np.ndarray, tol: float = KERNEL_TOL) -> GramReport:
    """Sign classification of a (nearly) Hermitian matrix.

    Eigenvalues with ``|lambda| <= tol * max(1, max|lambda|)`` count as zero.
    """
    matrix = np.asarray(matrix, dtype=complex)
    herm = 0.5 * (matrix + matrix.conj().T)
    defect = float(np.max(np.abs(matrix - herm), initial=0.0))
    lam = np.linalg.eigvalsh(herm) if herm.size else np.zeros(0)
    thr = tol * max(1.0, float(np.max(np.abs(lam), initial=0.0)))
    pos = int(np.sum(lam > thr))
    neg = int(np.sum(lam < -thr))
    zero = lam.size - pos - neg
    if zero == lam.size:
        kind = "neutral"
    elif pos and neg:
        kind = "indefinite"
    elif zero:
        kind = "degenerate"
    else:
        kind = "strictly positive" if pos else "strictly negative"
    return GramReport(
        matrix=matrix,
        classification=kind,
        eig_min=float(lam.min()) if lam.size else 0.0,
        eig_max=float(lam.max()) if lam.size else 0.0,
        kernel_dim=zero,
        tol=tol,
        hermitian_defect=defect,
    )


def krein_gram(fam_a: GeneratorFamily, fam_b: GeneratorFamily, tol: float = KERNEL_TOL) -> GramReport:
    """``G[N, M] = {member_a(N), member_b(M)}`` over both index ranges."""
    if fam_a.w != fam_b.w:
        raise ValueError("generator families use different weight sequences")
    a, b = fam_a.members, fam_b.members
    rows = sorted({n for v in (*a, *b) for n in (*v.top.support, *v.bottom.support)})
    G = _dense(a, "top", rows).conj().T @ _dense(b, "bottom", rows)
    G += _dense(a, "bottom", rows).conj().T @ _dense(b, "top", rows)
    return classify_gram(G, tol)


def _dense(members: list[KreinVector], part: str, rows: list[int]) -> np.ndarray:
    pos = {n: k for k, n in enumerate(rows)}
    A = np.zeros((len(rows), len(members)), dtype=complex)
    for j, v in enumerate(members):
        for n, x in getattr(v, part).items():
            A[pos[n], j] = x
    return A


def model_lineal_generators(m: ModelOrbit, K: int, tol: float = 0.0) -> tuple[GeneratorFamily, GeneratorFamily]:
    """Families for the seeds ``b_0 + f_0`` and ``b_0 - f_0``.

    Requires ``conj(f0(-N)) = f0(N)`` (to within ``tol``), which is what makes
    the two lineals mutually orthogonal.
    """
    res = f0_symmetry_residual(m.f0)
    if res > tol:
        raise SymmetryHypothesisViolated(f"f0 is not conjugate-symmetric (residual {res:.3e})")
    return generator_family(m.w, m.seed(1), K), generator_family(m.w, m.seed(-1), K)


def orbit_form(a: OrbitVector, b: OrbitVector, c: MomentSequence) -> complex:
    """``sum_{N,n} conj(a(N)) b(n) c(n - N)``."""
    total = 0j
    for N, x in a.items():
        xc = x.conjugate()
        for n, y in b.items():
            cv = c[n - N]
            if cv:
                total += xc * y * cv
    return total


def orbit_shift(a: OrbitVector, N: int) -> OrbitVector:
    """Action of ``U_0^N`` on coefficients: ``n -> a(n - N)``."""
    return a.shifted(N)


def neutral_kernel(c: MomentSequence, W: int, tol: float = KERNEL_TOL) -> list[OrbitVector]:
    """Basis of the numerical kernel of the Toeplitz Gram on ``|n| <= W``.

    Right singular vectors whose singular value is below ``tol * sigma_max``.
    """
    T = toeplitz_matrix(c, W)
    _, s, vh = np.linalg.svd(T)
    smax = s[0] if s.size else 0.0
    mask = s <= tol * smax if smax > 0 else np.ones_like(s, dtype=bool)
    return [BiSequence.from_array(vh[k].conj(), -W) for k in np.flatnonzero(mask)]


def neutral_kernel_dims(c: MomentSequence, windows, tol: float = KERNEL_TOL) -> dict[int, int]:
    return {W: len(neutral_kernel(c, W, tol)) for W in windows}


def tilde_g(g1: Vector, w: WeightSequence) -> OrbitVector:
    """Orbit coefficients ``n -> (u_0 / u_n) g1(n)``."""
    return BiSequence._wrap({n: w.ratio(0, n) * v for n, v in g1.items()})


def lift_orbit_vector(g: OrbitVector, w: WeightSequence) -> KreinVector:
    """Inverse of :func:`tilde_g`, as a candidate ``g1 + 0``."""
    return KreinVector(BiSequence._wrap({n: w.ratio(n, 0) * v for n, v in g.items()}), BiSequence())


@dataclass(frozen=True)
class ProbeReport:
    orthogonal: bool
    max_r: float
    max_s: float
    bottom_max: float
    bottom_vanishes: bool | None
    f0_annihilates: bool | None
    tilde_g: OrbitVector
    tilde_g_neutral: bool | None
    tol: float

    @property
    def passed(self) -> bool:
        """Orthogonality failing is not a defect; only derived assertions can fail."""
        return not self.orthogonal or all((self.bottom_vanishes, self.f0_annihilates, self.tilde_g_neutral))


def annihilator_probe(
    m: ModelOrbit, K: int, candidate: KreinVector, tol: float = KERNEL_TOL
) -> ProbeReport:
    """Test a candidate against both model lineals and check what orthogonality implies.

    Orthogonality at ``N`` means ``|{member_N, candidate}| <= tol * |member_N| |candidate|``
    (Hilbert norms). If it holds for all ``|N| <= K`` the bottom component must
    vanish on ``|n| <= K``, ``(f0, U^N top)`` must vanish, and ``tilde_g(top)``
    must be Toeplitz-orthogonal to every ``delta_N``; all three are tested at
    the same relative tolerance.
    """
    plus, minus = model_lineal_generators(m, K, tol=0.0)
    cnorm = candidate.hilbert_norm()
    g1, h1 = candidate.top, candidate.bottom
    b0 = BiSequence.delta(0)
    gt = tilde_g(g1, m.w)
    ok = True
    max_r = max_s = 0.0
    bounds = {}
    for N in range(-K, K + 1):
        bound = tol * plus.member(N).hilbert_norm() * cnorm
        bounds[N] = bound
        r = abs(krein_form(plus.member(N), candidate))
        s = abs(krein_form(minus.member(N), candidate))
        max_r, max_s = max(max_r, r), max(max_s, s)
        ok &= r <= bound and s <= bound
    bottom_max = max((abs(h1[n]) for n in range(-K, K + 1)), default=0.0)
    if not ok:
        return ProbeReport(False, max_r, max_s, bottom_max, None, None, gt, None, tol)
    bottom_ok = all(abs(hilbert_pairing(shift_power_apply(m.w, N, b0), h1)) <= bounds[N] for N in bounds)
    f0_ok = all(abs(hilbert_pairing(m.f0, shift_power_apply(m.w, -N, g1))) <= bounds[N] for N in bounds)
    neutral_ok = all(abs(orbit_form(BiSequence.delta(N), gt, m.c)) <= 2 * bounds[N] for N in bounds)
    return ProbeReport(True, max_r, max_s, bottom_max, bottom_ok, f0_ok, gt, neutral_ok, tol)


def orbit_coordinates(v: KreinVector, w: WeightSequence) -> KreinVector:
    """Coordinates of ``v`` in the basis ``{U_hat^n (b_0 + 0), U_hat^n (0 + b_0)}``.

    ``U_hat^n (b_0 + 0) = (u_n/u_0) b_n + 0`` and
    ``U_hat^n (0 + b_0) = 0 + conj(u_0/u_n) b_n``, so this is a diagonal
    rescaling of the standard coordinates: it spans the same truncated spaces
    but removes the ``rho**|n|`` growth from the generator columns.
    """
    top = BiSequence._wrap({n: w.ratio(0, n) * x for n, x in v.top.items()})
    bottom = BiSequence._wrap({n: w.ratio(n, 0).conjugate() * x for n, x in v.bottom.items()})
    return KreinVector(top, bottom)


def generator_matrix(vectors, w: WeightSequence, W: int, basis: str = "orbit") -> np.ndarray:
    """Columns = vectors truncated to ``|n| <= W``, rows = top block then bottom block."""
    cols = []
    for v in vectors:
        if basis == "orbit":
            v = orbit_coordinates(v, w)
        elif basis != "standard":
            raise ValueError(f"unknown basis {basis!r}")
        cols.append(np.concatenate([v.top.to_array(-W, W), v.bottom.to_array(-W, W)]))
    return np.array(cols, dtype=complex).T.reshape(2 * (2 * W + 1), len(cols))


def normalized_smallest_singular_value(A: np.ndarray) -> float:
    """Smallest singular value after scaling each nonzero column to unit length."""
    rows, cols = A.shape
    if cols == 0:
        return 0.0
    if cols > rows:
        return 0.0
    norms = np.linalg.norm(A, axis=0)
    A = A / np.where(norms > 0, norms, 1.0)
    return float(np.linalg.svd(A, compute_uv=False)[-1])


def family_defect(families, W: int, basis: str = "orbit") -> float:
    """Normalized smallest singular value of the union of several families at window ``W``."""
    w = families[0].w
    vectors = [v for fam in families for v in fam.members]
    return normalized_smallest_singular_value(generator_matrix(vectors, w, W, basis))


def totality_defect(m: ModelOrbit, K: int, W: int, basis: str = "orbit") -> float:
    """How far the ``2(2K+1)`` model-lineal generators are from spanning the window-``W`` space.

    0 means the truncated generators are linearly dependent. ``basis="standard"``
    uses the raw ``{b_n + 0, 0 + b_n}`` coordinates, which is badly conditioned
    for geometric weights (columns grow like ``rho**|N|``).
    """
    if W < K:
        raise ValueError(f"W = {W} must be at least K = {K}")
    plus, minus = model_lineal_generators(m, K, tol=0.0)
    return family_defect((plus, minus), W, basis)


def totality_sweep(m: ModelOrbit, K: int, windows, basis: str = "orbit") -> dict[int, float]:
    return {W: totality_defect(m, K, W, basis) for W in windows}
