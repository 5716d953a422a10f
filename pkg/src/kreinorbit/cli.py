"""Command line pipeline: moments file -> model -> property checks -> JSON report.

    kreinorbit build  moments.json
    kreinorbit verify moments.json
    kreinorbit report moments.json --json-out report.json

The exit status is 0 iff no verdict is ``fail``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import doubling, krein, model, seq_core, shift, subspaces
from .errors import KreinOrbitError

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not applicable (neutral subspace present)"
INTERTWINING_TOL = 1e-13


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    margin: float = 1.0
    K: int = 16
    W: int = 32
    tol: float = 1e-10
    trials: int = 500
    seed: int = 0
    emit: str = "-"

    def __post_init__(self):
        if not self.W >= self.K >= 0:
            raise ValueError(f"need W >= K >= 0, got K={self.K}, W={self.W}")
        if not self.margin > 0:
            raise ValueError("margin must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def _verdict(value: float, tolerance: float, ok: bool | None = None) -> dict:
    if ok is None:
        ok = value <= tolerance
    return {"value": value, "tolerance": tolerance, "status": PASS if ok else FAIL}


def _gram_summary(rep: subspaces.GramReport, target: np.ndarray | None = None) -> dict:
    out = {
        "classification": rep.classification,
        "eig_min": rep.eig_min,
        "eig_max": rep.eig_max,
        "kernel_dim": rep.kernel_dim,
        "hermitian_defect": rep.hermitian_defect,
        "size": int(rep.matrix.shape[0]),
    }
    if target is not None:
        out["max_deviation"] = float(np.max(np.abs(rep.matrix - target), initial=0.0))
    return out


def sweep_windows(K: int, W: int) -> tuple[list[int], list[int]]:
    """Windows for the neutral-kernel sweep and the totality sweep."""
    kernel = sorted({2**k for k in range(int(math.log2(W)) + 1)} | {W}) if W >= 1 else [0]
    totality = sorted({K, (K + W) // 2, W})
    return kernel, totality


def build_model(cfg: RunConfig) -> tuple[seq_core.MomentSequence, seq_core.GrowthEstimate, model.ModelOrbit]:
    c = seq_core.load_moments(cfg.input_path)
    est = seq_core.validate_moments(c)
    c = c.with_growth(est)
    w = shift.make_weights(c, cfg.margin)
    return c, est, model.model_vector(c, w)


def run_pipeline(cfg: RunConfig) -> dict:
    c, est, m = build_model(cfg)
    scale = c.scale()
    tol_scaled = cfg.tol * scale

    residuals = model.moment_residuals(m, max(cfg.W, 2 * c.window))
    moment_residual_max = residuals.max_abs()
    f0_res = model.f0_symmetry_residual(m.f0)

    lp, lm = subspaces.plus_minus_generators(m.w, cfg.K)
    eye = np.eye(2 * cfg.K + 1)
    g_pp = subspaces.krein_gram(lp, lp, cfg.tol)
    g_mm = subspaces.krein_gram(lm, lm, cfg.tol)
    g_pm = subspaces.krein_gram(lp, lm, cfg.tol)
    gram_dev = max(
        float(np.max(np.abs(g_pp.matrix - 2 * eye))),
        float(np.max(np.abs(g_mm.matrix + 2 * eye))),
        float(np.max(np.abs(g_pm.matrix))),
    )
    stability = max(subspaces.shift_stability_defect(lp), subspaces.shift_stability_defect(lm))

    mp, mm = subspaces.model_lineal_generators(m, cfg.K)
    g_model_p = subspaces.krein_gram(mp, mp, cfg.tol)
    g_model_m = subspaces.krein_gram(mm, mm, cfg.tol)
    cross = subspaces.krein_gram(mp, mm, cfg.tol)
    cross_max = float(np.max(np.abs(cross.matrix)))

    kernel_ws, totality_ws = sweep_windows(cfg.K, cfg.W)
    kernel_dims = subspaces.neutral_kernel_dims(c, kernel_ws, cfg.tol)
    kernel_dim = max(kernel_dims.values())
    totality = subspaces.totality_sweep(m, cfg.K, totality_ws)

    iso = doubling.omega_isometry_residual(m, cfg.trials, cfg.seed)
    inj = doubling.injectivity_defect(m, cfg.K)
    same_support, inter_dev = doubling.intertwining_defect(m, max(1, cfg.trials // 10), cfg.seed + 1)

    if kernel_dim == 0:
        totality_verdict = _verdict(totality[cfg.K], cfg.tol, ok=totality[cfg.K] > cfg.tol)
    else:
        totality_verdict = {"value": totality[cfg.K], "tolerance": cfg.tol, "status": NOT_APPLICABLE}

    verdicts = {
        "plus_minus_gram": _verdict(gram_dev, cfg.tol),
        "lineal_shift_stability": _verdict(stability, cfg.tol),
        "moment_reproduction": _verdict(moment_residual_max, tol_scaled),
        "f0_symmetry": _verdict(f0_res, tol_scaled),
        "model_cross_orthogonality": _verdict(cross_max, tol_scaled),
        "totality": totality_verdict,
        "omega_isometry": _verdict(iso, tol_scaled),
        "omega_intertwining": _verdict(inter_dev, INTERTWINING_TOL, ok=same_support and inter_dev <= INTERTWINING_TOL),
    }
    return {
        "config": asdict(cfg),
        "moments": {"window": c.window, "max_abs": c.max_abs(), "scale": scale},
        "growth": {"a_hat": est.a_hat, "M_hat": est.M_hat},
        "weights": m.w.to_json(),
        "rho": m.w.rho,
        "moment_residual_max": moment_residual_max,
        "f0_symmetry_residual": f0_res,
        "gram_plus": _gram_summary(g_pp, 2 * eye),
        "gram_minus": _gram_summary(g_mm, -2 * eye),
        "gram_plus_minus_max": float(np.max(np.abs(g_pm.matrix))),
        "lineal_shift_stability_defect": stability,
        "model_gram_plus": _gram_summary(g_model_p),
        "model_gram_minus": _gram_summary(g_model_m),
        "cross_gram_max": cross_max,
        "neutral_kernel_dim": kernel_dim,
        "neutral_kernel_dims": [{"W": W, "dim": d} for W, d in kernel_dims.items()],
        "totality_defect": [{"K": cfg.K, "W": W, "defect": v} for W, v in totality.items()],
        "omega_isometry_residual": iso,
        "omega_injectivity_defect": inj,
        "intertwining_exact": bool(same_support and inter_dev <= INTERTWINING_TOL),
        "intertwining_value_defect": inter_dev,
        "verdicts": verdicts,
    }


def model_summary(cfg: RunConfig) -> dict:
    c, est, m = build_model(cfg)
    return {
        "config": asdict(cfg),
        "growth": {"a_hat": est.a_hat, "M_hat": est.M_hat},
        "weights": m.w.to_json(),
        "f0": [{"n": n, "re": v.real, "im": v.imag} for n, v in m.f0.items()],
        "x1": {
            "top": [{"n": n, "re": v.real, "im": v.imag} for n, v in m.x1.top.items()],
            "bottom": [{"n": n, "re": v.real, "im": v.imag} for n, v in m.x1.bottom.items()],
        },
        "self_product": _complex_json(krein.krein_form(m.x1, m.x1)),
    }


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def all_pass(report: dict) -> bool:
    return all(v["status"] != FAIL for v in report["verdicts"].values())


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(str(x))
    s = format(x, ".17g")
    if not any(ch in s for ch in ".eEn"):
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{inner}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        body = ",\n".join(inner + dumps(v, indent, _level + 1) for v in obj)
        return "[\n" + body + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(dest).write_text(text + "\n")


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="moments JSON file")
    common.add_argument("--margin", type=float, default=1.0, help="extra log-growth of the weights (default 1.0)")
    common.add_argument("--K", type=int, default=16, help="generator half-width (default 16)")
    common.add_argument("--W", type=int, default=32, help="verification window (default 32)")
    common.add_argument("--tol", type=float, default=1e-10, help="kernel / verdict tolerance (default 1e-10)")
    common.add_argument("--trials", type=int, default=500, help="random pairs for the isometry check (default 500)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="kreinorbit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="construct the model vector and print it")
    sub.add_parser("verify", parents=[common], help="run every check and print one line per verdict")
    rep = sub.add_parser("report", parents=[common], help="run every check and write the JSON report")
    rep.add_argument("--json-out", default="-", help="output path ('-' for stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            input_path=args.input,
            margin=args.margin,
            K=args.K,
            W=args.W,
            tol=args.tol,
            trials=args.trials,
            seed=args.seed,
            emit=getattr(args, "json_out", "-"),
        )
        if args.command == "build":
            _emit(dumps(model_summary(cfg)), "-")
            return 0
        report = run_pipeline(cfg)
    except (KreinOrbitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        for name, v in report["verdicts"].items():
            print(f"{v['status'].upper():<4}  {name}: value={v['value']:.3e} tol={v['tolerance']:.1e}"
                  if v["status"] in (PASS, FAIL) else f"N/A   {name}: {v['status']}")
    else:
        _emit(dumps(report), cfg.emit)
    return 0 if all_pass(report) else 1


if __name__ == "__main__":
    raise SystemExit(main())
