"""
Command-line entry point: ``curvescatter {curve,factor,simulate}``.

Every run writes ``manifest.json`` next to its outputs. Exit codes are 0 on
success, 1 on input or domain errors and 2 when the two Riemann Hypothesis
routes disagree.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import platform
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .errors import ConsistencyError, CurveScatterError
from .hardy import BOUNDARY_TOL, factor_rational, hardy_representative, outer_from_density
from .poly import RationalFunction, circle_points
from .scattering import causality_test, relations_check, scattering_pair
from .timeseries import (
    SE_FACTOR,
    MovingAverageModel,
    SpectralDensity,
    autocovariance,
    estimate_autocovariance,
    synthesize,
)
from .zeta import (
    RH_TOL,
    CurveSpec,
    check_rh,
    e_coefficients,
    zeta_from_curve,
    zeta_from_numerator,
    zeta_from_point_counts,
)

log = logging.getLogger("curvescatter")

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2
GRID_MIN, GRID_MAX = 2**6, 2**20


class InputError(Exception):
    """Bad command-line or file input; maps to exit code 1."""


@dataclass
class RunConfig:
    subcommand: str
    input: Path
    out: Path
    grid_size: int = 1024
    seed: int = 0
    truncation: int | None = None
    noise_kind: str = "gaussian"
    tol_root: float = RH_TOL
    tol_circle: float = BOUNDARY_TOL
    allow_pole_at_infinity: bool = False
    force: bool = False
    n: int = 2**20
    max_lag: int = 8
    files: dict = field(default_factory=dict)

    def __post_init__(self):
        g = self.grid_size
        if g < GRID_MIN or g > GRID_MAX or g & (g - 1):
            raise InputError(f"--grid must be a power of two between {GRID_MIN} and {GRID_MAX}, got {g}")

    def to_json(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "input": str(self.input),
            "grid_size": self.grid_size,
            "seed": self.seed,
            "truncation": self.truncation,
            "noise_kind": self.noise_kind,
            "n": self.n,
            "max_lag": self.max_lag,
            "allow_pole_at_infinity": self.allow_pole_at_infinity,
        }


def _versions() -> dict:
    return {
        "curvescatter": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "python": platform.python_version(),
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False, default=_json_default) + "\n"


def _json_default(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _read_input(path: Path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise InputError(f"input file {path} not found")
    except json.JSONDecodeError as exc:
        raise InputError(f"input file {path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    return data


def _write_outputs(cfg: RunConfig, files: dict[str, str]):
    cfg.out.mkdir(parents=True, exist_ok=True)
    files = dict(files)
    files["manifest.json"] = _dump({
        "config": cfg.to_json(),
        "versions": _versions(),
        "seeds": {"noise": cfg.seed},
        "tolerances": {"root_modulus": cfg.tol_root, "boundary": cfg.tol_circle},
        "outputs": sorted(files),
    })
    for name, text in files.items():
        (cfg.out / name).write_text(text)


def _check_overwrite(cfg: RunConfig, names):
    if cfg.force:
        return
    clash = [n for n in list(names) + ["manifest.json"] if (cfg.out / n).exists()]
    if clash:
        raise InputError(f"refusing to overwrite {', '.join(clash)} in {cfg.out}; pass --force")


def _curve_zeta(data: dict):
    try:
        q, genus = int(data["q"]), int(data["genus"])
    except (KeyError, TypeError, ValueError):
        raise InputError("curve input needs integer fields 'q' and 'genus'")
    if "numerator" in data:
        return zeta_from_numerator(q, genus, data["numerator"], bool(data.get("synthetic", False)))
    if "counts" in data:
        return zeta_from_point_counts(q, genus, data["counts"])
    if "model" in data:
        return zeta_from_curve(CurveSpec.from_json(q, genus, data["model"]), data.get("modulus"))
    raise InputError("curve input needs one of 'model', 'counts' or 'numerator'")


def cmd_curve(cfg: RunConfig) -> int:
    names = ["report.json", "em_table.csv", "scattering_samples.csv"]
    _check_overwrite(cfg, names)
    zc = _curve_zeta(_read_input(cfg.input))
    em_range = cfg.truncation if cfg.truncation is not None else 20
    report = check_rh(
        zc, tol=cfg.tol_root, grid_size=cfg.grid_size, em_range=em_range,
        allow_pole_at_infinity=cfg.allow_pole_at_infinity,
    )
    _write_outputs(cfg, {
        "report.json": _dump(report.to_json()),
        "em_table.csv": report.em.to_csv(),
        "scattering_samples.csv": report.pair.to_csv(cfg.grid_size),
    })
    print(report.verdict_line())
    return EXIT_OK if report.agreement else EXIT_DISAGREE


def _sampled_factor(cfg: RunConfig, samples) -> dict:
    f = SpectralDensity.from_samples(samples)
    outer = outer_from_density(f)
    sn = outer.samples / np.conj(outer.samples)
    return {
        "form": "sampled",
        "outer_samples": [[float(v.real), float(v.imag)] for v in outer.samples],
        "outer_taylor": [[float(v.real), float(v.imag)] for v in outer.taylor_coefficients(16)],
        "max_error": outer.max_error,
        "scattering": {
            "naive_samples": [[float(v.real), float(v.imag)] for v in sn],
            "dual_samples": [[float(v.real), float(v.imag)] for v in 1 / sn],
        },
        "causality": None,
        "note": "a sampled density does not determine psi's inner part; causality is not decided",
    }


def cmd_factor(cfg: RunConfig) -> int:
    _check_overwrite(cfg, ["factorization.json"])
    data = _read_input(cfg.input)
    if "psi" in data:
        psi = RationalFunction.from_json(data["psi"])
    elif "density" in data and isinstance(data["density"], dict) and "samples" in data["density"]:
        out = _sampled_factor(cfg, data["density"]["samples"])
        _write_outputs(cfg, {"factorization.json": _dump(out)})
        print("factored sampled density | causal: undetermined")
        return EXIT_OK
    elif "density" in data:
        psi = hardy_representative(SpectralDensity.from_json(data["density"]).rational, cfg.tol_circle)
    else:
        raise InputError("factor input needs 'psi' or 'density'")
    fpsi = factor_rational(psi, cfg.tol_circle)
    pair = scattering_pair(fpsi)
    verdict = causality_test(fpsi, boundary_tol=cfg.tol_circle, allow_pole_at_infinity=cfg.allow_pole_at_infinity)
    rel = relations_check(pair, cfg.grid_size, causal=verdict.causal)
    out = {
        "form": "rational",
        "factorization": fpsi.to_json(),
        "inner_zeros": [[complex(a).real, complex(a).imag] for a in fpsi.inner.zeros],
        "scattering": pair.to_json(),
        "causality": verdict.to_json(),
        "causal": "yes" if verdict.causal else "no",
        "relations": {
            "modulus_deviation": rel.modulus_deviation,
            "product_deviation": rel.product_deviation,
            "reflection_deviation": rel.reflection_deviation,
        },
    }
    _write_outputs(cfg, {"factorization.json": _dump(out)})
    zeros = ", ".join(f"{complex(a):.6g}" for a in fpsi.inner.zeros) or "none"
    print(f"inner zeros: {zeros} | causal: {'yes' if verdict.causal else 'no'}")
    return EXIT_OK


def _simulation_model(cfg: RunConfig, data: dict) -> MovingAverageModel:
    trunc = cfg.truncation if cfg.truncation is not None else 40
    if "q" in data:
        em = e_coefficients(_curve_zeta(data), -trunc, trunc)
        return MovingAverageModel(em.values, -trunc)
    if data.get("model") == "white_noise":
        return MovingAverageModel(np.array([1.0]), 0)
    if "coefficients" in data:
        return MovingAverageModel.from_json(data)
    raise InputError("simulate input needs a curve, 'coefficients' or model 'white_noise'")


def cmd_simulate(cfg: RunConfig) -> int:
    names = ["path.csv", "autocov_compare.csv"]
    _check_overwrite(cfg, names)
    model = _simulation_model(cfg, _read_input(cfg.input))
    if cfg.n < 4 * cfg.max_lag or cfg.n < 1:
        raise InputError(f"path length {cfg.n} is too short for max lag {cfg.max_lag} (need n >= {4 * cfg.max_lag})")
    path = synthesize(model, cfg.n, cfg.seed, cfg.noise_kind)
    est = estimate_autocovariance(path, cfg.max_lag)
    ana = autocovariance(model.density(), cfg.max_lag)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lag", "analytic", "estimate", "standard_error", "pass"])
    passed = 0
    for j in range(cfg.max_lag + 1):
        a, e, se = ana.gamma[j].real, est.gamma[j].real, est.standard_errors[j]
        ok = abs(e - a) <= SE_FACTOR * se
        passed += ok
        w.writerow([j, _fmt(a), _fmt(e), _fmt(se), "pass" if ok else "fail"])
    _write_outputs(cfg, {"path.csv": path.to_csv(), "autocov_compare.csv": buf.getvalue()})
    total = cfg.max_lag + 1
    print(f"lags 0..{cfg.max_lag}: {passed}/{total} within {SE_FACTOR:g} SE | n = {cfg.n} | seed = {cfg.seed}")
    return EXIT_OK if passed == total else EXIT_INPUT


COMMANDS = {"curve": cmd_curve, "factor": cmd_factor, "simulate": cmd_simulate}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvescatter",
        description="Scattering, spectral factorization and the Riemann Hypothesis for curves over finite fields.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, text in [
        ("curve", "decide RH for a curve two ways"),
        ("factor", "inner/outer factorization and causality of psi or a density"),
        ("simulate", "simulate a moving average and compare autocovariances"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("--input", required=True, type=Path, help="input JSON file")
        p.add_argument("--out", required=True, type=Path, help="output directory")
        p.add_argument("--grid", type=int, default=1024, help="circle grid size (power of two, 2^6..2^20)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--truncation", type=int, default=None,
                       help="|m| cutoff for e_m (default 20 for curve, 40 for simulate)")
        p.add_argument("--noise", choices=["gaussian", "rademacher"], default="gaussian")
        p.add_argument("--tol-root", type=float, default=RH_TOL, help="root-modulus tolerance")
        p.add_argument("--tol-circle", type=float, default=BOUNDARY_TOL, help="unit-circle boundary band")
        p.add_argument("--allow-pole-at-infinity", action="store_true")
        p.add_argument("--force", action="store_true", help="overwrite existing output files")
        p.add_argument("--n", type=int, default=2**20, help="path length (simulate)")
        p.add_argument("--max-lag", type=int, default=8, help="largest lag compared (simulate)")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            args.subcommand, args.input, args.out, args.grid, args.seed, args.truncation,
            args.noise, args.tol_root, args.tol_circle, args.allow_pole_at_infinity,
            args.force, args.n, args.max_lag,
        )
        return COMMANDS[args.subcommand](cfg)
    except ConsistencyError as exc:
        print(f"error: internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (InputError, CurveScatterError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
