"""Command-line front end.

::

    fracgreen green   --single 1.0 --x 0:2:1 --t 1
    fracgreen green   --density atoms:0.25=0.5,0.75=0.5 --x -3:3:0.5 --t 0.5,1,2
    fracgreen moments --density uniform --t-logspace 1e-3:1e3:25 --fit
    fracgreen phik    --density uniform --k 0:8 --t 1
    fracgreen verify  --profile fast

Exit codes: 0 success, 1 invalid input, 2 numerical failure (precision loss
or quadrature), 3 an error inside the verification suite.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from contextlib import nullcontext
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO

import numpy as np

from . import distributed_order as do
from . import single_order, specfun
from .errors import DomainError, FracGreenError, PrecisionLoss, QuadratureError

__all__ = ["RunConfig", "main", "parse_grid", "parse_logspace"]

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_SUITE = 0, 1, 2, 3
DEFAULT_TOL = 1e-8
TOL_RANGE = (1e-12, 1e-3)

GREEN_HEADER = ("x", "t", "u", "abs_error", "method")
MOMENTS_HEADER = ("t", "mu2", "method")
PHIK_HEADER = ("k", "t", "phi")


class InputError(ValueError):
    """Bad command-line input (exit code 1)."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    density_spec: str = ""
    beta: Optional[float] = None
    x_grid: tuple[float, float, float] = (0.0, 0.0, 1.0)
    t_values: tuple[float, ...] = (1.0,)
    tol: float = DEFAULT_TOL
    output_format: str = "csv"
    output_path: str = "-"
    method: str = "auto"
    fit: bool = False
    k_values: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.command not in ("green", "moments", "phik", "verify"):
            raise InputError(f"unknown command {self.command!r}")
        if self.x_grid[2] <= 0.0:
            raise InputError(f"grid step must be positive, got {self.x_grid[2]!r}")
        if any(not t > 0.0 for t in self.t_values):
            raise InputError("all t values must be positive")
        lo, hi = TOL_RANGE
        if not lo <= self.tol <= hi:
            raise InputError(f"tol={self.tol!r} outside [{lo:g}, {hi:g}]")
        if self.output_format not in ("csv", "json"):
            raise InputError(f"unknown output format {self.output_format!r}")

    def density(self) -> do.OrderDensity:
        if self.beta is not None:
            return do.single(self.beta)
        return do.parse_density(self.density_spec)

    def x_values(self) -> np.ndarray:
        start, stop, step = self.x_grid
        n = int(math.floor((stop - start) / step + 0.5)) + 1
        if n < 1:
            raise InputError(f"empty grid {start}:{stop}:{step}")
        return start + step * np.arange(n)


# --- argument parsing ---------------------------------------------------------


def _number(tok: str, what: str) -> float:
    try:
        return float(tok)
    except ValueError:
        raise InputError(f"cannot parse {what} token {tok!r}") from None


def parse_grid(spec: str) -> tuple[float, float, float]:
    """``start:stop:step``; the endpoint is included when within half a step."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError(f"grid {spec!r} is not of the form start:stop:step")
    start, stop, step = (_number(p, "grid") for p in parts)
    if not step > 0.0:
        raise InputError(f"grid step must be positive, got {parts[2]!r}")
    return start, stop, step


def parse_logspace(spec: str) -> tuple[float, ...]:
    """``a:b:n`` gives ``n`` logarithmically spaced times from ``a`` to ``b``."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError(f"log grid {spec!r} is not of the form a:b:n")
    a, b = _number(parts[0], "t"), _number(parts[1], "t")
    try:
        n = int(parts[2])
    except ValueError:
        raise InputError(f"cannot parse count token {parts[2]!r}") from None
    if not (a > 0.0 and b > a and n >= 2):
        raise InputError(f"log grid {spec!r} needs 0 < a < b and n >= 2")
    return tuple(float(v) for v in np.logspace(math.log10(a), math.log10(b), n))


def _parse_list(spec: str, what: str) -> tuple[float, ...]:
    return tuple(_number(tok, what) for tok in spec.split(",") if tok.strip())


def _parse_k(spec: str) -> tuple[int, ...]:
    if ":" in spec:
        a, _, b = spec.partition(":")
        try:
            return tuple(range(int(a), int(b) + 1))
        except ValueError:
            raise InputError(f"cannot parse k range {spec!r}") from None
    try:
        return tuple(int(tok) for tok in spec.split(","))
    except ValueError:
        raise InputError(f"cannot parse k list {spec!r}") from None


def _env_tol() -> float:
    raw = os.environ.get("FRACGREEN_TOL")
    if raw is None:
        return DEFAULT_TOL
    return _number(raw, "FRACGREEN_TOL")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fracgreen", description="Green functions of time-fractional diffusion.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, need_x: bool = False) -> None:
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--single", type=str, metavar="BETA", help="single order 0 < BETA <= 1")
        g.add_argument("--density", type=str, metavar="SPEC",
                       help="single:NU | atoms:B1=W1,B2=W2,... | two-atoms:B1,W1,B2,W2 | uniform")
        tg = sp.add_mutually_exclusive_group()
        tg.add_argument("--t", type=str, default="1", help="comma-separated times (default 1)")
        tg.add_argument("--t-logspace", type=str, metavar="A:B:N", help="N log-spaced times")
        sp.add_argument("--tol", type=str, default=None, help=f"absolute tolerance (env FRACGREEN_TOL, default {DEFAULT_TOL:g})")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", default="-", help="output file (default stdout)")
        if need_x:
            sp.add_argument("--x", type=str, default="0:0:1", metavar="START:STOP:STEP")

    g = sub.add_parser("green", help="evaluate u(x, t) on a grid")
    common(g, need_x=True)
    g.add_argument("--method", choices=("auto", "series"), default="auto",
                   help="'series' disables the large-|x| integral fallback")

    m = sub.add_parser("moments", help="variance mu2(t)")
    common(m)
    m.add_argument("--fit", action="store_true", help="fit the small- and large-t asymptotic laws")

    k = sub.add_parser("phik", help="time-scale functions phi_k(t)")
    common(k)
    k.add_argument("--k", type=str, default="0:8", help="k range A:B or list")

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--profile", choices=("fast", "full"), default="fast")
    v.add_argument("--output", default="-", help="JSON report file (default stdout)")
    v.add_argument("--only", default=None, help=argparse.SUPPRESS)
    v.add_argument("--perturb-gamma", type=float, default=0.0, help=argparse.SUPPRESS)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    tol = _env_tol() if ns.tol is None else _number(ns.tol, "tol")
    beta = None
    if ns.single is not None:
        beta = _number(ns.single, "beta")
    t_values = parse_logspace(ns.t_logspace) if ns.t_logspace else _parse_list(ns.t, "t")
    if not t_values:
        raise InputError("no t values given")
    return RunConfig(
        command=ns.command,
        density_spec=ns.density or "",
        beta=beta,
        x_grid=parse_grid(ns.x) if ns.command == "green" else (0.0, 0.0, 1.0),
        t_values=t_values,
        tol=tol,
        output_format=ns.format,
        output_path=ns.output,
        method=getattr(ns, "method", "auto"),
        fit=getattr(ns, "fit", False),
        k_values=_parse_k(ns.k) if ns.command == "phik" else (),
    )


# --- output ------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _write_csv(out: TextIO, header: Sequence[str], rows: Sequence[Sequence], trailer: Sequence[str] = ()) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    for line in trailer:
        out.write(f"# {line}\n")


def _write_json(out: TextIO, header: Sequence[str], rows: Sequence[Sequence], extra: Optional[dict] = None) -> None:
    doc = {"columns": list(header), "rows": [dict(zip(header, row)) for row in rows]}
    if extra:
        doc.update(extra)
    json.dump(doc, out, indent=1, allow_nan=True)
    out.write("\n")


def _open(path: str):
    if path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8", newline="")


# --- commands ----------------------------------------------------------------


def cmd_green(cfg: RunConfig) -> int:
    density = None if cfg.beta is not None else cfg.density()
    if cfg.beta is not None and not 0.0 < cfg.beta <= 1.0:
        raise InputError(f"beta must lie in (0, 1], got {cfg.beta!r}")
    rows, status = [], EXIT_OK
    for t in cfg.t_values:
        for x in cfg.x_values():
            x = float(x)
            try:
                if density is None:
                    ev = single_order.green(cfg.beta, x, t, cfg.tol,
                                            large_x="integral" if cfg.method == "auto" else "raise")
                else:
                    ev = do.green(density, x, t, cfg.tol, method="auto" if cfg.method == "auto" else "series")
                rows.append((ev.x, ev.t, ev.value, ev.abs_error_estimate, ev.method))
            except PrecisionLoss:
                rows.append((x, t, math.nan, math.inf, "precision_loss"))
                status = EXIT_NUMERIC
            except QuadratureError:
                rows.append((x, t, math.nan, math.inf, "quadrature_error"))
                status = EXIT_NUMERIC
    with _open(cfg.output_path) as out:
        if cfg.output_format == "csv":
            _write_csv(out, GREEN_HEADER, rows)
        else:
            _write_json(out, GREEN_HEADER, rows)
    if status:
        print("fracgreen: some grid points failed; see the method column", file=sys.stderr)
    return status


def _fit_block(density: do.OrderDensity, t: np.ndarray, mu2: np.ndarray) -> list[dict]:
    """Fit the known asymptotic laws on the lowest and highest two decades."""
    small, large = do.asymptotic_laws(density)
    if np.log10(t[-1] / t[0]) < 2.0 - 1e-9:
        raise InputError("asymptote fitting needs t values spanning at least 2 decades")
    out = []
    for regime, law, mask in (
        ("small", small, t <= t[0] * 100.0),
        ("large", large, t >= t[-1] / 100.0),
    ):
        if law is None:
            continue
        fit = do.fit_asymptote(t[mask], mu2[mask], law.kind, regime)
        rel = abs(fit.prefactor / law.prefactor - 1.0)
        if law.kind == "power":
            rel = max(rel, abs(fit.exponent / law.exponent - 1.0))
        out.append({
            "regime": regime,
            "law": law.kind,
            "slope": fit.exponent if law.kind == "power" else fit.prefactor,
            "prefactor": fit.prefactor,
            "fit_residual": fit.residual,
            "expected_slope": law.exponent if law.kind == "power" else law.prefactor,
            "expected_prefactor": law.prefactor,
            "relative_deviation": rel,
            "within_5_percent": bool(rel <= 0.05),
        })
    return out


def cmd_moments(cfg: RunConfig) -> int:
    density = cfg.density()
    t = np.asarray(sorted(set(cfg.t_values)), dtype=float)
    curve = do.moment_curve(density, t, min(cfg.tol, 1e-8))
    rows = [(float(ti), float(mi), curve.method) for ti, mi in zip(curve.t_grid, curve.mu2)]
    fits = _fit_block(density, curve.t_grid, curve.mu2) if cfg.fit else []
    with _open(cfg.output_path) as out:
        if cfg.output_format == "csv":
            trailer = []
            if fits:
                keys = list(fits[0])
                trailer.append(",".join(keys))
                trailer.extend(",".join(_fmt(f[k]) for k in keys) for f in fits)
            _write_csv(out, MOMENTS_HEADER, rows, trailer)
        else:
            _write_json(out, MOMENTS_HEADER, rows, {"fit": fits} if cfg.fit else None)
    return EXIT_OK


def cmd_phik(cfg: RunConfig) -> int:
    density = cfg.density()
    rows = [(k, t, do.phi_k(density, k, t, min(cfg.tol, 1e-10))) for t in cfg.t_values for k in cfg.k_values]
    with _open(cfg.output_path) as out:
        if cfg.output_format == "csv":
            _write_csv(out, PHIK_HEADER, rows)
        else:
            _write_json(out, PHIK_HEADER, rows)
    return EXIT_OK


def cmd_verify(profile: str, output: str = "-", perturb: float = 0.0, only: Optional[str] = None) -> int:
    from .verify import run_suite

    with specfun.perturbed_gamma(perturb):
        do.clear_cache()
        try:
            results = run_suite(profile, only)
        finally:
            do.clear_cache()
    report = {
        "profile": profile,
        "checks": [r.to_json() for r in results],
        "passed": all(r.passed for r in results),
    }
    with _open(output) as out:
        json.dump(report, out, indent=1, allow_nan=True)
        out.write("\n")
    for r in results:
        if not r.passed:
            print(f"fracgreen verify: {'ERROR' if r.error else 'FAIL'} {r.check_name}"
                  f" residual={r.residual:.3g} threshold={r.threshold:g}", file=sys.stderr)
    if any(r.error for r in results):
        return EXIT_SUITE
    return EXIT_OK if report["passed"] else EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "verify":
            return cmd_verify(ns.profile, ns.output, ns.perturb_gamma, ns.only)
        cfg = config_from_args(ns)
        return {"green": cmd_green, "moments": cmd_moments, "phik": cmd_phik}[cfg.command](cfg)
    except (InputError, DomainError) as exc:
        print(f"fracgreen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PrecisionLoss, QuadratureError) as exc:
        print(f"fracgreen: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except FracGreenError as exc:
        print(f"fracgreen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
