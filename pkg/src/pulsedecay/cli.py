"""Command-line front end: sweeps, figure data, and oracle cross-checks.

Subcommands
-----------
single        suppression-law sweep over delta*tau (and N) for the driven
              two-level system
bath          structured-vacuum emission vs N (figure-3-style data)
freespace     free-space integrals I and I0 vs N (figure-4-style data)
oracle-check  time-domain oracle vs closed forms and quadrature; pass/fail table

Output is CSV with a '#'-prefixed metadata header (key=value lines echoing
the resolved config), then a header row, then data rows at 12 significant
digits.  Identical configs produce byte-identical files.  Exit codes:
0 success, 1 check failure, 2 usage/config error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from . import analytic, continuum, oracle
from .core import (
    BathModel,
    Exponential,
    Lorentzian,
    PulseSchedule,
    SweepResult,
    SweepRow,
    TwoLevelDrive,
    make_row,
    round12,
)

__all__ = [
    "RunConfig",
    "ConfigError",
    "main",
    "parse_scalar",
    "read_sweep_csv",
    "write_sweep_csv",
    "CheckRow",
    "read_report_csv",
]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class ConfigError(ValueError):
    """Invalid flag, config-file entry, or parameter combination."""


_PI_TOKEN = re.compile(r"^([0-9]*\.?[0-9]*)\s*\*?\s*pi(?:\s*/\s*([0-9]*\.?[0-9]+))?$")


def parse_scalar(token: str) -> float:
    """Parse a float flag value; 'pi' and scaled forms like '2pi', 'pi/2' are exact."""
    tok = token.strip().lower()
    try:
        return float(tok)
    except ValueError:
        pass
    m = _PI_TOKEN.match(tok)
    if m is None:
        raise ConfigError(f"cannot parse numeric value {token!r}")
    mult = float(m.group(1)) if m.group(1) else 1.0
    div = float(m.group(2)) if m.group(2) else 1.0
    if div == 0:
        raise ConfigError(f"zero divisor in {token!r}")
    return mult * math.pi / div


def _tau_label(token: str) -> str:
    return token.strip().lower().replace("*", "").replace(" ", "").replace("/", "_over_")


@dataclass
class RunConfig:
    """Resolved run parameters.  Defaults < config file < command-line flags."""

    command: str = "single"
    model: str = "exponential"
    rho0: float = 1.0
    gamma: float = 1.0
    cutoff: float = 1.0
    tau: str | None = None        # raw token(s); interpreted per command
    v: float = 1e-3
    n_min: int = 1
    n_max: int = 50
    n_cycles: int = 20
    dtau_min: float = 0.05
    dtau_max: float = 3.0
    dtau_steps: int = 60
    tol_abs: float = 1e-9
    tol_rel: float = 1e-8
    max_panels: int = 10**6
    tol_oracle_bare: float = 1e-3
    tol_oracle_ratio: float = 1e-2
    tol_continuum: float = 1e-2
    tol_norm: float = 1e-8
    dt: str | None = None         # 'auto' or a numeric token
    n_modes: int = 2000
    coupling_scale: float = 0.005
    checks: str = "two_level,continuum"
    workers: int = 1
    out: str = ""

    def quadrature(self) -> continuum.QuadratureSpec:
        return continuum.QuadratureSpec(self.tol_abs, self.tol_rel, 1.0, self.max_panels)


_COMMAND_DEFAULTS: dict[str, dict[str, object]] = {
    "single": {"tau": "1", "n_min": 10, "n_max": 10, "out": "single.csv"},
    "bath": {"out": "bath.csv"},
    "freespace": {"tau": "1,pi", "out": "freespace.csv"},
    "oracle-check": {"tau": "0.5", "out": "oracle_check.csv"},
}

_FLOAT_FIELDS = {"rho0", "gamma", "cutoff", "v", "dtau_min", "dtau_max",
                 "tol_abs", "tol_rel", "tol_oracle_bare", "tol_oracle_ratio",
                 "tol_continuum", "tol_norm", "coupling_scale"}
_INT_FIELDS = {"n_min", "n_max", "n_cycles", "dtau_steps", "max_panels",
               "n_modes", "workers"}
_STR_FIELDS = {"model", "tau", "dt", "checks", "out"}


def _coerce(name: str, value: object):
    if isinstance(value, str):
        if name in _FLOAT_FIELDS:
            return parse_scalar(value)
        if name in _INT_FIELDS:
            try:
                return int(value)
            except ValueError as exc:
                raise ConfigError(f"{name} must be an integer, got {value!r}") from exc
    return value


def parse_config_file(path: str) -> dict[str, str]:
    """Flat key=value format mirroring the flags; '#' starts a comment."""
    entries: dict[str, str] = {}
    valid = {f.name for f in dataclasses.fields(RunConfig)} - {"command"}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        key = key.strip().replace("-", "_")
        if key not in valid:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        entries[key] = value.strip()
    return entries


def resolve_config(command: str, config_path: str | None,
                   overrides: dict[str, object]) -> RunConfig:
    values: dict[str, object] = {"command": command}
    values.update(_COMMAND_DEFAULTS[command])
    if config_path:
        for k, v in parse_config_file(config_path).items():
            values[k] = v
    for k, v in overrides.items():
        if v is not None:
            values[k] = v
    coerced = {k: _coerce(k, v) for k, v in values.items()}
    cfg = RunConfig(**coerced)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.model not in ("exponential", "lorentzian"):
        raise ConfigError(f"model must be exponential or lorentzian, got {cfg.model!r}")
    for name in ("rho0", "gamma", "cutoff", "tol_abs", "tol_rel",
                 "tol_oracle_bare", "tol_oracle_ratio", "tol_continuum",
                 "tol_norm", "coupling_scale"):
        if not getattr(cfg, name) > 0:
            raise ConfigError(f"{name} must be > 0, got {getattr(cfg, name)}")
    if cfg.v < 0:
        raise ConfigError(f"v must be >= 0, got {cfg.v}")
    if cfg.n_min < 1 or cfg.n_max < cfg.n_min:
        raise ConfigError(f"need 1 <= n_min <= n_max, got {cfg.n_min}..{cfg.n_max}")
    if cfg.n_cycles < 1:
        raise ConfigError(f"n_cycles must be >= 1, got {cfg.n_cycles}")
    if cfg.dtau_steps < 1 or not cfg.dtau_min > 0 or cfg.dtau_max < cfg.dtau_min:
        raise ConfigError("delta-tau grid requires 0 < dtau_min <= dtau_max and steps >= 1")
    if cfg.max_panels < 8 or cfg.n_modes < 2 or cfg.workers < 1:
        raise ConfigError("max_panels >= 8, n_modes >= 2 and workers >= 1 required")


def _single_tau(cfg: RunConfig) -> float:
    assert cfg.tau is not None
    if "," in cfg.tau:
        raise ConfigError(f"{cfg.command} takes a single tau, got {cfg.tau!r}")
    tau = parse_scalar(cfg.tau)
    if not tau > 0:
        raise ConfigError(f"tau must be > 0, got {tau}")
    return tau


def _bath_model(cfg: RunConfig) -> BathModel:
    if cfg.model == "lorentzian":
        return Lorentzian(cfg.rho0, cfg.gamma)
    return Exponential(cfg.rho0, cfg.gamma)


# ---------------------------------------------------------------------------
# CSV wire format


def _fmt(v: float) -> str:
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.12g}"


# column -> row attribute; "extra:i" indexes SweepRow.extras
_SCHEMAS: dict[str, tuple[tuple[str, str], ...]] = {
    "single": (("delta_tau", "param"), ("N", "extra:0"), ("p_bare", "p_bare"),
               ("p_pulsed", "p_pulsed"), ("ratio", "ratio"),
               ("tan2_prediction", "extra:1")),
    "bath": (("N", "param"), ("p_pulsed_over_A_per_Gamma", "p_pulsed"),
             ("p_bare_over_A_per_Gamma", "p_bare")),
    "freespace": (("N", "param"), ("I", "p_pulsed"), ("I0", "p_bare")),
}
_HEADERS = {tuple(name for name, _ in schema): kind
            for kind, schema in _SCHEMAS.items()}


def _row_value(row: SweepRow, field: str) -> float:
    if field.startswith("extra:"):
        return row.extras[int(field.split(":")[1])]
    return getattr(row, field)


def write_sweep_csv(path: str | Path, result: SweepResult, kind: str) -> None:
    schema = _SCHEMAS[kind]
    lines = [f"# {k}={result.metadata[k]}" for k in sorted(result.metadata)]
    lines.append(",".join(name for name, _ in schema))
    for row in result.rows:
        lines.append(",".join(_fmt(_row_value(row, field)) for _, field in schema))
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def read_sweep_csv(path: str | Path) -> tuple[SweepResult, str]:
    """Parse an emitted sweep file back into (SweepResult, schema kind)."""
    metadata: dict[str, str] = {}
    header: list[str] | None = None
    data: list[list[float]] = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key.strip()] = value
            continue
        if header is None:
            header = [c.strip() for c in line.split(",")]
            continue
        data.append([float(tok) for tok in line.split(",")])
    if header is None:
        raise ValueError(f"{path}: no header row found")
    kind = _HEADERS.get(tuple(header))
    if kind is None:
        raise ValueError(f"{path}: unrecognized columns {header}")
    schema = _SCHEMAS[kind]
    rows = []
    for values in data:
        by_field = {field: v for (_, field), v in zip(schema, values)}
        extras = tuple(by_field[f"extra:{i}"]
                       for i in range(sum(f.startswith("extra:") for f in by_field)))
        if "ratio" in by_field:
            rows.append(SweepRow(by_field["param"], by_field["p_pulsed"],
                                 by_field["p_bare"], by_field["ratio"], extras))
        else:
            rows.append(make_row(by_field["param"], by_field["p_pulsed"],
                                 by_field["p_bare"], extras))
    return SweepResult(tuple(rows), metadata), kind


def _echo_metadata(cfg: RunConfig, **extra: object) -> dict[str, str]:
    meta = {f.name: str(getattr(cfg, f.name)) for f in dataclasses.fields(cfg)}
    meta.update({k: str(v) for k, v in extra.items()})
    return meta


def _pool_map(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        # map preserves submission order, so output order is deterministic
        # regardless of completion order.
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# Commands


def cmd_single(cfg: RunConfig) -> int:
    tau = _single_tau(cfg)
    dtaus = np.linspace(cfg.dtau_min, cfg.dtau_max, cfg.dtau_steps)
    points = [(float(dtau), n)
              for dtau in dtaus for n in range(cfg.n_min, cfg.n_max + 1)]

    def work(point: tuple[float, int]) -> SweepRow:
        dtau, n = point
        drive = TwoLevelDrive(cfg.v, dtau / tau)
        sched = PulseSchedule(tau, n)
        pb = analytic.p_bare(drive, sched.total_time())
        pp = analytic.p_pulsed(drive, sched)
        try:
            tan2 = analytic.suppression_factor(drive.delta, tau)
        except analytic.PoleAtOddPi:
            tan2 = math.inf
        return make_row(dtau, pp, pb, extras=(float(n), tan2))

    rows = _pool_map(work, points, cfg.workers)
    meta = _echo_metadata(cfg, tau_resolved=_fmt(tau), scale_convention="drive units")
    write_sweep_csv(cfg.out, SweepResult(tuple(rows), meta), "single")
    return EXIT_OK


def cmd_bath(cfg: RunConfig) -> int:
    model = _bath_model(cfg)
    tau = 0.5 / cfg.gamma if cfg.tau is None else _single_tau(cfg)
    norm = continuum.einstein_a(model) / cfg.gamma
    quad = cfg.quadrature()

    def work(n: int) -> SweepRow:
        sched = PulseSchedule(tau, n)
        pp = continuum.p_emission_pulsed(model, sched, quad) / norm
        pb = continuum.p_emission_bare(model, sched, quad) / norm
        return make_row(float(n), pp, pb)

    rows = _pool_map(work, list(range(cfg.n_min, cfg.n_max + 1)), cfg.workers)
    meta = _echo_metadata(cfg, tau_resolved=_fmt(tau),
                          normalization="A_per_Gamma", scale_convention="Gamma=1")
    write_sweep_csv(cfg.out, SweepResult(tuple(rows), meta), "bath")
    return EXIT_OK


def cmd_freespace(cfg: RunConfig) -> int:
    assert cfg.tau is not None
    tokens = [t for t in cfg.tau.split(",") if t.strip()]
    if not tokens:
        raise ConfigError("freespace needs at least one tau value")
    taus = [(tok, parse_scalar(tok)) for tok in tokens]
    for tok, value in taus:
        if not value > 0:
            raise ConfigError(f"tau must be > 0, got {tok!r}")
    quad = cfg.quadrature()

    for tok, tau in taus:
        def work(n: int) -> SweepRow:
            i_pulsed = continuum.free_space_I(tau, n, cfg.cutoff, quad)
            i_bare = continuum.free_space_I0(tau, n, cfg.cutoff, quad)
            return make_row(float(n), i_pulsed, i_bare)

        rows = _pool_map(work, list(range(cfg.n_min, cfg.n_max + 1)), cfg.workers)
        if len(taus) == 1:
            out = Path(cfg.out)
        else:
            base = Path(cfg.out)
            out = base.with_name(f"{base.stem}_tau_{_tau_label(tok)}{base.suffix}")
        meta = _echo_metadata(cfg, tau_resolved=_fmt(tau), tau_label=_tau_label(tok),
                              scale_convention="omega_eg=1")
        write_sweep_csv(out, SweepResult(tuple(rows), meta), "freespace")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Oracle cross-checks


@dataclass(frozen=True)
class CheckRow:
    check: str
    status: str          # pass | fail | error
    observed: float
    tolerance: float
    detail: str

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _check(name: str, observed: float, tolerance: float, detail: str) -> CheckRow:
    status = "pass" if observed <= tolerance else "fail"
    return CheckRow(name, status, round12(observed), round12(tolerance), detail)


def _resolve_dt(cfg: RunConfig, sched: PulseSchedule, max_rate: float) -> float:
    if cfg.dt is None or cfg.dt == "auto":
        return oracle.suggested_step(sched, max_rate)
    return parse_scalar(cfg.dt)


def _two_level_checks(cfg: RunConfig) -> list[CheckRow]:
    drive = TwoLevelDrive(cfg.v, 1.0)
    sched = PulseSchedule(0.2, 10)
    dt = _resolve_dt(cfg, sched, max(abs(drive.v), abs(drive.delta)))
    try:
        bare = oracle.evolve_two_level(drive, sched, with_kicks=False, dt=dt)
        kicked = oracle.evolve_two_level(drive, sched, with_kicks=True, dt=dt)
    except oracle.StepTooCoarse as exc:
        return [CheckRow("two_level_propagation", "error", math.nan,
                         cfg.tol_oracle_bare, f"StepTooCoarse: {exc}")]
    p_b = abs(bare.c_e) ** 2
    p_k = abs(kicked.c_e) ** 2
    pb_ref = analytic.p_bare(drive, sched.total_time())
    tan2 = analytic.suppression_factor(drive.delta, sched.tau)
    rows = [
        _check("two_level_bare_vs_analytic", abs(p_b - pb_ref) / pb_ref,
               cfg.tol_oracle_bare, "relative error vs first-order closed form"),
        _check("two_level_ratio_vs_tan2", abs(p_k / p_b - tan2) / tan2,
               cfg.tol_oracle_ratio, "kicked/bare ratio vs tan^2(delta*tau/2)"),
        _check("two_level_norm_drift", abs(bare.norm() - 1.0), cfg.tol_norm,
               "unitarity of the bare run"),
        _check("two_level_norm_drift_kicked", abs(kicked.norm() - 1.0), cfg.tol_norm,
               "unitarity of the kicked run"),
    ]
    return rows


def _continuum_checks(cfg: RunConfig) -> list[CheckRow]:
    model = _bath_model(cfg)
    tau = 0.5 if cfg.tau is None else _single_tau(cfg)
    sched = PulseSchedule(tau, cfg.n_cycles)
    support = continuum.truncated_support(model)
    modes = oracle.discretize(model, cfg.n_modes, support)
    dt = _resolve_dt(cfg, sched, float(np.max(np.abs(modes.detunings))))
    quad = cfg.quadrature()
    scale2 = cfg.coupling_scale**2
    try:
        bare = oracle.evolve_continuum(modes, sched, with_kicks=False, dt=dt,
                                       coupling_scale=cfg.coupling_scale)
        kicked = oracle.evolve_continuum(modes, sched, with_kicks=True, dt=dt,
                                         coupling_scale=cfg.coupling_scale)
    except (oracle.StepTooCoarse, oracle.NonPerturbative) as exc:
        return [CheckRow("continuum_propagation", "error", math.nan,
                         cfg.tol_continuum, f"{type(exc).__name__}: {exc}")]
    p_bare_quad = scale2 * continuum.p_emission_bare(model, sched, quad)
    p_puls_quad = scale2 * continuum.p_emission_pulsed(model, sched, quad)
    rows = [
        _check("continuum_bare_vs_quadrature",
               abs(bare.emission() - p_bare_quad) / p_bare_quad,
               cfg.tol_continuum, "oracle emission vs bare quadrature"),
        _check("continuum_pulsed_vs_quadrature",
               abs(kicked.emission() - p_puls_quad) / p_puls_quad,
               cfg.tol_continuum, "oracle emission vs pulsed quadrature"),
        _check("continuum_pulsed_below_bare",
               kicked.emission() / bare.emission(), 1.0,
               "kicked emission must stay below the bare emission"),
        _check("continuum_norm_drift", abs(bare.norm() - 1.0), cfg.tol_norm,
               "unitarity of the bare run"),
        _check("continuum_norm_drift_kicked", abs(kicked.norm() - 1.0), cfg.tol_norm,
               "unitarity of the kicked run"),
    ]
    return rows


_CHECK_SUITES = {"two_level": _two_level_checks, "continuum": _continuum_checks}
_REPORT_HEADER = ("check", "status", "observed", "tolerance", "detail")


def write_report_csv(path: str | Path, metadata: dict[str, str],
                     rows: Iterable[CheckRow]) -> None:
    lines = [f"# {k}={metadata[k]}" for k in sorted(metadata)]
    lines.append(",".join(_REPORT_HEADER))
    for r in rows:
        detail = r.detail.replace(",", ";")
        lines.append(f"{r.check},{r.status},{_fmt(r.observed)},{_fmt(r.tolerance)},{detail}")
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def read_report_csv(path: str | Path) -> tuple[dict[str, str], list[CheckRow]]:
    metadata: dict[str, str] = {}
    rows: list[CheckRow] = []
    header_seen = False
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key.strip()] = value
            continue
        if not header_seen:
            if tuple(line.split(",")) != _REPORT_HEADER:
                raise ValueError(f"{path}: unexpected report header {line!r}")
            header_seen = True
            continue
        check, status, observed, tolerance, detail = line.split(",", 4)
        rows.append(CheckRow(check, status, float(observed), float(tolerance), detail))
    if not header_seen:
        raise ValueError(f"{path}: no header row found")
    return metadata, rows


def cmd_oracle_check(cfg: RunConfig) -> int:
    names = [c.strip() for c in cfg.checks.split(",") if c.strip()]
    unknown = [n for n in names if n not in _CHECK_SUITES]
    if unknown:
        raise ConfigError(f"unknown checks {unknown}; valid: {sorted(_CHECK_SUITES)}")
    rows: list[CheckRow] = []
    for name in names:
        rows.extend(_CHECK_SUITES[name](cfg))
    write_report_csv(cfg.out, _echo_metadata(cfg), rows)
    for r in rows:
        print(f"{r.status.upper():5s} {r.check}: observed={_fmt(r.observed)} "
              f"tolerance={_fmt(r.tolerance)}")
    return EXIT_OK if all(r.ok for r in rows) else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# Argument parsing


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    g = shared.add_argument_group("run parameters")
    g.add_argument("--config", metavar="FILE", help="key=value config file")
    g.add_argument("--model", choices=("exponential", "lorentzian"))
    g.add_argument("--rho0")
    g.add_argument("--gamma")
    g.add_argument("--cutoff")
    g.add_argument("--tau", help="pulse interval; accepts pi forms, "
                                 "comma-separated list for freespace")
    g.add_argument("--v", help="drive amplitude |v|")
    g.add_argument("--n-min", dest="n_min")
    g.add_argument("--n-max", dest="n_max")
    g.add_argument("--n-cycles", dest="n_cycles")
    g.add_argument("--dtau-min", dest="dtau_min")
    g.add_argument("--dtau-max", dest="dtau_max")
    g.add_argument("--dtau-steps", dest="dtau_steps")
    g.add_argument("--out")
    g.add_argument("--workers")
    t = shared.add_argument_group("tolerances and oracle resolution")
    t.add_argument("--tol-abs", dest="tol_abs")
    t.add_argument("--tol-rel", dest="tol_rel")
    t.add_argument("--max-panels", dest="max_panels")
    t.add_argument("--tol-oracle-bare", dest="tol_oracle_bare")
    t.add_argument("--tol-oracle-ratio", dest="tol_oracle_ratio")
    t.add_argument("--tol-continuum", dest="tol_continuum")
    t.add_argument("--tol-norm", dest="tol_norm")
    t.add_argument("--dt", help="oracle step; 'auto' derives it from the preconditions")
    t.add_argument("--n-modes", dest="n_modes")
    t.add_argument("--coupling-scale", dest="coupling_scale")
    t.add_argument("--checks", help="comma list from {two_level, continuum}; "
                                    "empty string runs nothing")

    parser = argparse.ArgumentParser(
        prog="pulsedecay",
        description="Decay suppression by 2pi-pulse trains: sweeps and cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("single", parents=[shared],
                   help="two-level suppression-law sweep over delta*tau")
    sub.add_parser("bath", parents=[shared],
                   help="structured-vacuum emission vs N")
    sub.add_parser("freespace", parents=[shared],
                   help="free-space integrals I and I0 vs N")
    sub.add_parser("oracle-check", parents=[shared],
                   help="time-domain oracle cross-validation report")
    return parser


_DISPATCH = {
    "single": cmd_single,
    "bath": cmd_bath,
    "freespace": cmd_freespace,
    "oracle-check": cmd_oracle_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    overrides = {k: v for k, v in vars(ns).items() if k not in ("command", "config")}
    try:
        cfg = resolve_config(ns.command, ns.config, overrides)
        return _DISPATCH[ns.command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (continuum.QuadratureNonConvergence, oracle.StepTooCoarse,
            oracle.NonPerturbative) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
