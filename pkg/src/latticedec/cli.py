"""Command-line front-end.

Subcommands: ``rates``, ``overlap``, ``transport``, ``sweep``, ``optimize``,
``reproduce``. Parameters come from an optional JSON config file plus flag
overrides; flags win. Output goes to stdout or ``--out`` as CSV or JSON with
shortest-round-trip float formatting, so identical configs produce
byte-identical output. Validation failures exit nonzero with a message naming
the offending field; warnings never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from latticedec import feasibility, transport
from latticedec.constants import AtomSpecies, species_by_name

TWO_PI = 2.0 * math.pi


def _fmt(value: Any) -> str:
    """Shortest round-trip text for one CSV/report cell."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return repr(int(value))
    return repr(float(value))


def _json_ready(value: Any) -> Any:
    """JSON payloads must stay strictly standard: map non-finite floats to strings."""
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isinf(v) or math.isnan(v):
            return repr(v)
        return v
    return value


class _Output:
    """Destination for the primary payload; secondary report lines go to
    stdout when the payload is in a file, otherwise to stderr so the payload
    stays parseable."""

    def __init__(self, path: str | None) -> None:
        self.path = path
        self.fh = open(path, "w", newline="\n") if path else sys.stdout

    def write(self, text: str) -> None:
        self.fh.write(text)

    def note(self, line: str) -> None:
        stream = sys.stdout if self.path else sys.stderr
        stream.write(line + "\n")

    def close(self) -> None:
        if self.path:
            self.fh.close()


def _write_csv(out: _Output, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(cell) for cell in row) + "\n")


def _write_json(out: _Output, payload: dict) -> None:
    out.write(json.dumps(_json_ready(payload), indent=2) + "\n")


@dataclass(frozen=True)
class Param:
    """One command parameter: config key, flag, parser, constraint."""

    name: str
    kind: Callable[[str], Any] | None  # None marks a boolean switch
    default: Any
    check: str = "none"  # positive | nonnegative | positive_int | none
    help: str = ""

    @property
    def flag(self) -> str:
        return "--" + self.name.replace("_", "-")


_COMMON = [
    Param("config", str, None, help="JSON file with parameter values"),
    Param("out", str, None, help="output path (default: stdout)"),
    Param("format", str, "csv", help="output format: csv or json"),
    Param("species", str, "rb87", help="atom species name"),
]

_PARAMS: dict[str, list[Param]] = {
    "rates": [
        Param("omega_minus", float, 1e8, "nonnegative", "sigma-minus Rabi frequency (rad/s)"),
        Param("omega_pi", float, None, "nonnegative", "pi Rabi frequency (rad/s, default omega_minus/3)"),
        Param("delta", float, TWO_PI * 1e12, "positive", "detuning (rad/s)"),
        Param("tau", float, 1.0, "positive", "round-trip time (s)"),
        Param("d_eff", float, 0.1, "positive", "effective separation (m)"),
    ],
    "overlap": [
        Param("n_atoms", int, 1, "positive_int", "atom number N"),
        Param("gamma_sc", float, None, "nonnegative", "local dephasing rate (1/s, default: point-A value)"),
        Param("gamma_qg", float, None, "nonnegative", "collective rate Gamma_QG (1/s, default: point-A value)"),
        Param("t_max", float, 3.0, "positive", "end of the time grid (s)"),
        Param("points", int, 61, "positive_int", "number of grid points"),
        Param("include_asymptotic", None, False, help="add the large-N overlap column"),
        Param("include_ghz", None, False, help="add GHZ overlap columns"),
    ],
    "transport": [
        Param("omega_minus", float, None, "nonnegative", "sigma-minus Rabi frequency (rad/s, default: a_max = 4 m/s^2)"),
        Param("omega_pi", float, None, "nonnegative", "pi Rabi frequency (rad/s, default omega_minus/3)"),
        Param("delta", float, TWO_PI * 1e10, "positive", "detuning (rad/s)"),
        Param("d_max", float, 1e-3, "positive", "peak separation (m)"),
        Param("ramp_time", float, None, "positive", "ramp duration T (s); exclusive with accel-ratio"),
        Param("wait_time", float, 0.0, "nonnegative", "plateau duration (s)"),
        Param("accel_ratio", float, None, "positive", "peak acceleration as a fraction of a_max (default 0.5)"),
        Param("x0", float, 0.0, help="initial atom position (m)"),
        Param("v0", float, 0.0, help="initial atom velocity (m/s)"),
        Param("dt", float, None, "positive", "RK4 step (s, default: 1% of the trap period)"),
        Param("static", None, False, help="hold the lattice still instead of following a profile"),
        Param("t_final", float, None, "positive", "duration of a static run (s, default: 100 trap periods)"),
        Param("sample_every", int, None, "positive_int", "keep every k-th sample row (default: at most ~2000 rows)"),
    ],
    "sweep": [
        Param("omega_min", float, 1e6, "positive", "smallest Omega_- (rad/s)"),
        Param("omega_max", float, 1e10, "positive", "largest Omega_- (rad/s)"),
        Param("omega_points", int, 41, "positive_int", "grid size in Omega_-"),
        Param("deltas", str, None, help="comma-separated detunings (rad/s, default 2pi x {10,100,1000} GHz)"),
        Param("omega_ratio", float, 3.0, "positive", "Omega_-/Omega_pi"),
        Param("tau", float, 1.0, "positive", "round-trip time (s)"),
        Param("d_eff", float, 0.1, "positive", "effective separation (m)"),
        Param("threads", int, None, "positive_int", "parallel workers (default: LATTICEDEC_THREADS or all cores)"),
    ],
    "optimize": [
        Param("tau", float, 2.0, "positive", "round-trip time (s)"),
        Param("d_max", float, None, "positive", "target peak separation (m)"),
        Param("d_eff", float, None, "positive", "target effective separation (m, default 0.1 when d_max absent)"),
        Param("omega_minus", float, 1e8, "nonnegative", "sigma-minus Rabi frequency (rad/s)"),
        Param("omega_pi", float, None, "nonnegative", "pi Rabi frequency (rad/s, default omega_minus/3)"),
        Param("delta", float, TWO_PI * 1e12, "positive", "detuning (rad/s)"),
    ],
    "reproduce": [],
}


def _check_value(param: Param, value: Any) -> Any:
    if value is None:
        return None
    if param.kind is None:
        if not isinstance(value, bool):
            raise ValueError(f"{param.name} must be a boolean, got {value!r}")
        return value
    if param.kind in (float, int):
        try:
            value = param.kind(value)
        except (TypeError, ValueError):
            raise ValueError(f"{param.name} must be a number, got {value!r}") from None
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"{param.name} must be finite, got {value!r}")
        if param.check == "positive" and not value > 0:
            raise ValueError(f"{param.name} must be positive, got {value!r}")
        if param.check == "nonnegative" and value < 0:
            raise ValueError(f"{param.name} must be >= 0, got {value!r}")
        if param.check == "positive_int" and value < 1:
            raise ValueError(f"{param.name} must be >= 1, got {value!r}")
    return value


def _resolve(args: argparse.Namespace, command: str) -> dict[str, Any]:
    """Merge defaults, config-file values, and flags (flags win)."""
    params = _COMMON + _PARAMS[command]
    by_name = {p.name: p for p in params}
    config_path = args.config
    file_values: dict[str, Any] = {}
    if config_path is not None:
        try:
            with open(config_path, encoding="utf-8") as fh:
                file_values = json.load(fh)
        except OSError as exc:
            raise ValueError(f"cannot read config {config_path!r}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ValueError(f"config {config_path!r} is not valid JSON: {exc}") from None
        if not isinstance(file_values, dict):
            raise ValueError(f"config {config_path!r} must hold a JSON object")
        for key in file_values:
            if key not in by_name or key == "config":
                raise ValueError(f"unknown config key {key!r} for command {command!r}")
    resolved: dict[str, Any] = {}
    for p in params:
        if p.name == "config":
            continue
        value = getattr(args, p.name, None)
        if value is None:
            value = file_values.get(p.name, p.default)
        resolved[p.name] = _check_value(p, value)
    if resolved["format"] not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {resolved['format']!r}")
    return resolved


def _species(ns: dict[str, Any]) -> AtomSpecies:
    return species_by_name(ns["species"])


def _omega_pi(ns: dict[str, Any], omega_minus: float) -> float:
    return ns["omega_pi"] if ns["omega_pi"] is not None else omega_minus / 3.0


def _angular_line(name: str, value: float) -> str:
    return f"{name} = {value!r} rad/s ({name}/2pi = {value / TWO_PI!r} Hz)"


def cmd_rates(ns: dict[str, Any]) -> int:
    from latticedec.decoherence import scattering_rates

    species = _species(ns)
    omega_minus = ns["omega_minus"]
    omega_pi = _omega_pi(ns, omega_minus)
    delta, tau, d_eff = ns["delta"], ns["tau"], ns["d_eff"]
    profile = feasibility.profile_for_effective_distance(d_eff, tau)
    point = feasibility.ratio_r(omega_pi, omega_minus, delta, species, profile)
    rates = scattering_rates(omega_pi, omega_minus, delta, species)
    model = feasibility.LocalizationModel(species=species)
    config = transport.LatticeConfig(
        omega_pi=omega_pi, omega_minus=omega_minus, delta=delta, species=species
    )
    a_max = transport.max_acceleration(config)
    a_req = transport.required_peak_acceleration(profile)

    out = _Output(ns["out"])
    try:
        if ns["format"] == "json":
            payload = {
                "species": species.name,
                "omega_minus_rad_s": omega_minus,
                "omega_pi_rad_s": omega_pi,
                "delta_rad_s": delta,
                "tau_s": tau,
                "d_eff_m": d_eff,
                "d_max_m": profile.d_max,
                "gamma_g_1_s": rates.gamma_g,
                "gamma_s_1_s": rates.gamma_s,
                "gamma_sc_1_s": rates.gamma_sc,
                "gamma_qg_strength_1_m2_s": model.gamma_qg,
                "gamma_qg_rate_1_s": point.gamma_qg_rate,
                "ratio": point.ratio,
                "trap_temp_K": point.trap_temp,
                "a_max_m_s2": a_max,
                "a_peak_required_m_s2": a_req,
                "accel_ok": point.accel_ok,
                "detuning_ok": point.detuning_ok,
                "warnings": []
                + (["detuning exceeds 0.3 x fine-structure splitting"] if not point.detuning_ok else [])
                + (["required peak acceleration exceeds a_max"] if not point.accel_ok else []),
            }
            _write_json(out, payload)
        else:
            lines = [
                f"species = {species.name}",
                _angular_line("omega_minus", omega_minus),
                _angular_line("omega_pi", omega_pi),
                _angular_line("delta", delta),
                f"tau = {tau!r} s",
                f"d_eff = {d_eff!r} m",
                f"d_max = {profile.d_max!r} m",
                f"gamma_g = {rates.gamma_g!r} 1/s",
                f"gamma_s = {rates.gamma_s!r} 1/s",
                f"gamma_sc = {rates.gamma_sc!r} 1/s",
                f"gamma_qg_strength = {model.gamma_qg!r} 1/(m^2 s)",
                f"gamma_qg_rate = {point.gamma_qg_rate!r} 1/s",
                f"ratio = {point.ratio!r}",
                f"trap_temp = {point.trap_temp!r} K",
                f"a_max = {a_max!r} m/s^2",
                f"a_peak_required = {a_req!r} m/s^2",
                f"accel_ok = {_fmt(point.accel_ok)}",
                f"detuning_ok = {_fmt(point.detuning_ok)}",
            ]
            if not point.detuning_ok:
                lines.append(
                    "warning: detuning exceeds 0.3 x fine-structure splitting; "
                    "two-level reduction marginal"
                )
            if not point.accel_ok:
                lines.append(
                    "warning: required peak acceleration exceeds a_max; "
                    "the lattice cannot drag the atom through this profile"
                )
            out.write("\n".join(lines) + "\n")
    finally:
        out.close()
    return 0


def cmd_overlap(ns: dict[str, Any]) -> int:
    from latticedec.decoherence import (
        overlap_ghz,
        overlap_qg_asymptotic,
        overlap_qg_quadrature,
        overlap_sc,
        scattering_rates,
    )

    species = _species(ns)
    n = ns["n_atoms"]
    gamma_sc = ns["gamma_sc"]
    if gamma_sc is None:
        gamma_sc = scattering_rates(1e8 / 3.0, 1e8, TWO_PI * 1e12, species).gamma_sc
    gamma_qg = ns["gamma_qg"]
    if gamma_qg is None:
        model = feasibility.LocalizationModel(species=species)
        gamma_qg = feasibility.qg_rate(model, 0.1)
    if ns["include_asymptotic"] and n < 10:
        sys.stderr.write(
            f"warning: the asymptotic overlap assumes large N; N={n} is small, "
            "treat the column as indicative only\n"
        )
    header = ["t", "o_sc", "o_qg"]
    if ns["include_asymptotic"]:
        header.append("o_qg_asymptotic")
    if ns["include_ghz"]:
        header += ["o_ghz_local", "o_ghz_collective"]
    rows: list[list[Any]] = []
    for t in np.linspace(0.0, ns["t_max"], ns["points"]):
        t = float(t)
        gamma_t = 2.0 * gamma_qg * t
        row: list[Any] = [t, overlap_sc(n, gamma_sc, t), overlap_qg_quadrature(n, gamma_t)]
        if ns["include_asymptotic"]:
            row.append(overlap_qg_asymptotic(n, gamma_t) if gamma_t > 0 else math.nan)
        if ns["include_ghz"]:
            row.append(overlap_ghz(n, "local", gamma_sc * t))
            row.append(overlap_ghz(n, "collective", gamma_t))
        rows.append(row)

    out = _Output(ns["out"])
    try:
        if ns["format"] == "json":
            _write_json(
                out,
                {
                    "n_atoms": n,
                    "gamma_sc_1_s": gamma_sc,
                    "gamma_qg_1_s": gamma_qg,
                    "columns": header,
                    "rows": rows,
                },
            )
        else:
            _write_csv(out, header, rows)
    finally:
        out.close()
    return 0


def cmd_transport(ns: dict[str, Any]) -> int:
    species = _species(ns)
    delta = ns["delta"]
    if ns["omega_minus"] is None:
        config = transport.config_for_max_acceleration(species, delta, a_max=4.0)
        omega_minus = config.omega_minus
    else:
        omega_minus = ns["omega_minus"]
    omega_pi = _omega_pi(ns, omega_minus)
    config = transport.LatticeConfig(
        omega_pi=omega_pi, omega_minus=omega_minus, delta=delta, species=species
    )
    if ns["static"]:
        profile = None
        t_final = ns["t_final"]
        if t_final is None:
            t_final = 100.0 * TWO_PI / transport.omega_trap(config)
    else:
        if ns["ramp_time"] is not None and ns["accel_ratio"] is not None:
            raise ValueError("give either ramp_time or accel_ratio, not both")
        if ns["ramp_time"] is not None:
            profile = transport.TrajectoryProfile(
                d_max=ns["d_max"], ramp_time=ns["ramp_time"], wait_time=ns["wait_time"]
            )
        else:
            accel_ratio = ns["accel_ratio"] if ns["accel_ratio"] is not None else 0.5
            profile = transport.profile_for_accel_ratio(
                config, ns["d_max"], accel_ratio, ns["wait_time"]
            )
        t_final = None
    result = transport.simulate_eom(
        config, profile, ns["x0"], ns["v0"], ns["dt"], t_final=t_final
    )

    if profile is None:
        a_ratio = 0.0
    else:
        a_ratio = transport.required_peak_acceleration(profile) / transport.max_acceleration(config)
    tracking_error = float(
        np.max(np.abs(result.atom_positions - result.lattice_positions))
    )
    verdict = "follows" if result.follows else "slips"

    stride = ns["sample_every"]
    if stride is None:
        stride = max(1, len(result.times) // 2000)
    x_ref = result.lattice_positions[0]
    rows = [
        [t, xa, xl, xl - x_ref]
        for t, xa, xl in zip(
            result.times[::stride],
            result.atom_positions[::stride],
            result.lattice_positions[::stride],
        )
    ]

    out = _Output(ns["out"])
    try:
        if ns["format"] == "json":
            _write_json(
                out,
                {
                    "verdict": verdict,
                    "follows": result.follows,
                    "a_peak_over_a_max": a_ratio,
                    "max_tracking_error_m": tracking_error,
                    "columns": ["t", "x_atom", "x_lattice", "separation"],
                    "rows": rows,
                },
            )
        else:
            _write_csv(out, ["t", "x_atom", "x_lattice", "separation"], rows)
            out.note(f"verdict = {verdict}")
            out.note(f"a_peak_over_a_max = {a_ratio!r}")
            out.note(f"max_tracking_error = {tracking_error!r} m")
    finally:
        out.close()
    return 0


def _parse_deltas(raw: str | list | None) -> list[float]:
    if raw is None:
        return [TWO_PI * 1e10, TWO_PI * 1e11, TWO_PI * 1e12]
    try:
        if isinstance(raw, (list, tuple)):
            values = [float(part) for part in raw]
        else:
            values = [float(part) for part in raw.split(",") if part.strip()]
    except (TypeError, ValueError):
        raise ValueError(f"deltas must be comma-separated numbers, got {raw!r}") from None
    if not values:
        raise ValueError("deltas must contain at least one value")
    if any(not v > 0 for v in values):
        raise ValueError(f"deltas must be positive, got {raw!r}")
    return values


def cmd_sweep(ns: dict[str, Any]) -> int:
    species = _species(ns)
    if ns["omega_max"] < ns["omega_min"]:
        raise ValueError(
            f"omega_max={ns['omega_max']!r} must be >= omega_min={ns['omega_min']!r}"
        )
    omegas = np.logspace(
        math.log10(ns["omega_min"]), math.log10(ns["omega_max"]), ns["omega_points"]
    )
    deltas = _parse_deltas(ns["deltas"])
    result = feasibility.sweep(
        omegas,
        deltas,
        species=species,
        omega_ratio=ns["omega_ratio"],
        tau=ns["tau"],
        d_eff=ns["d_eff"],
        threads=ns["threads"],
    )
    out = _Output(ns["out"])
    try:
        if ns["format"] == "json":
            _write_json(
                out,
                {
                    "columns": feasibility.SWEEP_CSV_HEADER.split(","),
                    "rows": [
                        [
                            p.omega_minus, p.omega_pi, p.delta, p.profile.tau,
                            p.d_eff, p.gamma_sc, p.gamma_qg_rate, p.ratio,
                            p.trap_temp, p.accel_ok, p.detuning_ok,
                        ]
                        for p in result.points
                    ],
                    "r_equals_1_crossings": [
                        [d, w] for d, w in sorted(result.crossings.items())
                    ],
                },
            )
        else:
            result.to_csv(out.fh)
            for d, w in sorted(result.crossings.items()):
                out.note(f"r_equals_1: delta = {d!r} rad/s at omega_minus = {w!r} rad/s")
    finally:
        out.close()
    return 0


def cmd_optimize(ns: dict[str, Any]) -> int:
    species = _species(ns)
    omega_minus = ns["omega_minus"]
    omega_pi = _omega_pi(ns, omega_minus)
    config = transport.LatticeConfig(
        omega_pi=omega_pi, omega_minus=omega_minus, delta=ns["delta"], species=species
    )
    d_max, d_eff = ns["d_max"], ns["d_eff"]
    if d_max is None and d_eff is None:
        d_eff = 0.1
    if d_max is not None and d_eff is not None:
        raise ValueError("give either d_max or d_eff, not both")
    profile = feasibility.optimize_profile(ns["tau"], config, d_max=d_max, d_eff=d_eff)
    point = feasibility.ratio_r(omega_pi, omega_minus, ns["delta"], species, profile)
    a_max = transport.max_acceleration(config)
    a_req = transport.required_peak_acceleration(profile)

    out = _Output(ns["out"])
    try:
        if ns["format"] == "json":
            _write_json(
                out,
                {
                    "tau_s": profile.tau,
                    "ramp_time_s": profile.ramp_time,
                    "wait_time_s": profile.wait_time,
                    "d_max_m": profile.d_max,
                    "d_eff_m": point.d_eff,
                    "a_peak_required_m_s2": a_req,
                    "a_max_m_s2": a_max,
                    "accel_ok": point.accel_ok,
                    "ratio": point.ratio,
                },
            )
        else:
            out.write(
                "\n".join(
                    [
                        f"tau = {profile.tau!r} s",
                        f"ramp_time = {profile.ramp_time!r} s",
                        f"wait_time = {profile.wait_time!r} s",
                        f"d_max = {profile.d_max!r} m",
                        f"d_eff = {point.d_eff!r} m",
                        f"a_peak_required = {a_req!r} m/s^2",
                        f"a_max = {a_max!r} m/s^2",
                        f"accel_ok = {_fmt(point.accel_ok)}",
                        f"ratio = {point.ratio!r}",
                    ]
                )
                + "\n"
            )
    finally:
        out.close()
    return 0


def cmd_reproduce(ns: dict[str, Any], figure: str) -> int:
    species = _species(ns)
    out = _Output(ns["out"])
    try:
        if figure == "fig2b":
            model = feasibility.LocalizationModel(species=species)
            # 20 points per decade hits d_eff = 10^-1 m exactly at index 40.
            exponents = np.arange(61) / 20.0 - 3.0
            rows = []
            for e in exponents:
                d = float(10.0**e)
                rows.append([d, model.gamma_qg * d * d, bool(e == -1.0)])
            header = ["d_eff", "gamma_qg", "point_a"]
        else:
            omegas = [float(10.0 ** (6.0 + i / 20.0)) for i in range(81)]
            deltas = [TWO_PI * 1e10, TWO_PI * 1e11, TWO_PI * 1e12]
            result = feasibility.sweep(omegas, deltas, species=species, tau=1.0, d_eff=0.1)
            rows = [
                [
                    p.omega_minus, p.omega_pi, p.delta, p.profile.tau, p.d_eff,
                    p.gamma_sc, p.gamma_qg_rate, p.ratio, p.trap_temp,
                    p.accel_ok, p.detuning_ok,
                    bool(p.omega_minus == 1e8 and p.delta == TWO_PI * 1e12),
                ]
                for p in result.points
            ]
            header = feasibility.SWEEP_CSV_HEADER.split(",") + ["point_a"]
        if ns["format"] == "json":
            _write_json(out, {"figure": figure, "columns": header, "rows": rows})
        else:
            _write_csv(out, header, rows)
    finally:
        out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticedec",
        description=(
            "Compare local (photon-scattering) and collective (collapse-model) "
            "dephasing of atoms in a state-dependent optical lattice."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "rates": "dephasing rates, ratio r, and constraint flags at one parameter point",
        "overlap": "overlap decay curves for product and GHZ states",
        "transport": "integrate the atom's motion through one separation round trip",
        "sweep": "ratio r over an (omega_minus, delta) grid, with r = 1 crossings",
        "optimize": "best separation profile for a given round-trip time",
        "reproduce": "regenerate the headline parameter-scan datasets",
    }
    for command, params in _PARAMS.items():
        p = sub.add_parser(command, help=descriptions[command])
        if command == "reproduce":
            p.add_argument("figure", choices=["fig2a", "fig2b"], help="dataset to regenerate")
        for param in _COMMON + params:
            if param.kind is None:
                p.add_argument(param.flag, dest=param.name, action="store_const",
                               const=True, default=None, help=param.help)
            else:
                p.add_argument(param.flag, dest=param.name, type=str, default=None,
                               help=param.help)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ns = _resolve(args, args.command)
        if args.command == "rates":
            return cmd_rates(ns)
        if args.command == "overlap":
            return cmd_overlap(ns)
        if args.command == "transport":
            return cmd_transport(ns)
        if args.command == "sweep":
            return cmd_sweep(ns)
        if args.command == "optimize":
            return cmd_optimize(ns)
        return cmd_reproduce(ns, args.figure)
    except (ValueError, RuntimeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
