"""Feasibility analysis: collective-collapse rate vs photon scattering.

Combines the dephasing rates with the transport constraints into the single
figure of merit r = Gamma_QG / Gamma_sc, sweeps it over laser parameters, and
optimizes the separation trajectory within the sinusoidal-ramp family.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from latticedec.constants import CONSTANTS, AtomSpecies
from latticedec.decoherence import scattering_rates
from latticedec.transport import (
    ALPHA,
    LatticeConfig,
    TrajectoryProfile,
    effective_distance,
    max_acceleration,
    required_peak_acceleration,
    trap_temperature,
)

SWEEP_CSV_HEADER = (
    "omega_minus,omega_pi,delta,tau,d_eff,gamma_sc,gamma_qg,ratio,"
    "trap_temp_K,accel_ok,detuning_ok"
)


@dataclass(frozen=True)
class LocalizationModel:
    """Collapse-noise strength for one species:
    gamma_qg = (c*m_0)^4/(hbar*m_Pl)^3 * m_at^2, in 1/(m^2 s)."""

    species: AtomSpecies
    gamma_qg: float = field(init=False)

    def __post_init__(self) -> None:
        c = CONSTANTS
        strength = (
            (c.c * c.m_0) ** 4 / (c.hbar * c.m_Pl) ** 3 * self.species.mass**2
        )
        object.__setattr__(self, "gamma_qg", strength)


def qg_rate(model: LocalizationModel, d_eff: float) -> float:
    """Collective dephasing rate at a given effective separation:
    Gamma_QG = gamma_qg * d_eff^2."""
    if d_eff < 0:
        raise ValueError(f"d_eff must be >= 0, got {d_eff!r}")
    return model.gamma_qg * d_eff**2


@dataclass(frozen=True)
class FeasibilityPoint:
    """One evaluated parameter point of the rate-comparison landscape."""

    omega_minus: float
    omega_pi: float
    delta: float
    profile: TrajectoryProfile
    d_eff: float
    gamma_sc: float
    gamma_qg_rate: float
    ratio: float
    trap_temp: float
    accel_ok: bool
    detuning_ok: bool

    def csv_row(self) -> str:
        return ",".join(
            (
                repr(self.omega_minus),
                repr(self.omega_pi),
                repr(self.delta),
                repr(self.profile.tau),
                repr(self.d_eff),
                repr(self.gamma_sc),
                repr(self.gamma_qg_rate),
                repr(self.ratio),
                repr(self.trap_temp),
                "true" if self.accel_ok else "false",
                "true" if self.detuning_ok else "false",
            )
        )


def ratio_r(
    omega_pi: float,
    omega_minus: float,
    delta: float,
    species: AtomSpecies,
    profile: TrajectoryProfile,
) -> FeasibilityPoint:
    """Evaluate r = Gamma_QG/Gamma_sc and the constraint flags at one point.

    All lasers off gives gamma_sc = 0; that is reported as an infinite ratio
    rather than raising.
    """
    config = LatticeConfig(
        omega_pi=omega_pi, omega_minus=omega_minus, delta=delta, species=species
    )
    rates = scattering_rates(omega_pi, omega_minus, delta, species)
    d_eff = effective_distance(profile)
    model = LocalizationModel(species=species)
    gamma_qg_rate = qg_rate(model, d_eff)
    if rates.gamma_sc > 0.0:
        ratio = gamma_qg_rate / rates.gamma_sc
    else:
        ratio = math.inf
    return FeasibilityPoint(
        omega_minus=omega_minus,
        omega_pi=omega_pi,
        delta=delta,
        profile=profile,
        d_eff=d_eff,
        gamma_sc=rates.gamma_sc,
        gamma_qg_rate=gamma_qg_rate,
        ratio=ratio,
        trap_temp=trap_temperature(config),
        accel_ok=required_peak_acceleration(profile) <= max_acceleration(config),
        detuning_ok=not config.detuning_warning,
    )


def profile_for_effective_distance(
    d_eff: float, tau: float, ramp_fraction: float = 0.5
) -> TrajectoryProfile:
    """Profile of total duration tau whose RMS separation equals d_eff.

    ramp_fraction = T/tau in (0, 0.5]; the remainder is the plateau. Inverts
    d_eff^2 = d_max^2 * (1 + 2*(T/tau)*(ALPHA - 1)).
    """
    if not d_eff > 0:
        raise ValueError(f"d_eff must be positive, got {d_eff!r}")
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau!r}")
    if not 0.0 < ramp_fraction <= 0.5:
        raise ValueError(f"ramp_fraction must be in (0, 0.5], got {ramp_fraction!r}")
    d_max = d_eff / math.sqrt(1.0 + 2.0 * ramp_fraction * (ALPHA - 1.0))
    ramp_time = ramp_fraction * tau
    return TrajectoryProfile(
        d_max=d_max, ramp_time=ramp_time, wait_time=tau - 2.0 * ramp_time
    )


def crossing_omega_minus(
    delta: float,
    species: AtomSpecies,
    d_eff: float,
    omega_ratio: float = 3.0,
) -> float:
    """Omega_- at which r = 1 for a given detuning: solve
    (Gamma_0/8) Omega_-^2 (1 + 2/omega_ratio^2) / Delta^2 = gamma_qg d_eff^2."""
    model = LocalizationModel(species=species)
    gamma_qg_rate = model.gamma_qg * d_eff**2
    return delta * math.sqrt(
        8.0 * gamma_qg_rate / (species.gamma_0 * (1.0 + 2.0 / omega_ratio**2))
    )


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("LATTICEDEC_THREADS")
        if env is not None:
            try:
                threads = int(env)
            except ValueError:
                raise ValueError(
                    f"LATTICEDEC_THREADS must be an integer, got {env!r}"
                ) from None
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads!r}")
    return threads


@dataclass(frozen=True)
class SweepResult:
    """Cartesian-product sweep, ordered by (delta, omega_minus), plus the
    r = 1 crossing per detuning curve."""

    points: tuple[FeasibilityPoint, ...]
    crossings: dict[float, float]

    def to_csv(self, target) -> None:
        own = isinstance(target, (str, bytes)) or hasattr(target, "__fspath__")
        fh = open(target, "w", newline="\n") if own else target
        try:
            fh.write(SWEEP_CSV_HEADER + "\n")
            for point in self.points:
                fh.write(point.csv_row() + "\n")
        finally:
            if own:
                fh.close()


def sweep(
    omega_minus_values: Sequence[float] | Iterable[float],
    delta_values: Sequence[float] | Iterable[float],
    *,
    species: AtomSpecies,
    omega_ratio: float = 3.0,
    tau: float = 1.0,
    d_eff: float = 0.1,
    threads: int | None = None,
) -> SweepResult:
    """Evaluate ratio_r over the (delta, omega_minus) grid.

    The trajectory is the fixed-d_eff profile with T = tau/2, shared across
    the grid. Points are evaluated in parallel (capped by the
    LATTICEDEC_THREADS environment variable or the ``threads`` argument) and
    returned in deterministic (delta, omega_minus) order.
    """
    omegas = sorted(float(w) for w in omega_minus_values)
    deltas = sorted(float(d) for d in delta_values)
    if not omegas or not deltas:
        raise ValueError("sweep requires non-empty omega_minus and delta grids")
    if not omega_ratio > 0:
        raise ValueError(f"omega_ratio must be positive, got {omega_ratio!r}")
    profile = profile_for_effective_distance(d_eff, tau)
    grid = [(d, w) for d in deltas for w in omegas]

    def evaluate(point: tuple[float, float]) -> FeasibilityPoint:
        delta, omega = point
        return ratio_r(omega / omega_ratio, omega, delta, species, profile)

    n_workers = min(_resolve_threads(threads), len(grid))
    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            points = tuple(pool.map(evaluate, grid))
    else:
        points = tuple(evaluate(p) for p in grid)
    crossings = {
        d: crossing_omega_minus(d, species, d_eff, omega_ratio) for d in deltas
    }
    return SweepResult(points=points, crossings=crossings)


def optimize_profile(
    tau: float,
    config: LatticeConfig,
    d_max: float | None = None,
    d_eff: float | None = None,
) -> TrajectoryProfile:
    """Best profile of duration tau within the ramp family.

    The accumulated phase variance grows with the time average of d(t)^2,
    which at fixed d_max is largest when the plateau is longest relative to
    the ramps -- but at fixed tau, raising T toward tau/2 lets a larger d_max
    fit under the acceleration bound faster than the shrinking plateau costs:
    d_eff^2 = d_max^2 * f(T) with f(T) = 1 + 2*(ALPHA-1)*T/tau increasing in
    the product. The optimum is therefore the boundary T = tau/2, t_w = 0.

    Exactly one of d_max / d_eff fixes the scale. Raises when the ramp would
    need more than max_acceleration(config), reporting the minimal feasible
    tau.
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau!r}")
    if (d_max is None) == (d_eff is None):
        raise ValueError("exactly one of d_max or d_eff must be given")
    if d_max is None:
        if not d_eff > 0:
            raise ValueError(f"d_eff must be positive, got {d_eff!r}")
        d_max = d_eff / math.sqrt(ALPHA)
    if not d_max > 0:
        raise ValueError(f"d_max must be positive, got {d_max!r}")
    ramp_time = 0.5 * tau
    required = 2.0 * math.pi * d_max / ramp_time**2
    available = max_acceleration(config)
    if required > available:
        if available > 0.0:
            tau_min = math.sqrt(8.0 * math.pi * d_max / available)
            raise ValueError(
                f"d_max={d_max!r} m is unreachable within tau={tau!r} s at "
                f"max_acceleration={available!r} m/s^2; need tau >= {tau_min!r} s"
            )
        raise ValueError(
            "max_acceleration is zero (omega_minus = 0); no motion is possible"
        )
    return TrajectoryProfile(d_max=d_max, ramp_time=ramp_time, wait_time=0.0)
