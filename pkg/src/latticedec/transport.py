"""State-dependent lattice transport: potentials, separation trajectory,
equation of motion, and the physical constraints on moving an atom.

Conventions. The |g⟩ state sits in the static pi lattice, the |s⟩ state in
the sigma-minus lattice that is displaced by d(t). Lattice depths are
V0_j = hbar*Omega_j^2/(4*Delta). The separation trajectory is a C1 piecewise
curve: a sinusoidal-ramp rise to d_max over the ramp time T,

    d(t) = d_max * (t/T - sin(2*pi*t/T)/(2*pi)),     0 <= t <= T,

a plateau at d_max for the wait time t_w, and the mirrored descent, so the
round trip takes tau = 2*T + t_w and d'(0) = d'(T) = d'(tau) = 0.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from latticedec import _kernels
from latticedec.constants import CONSTANTS, AtomSpecies

# Time average of the squared ramp: alpha = (1/24)*(8 + 15/pi^2), the value of
# integral_0^1 (1 - s + sin(2*pi*s)/(2*pi))^2 ds. For a profile with no wait
# time this gives d_eff = sqrt(alpha)*d_max ~ 0.63*d_max.
ALPHA: float = (8.0 + 15.0 / math.pi**2) / 24.0

# Detunings beyond this fraction of the fine-structure splitting start to
# couple appreciably to the other excited-state manifold.
DETUNING_WARNING_FRACTION: float = 0.3


@dataclass(frozen=True)
class LatticeConfig:
    """Laser parameters of the state-dependent lattice for one species.

    The lattice depths ``v0_pi`` and ``v0_minus`` are always recomputed from
    (Omega, Delta) and cannot be set independently.
    """

    omega_pi: float
    omega_minus: float
    delta: float
    species: AtomSpecies
    v0_pi: float = field(init=False)
    v0_minus: float = field(init=False)

    def __post_init__(self) -> None:
        if self.omega_pi < 0 or self.omega_minus < 0:
            raise ValueError(
                f"Rabi frequencies must be >= 0, got omega_pi={self.omega_pi!r}, "
                f"omega_minus={self.omega_minus!r}"
            )
        if not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta!r}")
        splitting = self.species.fine_structure_splitting
        if self.delta >= splitting:
            raise ValueError(
                f"delta={self.delta!r} rad/s reaches the fine-structure "
                f"splitting {splitting!r} rad/s; the two-level reduction breaks down"
            )
        object.__setattr__(
            self, "v0_pi", CONSTANTS.hbar * self.omega_pi**2 / (4.0 * self.delta)
        )
        object.__setattr__(
            self, "v0_minus", CONSTANTS.hbar * self.omega_minus**2 / (4.0 * self.delta)
        )

    @property
    def detuning_warning(self) -> bool:
        """True when delta exceeds 0.3 x fine-structure splitting."""
        return self.delta > DETUNING_WARNING_FRACTION * self.species.fine_structure_splitting


@dataclass(frozen=True)
class TrajectoryProfile:
    """Round-trip separation profile: ramp up, hold, mirrored ramp down."""

    d_max: float
    ramp_time: float
    wait_time: float = 0.0
    tau: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.d_max > 0:
            raise ValueError(f"d_max must be positive, got {self.d_max!r}")
        if not self.ramp_time > 0:
            raise ValueError(f"ramp_time must be positive, got {self.ramp_time!r}")
        if self.wait_time < 0:
            raise ValueError(f"wait_time must be >= 0, got {self.wait_time!r}")
        object.__setattr__(self, "tau", 2.0 * self.ramp_time + self.wait_time)


def _ramp(t: float, profile: TrajectoryProfile) -> float:
    u = t / profile.ramp_time
    return profile.d_max * (u - math.sin(2.0 * math.pi * u) / (2.0 * math.pi))


def separation(t: float, profile: TrajectoryProfile) -> float:
    """Lattice separation d(t) at time t in [0, tau]."""
    tau = profile.tau
    if t < 0.0 or t > tau:
        # Tolerate endpoint roundoff from t grids built as tau*i/n.
        if abs(t) <= 1e-12 * tau or abs(t - tau) <= 1e-12 * tau:
            t = min(max(t, 0.0), tau)
        else:
            raise ValueError(f"t={t!r} outside the trajectory domain [0, {tau!r}]")
    T = profile.ramp_time
    if t <= T:
        return _ramp(t, profile)
    if t <= T + profile.wait_time:
        return profile.d_max
    return _ramp(tau - t, profile)


def separation_samples(times: np.ndarray, profile: TrajectoryProfile) -> np.ndarray:
    """Vectorized ``separation`` over a time grid."""
    ts = np.asarray(times, dtype=float)
    return np.array([separation(float(t), profile) for t in np.ravel(ts)]).reshape(ts.shape)


def potential_g(x: float, config: LatticeConfig) -> float:
    """Trapping potential seen by |g>: V0_pi * cos^2(kx)."""
    return config.v0_pi * math.cos(config.species.k * x) ** 2


def potential_s(x: float, phi: float, config: LatticeConfig) -> float:
    """Trapping potential seen by |s>: V0_pi cos^2(kx) + V0_minus cos^2(kx + phi)."""
    k = config.species.k
    return (
        config.v0_pi * math.cos(k * x) ** 2
        + config.v0_minus * math.cos(k * x + phi) ** 2
    )


def _adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, eps: float
) -> float:
    """Adaptive Simpson quadrature with Richardson acceptance (|S2-S1| <= 15 eps)."""

    def rec(
        a: float, b: float, fa: float, fm: float, fb: float,
        whole: float, eps: float, depth: int,
    ) -> float:
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = f(lm)
        frm = f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        if depth >= 50 or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        half = 0.5 * eps
        return rec(a, m, fa, flm, fm, left, half, depth + 1) + rec(
            m, b, fm, frm, fb, right, half, depth + 1
        )

    if b <= a:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return rec(a, b, fa, fm, fb, whole, eps, 0)


def integrate_separation_squared(
    profile: TrajectoryProfile, t_hi: float, rel_tol: float = 1e-10
) -> float:
    """integral_0^t_hi d(t')^2 dt', integrated piece by piece so the
    quadrature only ever sees smooth integrands."""
    tau = profile.tau
    if t_hi < 0.0 or t_hi > tau * (1.0 + 1e-12):
        raise ValueError(f"t={t_hi!r} outside the trajectory domain [0, {tau!r}]")
    t_hi = min(t_hi, tau)
    breaks = [0.0, profile.ramp_time, profile.ramp_time + profile.wait_time, tau]
    f = lambda t: separation(t, profile) ** 2
    total = 0.0
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        if lo >= t_hi:
            break
        hi = min(hi, t_hi)
        if hi <= lo:
            continue
        seg_eps = rel_tol * profile.d_max**2 * (hi - lo)
        total += _adaptive_simpson(f, lo, hi, seg_eps)
    return total


def effective_distance(profile: TrajectoryProfile) -> float:
    """Root-mean-square separation over the round trip.

    Evaluated from the closed form d_eff^2 = d_max^2*(1 + (2T/tau)*(ALPHA-1))
    and cross-checked against direct quadrature of d(t)^2; the two routes must
    agree to 1e-9 relative.
    """
    tau = profile.tau
    closed = profile.d_max * math.sqrt(
        1.0 + 2.0 * profile.ramp_time / tau * (ALPHA - 1.0)
    )
    quad = math.sqrt(integrate_separation_squared(profile, tau) / tau)
    if abs(quad - closed) > 1e-9 * closed:
        raise RuntimeError(
            f"effective-distance routes disagree: closed form {closed!r}, "
            f"quadrature {quad!r}"
        )
    return closed


def max_acceleration(config: LatticeConfig) -> float:
    """Largest acceleration the moving lattice can impart: (hbar k/m) Omega_-^2/(4 Delta)."""
    species = config.species
    return (
        CONSTANTS.hbar
        * species.k
        / species.mass
        * config.omega_minus**2
        / (4.0 * config.delta)
    )


def required_peak_acceleration(profile: TrajectoryProfile) -> float:
    """Peak |d''(t)| of the sinusoidal ramp: 2 pi d_max / T^2."""
    return 2.0 * math.pi * profile.d_max / profile.ramp_time**2


def trap_temperature(config: LatticeConfig) -> float:
    """Temperature equivalent of two axial trap quanta,
    T_tr = (hbar^(3/2)/k_B) * sqrt(2) k Omega_- / sqrt(m Delta)."""
    species = config.species
    return (
        CONSTANTS.hbar**1.5
        / CONSTANTS.k_B
        * math.sqrt(2.0)
        * species.k
        / math.sqrt(species.mass)
        * config.omega_minus
        / math.sqrt(config.delta)
    )


def omega_trap(config: LatticeConfig) -> float:
    """Harmonic frequency at the bottom of a moving-lattice well: k sqrt(2 V0_-/m)."""
    species = config.species
    return species.k * math.sqrt(2.0 * config.v0_minus / species.mass)


def eom_timestep_limit(config: LatticeConfig) -> float:
    """Largest usable RK4 step: 5% of the trap oscillation period."""
    w = omega_trap(config)
    if w == 0.0:
        return math.inf
    return 0.05 * 2.0 * math.pi / w


def config_for_max_acceleration(
    species: AtomSpecies,
    delta: float,
    a_max: float,
    omega_ratio: float = 3.0,
) -> LatticeConfig:
    """Lattice config whose moving lattice saturates at the given a_max,
    with Omega_pi = Omega_-/omega_ratio."""
    if not a_max > 0:
        raise ValueError(f"a_max must be positive, got {a_max!r}")
    omega_minus = math.sqrt(4.0 * delta * species.mass * a_max / (CONSTANTS.hbar * species.k))
    return LatticeConfig(
        omega_pi=omega_minus / omega_ratio,
        omega_minus=omega_minus,
        delta=delta,
        species=species,
    )


def profile_for_accel_ratio(
    config: LatticeConfig,
    d_max: float,
    accel_ratio: float,
    wait_time: float = 0.0,
) -> TrajectoryProfile:
    """Profile whose peak ramp acceleration is accel_ratio x max_acceleration(config)."""
    if not accel_ratio > 0:
        raise ValueError(f"accel_ratio must be positive, got {accel_ratio!r}")
    a_peak = accel_ratio * max_acceleration(config)
    if not a_peak > 0:
        raise ValueError("max_acceleration is zero; cannot scale a profile to it")
    ramp_time = math.sqrt(2.0 * math.pi * d_max / a_peak)
    return TrajectoryProfile(d_max=d_max, ramp_time=ramp_time, wait_time=wait_time)


@dataclass(frozen=True)
class EomResult:
    """Sampled trajectory of one atom dragged by the moving lattice."""

    times: np.ndarray
    atom_positions: np.ndarray
    lattice_positions: np.ndarray
    follows: bool

    def __post_init__(self) -> None:
        if not (
            len(self.times) == len(self.atom_positions) == len(self.lattice_positions)
        ):
            raise ValueError("result arrays must have equal length")
        for name in ("times", "atom_positions", "lattice_positions"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def to_csv(self, target) -> None:
        """Write columns t, x_atom, x_lattice, separation to a path or text file."""
        own = isinstance(target, (str, bytes)) or hasattr(target, "__fspath__")
        fh = open(target, "w", newline="\n") if own else target
        try:
            fh.write("t,x_atom,x_lattice,separation\n")
            x_ref = float(self.lattice_positions[0])
            for t, xa, xl in zip(self.times, self.atom_positions, self.lattice_positions):
                fh.write(
                    f"{float(t)!r},{float(xa)!r},{float(xl)!r},{float(xl) - x_ref!r}\n"
                )
        finally:
            if own:
                fh.close()


def eom_energy(config: LatticeConfig, x: float, v: float, d: float = 0.0) -> float:
    """Total mechanical energy of the atom in the (possibly displaced) moving
    lattice, with the potential zeroed at the well bottom:
    E = m v^2/2 + (V0_-/2)(1 - cos(2k(x - d)))."""
    species = config.species
    return 0.5 * species.mass * v**2 + 0.5 * config.v0_minus * (
        1.0 - math.cos(2.0 * species.k * (x - d))
    )


def simulate_eom(
    config: LatticeConfig,
    profile: TrajectoryProfile | None,
    x0: float = 0.0,
    v0: float = 0.0,
    dt: float | None = None,
    *,
    t_final: float | None = None,
) -> EomResult:
    """Integrate the atom's motion in the moving lattice,

        x'' = -(V0_- k / m) sin(2k (x - d(t))),

    with classic RK4. ``profile`` gives d(t); pass None for a static lattice,
    in which case ``t_final`` sets the duration. The default step is 1% of the
    trap period; steps above 5% of the period are rejected.
    """
    species = config.species
    k = species.k
    if config.v0_minus <= 0.0:
        raise ValueError("simulate_eom needs a nonzero moving lattice (omega_minus > 0)")
    limit = eom_timestep_limit(config)
    if dt is None:
        dt = 0.2 * limit
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if dt >= limit:
        raise ValueError(
            f"dt={dt!r} s cannot resolve the trap oscillation; need dt < {limit!r} s"
        )
    if profile is None:
        if t_final is None:
            raise ValueError("a static run (profile=None) requires t_final")
    else:
        t_final = profile.tau
    if not t_final > 0:
        raise ValueError(f"t_final must be positive, got {t_final!r}")

    n_steps = max(1, math.ceil(t_final / dt - 1e-9))
    dt_eff = t_final / n_steps
    t_half = np.linspace(0.0, t_final, 2 * n_steps + 1)
    if profile is None:
        d_half = np.zeros_like(t_half)
    else:
        d_half = separation_samples(t_half, profile)
    accel = config.v0_minus * k / species.mass
    xs, _vs = _kernels.eom_rk4(x0, v0, dt_eff, n_steps, accel, 2.0 * k, 2.0 * k * d_half)

    times = t_half[::2]
    d_grid = d_half[::2]
    # The atom starts in the well nearest x0; wells sit on the half-wavelength
    # grid and ride along with d(t).
    well_spacing = math.pi / k
    x_ref = round(x0 / well_spacing) * well_spacing
    lattice_positions = x_ref + d_grid
    follows = bool(np.max(np.abs(xs - lattice_positions)) < species.wavelength / 4.0)
    return EomResult(
        times=times,
        atom_positions=xs,
        lattice_positions=lattice_positions,
        follows=follows,
    )
