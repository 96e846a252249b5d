"""Dephasing channels for N lattice atoms and the overlap observables.

Two channels act on states expressed in the tensor-product z-basis (bit 0 of
the basis index is atom 0; bit value 0 means |g>, 1 means |s>):

* local dephasing from lattice-photon scattering at rate ``gamma_sc`` per
  atom, which multiplies the coherence between basis states l, l' by
  exp(-gamma_sc * t * h(l, l')) with h the Hamming distance;

* collective dephasing driven by an accumulated Gaussian phase of variance
  ``gamma_t`` on the total z-spin S_z(l) = sum_i (2 l_i - 1), which multiplies
  the same coherence by exp(-gamma_t * (S_z(l) - S_z(l'))**2 / 8).

The factor-of-8 convention makes a single atom's coherence decay as
exp(-gamma_t/2), so a constant collective rate Gamma_QG (with
gamma_t = 2*Gamma_QG*t) dephases one atom at exactly Gamma_QG, and the
channels reproduce the master equation

    drho/dt = (Gamma_sc/2) sum_i (sigma_z^i rho sigma_z^i - rho)
              + (Gamma_QG(t)/2) (S_z rho S_z - (S_z^2 rho + rho S_z^2)/2),

which ``lindblad_evolve`` integrates directly as an independent cross-check.
Both generators are diagonal in the product basis, so everything here reduces
to elementwise factors on the density matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Literal

import numpy as np

from latticedec import _kernels
from latticedec.transport import TrajectoryProfile, integrate_separation_squared

MAX_ATOMS_DENSE = 12
MAX_ATOMS_LINDBLAD = 8


@dataclass(frozen=True)
class ScatteringRates:
    """Photon-scattering rates of the two trapped states and their sum."""

    gamma_g: float
    gamma_s: float
    gamma_sc: float = field(init=False)

    def __post_init__(self) -> None:
        if self.gamma_g < 0 or self.gamma_s < 0:
            raise ValueError(
                f"rates must be >= 0, got gamma_g={self.gamma_g!r}, gamma_s={self.gamma_s!r}"
            )
        object.__setattr__(self, "gamma_sc", self.gamma_g + self.gamma_s)


@dataclass(frozen=True)
class CollectiveNoiseStrength:
    """Accumulated variance gamma(t) of the collective random phase (rad^2)."""

    gamma_t: float

    def __post_init__(self) -> None:
        if self.gamma_t < 0:
            raise ValueError(f"gamma_t must be >= 0, got {self.gamma_t!r}")

    def __float__(self) -> float:
        return float(self.gamma_t)


def scattering_rates(
    omega_pi: float, omega_minus: float, delta: float, species
) -> ScatteringRates:
    """Off-resonant scattering rates of the pi and sigma-minus lattices:
    Gamma_g = (1/4)(Gamma_0/2)(Omega_pi/Delta)^2 and
    Gamma_s = (1/4)(Gamma_0/2)(Omega_pi^2 + Omega_-^2)/Delta^2."""
    if delta == 0:
        raise ValueError("resonant trapping undefined: delta must be nonzero")
    if omega_pi < 0 or omega_minus < 0:
        raise ValueError(
            f"Rabi frequencies must be >= 0, got omega_pi={omega_pi!r}, "
            f"omega_minus={omega_minus!r}"
        )
    prefactor = 0.125 * species.gamma_0 / delta**2
    return ScatteringRates(
        gamma_g=prefactor * omega_pi**2,
        gamma_s=prefactor * (omega_pi**2 + omega_minus**2),
    )


@lru_cache(maxsize=None)
def _hamming_matrix(n_atoms: int) -> np.ndarray:
    """h[l, l'] = number of atoms whose bit differs between l and l'."""
    dim = 1 << n_atoms
    idx = np.arange(dim, dtype=np.int32)
    popcount = np.array([bin(i).count("1") for i in range(dim)], dtype=np.int8)
    h = popcount[np.bitwise_xor.outer(idx, idx)]
    h.flags.writeable = False
    return h


@lru_cache(maxsize=None)
def _sz_values(n_atoms: int) -> np.ndarray:
    """S_z(l) = (number of set bits)*2 - N for each basis index."""
    dim = 1 << n_atoms
    sz = np.array([2 * bin(i).count("1") - n_atoms for i in range(dim)], dtype=np.float64)
    sz.flags.writeable = False
    return sz


@dataclass(frozen=True)
class DensityMatrix:
    """Dense N-atom density matrix in the tensor-product z-basis."""

    n_atoms: int
    elements: np.ndarray

    def __post_init__(self) -> None:
        n = self.n_atoms
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n_atoms must be a positive integer, got {n!r}")
        if n > MAX_ATOMS_DENSE:
            raise ValueError(
                f"n_atoms={n} exceeds the dense-representation cap {MAX_ATOMS_DENSE}"
            )
        dim = 1 << n
        arr = np.array(self.elements, dtype=np.complex128, copy=True)
        if arr.shape != (dim, dim):
            raise ValueError(
                f"elements must have shape {(dim, dim)} for n_atoms={n}, got {arr.shape}"
            )
        if np.max(np.abs(arr - arr.conj().T)) > 1e-12:
            raise ValueError("density matrix must be Hermitian to 1e-12")
        trace = float(np.trace(arr).real)
        if abs(trace - 1.0) > 1e-12:
            raise ValueError(f"density matrix must have unit trace, got {trace!r}")
        arr.flags.writeable = False
        object.__setattr__(self, "elements", arr)

    @property
    def dim(self) -> int:
        return 1 << self.n_atoms

    @classmethod
    def from_state_vector(cls, n_atoms: int, psi: np.ndarray) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=np.complex128)
        norm = float(np.linalg.norm(psi))
        if norm == 0.0:
            raise ValueError("state vector must be nonzero")
        psi = psi / norm
        return cls(n_atoms=n_atoms, elements=np.outer(psi, psi.conj()))

    @classmethod
    def product_plus(cls, n_atoms: int) -> "DensityMatrix":
        """(|g> + |s>)/sqrt(2) on every atom: all elements equal 1/2^N."""
        dim = 1 << n_atoms
        return cls(n_atoms=n_atoms, elements=np.full((dim, dim), 1.0 / dim))

    @classmethod
    def ghz(cls, n_atoms: int) -> "DensityMatrix":
        """(|g...g> + |s...s>)/sqrt(2)."""
        dim = 1 << n_atoms
        psi = np.zeros(dim, dtype=np.complex128)
        psi[0] = psi[dim - 1] = 1.0 / math.sqrt(2.0)
        return cls.from_state_vector(n_atoms, psi)

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.elements)[0])

    def overlap_with(self, other: "DensityMatrix") -> float:
        """Tr(rho sigma), real for Hermitian arguments."""
        if other.n_atoms != self.n_atoms:
            raise ValueError("overlap requires equal atom numbers")
        return float(np.sum(self.elements * other.elements.conj()).real)


def apply_local_dephasing(rho: DensityMatrix, gamma_sc: float, t: float) -> DensityMatrix:
    """Independent per-atom dephasing for a time t at rate gamma_sc."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    if gamma_sc < 0:
        raise ValueError(f"gamma_sc must be >= 0, got {gamma_sc!r}")
    factor = np.exp(-(gamma_sc * t) * _hamming_matrix(rho.n_atoms))
    return DensityMatrix(rho.n_atoms, rho.elements * factor)


def apply_collective_dephasing(
    rho: DensityMatrix, gamma_t: CollectiveNoiseStrength | float
) -> DensityMatrix:
    """Collective dephasing with accumulated phase variance gamma_t."""
    g = float(gamma_t)
    if g < 0:
        raise ValueError(f"gamma_t must be >= 0, got {g!r}")
    sz = _sz_values(rho.n_atoms)
    dsz = sz[:, None] - sz[None, :]
    factor = np.exp(-g / 8.0 * dsz**2)
    return DensityMatrix(rho.n_atoms, rho.elements * factor)


def overlap_sc(n_atoms: int, gamma_sc: float, t: float) -> float:
    """Tr(rho(0) rho(t)) for the all-|+> product state under local dephasing:
    ((1 + exp(-gamma_sc t))/2)^N."""
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms!r}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    return ((1.0 + math.exp(-gamma_sc * t)) / 2.0) ** n_atoms


# Cached Gauss-Hermite rungs; each entry is ~16 bytes per node.
_GH_NODES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gh_rule(n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    rule = _GH_NODES.get(n_nodes)
    if rule is None:
        from scipy.special import roots_hermite

        rule = roots_hermite(n_nodes)
        _GH_NODES[n_nodes] = rule
    return rule


def _gh_estimate(n_atoms: int, gamma: float, n_nodes: int) -> float:
    nodes, weights = _gh_rule(n_nodes)
    # Lambda = sqrt(2 gamma) u maps the Gaussian average onto the GH weight.
    arg = math.sqrt(0.5 * gamma) * nodes
    c = np.abs(np.cos(arg))
    with np.errstate(divide="ignore"):
        log_f = (2.0 * n_atoms) * np.log(c)
    return float(weights @ np.exp(log_f)) / math.sqrt(math.pi)


def overlap_qg_quadrature(
    n_atoms: int,
    gamma_t: CollectiveNoiseStrength | float,
    *,
    abs_tol: float = 1e-10,
    max_nodes: int = 2**21,
) -> float:
    """Tr(rho(0) rho(t)) for the all-|+> product state under collective
    dephasing: the Gaussian average of cos^(2N)(Lambda/2) over
    Lambda ~ N(0, gamma_t), by adaptive Gauss-Hermite quadrature.

    The integrand oscillates on scale ~1 while the Gaussian has width
    sqrt(gamma), so the node count must grow like N*gamma: the ladder starts
    at max(64, N*gamma/16) rounded up to a power of two and doubles until two
    successive rungs differ by < 5*abs_tol (each doubling gains far more than
    a factor of 5, so the returned rung is within abs_tol). Rungs are cached
    across calls. Accurate to abs_tol for N <= 1e4, gamma <= 1e3; the
    (N=1e4, gamma=1e3) corner needs max_nodes >= 2**22.
    """
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms!r}")
    gamma = float(gamma_t)
    if gamma < 0:
        raise ValueError(f"gamma_t must be >= 0, got {gamma!r}")
    if not abs_tol > 0:
        raise ValueError(f"abs_tol must be positive, got {abs_tol!r}")
    if gamma == 0.0:
        return 1.0

    n_nodes = 64
    while n_nodes * 16 < n_atoms * gamma:
        n_nodes *= 2
    if n_nodes > max_nodes:
        raise RuntimeError(
            f"overlap_qg_quadrature needs more than max_nodes={max_nodes} nodes "
            f"for N*gamma={n_atoms * gamma!r}; raise max_nodes"
        )
    previous = _gh_estimate(n_atoms, gamma, n_nodes)
    while n_nodes < max_nodes:
        n_nodes *= 2
        current = _gh_estimate(n_atoms, gamma, n_nodes)
        if abs(current - previous) < 5.0 * abs_tol:
            return current
        previous = current
    raise RuntimeError(
        f"overlap_qg_quadrature did not converge to abs_tol={abs_tol!r} within "
        f"max_nodes={max_nodes} nodes (N={n_atoms}, gamma={gamma!r}); raise max_nodes"
    )


def overlap_qg_exact_sum(n_atoms: int, gamma_t: CollectiveNoiseStrength | float) -> float:
    """Closed-form evaluation of the same Gaussian average by expanding
    cos^(2N)(Lambda/2) into its binomial Fourier series:

        O = 4^(-N) * sum_m C(2N, N+m) exp(-gamma m^2 / 2),  m = -N..N.

    Exact up to floating point; serves as the independent oracle for the
    quadrature and asymptotic routes.
    """
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms!r}")
    gamma = float(gamma_t)
    if gamma < 0:
        raise ValueError(f"gamma_t must be >= 0, got {gamma!r}")
    from scipy.special import gammaln

    m = np.arange(-n_atoms, n_atoms + 1, dtype=np.float64)
    log_binom = (
        gammaln(2 * n_atoms + 1)
        - gammaln(n_atoms + m + 1)
        - gammaln(n_atoms - m + 1)
    )
    log_terms = log_binom - 2 * n_atoms * math.log(2.0) - 0.5 * gamma * m**2
    return float(np.exp(log_terms).sum())


def overlap_qg_asymptotic(
    n_atoms: int, gamma_t: CollectiveNoiseStrength | float
) -> float:
    """Large-N, large-gamma form of the collective overlap.

    cos^(2N)(Lambda/2) concentrates into narrow peaks at multiples of 2*pi;
    each peak carries integrated weight 2*pi*C(2N,N)/4^N -> 2*sqrt(pi/N), so
    averaging the resulting comb against the Gaussian of variance gamma gives

        O ~ sqrt(2/(N*gamma)) * theta_3(0, exp(-2*pi^2/gamma)),

    with the theta function summed directly (terms decay super-exponentially;
    truncated below 1e-16).
    """
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms!r}")
    gamma = float(gamma_t)
    if gamma <= 0:
        raise ValueError(
            f"asymptotic form is singular at gamma_t={gamma!r}; need gamma_t > 0"
        )
    q = math.exp(-2.0 * math.pi**2 / gamma)
    theta = 1.0
    k = 1
    while True:
        term = 2.0 * q ** (k * k)
        if term < 1e-16:
            break
        theta += term
        k += 1
    return math.sqrt(2.0 / (n_atoms * gamma)) * theta


def overlap_ghz(
    n_atoms: int,
    channel: Literal["local", "collective"],
    strength: float | CollectiveNoiseStrength,
) -> float:
    """Tr(rho(0) rho(t)) for the N-atom GHZ state. ``strength`` is
    gamma_sc*t for the local channel and gamma(t) for the collective one.

    The collective form (1 + exp(-2 N^2 gamma))/2 counts the phase per unit
    of total spin (coherence factor exp(-gamma (Delta S_z)^2 / 2)). The
    channel in ``apply_collective_dephasing`` counts it per half-spin, so the
    same physical state is obtained there with gamma_channel = 4*gamma.
    """
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms!r}")
    s = float(strength)
    if s < 0:
        raise ValueError(f"strength must be >= 0, got {s!r}")
    if channel == "local":
        return (1.0 + math.exp(-n_atoms * s)) / 2.0
    if channel == "collective":
        return (1.0 + math.exp(-2.0 * n_atoms**2 * s)) / 2.0
    raise ValueError(f"channel must be 'local' or 'collective', got {channel!r}")


@lru_cache(maxsize=None)
def _lindblad_coefficients(n_atoms: int) -> tuple[np.ndarray, np.ndarray]:
    """Elementwise generator coefficients in the product basis.

    local[l,l'] = sum_i s_i(l) s_i(l') - N      (from sum sigma_z rho sigma_z - N rho)
    coll[l,l']  = S_z(l) S_z(l') - (S_z(l)^2 + S_z(l')^2)/2 = -(dS_z)^2/2
    """
    dim = 1 << n_atoms
    bits = ((np.arange(dim)[:, None] >> np.arange(n_atoms)[None, :]) & 1).astype(np.float64)
    spins = 2.0 * bits - 1.0  # dim x N, entries +-1
    local = spins @ spins.T - float(n_atoms)
    sz = _sz_values(n_atoms)
    sz2 = sz**2
    coll = np.outer(sz, sz) - 0.5 * (sz2[:, None] + sz2[None, :])
    local.flags.writeable = False
    coll.flags.writeable = False
    return local, coll


def lindblad_evolve(
    rho0: DensityMatrix,
    gamma_sc: float,
    gamma_qg_rate: Callable[[float], float],
    t_final: float,
    dt: float,
) -> DensityMatrix:
    """Integrate the two-channel master equation with fixed-step RK4.

    ``gamma_qg_rate`` maps time to the instantaneous collective rate
    Gamma_QG(t) >= 0; it is sampled on the half-step grid so each RK4 stage
    uses the rate at its own stage time.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if t_final < 0:
        raise ValueError(f"t_final must be >= 0, got {t_final!r}")
    if gamma_sc < 0:
        raise ValueError(f"gamma_sc must be >= 0, got {gamma_sc!r}")
    n = rho0.n_atoms
    if n > MAX_ATOMS_LINDBLAD:
        raise ValueError(
            f"lindblad_evolve is capped at N <= {MAX_ATOMS_LINDBLAD}, got {n}"
        )
    if t_final == 0.0:
        return DensityMatrix(n, rho0.elements)

    n_steps = max(1, math.ceil(t_final / dt - 1e-9))
    dt_eff = t_final / n_steps
    stage_times = np.linspace(0.0, t_final, 2 * n_steps + 1)
    rates = np.array([float(gamma_qg_rate(float(t))) for t in stage_times])
    if not np.all(np.isfinite(rates)) or np.any(rates < 0):
        raise ValueError("gamma_qg_rate must return finite values >= 0")

    local, coll = _lindblad_coefficients(n)
    evolved = _kernels.dephasing_rk4(
        rho0.elements, local, coll, gamma_sc, rates, dt_eff, n_steps
    )
    return DensityMatrix(n, evolved)


def gamma_of_t(
    trajectory: TrajectoryProfile, gamma_qg: float, t: float
) -> CollectiveNoiseStrength:
    """Accumulated collective phase variance along a separation trajectory:
    gamma(t) = 2 * gamma_qg * integral_0^t d(t')^2 dt'."""
    if gamma_qg < 0:
        raise ValueError(f"gamma_qg must be >= 0, got {gamma_qg!r}")
    integral = integrate_separation_squared(trajectory, t)
    return CollectiveNoiseStrength(2.0 * gamma_qg * integral)
