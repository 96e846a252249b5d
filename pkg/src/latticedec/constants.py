"""Physical constants and atom-species data used by every rate formula.

Values are pinned rather than pulled from scipy.constants so that results
cannot drift with library upgrades: fundamental constants are CODATA 2018,
the rubidium D1-line data follow Steck's alkali tables. All frequencies are
angular (rad/s); divide by 2pi only at display boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants (SI, CODATA 2018)."""

    c: float = 299792458.0            # speed of light, m/s (exact)
    hbar: float = 1.054571817e-34     # reduced Planck constant, J s
    k_B: float = 1.380649e-23         # Boltzmann constant, J/K (exact)
    m_0: float = 1.67262192369e-27    # nucleon (proton) mass, kg
    m_Pl: float = 2.176434e-8         # Planck mass, kg
    u: float = 1.66053906660e-27      # atomic mass unit, kg

    def __post_init__(self) -> None:
        for name in ("c", "hbar", "k_B", "m_0", "m_Pl", "u"):
            if getattr(self, name) <= 0:
                raise ValueError(f"constant {name} must be positive")


CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class AtomSpecies:
    """Data of one trapped species: mass, linewidth and trapping laser."""

    name: str
    mass: float                       # atomic mass, kg
    gamma_0: float                    # free-space decay rate Gamma_0, rad/s
    wavelength: float                 # trapping-laser wavelength, m
    fine_structure_splitting: float   # P3/2 - P1/2 splitting, rad/s
    k: float = field(init=False)      # trapping wavevector 2*pi/wavelength, 1/m

    def __post_init__(self) -> None:
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.gamma_0 <= 0:
            raise ValueError(f"gamma_0 must be positive, got {self.gamma_0}")
        if self.wavelength <= 0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")
        object.__setattr__(self, "k", 2.0 * math.pi / self.wavelength)


def species_rb87() -> AtomSpecies:
    """87Rb trapped on the D1 line (795 nm); the level scheme couples to P1/2."""
    return AtomSpecies(
        name="rb87",
        mass=86.909 * CONSTANTS.u,
        gamma_0=2.0 * math.pi * 5.75e6,                 # D1 natural linewidth
        wavelength=795e-9,                              # D1 transition
        fine_structure_splitting=2.0 * math.pi * 7e12,  # P3/2 - P1/2, 7 THz
    )


_SPECIES_REGISTRY = {"rb87": species_rb87}


def species_by_name(name: str) -> AtomSpecies:
    """Look up a species by registry name (extension point for new species)."""
    try:
        return _SPECIES_REGISTRY[name]()
    except KeyError:
        known = ", ".join(sorted(_SPECIES_REGISTRY))
        raise ValueError(f"unknown species {name!r}; known: {known}") from None
