"""Natural <-> SI unit conversion, used by the command-line layer only.

Internally everything is computed in natural units (hbar = c = 1) with
lengths in meters, so every energy-like quantity is a power of inverse
length: Delta E [1/m], E/A [1/m^3], energy density and pressure [1/m^4].
Multiplying by hbar*c (J m) restores joule-based SI values with the same
powers of meters; a gravitational acceleration converts through g/c^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = ["HBAR", "C_LIGHT", "HBAR_C", "UnitKind", "UnitSystem"]

# CODATA 2018: exact defined values
HBAR = 1.054571817e-34  # J s
C_LIGHT = 2.99792458e8  # m / s
HBAR_C = HBAR * C_LIGHT  # J m


class UnitKind(Enum):
    NATURAL = "natural"
    SI = "si"


@dataclass(frozen=True)
class UnitSystem:
    """Output unit system. All conversions round-trip to relative 1e-12."""

    kind: UnitKind
    hbar: float = HBAR
    c: float = C_LIGHT

    @property
    def is_si(self) -> bool:
        return self.kind is UnitKind.SI

    def energy_like_to_output(self, value_natural: float) -> float:
        """Convert any (1/length)^k quantity to the output system."""
        return value_natural * self.hbar * self.c if self.is_si else value_natural

    def energy_like_to_natural(self, value_output: float) -> float:
        return value_output / (self.hbar * self.c) if self.is_si else value_output

    def gravity_to_natural(self, g_input: float) -> float:
        """SI input is an acceleration (m/s^2); natural is inverse length."""
        return g_input / self.c ** 2 if self.is_si else g_input

    def gravity_to_output(self, g_natural: float) -> float:
        return g_natural * self.c ** 2 if self.is_si else g_natural
