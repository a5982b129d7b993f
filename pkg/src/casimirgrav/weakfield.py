"""Weak-field gravitational correction to the Casimir setup.

A plate apparatus tilted by ``alpha`` against the gravity direction sits
in a uniform field of order parameter ``g`` (inverse length, natural
units). The gravitational energy shift of the cavity vacuum follows from
the weak-field metric perturbation in two gauges,

    isotropic:  h_00 = -g z,  h_ij = -g z delta_ij
    Fermi:      h_00 = -g z,  h_ij = 0,

connected by the gauge vector zeta with symmetrized gradient h^F - h^I.
The shift evaluates to  Delta E = -A g E_C z0  with z0 = xi0 cos(alpha),
and the force corrections follow:  Delta F / A = g E_C,
F^I/A = -2 g E_C, F^F/A = F^I/A + Delta F/A = -g E_C.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .cavity import CavityConfig, SpacetimePoint, energy_per_area, pressure
from .errors import GeometryError, RegimeWarning
from .numerics import Interval, QuadratureSpec, SeriesResult, integrate_nd

__all__ = [
    "PlateApparatus",
    "WeakField",
    "Gauge",
    "MetricPerturbation",
    "GaugeField",
    "apparatus_to_lab",
    "h_isotropic",
    "h_fermi",
    "perturbation",
    "gauge_field",
    "delta_energy_quadrature",
    "delta_energy_closed",
    "delta_force_per_area",
    "isotropic_force_per_area",
    "fermi_force_per_area",
    "fractional_correction",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PlateApparatus:
    """Square-plate Casimir apparatus in gravity-aligned lab coordinates.

    ``a`` is the transverse plate side (area A = a^2), ``L`` the plate
    separation, ``xi0`` the center offset along the plate normal and
    ``alpha`` the tilt from the gravity direction (radians, stored
    normalized to [0, 2 pi)). The closed forms assume a >> L; smaller
    aspect ratios only warn.
    """

    a: float
    L: float
    xi0: float = 0.0
    alpha: float = 0.0
    polarizations: int = 2

    def __post_init__(self) -> None:
        if self.a <= 0:
            raise GeometryError(f"plate side must be positive, got {self.a}")
        if self.L <= 0:
            raise GeometryError(f"plate separation must be positive, got {self.L}")
        if self.polarizations not in (1, 2):
            raise GeometryError(f"polarizations must be 1 or 2, got {self.polarizations}")
        object.__setattr__(self, "alpha", self.alpha % _TWO_PI)
        if self.a < 10.0 * self.L:
            warnings.warn(
                f"aspect ratio a/L = {self.a / self.L:.3g} < 10; edge effects "
                "neglected by the closed forms may be significant",
                RegimeWarning,
                stacklevel=2,
            )

    @property
    def area(self) -> float:
        return self.a * self.a

    @property
    def z0(self) -> float:
        """Vertical offset of the apparatus center, xi0 cos(alpha)."""
        return self.xi0 * math.cos(self.alpha)

    def cavity(self) -> CavityConfig:
        return CavityConfig(self.L, self.polarizations)


@dataclass(frozen=True)
class WeakField:
    """Uniform-gravity order parameter g >= 0 (inverse length)."""

    g: float = 0.0

    def __post_init__(self) -> None:
        if self.g < 0 or not math.isfinite(self.g):
            raise GeometryError(f"field order parameter must be finite and >= 0, got {self.g}")


def _warn_linearized_regime(app: PlateApparatus, field: WeakField) -> None:
    # crude upper bound on any lab coordinate of the apparatus
    extent = abs(app.xi0) + 0.5 * app.L + app.a
    if field.g * extent > 0.1:
        warnings.warn(
            f"g * apparatus extent = {field.g * extent:.3g} > 0.1; outside "
            "the linearized weak-field regime",
            RegimeWarning,
            stacklevel=3,
        )


class Gauge(Enum):
    ISOTROPIC = "isotropic"
    FERMI = "fermi"


@dataclass(frozen=True)
class MetricPerturbation:
    """Pointwise symmetric perturbation h_{mu nu}(x) in a fixed gauge."""

    evaluator: Callable[[SpacetimePoint], np.ndarray]
    gauge: Gauge

    def __call__(self, p: SpacetimePoint) -> np.ndarray:
        return self.evaluator(p)


@dataclass(frozen=True)
class GaugeField:
    """Vector field zeta_mu(x) whose symmetrized gradient is h^F - h^I."""

    evaluator: Callable[[SpacetimePoint], np.ndarray]

    def __call__(self, p: SpacetimePoint) -> np.ndarray:
        return self.evaluator(p)


def apparatus_to_lab(p: tuple[float, float, float], alpha: float) -> tuple[float, float, float]:
    """Rotate apparatus coordinates (xi, eta, chi) into lab (x, y, z).

    z = xi cos(alpha) + eta sin(alpha), y = eta cos(alpha) - xi sin(alpha),
    x = chi.
    """
    xi, eta, chi = p
    c = math.cos(alpha)
    s = math.sin(alpha)
    return (chi, eta * c - xi * s, xi * c + eta * s)


def h_isotropic(field: WeakField, p: SpacetimePoint) -> np.ndarray:
    """Isotropic-gauge perturbation: diag(-gz, -gz, -gz, -gz)."""
    return np.diag([-field.g * p.z] * 4)


def h_fermi(field: WeakField, p: SpacetimePoint) -> np.ndarray:
    """Fermi-gauge perturbation: only h_00 = -gz survives."""
    h = np.zeros((4, 4))
    h[0, 0] = -field.g * p.z
    return h


def perturbation(field: WeakField, gauge: Gauge) -> MetricPerturbation:
    """Bundle one of the two gauge tables as a reusable evaluator."""
    if gauge is Gauge.ISOTROPIC:
        return MetricPerturbation(lambda p: h_isotropic(field, p), gauge)
    return MetricPerturbation(lambda p: h_fermi(field, p), gauge)


def gauge_field(field: WeakField) -> GaugeField:
    """The vector carrying the isotropic gauge into the Fermi gauge.

    zeta_0 = 0, zeta_x = g z x / 2, zeta_y = g z y / 2,
    zeta_z = (g/4)(z^2 - x^2 - y^2); its symmetrized gradient equals
    h^F - h^I = g z diag(0, 1, 1, 1) identically. The representative is
    unique up to flat-space Killing vectors; the time component is chosen
    to vanish.
    """
    g = field.g

    def evaluate(p: SpacetimePoint) -> np.ndarray:
        return np.array(
            [
                0.0,
                0.5 * g * p.z * p.x,
                0.5 * g * p.z * p.y,
                0.25 * g * (p.z * p.z - p.x * p.x - p.y * p.y),
            ]
        )

    return GaugeField(evaluate)


def delta_energy_closed(app: PlateApparatus, field: WeakField) -> float:
    """Gravitational energy shift Delta E = -A g E_C xi0 cos(alpha)."""
    _warn_linearized_regime(app, field)
    e_c = energy_per_area(app.cavity())
    return -app.area * field.g * e_c * app.xi0 * math.cos(app.alpha)


def delta_energy_quadrature(
    app: PlateApparatus, field: WeakField, spec: QuadratureSpec = QuadratureSpec()
) -> SeriesResult:
    """Gravitational energy shift by direct quadrature of its three terms.

    The three double integrals are evaluated exactly as they arise from
    the stress-tensor coupling, without the simplifications that yield the
    closed form (term 1 has a constant integrand; the eta-odd part of
    term 3 integrates to zero numerically rather than by assumption):

      (6 E_C/L)  int d(eta) d(chi) (1/4) g cos(a) (-2 xi0 L)
    - (2 E_C/L)  int d(xi) d(chi)  (1/2) g cos(a) (-a) xi
    - (2 E_C/L)  int d(xi) d(eta)  (1/2) g (xi cos(a) + eta sin(a)) (-a)

    with eta, chi over [-a/2, a/2] and xi over [xi0 - L/2, xi0 + L/2].
    This is the independent check of :func:`delta_energy_closed`.
    """
    _warn_linearized_regime(app, field)
    e_c = energy_per_area(app.cavity())
    g = field.g
    ca = math.cos(app.alpha)
    sa = math.sin(app.alpha)
    a, L, xi0 = app.a, app.L, app.xi0
    transverse = Interval(-0.5 * a, 0.5 * a)
    normal = Interval(xi0 - 0.5 * L, xi0 + 0.5 * L)

    term1 = integrate_nd(
        lambda eta, chi: 0.25 * g * ca * (-2.0 * xi0 * L), [transverse, transverse], spec
    )
    term2 = integrate_nd(
        lambda xi, chi: 0.5 * g * ca * (-a) * xi, [normal, transverse], spec
    )
    term3 = integrate_nd(
        lambda xi, eta: 0.5 * g * (xi * ca + eta * sa) * (-a), [normal, transverse], spec
    )

    front1 = 6.0 * e_c / L
    front23 = -2.0 * e_c / L
    value = front1 * term1.value + front23 * (term2.value + term3.value)
    bound = abs(front1) * term1.error_bound + abs(front23) * (
        term2.error_bound + term3.error_bound
    )
    return SeriesResult(value, bound, term1.terms_used + term2.terms_used + term3.terms_used)


def delta_force_per_area(field: WeakField, cfg: CavityConfig) -> float:
    """Change of the force per unit area, Delta F / A = g E_C."""
    return field.g * energy_per_area(cfg)


def isotropic_force_per_area(field: WeakField, cfg: CavityConfig) -> float:
    """Isotropic-gauge force per unit area, F^I / A = -2 g E_C."""
    return -2.0 * delta_force_per_area(field, cfg)


def fermi_force_per_area(field: WeakField, cfg: CavityConfig) -> float:
    """Fermi force per unit area, F^F / A = F^I / A + Delta F / A = -g E_C."""
    return isotropic_force_per_area(field, cfg) + delta_force_per_area(field, cfg)


def fractional_correction(field: WeakField, cfg: CavityConfig) -> float:
    """Correction relative to the flat pressure: g E_C / P = g L / 3."""
    return delta_force_per_area(field, cfg) / pressure(cfg)
