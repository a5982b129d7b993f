"""Command-line interface.

Subcommands::

    compute     energy-density | energy-per-area | pressure | stress-tensor
    gravity     weak-field corrections (closed form or quadrature)
    figure      emit the data series behind figures 1-6 as CSV or JSON
    regularize  compare the three regularization schemes
    zeta        Riemann zeta for real s > 1

Exit codes: 0 success, 2 argument error, 3 numerical failure, 4 I/O failure.
In SI mode lengths are meters, gravity is an acceleration in m/s^2 and
energy-like outputs are converted through hbar*c.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from .cavity import CavityConfig, brown_maclay_tensor, energy_density, energy_per_area, pressure
from .errors import (
    CasimirError,
    ConvergenceError,
    DivergentSeriesError,
    DomainError,
    GeometryError,
    RegimeWarning,
)
from .figures import FigureSpec, figure_series, write_csv, write_json
from .numerics import QuadratureSpec
from .regularization import DEFAULT_IMAGE_TERMS, SchemeKind, compare_schemes, riemann_zeta
from .units import UnitKind, UnitSystem
from .weakfield import (
    PlateApparatus,
    WeakField,
    delta_energy_closed,
    delta_energy_quadrature,
    delta_force_per_area,
    fermi_force_per_area,
    fractional_correction,
    isotropic_force_per_area,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

_SI_LABELS = {
    "energy": "J",
    "energy-density": "Pa",
    "energy-per-area": "J/m^2",
    "pressure": "Pa",
}


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def _unit_label(units: UnitSystem, kind: str) -> str:
    return f" {_SI_LABELS[kind]}" if units.is_si else ""


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise DomainError(f"expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise DomainError(f"empty list: {text!r}")
    return values


def _add_units_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--units",
        choices=[u.value for u in UnitKind],
        default="natural",
        help="natural (hbar=c=1) or si (meters in, J/Pa out)",
    )


def _units_from(args: argparse.Namespace) -> UnitSystem:
    return UnitSystem(UnitKind(getattr(args, "units", "natural")))


def _cmd_compute(args: argparse.Namespace) -> int:
    units = _units_from(args)
    cfg = CavityConfig(args.L, args.polarizations)
    if args.quantity == "energy-density":
        value = units.energy_like_to_output(energy_density(args.L))
        print(f"energy density (one polarization) = {_fmt(value)}"
              f"{_unit_label(units, 'energy-density')}")
    elif args.quantity == "energy-per-area":
        value = units.energy_like_to_output(energy_per_area(cfg))
        print(f"energy per area = {_fmt(value)}{_unit_label(units, 'energy-per-area')}")
    elif args.quantity == "pressure":
        value = units.energy_like_to_output(pressure(cfg))
        print(f"pressure = {_fmt(value)}{_unit_label(units, 'pressure')}")
    else:
        tensor = brown_maclay_tensor(cfg, flip_transverse_y=args.flip_transverse_y)
        label = _unit_label(units, "energy-density")
        print(f"vacuum stress tensor T^(mu nu){', ' + label.strip() if label else ''}:")
        for row in tensor.components:
            print("  " + "  ".join(f"{units.energy_like_to_output(v):>22.15g}" for v in row))
        print(f"trace (eta_mn T^mn) = {_fmt(tensor.trace())}")
    return EXIT_OK


def _cmd_gravity(args: argparse.Namespace) -> int:
    units = _units_from(args)
    g_nat = units.gravity_to_natural(args.g)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", RegimeWarning)
        app = PlateApparatus(args.a, args.L, args.xi0, args.alpha, args.polarizations)
        fld = WeakField(g_nat)
        cfg = app.cavity()

        closed = delta_energy_closed(app, fld)
        if args.method == "quadrature":
            quad = delta_energy_quadrature(app, fld, QuadratureSpec(args.tolerance))
            delta_e = quad.value
            scale = max(abs(closed), abs(quad.value))
            discrepancy = abs(quad.value - closed) / scale if scale > 0 else 0.0
        else:
            delta_e = closed
    for message in dict.fromkeys(str(w.message) for w in caught):
        print(f"warning: {message}", file=sys.stderr)

    print(f"Delta E_g ({args.method}) = {_fmt(units.energy_like_to_output(delta_e))}"
          f"{_unit_label(units, 'energy')}")
    if args.method == "quadrature":
        print(f"relative discrepancy vs closed form = {discrepancy:.3e}")
    per_area = _unit_label(units, "pressure")
    print(f"Delta F / A = {_fmt(units.energy_like_to_output(delta_force_per_area(fld, cfg)))}"
          f"{per_area}")
    print(f"F_iso / A   = {_fmt(units.energy_like_to_output(isotropic_force_per_area(fld, cfg)))}"
          f"{per_area}")
    print(f"F_fermi / A = {_fmt(units.energy_like_to_output(fermi_force_per_area(fld, cfg)))}"
          f"{per_area}")
    print(f"fractional correction (Delta F / F_flat) = {_fmt(fractional_correction(fld, cfg))}")
    return EXIT_OK


def _cmd_figure(args: argparse.Namespace) -> int:
    spec = FigureSpec(
        fig_id=args.id,
        L_min=args.Lmin,
        L_max=args.Lmax,
        points=args.points,
        A_min=args.Amin,
        A_max=args.Amax,
        A_list=_parse_float_list(args.A_list),
        L_list=_parse_float_list(args.L_list),
        g=args.g,
        polarizations=args.polarizations,
    )
    data = figure_series(spec)
    if args.format == "csv":
        write_csv(data, args.out)
    else:
        write_json(data, args.out)
    print(f"figure {args.id}: wrote {data.rows.shape[0]} rows x "
          f"{len(data.columns)} columns to {args.out}")
    return EXIT_OK


def _cmd_regularize(args: argparse.Namespace) -> int:
    n_terms = DEFAULT_IMAGE_TERMS
    quad = QuadratureSpec()
    if args.scheme == SchemeKind.IMAGE_SUM.value and args.n_terms is not None:
        n_terms = args.n_terms
    if args.scheme == SchemeKind.ABEL_PLANA.value and args.tolerance is not None:
        quad = QuadratureSpec(relative_tolerance=args.tolerance)
    report = compare_schemes(args.L, n_terms=n_terms, quad=quad)
    print(f"scalar energy per area at L = {_fmt(args.L)} (natural units):")
    for kind, result in report.energy_per_area.items():
        print(f"  {kind.value:<12} value = {_fmt(result.value)}   "
              f"error bound = {result.error_bound:.3e}")
    print(f"max pairwise relative discrepancy = {report.max_relative_discrepancy:.3e}")
    return EXIT_OK


def _cmd_zeta(args: argparse.Namespace) -> int:
    print(f"zeta({_fmt(args.s)}) = {_fmt(riemann_zeta(args.s))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimirgrav",
        description="Casimir cavity observables and weak-field gravity corrections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="closed-form cavity observables")
    p.add_argument("quantity",
                   choices=["energy-density", "energy-per-area", "pressure", "stress-tensor"])
    p.add_argument("--L", type=float, required=True, help="plate separation")
    p.add_argument("--polarizations", type=int, default=2, choices=[1, 2])
    p.add_argument("--flip-transverse-y", action="store_true",
                   help="stress-tensor only: the non-traceless diag(1,-1,1,3) variant")
    _add_units_flag(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("gravity", help="weak-field corrections to the Casimir force")
    p.add_argument("--L", type=float, required=True, help="plate separation")
    p.add_argument("--a", type=float, required=True, help="transverse plate side")
    p.add_argument("--xi0", type=float, default=0.0, help="center offset along plate normal")
    p.add_argument("--alpha", type=float, default=0.0, help="tilt from gravity direction (rad)")
    p.add_argument("--g", type=float, default=1.0,
                   help="gravity order parameter (natural: 1/length; si: m/s^2)")
    p.add_argument("--polarizations", type=int, default=2, choices=[1, 2])
    p.add_argument("--method", choices=["closed", "quadrature"], default="closed")
    p.add_argument("--tolerance", type=float, default=1e-9,
                   help="quadrature relative tolerance")
    _add_units_flag(p)
    p.set_defaults(func=_cmd_gravity)

    p = sub.add_parser("figure", help="emit figure data series (natural units)")
    p.add_argument("--id", type=int, required=True, choices=range(1, 7))
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--Lmin", type=float, default=0.5)
    p.add_argument("--Lmax", type=float, default=5.0)
    p.add_argument("--Amin", type=float, default=0.5)
    p.add_argument("--Amax", type=float, default=5.0)
    p.add_argument("--A-list", dest="A_list", default="1,2,4",
                   help="comma-separated areas (figure 4)")
    p.add_argument("--L-list", dest="L_list", default="0.5,1,2",
                   help="comma-separated separations (figure 5)")
    p.add_argument("--g", type=float, default=1.0)
    p.add_argument("--polarizations", type=int, default=2, choices=[1, 2])
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("regularize", help="compare the three regularization schemes")
    p.add_argument("--L", type=float, required=True, help="plate separation")
    p.add_argument("--scheme", choices=[k.value for k in SchemeKind],
                   default=SchemeKind.IMAGE_SUM.value,
                   help="scheme the n-terms/tolerance override applies to")
    p.add_argument("--n-terms", dest="n_terms", type=int, default=None,
                   help="image-sum term count override")
    p.add_argument("--tolerance", type=float, default=None,
                   help="abel-plana quadrature tolerance override")
    p.set_defaults(func=_cmd_regularize)

    p = sub.add_parser("zeta", help="Riemann zeta for real s > 1")
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(func=_cmd_zeta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad arguments, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GeometryError, DomainError, DivergentSeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConvergenceError, CasimirError, ArithmeticError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
