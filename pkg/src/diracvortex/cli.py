"""Command-line front end: profiles, spectra, summary tables, verification.

All physics happens in natural units with m = 1; this module converts the
Tesla and keV inputs once, serialises results deterministically (17
significant digits, stable column order) and maps failures to exit codes:
0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from . import observables as obs
from . import verify as verify_mod
from .constants import beb_over_m2, magnetic_length_m
from .states import BeamParameters, QuantumNumbers, energy, spectrum_table

#: preset panels for ``figure``: (label, signed l, p); the third case is the
#: protected ground state whose azimuthal current vanishes identically
FIGURE_CASES = (("a", 2, 3), ("b", -2, 3), ("c", -2, 0))


def quantum_numbers_from_signed(l_signed: int, p: int, spin: str) -> QuantumNumbers:
    """Map the CLI's signed orbital index and spin word onto a state label."""
    spin_sign = 1 if spin == "up" else -1
    if l_signed > 0:
        oam_sign, l = 1, l_signed
    elif l_signed < 0:
        oam_sign, l = -1, -l_signed
    else:
        oam_sign, l = spin_sign, 0
    return QuantumNumbers(spin_sign, oam_sign, l, p)


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _write_csv(meta, columns, rows, stream):
    for key, value in meta.items():
        stream.write(f"# {key} = {_fmt(value)}\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_fmt(v) for v in row) + "\n")


def _write_json(meta, columns, rows, stream):
    payload = {"meta": meta, "columns": list(columns), "rows": [list(r) for r in rows]}
    json.dump(payload, stream, indent=2, default=_fmt)
    stream.write("\n")


def _emit(meta, columns, rows, fmt, out):
    stream = open(out, "w") if out else sys.stdout
    try:
        if fmt == "csv":
            _write_csv(meta, columns, rows, stream)
        else:
            _write_json(meta, columns, rows, stream)
    finally:
        if out:
            stream.close()


def _beam(args) -> BeamParameters:
    beb = beb_over_m2(args.B, args.m_kev)
    return BeamParameters(beB=beb, m=1.0, k=args.k_over_m)


def _common_meta(args, qn=None, bp=None):
    meta = {
        "tool": "diracvortex",
        "version": __version__,
        "B_tesla": args.B,
        "m_kev": args.m_kev,
        "k_over_m": args.k_over_m,
        "beB_over_m2": beb_over_m2(args.B, args.m_kev),
        "unit_radius_nm": magnetic_length_m(args.B) * 1e9,
        "units": "natural units, m = 1; radii rescaled by sqrt(beB/2)",
    }
    if qn is not None:
        meta.update({
            "spin": "up" if qn.spin_sign > 0 else "down",
            "l_signed": qn.oam_sign * qn.l,
            "p": qn.p,
        })
    if bp is not None:
        meta["energy_over_m"] = energy(qn, bp).total
    return meta


def run_profile(args) -> int:
    qn = quantum_numbers_from_signed(args.l, args.p, args.spin)
    bp = _beam(args)
    r = np.linspace(0.0, args.rmax, args.samples)
    prof = obs.radial_profile(qn, bp, r, normalized=args.normalized,
                              physical_dr=args.physical_dr)
    meta = _common_meta(args, qn, bp)
    meta["normalized"] = args.normalized
    meta["current_element"] = "dz x dr" if args.physical_dr else "dz x dr_rescaled"
    columns = ("r", "j0", "jz", "jphi", "s_phi")
    rows = list(zip(prof.r, prof.j0, prof.jz, prof.jphi, prof.s_phi))
    _emit(meta, columns, rows, args.format, args.out)
    return 0


def run_figure(args) -> int:
    bp = _beam(args)
    r = np.linspace(0.0, args.rmax, args.samples)
    columns = ["r"]
    series = [r]
    meta = _common_meta(args)
    meta["normalized"] = args.normalized
    for label, l_signed, p in FIGURE_CASES:
        for spin in ("up", "down"):
            qn = quantum_numbers_from_signed(l_signed, p, spin)
            prof = obs.radial_profile(qn, bp, r, normalized=args.normalized)
            name = f"jphi_{label}_{spin}"
            columns.append(name)
            series.append(prof.jphi)
            radii = obs.sign_change_radii(qn) if bp.beB > 0 else []
            meta[f"sign_change_radii_{label}_{spin}"] = " ".join(
                f"{x:.17g}" for x in radii) or "none"
    rows = list(zip(*series))
    _emit(meta, columns, rows, args.format, args.out)
    return 0


def run_spectrum(args) -> int:
    bp = _beam(args)
    entries = spectrum_table(bp, args.max_levels)
    columns = ("spin", "l_signed", "p", "jz_canonical", "interaction_sq_over_beB",
               "energy_over_m", "partner")
    rows = []
    for e in entries:
        qn = e.qn
        if e.partner is None:
            partner = "none"
        else:
            pq = e.partner
            partner = f"{'up' if pq.spin_sign > 0 else 'down'}:{pq.oam_sign * pq.l}:{pq.p}"
        rows.append(("up" if qn.spin_sign > 0 else "down", qn.oam_sign * qn.l, qn.p,
                     e.canonical_jz, 2 * qn.interaction_index, e.energy.total, partner))
    _emit(_common_meta(args), columns, rows, args.format, args.out)
    return 0


def run_table(args) -> int:
    qn = quantum_numbers_from_signed(args.l, args.p, args.spin)
    bp = _beam(args)
    rho = obs.reduced_spin_state(qn, bp)
    columns = ["spin", "l_signed", "p", "energy_over_m", "int_j0", "int_jz",
               "jz_canonical", "jz_gauge", "jz_gauge_dropped", "mz_per_abs_e",
               "prob_up", "prob_down"]
    mz = obs.magnetic_moment(qn, bp) if bp.beB > 0 else 0.0
    row = ["up" if qn.spin_sign > 0 else "down", qn.oam_sign * qn.l, qn.p,
           energy(qn, bp).total, obs.integrated_density(qn, bp),
           obs.integrated_jz(qn, bp), qn.canonical_jz,
           obs.gauge_covariant_jz(qn, bp),
           obs.gauge_covariant_jz(qn, bp, drop_spin_orbit=True),
           mz, rho.prob_up, rho.prob_down]
    if args.check:
        checks = [
            ("err_int_j0", obs.integrated_density(qn, bp),
             obs.integrated_density_quadrature(qn, bp)),
            ("err_int_jz", obs.integrated_jz(qn, bp), obs.integrated_jz_quadrature(qn, bp)),
            ("err_r2_moment", obs.r2_moment(qn, bp), obs.r2_moment_quadrature(qn, bp)),
            ("err_jz_gauge", obs.gauge_covariant_jz(qn, bp),
             obs.gauge_covariant_jz_quadrature(qn, bp)),
        ]
        if bp.beB > 0:
            checks.append(("err_mz", mz, obs.magnetic_moment_quadrature(qn, bp)))
        for name, closed, quad in checks:
            columns.append(name)
            row.append(abs(closed - quad) / max(1.0, abs(closed)))
    _emit(_common_meta(args, qn, bp), columns, [row], args.format, args.out)
    return 0


def run_verify(args) -> int:
    checks = verify_mod.run_all(sabotage=args.sabotage)
    meta = {"tool": "diracvortex", "version": __version__,
            "sabotage": args.sabotage or "none"}
    if args.format == "csv":
        columns = ("name", "residual", "tolerance", "pass")
        rows = [(c.name, c.residual, c.tolerance, c.passed) for c in checks]
        _emit(meta, columns, rows, "csv", args.out)
    else:
        payload = {"meta": meta, "checks": [c.as_dict() for c in checks]}
        stream = open(args.out, "w") if args.out else sys.stdout
        try:
            json.dump(payload, stream, indent=2)
            stream.write("\n")
        finally:
            if args.out:
                stream.close()
    failed = [c for c in checks if not c.passed]
    for c in failed:
        print(f"FAIL {c.name}: residual {c.residual:.3e} > tolerance {c.tolerance:.1e}",
              file=sys.stderr)
    return 1 if failed else 0


def _add_state_args(sub):
    sub.add_argument("--l", type=int, default=0,
                     help="signed orbital angular momentum (negative = against the field)")
    sub.add_argument("--p", type=int, default=0, help="radial index (rings)")
    sub.add_argument("--spin", choices=("up", "down"), default="up")


def _add_common_args(sub):
    sub.add_argument("--B", type=float, default=1.0, help="magnetic field in Tesla")
    sub.add_argument("--k-over-m", dest="k_over_m", type=float, default=1.0,
                     help="longitudinal momentum over mass")
    sub.add_argument("--m-kev", dest="m_kev", type=float, default=511.0,
                     help="mass energy in keV")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracvortex",
        description="Exact electron-vortex states in a magnetic field: "
                    "profiles, spectra, moments and a verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    prof = sub.add_parser("profile", help="radial profile of j0, jz, jphi, S_phi")
    _add_state_args(prof)
    _add_common_args(prof)
    prof.add_argument("--rmax", type=float, default=4.0)
    prof.add_argument("--samples", type=int, default=512)
    prof.add_argument("--normalized", action="store_true",
                      help="apply the unit-density normalisation squared")
    prof.add_argument("--physical-dr", dest="physical_dr", action="store_true",
                      help="report currents per physical dz x dr")

    fig = sub.add_parser("figure", help="azimuthal-current data for the preset panels")
    _add_common_args(fig)
    fig.add_argument("--rmax", type=float, default=4.0)
    fig.add_argument("--samples", type=int, default=512)
    fig.add_argument("--normalized", action="store_true")

    spect = sub.add_parser("spectrum", help="level table sorted by angular momentum")
    _add_common_args(spect)
    spect.add_argument("--max-levels", dest="max_levels", type=int, default=4)

    table = sub.add_parser("table", help="integrated observables for one state")
    _add_state_args(table)
    _add_common_args(table)
    table.add_argument("--check", action="store_true",
                       help="append quadrature cross-check errors")

    ver = sub.add_parser("verify", help="run the full identity suite")
    ver.add_argument("--format", choices=("csv", "json"), default="json")
    ver.add_argument("--out", default=None)
    ver.add_argument("--sabotage", choices=("energy",), default=None,
                     help="negative control: must make the suite fail")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"profile": run_profile, "figure": run_figure,
                "spectrum": run_spectrum, "table": run_table,
                "verify": run_verify}
    try:
        _validate(args)
        return handlers[args.command](args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _validate(args):
    if getattr(args, "samples", 2) < 2:
        raise ValueError("samples must be >= 2")
    if getattr(args, "rmax", 1.0) <= 0.0:
        raise ValueError("rmax must be > 0")
    if getattr(args, "p", 0) < 0:
        raise ValueError("p must be >= 0")
    if getattr(args, "B", 0.0) < 0.0:
        raise ValueError("B must be >= 0")
    if getattr(args, "max_levels", 1) < 1:
        raise ValueError("max-levels must be >= 1")

if __name__ == "__main__":
    sys.exit(main())
