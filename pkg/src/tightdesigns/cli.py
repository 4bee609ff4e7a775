"""Command-line front end.

Exit codes: 0 pass, 1 a mathematical check failed, 2 usage or I/O error,
3 unsupported input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from . import congruence, sieve
from .designcore import (
    BUILTINS,
    DesignError,
    builtin,
    design_strength_certificate,
    inner_product_spectrum,
    load_design,
    save_design,
    tight_cardinality,
)
from .exactnum import ExactScalar, format_scalar
from .latticecore import (
    DEFAULT_DISC_BOUND,
    DiscriminantBoundExceeded,
    LatticeError,
    UnsupportedLattice,
    characteristic_vectors,
    discriminant_form,
    even_sublattice,
    gauss_sum,
    lattice_from_vectors,
    parity_and_det,
    snf_invariants,
)

OK, FAILED, USAGE, UNSUPPORTED = 0, 1, 2, 3

_SUPERSCRIPT = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


class _Unsupported(Exception):
    pass


def plain(obj):
    """Convert a report to JSON-ready data; exact numbers become strings."""
    if isinstance(obj, dict):
        return {_key(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [plain(v) for v in items]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (Fraction, ExactScalar)):
        return format_scalar(obj) if isinstance(obj, ExactScalar) else str(obj)
    return str(obj)


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(plain(k))


def dump_json(report) -> str:
    return json.dumps(plain(report), sort_keys=True, indent=2)


def _zeta8(k: int) -> str:
    k %= 8
    if k > 4:
        k -= 8
    if k == 0:
        return "1"
    return "ζ₈" + ("" if k == 1 else str(k).translate(_SUPERSCRIPT))


def _load(path):
    try:
        return load_design(path)
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc.strerror or exc}") from None


# -- subcommands -------------------------------------------------------------

def cmd_verify_design(args) -> tuple[int, dict, list[str]]:
    design = _load(args.path)
    cert = design_strength_certificate(design, args.t)
    spectrum = inner_product_spectrum(design)
    size = 2 * design.s
    bound = tight_cardinality(design.n, args.t)
    report = {
        "label": design.label,
        "n": design.n,
        "s": design.s,
        "d": design.d,
        "t": args.t,
        "strength": {"passed": cert.passed, "degrees": cert.degrees},
        "tight": size == bound,
        "size": size,
        "bound": bound,
        "spectrum": {format_scalar(k): v for k, v in spectrum.values.items()},
    }
    if cert.witness is not None:
        w = cert.witness
        report["strength"]["witness"] = {"degree": w.degree, "exponents": w.index, "lhs": w.lhs, "rhs": w.rhs}
    lines = [
        f"design: {design.label or args.path} (n={design.n}, s={design.s}, d={format_scalar(design.d)})",
        f"strength {args.t}: {'pass' if cert.passed else 'FAIL'}"
        + "".join(f"  deg{k}={'ok' if v else 'bad'}" for k, v in sorted(cert.degrees.items())),
    ]
    if cert.witness is not None:
        w = cert.witness
        lines.append(f"  first mismatch: degree {w.degree}, monomial {w.index}: {w.lhs} != {w.rhs}")
    if size == bound:
        lines.append(f"tight: yes ({size} = bound)")
    else:
        lines.append(f"tight: no ({size} {'<' if size < bound else '>'} {bound})")
    spec = sorted(spectrum.values.items(), key=lambda kv: float(kv[0]))
    lines.append("spectrum: " + " ".join(f"{format_scalar(k)}:{v}" for k, v in spec))
    return (OK if cert.passed else FAILED), report, lines


def _gauss_report(lat, bound) -> dict:
    dg = discriminant_form(lat, bound)
    gs = gauss_sum(dg)
    return {
        "invariant_factors": list(dg.invariant_factors),
        "sigma": gs.sigma,
        "sylow_sigma": gs.sylow_sigma,
        "milgram": gs.normalized_is(lat.n),
    }


def _group_name(factors) -> str:
    return " ⊕ ".join(f"Z/{f}" for f in factors) if factors else "0"


def cmd_lattice_report(args) -> tuple[int, dict, list[str]]:
    design = _load(args.path)
    if not design.is_rational:
        raise _Unsupported(f"design over Q(sqrt({design.D})) has irrational coordinates")
    bound = args.disc_bound
    lat = lattice_from_vectors(design.rational_vectors())
    pd = parity_and_det(lat)
    report: dict = {"label": design.label, "n": lat.n, "gram": lat.gram, **pd}
    lines = [f"lattice of {design.label or args.path}: n={lat.n}, det={pd['det']}"]
    ok = True
    summary = []
    if pd["integral"]:
        inv = snf_invariants(lat).invariant_factors
        report["invariant_factors"] = list(inv)
        summary.append("even" if pd["even"] else "odd")
        if pd["det"] == 1:
            summary.append("unimodular")
        if pd["even"]:
            g = _gauss_report(lat, bound)
            report["gauss"] = g
            ok = ok and g["milgram"]
            if pd["det"] == 1:
                summary.append(f"n ≡ {lat.n % 8} mod 8")
            summary.append("Milgram " + ("pass" if g["milgram"] else "FAIL"))
        elif pd["det_odd"]:
            cv = characteristic_vectors(lat)
            report["characteristic"] = {"coords": cv.coords, "norm": cv.norm, "norm_mod8": cv.norm_mod8}
            summary.append(f"characteristic norm ≡ {cv.norm_mod8} mod 8")
    else:
        summary.append("not integral")

    spectrum = inner_product_spectrum(design)
    d = design.d.rational if isinstance(design.d, ExactScalar) else Fraction(design.d)
    if spectrum.tight5 and d.denominator == 1 and d.numerator % 2 == 1:
        sub = even_sublattice(design)
        g = _gauss_report(sub.gamma, bound)
        two = g["sylow_sigma"].get(2)
        report["even_sublattice"] = {
            "index": sub.index,
            "contained_in_2dual": sub.contained_in_2dual,
            "gamma_gram": sub.gamma.gram,
            "gamma_det": sub.gamma.det,
            **{f"gamma_{k}": v for k, v in g.items()},
        }
        ok = ok and g["milgram"]
        summary.append(f"Λ₊ index {sub.index}")
        summary.append(f"Γ*/Γ ≅ {_group_name(g['invariant_factors'])}")
        if two is not None:
            summary.append(f"G₂ = {_zeta8(two)}")
    report["summary"] = ", ".join(summary)
    lines.append(report["summary"])
    return (OK if ok else FAILED), report, lines


def cmd_sieve(args) -> tuple[int, dict, list[str]]:
    if args.hi < args.lo:
        raise argparse.ArgumentTypeError(f"--to ({args.hi}) is smaller than --from ({args.lo})")
    registry = sieve.PriorRegistry.load(args.registry)
    table = sieve.run_sieve(args.t, args.lo, args.hi, registry, args.factor_bound, args.jobs)
    pname = "d" if args.t == 7 else "m"
    lines = [f"{pname:>8}  {'n':>10}  {'status':<12} reasons"]
    for v in table.verdicts:
        codes = ",".join(r.code for r in v.reasons) or "-"
        lines.append(f"{v.param:>8}  {v.n:>10}  {v.status:<12} {codes}")
    lines.append("summary: " + ", ".join(f"{k}={c}" for k, c in table.summary.items()))
    return OK, table.to_dict(), lines


def _parse_cell(text: str):
    parts = text.split(",")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError("expected r,delta[,shift]")
    r, delta = int(parts[0]), int(parts[1])
    shift = Fraction(parts[2]) if len(parts) == 3 else Fraction(1, 8)
    return (r, delta), shift


def cmd_verify_table(args) -> tuple[int, dict, list[str]]:
    perturb = dict(args.perturb_cell or ())
    report = congruence.verify_table(perturb)
    labels = {(c.r, c.delta): c.label for c in report.cells}
    lines = ["delta " + "".join(f"{'r=' + str(r):>7}" for r in congruence.RESIDUES)]
    for delta in congruence.DELTAS:
        row = "".join(f"{labels.get((r, delta), '??'):>7}" for r in congruence.RESIDUES)
        lines.append(f"{delta:>5} {row}")
    for r, delta, msg in report.failures:
        lines.append(f"mismatch: {msg}")
    if report.passed:
        lines.append("all 24 cells match; survivors "
                     + ", ".join(f"(r={r}, delta={dl})" for r, dl in report.survivors)
                     + " and each forces b even")
    return (OK if report.passed else FAILED), report.to_dict(), lines


def cmd_builtin(args) -> tuple[int, dict, list[str]]:
    design = builtin(args.name)
    try:
        save_design(design, args.out)
    except OSError as exc:
        raise FileNotFoundError(f"cannot write {args.out}: {exc.strerror or exc}") from None
    report = {"name": args.name, "out": args.out, "n": design.n, "s": design.s}
    return OK, report, [f"wrote {args.name} ({design.s} vectors, n={design.n}) to {args.out}"]


# -- argument parsing --------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _global_flags(parser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="machine-readable output")
    parser.add_argument("--jobs", type=_positive, default=default(1), metavar="N")
    parser.add_argument("--registry", default=default(None), metavar="PATH",
                        help="prior-exclusion registry (default: bundled file)")
    parser.add_argument("--factor-bound", type=_positive, default=default(sieve.DEFAULT_FACTOR_BOUND),
                        metavar="N")
    parser.add_argument("--disc-bound", type=_positive, default=default(DEFAULT_DISC_BOUND), metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tightdesigns", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-design", parents=[common], help="strength, tightness and spectrum")
    p.add_argument("path")
    p.add_argument("--t", type=int, choices=(5, 7), default=7)
    p.set_defaults(func=cmd_verify_design)

    p = sub.add_parser("lattice-report", parents=[common], help="lattice invariants of a design")
    p.add_argument("path")
    p.set_defaults(func=cmd_lattice_report)

    p = sub.add_parser("sieve", parents=[common], help="exclusion table for a parameter range")
    p.add_argument("--t", type=int, choices=(5, 7), required=True)
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("verify-table", parents=[common], help="2-adic case table for odd d")
    p.add_argument("--perturb-cell", type=_parse_cell, action="append", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("builtin", parents=[common], help="export a built-in design")
    p.add_argument("--name", choices=sorted(BUILTINS), required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_builtin)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        code, report, lines = args.func(args)
    except (FileNotFoundError, DesignError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (_Unsupported, UnsupportedLattice, DiscriminantBoundExceeded, sieve.FactorBoundExceeded) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except (LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if args.json:
        print(dump_json(report))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
