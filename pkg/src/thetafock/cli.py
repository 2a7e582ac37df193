"""Command-line front end.

Subcommands evaluate theta series, space modes and kernels, run the
Bargmann transform forward and backward on serialized elements, apply the
Landau operator and its ladder shifts, and execute the acceptance suite.
Output is JSON by default or CSV with --format csv (complex values flatten
into paired _re/_im columns).  Complex literals on the command line use
the form a+bi.  Output is always plain text, so NO_COLOR needs no special
handling.  Exit codes: 0 success, 1 domain or numerical error, 2
verification failure, 64 usage error.
"""

import argparse
import csv
import io
import json
import math
import sys

from .core import DEFAULT_BUDGET, DomainError, EvaluationError, TruncationBudget, TruncationError
from .bargmann import LineElement, bargmann_inverse, bargmann_transform_coeffs
from .fock import FockElement, SpaceParams, basis_psi, reproducing_kernel, theta_membership
from .landau import LandauElement, basis_psi_mn, eigen_residual, landau_apply
from .quadrature import StripScheme, strip_inner_product
from .theta import ThetaArgs, riemann_theta
from .verify import SAMPLE_Z, run_acceptance

PI = math.pi


class UsageError(Exception):
    """Bad invocation or malformed input; maps to exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_complex(text):
    """Parse a command-line complex literal of the form a+bi."""
    s = str(text).strip().replace(" ", "").replace("I", "i")
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex literal {text!r}; expected the form a+bi") from None


def _cnum(value):
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"input file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None


def _load_element(path, cls):
    try:
        return cls.from_dict(_load_json(path))
    except DomainError as exc:
        raise UsageError(f"malformed element in {path}: {exc}") from None


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, indent=2) + "\n")


def _flatten(record):
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict) and set(value) == {"re", "im"}:
            flat[f"{key}_re"] = value["re"]
            flat[f"{key}_im"] = value["im"]
        else:
            flat[key] = value
    return flat


def _to_csv(rows):
    if not rows:
        return ""
    flat = [_flatten(r) for r in rows]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(flat[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat)
    return buf.getvalue().rstrip("\n")


def _format(payload, rows, fmt):
    if fmt == "csv":
        return _to_csv(rows)
    return json.dumps(payload, indent=2)


def _cmd_theta_eval(args):
    budget = TruncationBudget(tol=args.tol) if args.tol is not None else DEFAULT_BUDGET
    value = riemann_theta(ThetaArgs(args.alpha, args.beta, parse_complex(args.tau)), parse_complex(args.z), budget)
    payload = _cnum(value)
    return 0, payload, [{"value": payload}]


def _cmd_fock_psi(args):
    params = SpaceParams(args.nu, args.alpha)
    value = basis_psi(args.n, parse_complex(args.z), params)
    payload = _cnum(value)
    return 0, payload, [{"value": payload}]


def _cmd_fock_gram(args):
    params = SpaceParams(args.nu, args.alpha)
    if args.nmax < args.nmin:
        raise UsageError(f"--nmax must be >= --nmin, got {args.nmin}..{args.nmax}")
    levels = args.mlevels if args.mlevels is not None else 0
    modes = [(m, n) for m in range(0, levels + 1) for n in range(args.nmin, args.nmax + 1)]
    entries = []
    for m1, n1 in modes:
        for m2, n2 in modes:
            scheme = StripScheme.centered(params.nu, params.alpha, (n1 + n2) / 2.0)
            ip = strip_inner_product(
                lambda z: basis_psi_mn(m1, n1, z, params),
                lambda z: basis_psi_mn(m2, n2, z, params),
                params.nu,
                scheme,
            )
            entries.append({"row_m": m1, "row_n": n1, "col_m": m2, "col_n": n2, "re": ip.real, "im": ip.imag})
    payload = {"nu": params.nu, "alpha": params.alpha, "entries": entries}
    return 0, payload, entries


def _cmd_fock_kernel(args):
    params = SpaceParams(args.nu, args.alpha)
    value = reproducing_kernel(parse_complex(args.z), parse_complex(args.w), params, path=args.path)
    payload = _cnum(value)
    return 0, payload, [{"value": payload}]


def _cmd_fock_member(args):
    params = SpaceParams(args.nu, args.alpha)
    result = theta_membership(ThetaArgs(args.alpha, args.beta, parse_complex(args.tau)), params)
    payload = {"in_space": result.in_space, "norm": result.norm}
    return 0, payload, [payload]


def _cmd_bargmann_forward(args):
    line_elem = _load_element(args.infile, LineElement)
    fock_elem = bargmann_transform_coeffs(line_elem, args.nu)
    if args.z is not None:
        value = fock_elem.evaluate(parse_complex(args.z))
        payload = _cnum(value)
        return 0, payload, [{"value": payload}]
    payload = fock_elem.to_dict()
    if args.out is not None:
        _write_json(args.out, payload)
    return 0, payload, [dict(c) for c in payload["coeffs"]]


def _cmd_bargmann_inverse(args):
    fock_elem = _load_element(args.infile, FockElement)
    value = bargmann_inverse(fock_elem, args.q)
    payload = _cnum(value)
    return 0, payload, [{"value": payload}]


def _cmd_landau_apply(args):
    elem = _load_element(args.infile, LandauElement)
    value = landau_apply(elem.evaluate, parse_complex(args.z), elem.params)
    payload = _cnum(value)
    return 0, payload, [{"value": payload}]


def _cmd_landau_shift(args):
    elem = _load_element(args.infile, LandauElement)
    shifted = elem.raised() if args.direction == "raise" else elem.lowered()
    payload = shifted.to_dict()
    _write_json(args.out, payload)
    return 0, payload, [dict(c) for c in payload["coeffs"]]


def _cmd_landau_eigres(args):
    params = SpaceParams(args.nu, args.alpha)
    residual = eigen_residual(args.m, args.n, params, SAMPLE_Z)
    payload = {"m": args.m, "n": args.n, "eigenvalue": params.nu * args.m, "residual": residual}
    return 0, payload, [payload]


def _cmd_verify_all(args):
    report = run_acceptance(args.tol)
    payload = report.to_dict()
    code = 0 if report.all_passed else 2
    return code, payload, [c.to_dict() for c in report.cases]


def build_parser():
    parser = _Parser(
        prog="thetafock",
        description="Quasi-periodic theta function spaces: evaluation, transforms, verification.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name, handler, **defaults):
        sub = group.add_parser(name)
        sub.add_argument("--format", choices=("json", "csv"), default="json")
        sub.set_defaults(handler=handler, **defaults)
        return sub

    theta_group = top.add_parser("theta").add_subparsers(dest="command", required=True)
    sub = leaf(theta_group, "eval", _cmd_theta_eval)
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--beta", type=float, required=True)
    sub.add_argument("--tau", required=True)
    sub.add_argument("--z", required=True)
    sub.add_argument("--tol", type=float, default=None)

    fock_group = top.add_parser("fock").add_subparsers(dest="command", required=True)
    sub = leaf(fock_group, "psi", _cmd_fock_psi)
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--z", required=True)
    sub = leaf(fock_group, "gram", _cmd_fock_gram)
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--nmin", type=int, required=True)
    sub.add_argument("--nmax", type=int, required=True)
    sub.add_argument("--mlevels", type=int, default=None)
    sub = leaf(fock_group, "kernel", _cmd_fock_kernel)
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--z", required=True)
    sub.add_argument("--w", required=True)
    sub.add_argument("--path", choices=("theta", "sum"), default="theta")
    sub = leaf(fock_group, "member", _cmd_fock_member)
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--beta", type=float, required=True)
    sub.add_argument("--tau", required=True)

    bargmann_group = top.add_parser("bargmann").add_subparsers(dest="command", required=True)
    sub = leaf(bargmann_group, "forward", _cmd_bargmann_forward)
    sub.add_argument("--in", dest="infile", required=True)
    sub.add_argument("--nu", type=float, default=PI)
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--z", default=None)
    group.add_argument("--out", default=None)
    sub = leaf(bargmann_group, "inverse", _cmd_bargmann_inverse)
    sub.add_argument("--in", dest="infile", required=True)
    sub.add_argument("--q", type=float, required=True)

    landau_group = top.add_parser("landau").add_subparsers(dest="command", required=True)
    sub = leaf(landau_group, "apply", _cmd_landau_apply)
    sub.add_argument("--in", dest="infile", required=True)
    sub.add_argument("--z", required=True)
    sub = leaf(landau_group, "raise", _cmd_landau_shift, direction="raise")
    sub.add_argument("--in", dest="infile", required=True)
    sub.add_argument("--out", required=True)
    sub = leaf(landau_group, "lower", _cmd_landau_shift, direction="lower")
    sub.add_argument("--in", dest="infile", required=True)
    sub.add_argument("--out", required=True)
    sub = leaf(landau_group, "eigres", _cmd_landau_eigres)
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)

    verify_group = top.add_parser("verify").add_subparsers(dest="command", required=True)
    sub = leaf(verify_group, "all", _cmd_verify_all)
    sub.add_argument("--tol", type=float, default=None)

    return parser


def run_command(argv):
    """Execute one subcommand; returns (exit code, textual output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, payload, rows = args.handler(args)
        return code, _format(payload, rows, args.format)
    except UsageError as exc:
        return 64, f"usage error: {exc}"
    except (DomainError, TruncationError, EvaluationError, OverflowError) as exc:
        return 1, f"error: {exc}"


def main(argv=None):
    code, text = run_command(sys.argv[1:] if argv is None else list(argv))
    print(text, file=sys.stderr if code in (1, 64) else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
