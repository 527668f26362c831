"""Command-line front end.

Subcommands: ``radius`` (one boundary radius), ``boundary`` (sampled polar
profile as CSV or JSON), ``bounds`` (two-point bounds plus the extremal
ratio), ``verify`` (run a verification suite, machine-readable report).

Exit codes: 0 success, 1 verification violations, 2 invalid flags,
3 unwritable output path.  All numerics print with 12 significant digits and
no locale dependence; output bytes are deterministic for fixed flags and
seed.  KOEBE_SEED provides the default seed, KOEBE_BACKEND forces a kernel
backend (see README).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .bounds import candidate_ratio, two_point_bounds
from .candidates import extremal, identity, rotated_extremal
from .complex_core import (BoundaryPoint, DegenerateInputError, DiskPoint,
                           DomainError, OrderParameter)
from .domain import MontelConfig, boundary_profile, koebe_radius
from .verify import (DEFAULT_TOLERANCES, SUITE_NAMES, verify_growth,
                     verify_limit, verify_starlikeness, verify_two_point)

DEFAULT_SUITE_SIZES = {"starlike": 64, "two-point": 10000, "growth": 64, "limit": 16}

_CANDIDATES = ("identity", "extremal", "rotated")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _num(x: float) -> float:
    # round-trip through 12 significant digits so json output carries the
    # same precision as the plain-text formats
    return float(_fmt(x))


def _env_seed() -> int:
    raw = os.environ.get("KOEBE_SEED", "").strip() or "0"
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"KOEBE_SEED must be an integer, got {raw!r}") from None


def _order_from(args) -> OrderParameter:
    return OrderParameter(complex(args.b_re, args.b_im))


def _disk_from(args, name) -> DiskPoint:
    re = getattr(args, f"{name}_re")
    im = getattr(args, f"{name}_im")
    try:
        return DiskPoint(complex(re, im))
    except DomainError:
        raise DomainError(f"{name} must lie strictly inside the unit disk") from None


def _make_candidate(name, order, alpha):
    if name == "identity":
        return identity(order)
    if name == "extremal":
        return extremal(order)
    return rotated_extremal(order, alpha)


def _write_text(text: str, out: str | None) -> int:
    if out is None or out == "-":
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_radius(args) -> int:
    theta = math.radians(args.theta) if args.degrees else args.theta
    cfg = MontelConfig(args.r0, _order_from(args))
    print(_fmt(koebe_radius(BoundaryPoint(theta), cfg)))
    return 0


def cmd_boundary(args) -> int:
    cfg = MontelConfig(args.r0, _order_from(args))
    profile = boundary_profile(cfg, args.samples)
    if args.format == "csv":
        lines = ["theta,radius"]
        lines += [f"{_fmt(t)},{_fmt(r)}" for t, r in profile.samples]
        text = "\n".join(lines) + "\n"
    else:
        doc = {
            "schema": "koebe/1",
            "r0": _num(cfg.r0),
            "b": {"re": _num(cfg.order.b.real), "im": _num(cfg.order.b.imag)},
            "samples": [{"theta": _num(t), "radius": _num(r)}
                        for t, r in profile.samples],
        }
        text = json.dumps(doc) + "\n"
    return _write_text(text, args.out)


def cmd_bounds(args) -> int:
    u = _disk_from(args, "u")
    v = _disk_from(args, "v")
    order = _order_from(args)
    pair = two_point_bounds(u, v, order)
    mid = candidate_ratio(extremal(order), u, v)
    print(f"{_fmt(pair.lower)} {_fmt(mid)} {_fmt(pair.upper)}")
    return 0


def cmd_verify(args) -> int:
    order = _order_from(args)
    n = args.n if args.n is not None else DEFAULT_SUITE_SIZES[args.suite]
    tol = args.tol if args.tol is not None else DEFAULT_TOLERANCES[args.suite]
    seed = args.seed if args.seed is not None else _env_seed()
    if args.suite == "limit":
        report = verify_limit(MontelConfig(args.r0, order), n, tol=tol)
    else:
        f = _make_candidate(args.candidate, order, args.alpha)
        if args.suite == "starlike":
            report = verify_starlikeness(f, n, tol=tol)
        elif args.suite == "two-point":
            report = verify_two_point(f, n, seed, tol=tol)
        else:
            report = verify_growth(f, n, tol=tol)

    d = report.to_dict()
    d["worst_margin"] = _num(d["worst_margin"])
    d["tolerance"] = _num(d["tolerance"])
    if d["witness"] is not None:
        d["witness"] = [_num(x) for x in d["witness"]]
    if args.format == "json":
        text = json.dumps({"schema": "koebe/1", **d}) + "\n"
    else:
        witness = "" if d["witness"] is None else " ".join(_fmt(x) for x in d["witness"])
        header = "suite,n_checks,n_skipped,n_violations,worst_margin,tolerance,seed,passed,witness"
        row = (f"{d['suite']},{d['n_checks']},{d['n_skipped']},{d['n_violations']},"
               f"{_fmt(d['worst_margin'])},{_fmt(d['tolerance'])},{d['seed']},"
               f"{str(d['passed']).lower()},{witness}")
        text = header + "\n" + row + "\n"
    rc = _write_text(text, None)
    if rc:
        return rc
    return 0 if report.passed else 1


def _add_order_flags(p):
    p.add_argument("--b-re", type=float, default=1.0, help="real part of the order parameter b")
    p.add_argument("--b-im", type=float, default=0.0, help="imaginary part of b")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koebe",
        description="Koebe-domain radii and distortion bounds for starlike "
                    "functions of complex order under the interior fixed-point "
                    "normalization f(r0) = r0.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="print one boundary radius R(theta)")
    p.add_argument("--theta", type=float, required=True, help="angle (radians unless --degrees)")
    p.add_argument("--degrees", action="store_true", help="interpret --theta in degrees")
    p.add_argument("--r0", type=float, required=True, help="interior fixed point, 0 < r0 < 1")
    _add_order_flags(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("boundary", help="sample the polar boundary profile")
    p.add_argument("--r0", type=float, required=True)
    _add_order_flags(p)
    p.add_argument("--samples", type=int, default=360, help="number of uniform angles (>= 2)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("bounds", help="two-point bounds and the extremal ratio")
    p.add_argument("--u-re", type=float, required=True)
    p.add_argument("--u-im", type=float, default=0.0)
    p.add_argument("--v-re", type=float, required=True)
    p.add_argument("--v-im", type=float, default=0.0)
    _add_order_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--candidate", choices=_CANDIDATES, default="extremal")
    p.add_argument("--alpha", type=float, default=0.0,
                   help="rotation angle for the rotated candidate")
    _add_order_flags(p)
    p.add_argument("--n", type=int, default=None,
                   help="suite size: grid side, sample pairs, radii, or angles")
    p.add_argument("--seed", type=int, default=None,
                   help="sampling seed (default: KOEBE_SEED or 0)")
    p.add_argument("--tol", type=float, default=None, help="violation tolerance")
    p.add_argument("--r0", type=float, default=0.5, help="fixed point (limit suite)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already written its diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, DegenerateInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
