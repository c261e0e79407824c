"""Command-line front end: ``etastrip eval | scan | verify``.

Exit codes: 0 success (or every hard identity passed), 1 a hard identity
failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
import tempfile
from typing import Iterable, List, Optional

from . import __version__
from .errors import EtaStripError
from .eta import DEFAULT_TOL, StripPoint, eta, zeta_from_eta
from .funceq import arg_breakdown, omega_membership, omega_residual, phi, polar
from .verify import CATALOG, IDENTITY_IDS, GridSpec, run_all
from .zeros import ZERO_RECORD_FIELDS, ScanConfig, find_zeros

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_COMPLEX_RE = re.compile(r"^([+-]?\d+(?:\.\d+)?)([+-]\d+(?:\.\d+)?)i$")

VERIFY_CSV_FIELDS = (
    "id", "report_only", "grid_size", "max_residual", "threshold",
    "passed", "n_failures", "n_errors",
)


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` / ``a-bi`` (no spaces, no exponents)."""
    m = _COMPLEX_RE.match(text.strip())
    if not m:
        raise UsageError(f"cannot parse complex literal {text!r}; expected e.g. 0.5+14i")
    return complex(float(m.group(1)), float(m.group(2)))


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def _human(fields: dict) -> str:
    width = max(len(k) for k in fields)
    return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in fields.items())


def _csv(rows: Iterable[dict], columns) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt(row[k]) for k in columns})
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".etastrip-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _series_fields(sv) -> dict:
    return {"re": sv.value.real, "im": sv.value.imag,
            "error_bound": sv.error_bound, "terms_used": sv.terms_used}


def evaluate(what: str, s: complex, tol: float) -> dict:
    """Flat field dictionary for one ``eval`` target."""
    if what == "eta":
        return _series_fields(eta(s, tol))
    if what == "zeta":
        return _series_fields(zeta_from_eta(s, tol))
    if what == "breakdown":
        if s.real != 0.5:
            raise UsageError(f"breakdown is defined on Re s = 1/2, got Re s = {s.real:g}")
        ab = arg_breakdown(s.imag)
        return {k: getattr(ab, k) for k in ab.__dataclass_fields__}
    point = StripPoint.from_complex(s)
    if what == "phi":
        v = phi(point)
        return {"re": v.real, "im": v.imag}
    if what == "polar":
        pf = polar(point)
        return {"rho": pf.modulus, "theta": pf.arg}
    if what == "omega":
        om = omega_residual(point, tol)
        mem = omega_membership(point, tol)
        return {
            "series_re": om.value.real, "series_im": om.value.imag,
            "error_bound": om.error_bound, "terms_used": om.terms_used,
            "closed_re": om.closed_form.real, "closed_im": om.closed_form.imag,
            "route_difference": om.route_difference, "rho_squared": om.rho_squared,
            "r1": mem.r1, "r2": mem.r2, "member": mem.member,
        }
    raise UsageError(f"unknown target {what!r}")


def cmd_eval(args) -> int:
    s = parse_complex(args.s)
    fields = {"s": args.s, "what": args.what, **evaluate(args.what, s, args.tol)}
    if args.format == "json":
        text = _json(fields)
    elif args.format == "csv":
        text = _csv([fields], fields.keys())
    else:
        text = _human(fields)
    _write(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def cmd_scan(args) -> int:
    config = ScanConfig(args.t_lo, args.t_hi, args.step, args.refine_tol, args.series_tol)
    records = find_zeros(config, jobs=args.jobs)
    rows = [r.as_row() for r in records]
    summary = f"{len(rows)} zeros on [{_fmt(config.t_lo)}, {_fmt(config.t_hi)}]"
    if args.format == "json":
        text = _json({"config": config.__dict__, "count": len(rows), "records": rows,
                      "tool_version": __version__})
    elif args.format == "csv":
        text = _csv(rows, ZERO_RECORD_FIELDS)
        print(summary, file=sys.stderr)
    else:
        lines = [" ".join(f"{k}={_fmt(row[k])}" for k in ZERO_RECORD_FIELDS) for row in rows]
        text = "".join(line + "\n" for line in lines) + summary + "\n"
    _write(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _identity_list(raw: List[str]) -> Optional[List[str]]:
    names = [n.strip() for item in raw for n in item.split(",") if n.strip()]
    if not names or "all" in names:
        return None
    unknown = [n for n in names if n not in CATALOG]
    if unknown:
        raise UsageError(f"unknown identities: {', '.join(unknown)}; "
                         f"choose from {', '.join(IDENTITY_IDS)}")
    return names


def cmd_verify(args) -> int:
    identities = _identity_list(args.identities)
    overrides = {"n_beta": args.n_beta, "beta_hi": args.beta_max,
                 "n_strip": args.n_strip, "series_tol": args.series_tol}
    if args.seed is not None:
        overrides["seed"] = args.seed
    spec = GridSpec.from_env(**overrides)
    report = run_all(spec, identities=identities, jobs=args.jobs)
    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        rows = [{
            "id": r.id, "report_only": r.report_only, "grid_size": r.grid_size,
            "max_residual": r.max_residual if r.max_residual is not None else math.nan,
            "threshold": r.threshold, "passed": r.passed,
            "n_failures": len(r.failures), "n_errors": len(r.errors),
        } for r in report.results]
        text = _csv(rows, VERIFY_CSV_FIELDS)
    else:
        lines = []
        for r in report.results:
            status = "REPORT" if r.report_only else ("PASS" if r.passed else "FAIL")
            lines.append(f"{r.id:<16} {status:<6} max={_fmt(r.max_residual):<20} "
                         f"threshold={_fmt(r.threshold)} failures={len(r.failures)}")
        lines.append(f"verdict: {report.verdict} (seed {spec.seed})")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    if args.out is not None:
        print(f"verdict: {report.verdict}", file=sys.stderr)
    return EXIT_OK if report.verdict == "pass" else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="etastrip", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "human"), default="human")
        p.add_argument("--out", default=None, help="write output to FILE atomically")

    p = sub.add_parser("eval", help="evaluate one function at a complex point")
    p.add_argument("--s", required=True, help="complex literal such as 0.5+14i")
    p.add_argument("--what", choices=("eta", "zeta", "phi", "polar", "omega", "breakdown"),
                   default="eta")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("scan", help="find zeros on the critical line")
    p.add_argument("t_lo", type=float)
    p.add_argument("t_hi", type=float)
    p.add_argument("--step", type=float, default=0.02)
    p.add_argument("--refine-tol", type=float, default=1e-9)
    p.add_argument("--series-tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="check the identity catalog")
    p.add_argument("--identities", action="append", default=[],
                   help="comma-separated catalog names, or 'all' (default)")
    p.add_argument("--n-beta", type=int, default=500)
    p.add_argument("--beta-max", type=float, default=60.0)
    p.add_argument("--n-strip", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--series-tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_complex_args(argv: List[str]) -> List[str]:
    # "--s -1+0i" would otherwise be read as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--s" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--s={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_complex_args(argv))
    try:
        return args.func(args)
    except (UsageError, EtaStripError) as exc:
        print(f"etastrip {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
