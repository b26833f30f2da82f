"""Command-line front door.

Subcommands: field-info, construct, verify, census.  Output is deterministic
JSON on stdout (or --out); human-readable diagnostics go to stderr.

Exit codes: 0 success, 2 invalid parameters or malformed input, 3 the
parameters are valid but the construction cannot be carried out, 4 a
verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

import sympy

from .census import CENSUS_BUDGET, census_report, new_lengths, prior_lengths
from .constructions import THEOREMS, build
from .errors import (
    BudgetExceeded,
    EvenQ,
    HypothesisViolated,
    MdssdError,
    NotEnoughCosets,
    ParityInfeasible,
    SpotCheckFailed,
    SquareConditionViolated,
    TooLargeToMaterialize,
    UnsupportedTheorem,
)
from .field import make_field
from .grs import artifact_from_dict, artifact_to_dict, to_json
from .verify import verify_artifact

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CONSTRUCTION = 3
EXIT_VERIFICATION = 4


def _emit(doc: dict, out_path: str | None) -> None:
    text = to_json(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _fail(code: int, message: str, out_path: str | None = None) -> int:
    print(message, file=sys.stderr)
    _emit({"error": message}, out_path)
    return code


def _resolve_pd(args) -> tuple[int, int]:
    """Accept either --p/--deg or a (possibly composite) --q."""
    if args.q is not None:
        if args.q < 3 or args.q % 2 == 0:
            raise HypothesisViolated("q is a power of an odd prime")
        factors = sympy.factorint(args.q)
        if len(factors) != 1:
            raise HypothesisViolated("q is a power of an odd prime")
        (p, d), = factors.items()
        return p, d
    if args.p is None:
        raise HypothesisViolated("either --q or --p/--deg is required")
    return args.p, args.deg


def cmd_field_info(args) -> int:
    try:
        p, d = _resolve_pd(args)
        if not sympy.isprime(p) or p == 2:
            raise HypothesisViolated("p is an odd prime")
        ctx = make_field(p, d)
    except MdssdError as ex:
        return _fail(EXIT_INVALID, str(ex), args.out)
    doc = {
        "p": ctx.p,
        "d": ctx.d,
        "q": ctx.q,
        "modulus": list(ctx.modulus),
        "modulus_str": ctx.modulus_str(),
        "generator": ctx.g_val,
        "generator_str": ctx.format_v(ctx.g_val),
        "q1_prime_factors": list(ctx.q1_factors),
    }
    _emit(doc, args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        p, d = _resolve_pd(args)
    except MdssdError as ex:
        return _fail(EXIT_INVALID, str(ex), args.out)
    kw = {}
    for key, dest in (("m", "m"), ("t", "t"), ("s", "s"), ("e", "e"), ("k", "k_sub")):
        val = getattr(args, key)
        if val is not None:
            kw[dest] = val
    try:
        art, trace = build(args.theorem, p, d, **kw)
    except (HypothesisViolated, UnsupportedTheorem) as ex:
        return _fail(EXIT_INVALID, str(ex), args.out)
    except (ParityInfeasible, TooLargeToMaterialize, NotEnoughCosets,
            SquareConditionViolated) as ex:
        return _fail(EXIT_CONSTRUCTION, str(ex), args.out)
    report = verify_artifact(art, mds=not args.no_mds)
    doc = artifact_to_dict(art, trace.to_dict(), report.to_dict())
    _emit(doc, args.out)
    if not report.self_dual or report.mds_ok is False:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(getattr(args, "in"), "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        art = artifact_from_dict(doc)
    except (OSError, ValueError, KeyError, TypeError, MdssdError) as ex:
        return _fail(EXIT_INVALID, f"cannot load artifact: {ex}", args.out)
    try:
        report = verify_artifact(art, mds=args.mds)
    except MdssdError as ex:
        return _fail(EXIT_VERIFICATION, str(ex), args.out)
    _emit(report.to_dict(), args.out)
    if not (report.self_dual and report.rank_ok) or report.mds_ok is False:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_census(args) -> int:
    try:
        if args.spot_check_bound:
            rep = census_report(args.q, args.spot_check_bound)
            prior, new = set(rep.lengths_prior), set(rep.lengths_new)
            spot = {str(n): v for n, v in sorted(rep.spot_checks.items())}
        else:
            prior, new = set(prior_lengths(args.q)), set(new_lengths(args.q))
            spot = {}
    except (EvenQ, BudgetExceeded) as ex:
        return _fail(EXIT_INVALID, str(ex), args.out)
    except SpotCheckFailed as ex:
        return _fail(EXIT_VERIFICATION, str(ex), args.out)
    chosen = {"prior": prior, "new": new, "all": prior | new}[args.rows]
    doc = {
        "q": args.q,
        "rows": args.rows,
        "count": len(chosen),
        "prior_count": len(prior),
        "new_count": len(new),
        "union_count": len(prior | new),
    }
    if spot:
        doc["spot_checks"] = spot
    if args.list:
        doc["lengths"] = sorted(chosen)
    _emit(doc, args.out)
    return EXIT_OK


def _add_pd_flags(sub) -> None:
    sub.add_argument("--q", type=int, help="field size (odd prime power)")
    sub.add_argument("--p", type=int, help="characteristic")
    sub.add_argument("--deg", type=int, default=1, help="extension degree")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdssd",
        description="Construct, verify and census MDS self-dual codes from "
                    "(extended) generalized Reed-Solomon codes.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    fi = subs.add_parser("field-info", help="deterministic field data for F_q")
    _add_pd_flags(fi)
    fi.add_argument("--out", help="write JSON here instead of stdout")
    fi.set_defaults(func=cmd_field_info)

    co = subs.add_parser("construct", help="build a self-dual code artifact")
    _add_pd_flags(co)
    co.add_argument("--theorem", required=True, choices=THEOREMS)
    co.add_argument("--m", type=int)
    co.add_argument("--t", type=int)
    co.add_argument("--s", type=int)
    co.add_argument("--e", type=int)
    co.add_argument("--k", type=int, help="subfield degree (family 5)")
    co.add_argument("--no-mds", action="store_true",
                    help="skip the MDS checks in the embedded report")
    co.add_argument("--out", help="write the artifact here instead of stdout")
    co.set_defaults(func=cmd_construct)

    ve = subs.add_parser("verify", help="re-verify a stored artifact")
    ve.add_argument("--in", required=True, help="artifact JSON path")
    ve.add_argument("--mds", action=argparse.BooleanOptionalAction, default=True)
    ve.add_argument("--out", help="write the report here instead of stdout")
    ve.set_defaults(func=cmd_verify)

    ce = subs.add_parser("census", help="achievable-length census for F_q")
    ce.add_argument("--q", type=int, required=True,
                    help=f"odd prime power, at most {CENSUS_BUDGET}")
    ce.add_argument("--rows", choices=("prior", "new", "all"), default="all")
    ce.add_argument("--list", action="store_true", help="include the lengths")
    ce.add_argument("--spot-check-bound", type=int, default=0,
                    help="construct and verify every new length up to this bound")
    ce.add_argument("--out", help="write JSON here instead of stdout")
    ce.set_defaults(func=cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
