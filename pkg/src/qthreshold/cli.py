"""Command-line front end.

Exit codes: 0 success; 1 a verified inequality was empirically violated
(a witness JSON is written); 2 usage or validation error; 3 resource-cap
or I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .codes import parse_code_spec
from .config import ENUM_CAP_ENV
from .emit import (ambiguity_to_csv, curve_to_csv, report_payload, to_json,
                   write_text)
from .errors import EnumerationCapError, ValidationError
from .results import VIOLATED
from .suite import ALL_VERIFIERS, run_suite
from .threshold import curve_mc, erasure_ambiguity, success_exact
from .codes import zero as zero_codeword

_EPILOG = (
    "Builtin code specs: rep:q:n, hamming:7:4, random:q:n:k:seed, "
    "augment-e1:<spec>, or a path to a generator file "
    '(header "q n k", then k rows of n symbols).  '
    f"The exhaustive-scan cap can be overridden with {ENUM_CAP_ENV}."
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qthreshold",
        description="Exact and Monte Carlo decoding-threshold experiments "
                    "for linear codes on the symmetric q-ary channel.",
        epilog=_EPILOG)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    th = sub.add_parser(
        "threshold",
        help="success-probability curve g(p) of the maximum-likelihood decoder",
        description="Write the decoding success curve g(p) as CSV "
                    "(columns p,g,logit_g,mode,half_width,samples).  Exact "
                    "mode enumerates the decoding region once and evaluates "
                    "its weight enumerator per grid point; mc mode estimates "
                    "g by seeded channel simulation with Hoeffding "
                    "half-widths.",
        epilog=_EPILOG)
    _add_common(th)
    th.add_argument("--mode", choices=["exact", "mc"], default="exact")
    th.add_argument("--samples", type=int, default=100_000,
                    help="samples per grid point in mc mode")
    th.add_argument("--delta", type=float, default=1e-6,
                    help="confidence parameter for mc half-widths")
    th.add_argument("--parallel", type=int, default=1,
                    help="worker threads; results are identical at any degree")

    ve = sub.add_parser(
        "verify",
        help="run the inequality and structure verifiers, emit a JSON report",
        description="Exhaustively check, over a seeded corpus of small codes "
                    "and monotone indicator functions: the square-root "
                    "boundary inequality (talagrand), the boundary-count "
                    "inequality (iso), the derivative bound (russo), the "
                    "decoding-region boundary floor (delta-bound), the "
                    "threshold envelope g(p1)(1-g(p0)) <= "
                    "exp(-((1-p1)/4)(sqrt(d)/q^1.5)(p1-p0)) (gbound), the "
                    "fresh-support inequality (largesupport), translation "
                    "symmetry and monotonicity of decoding regions "
                    "(symmetry), and the reliability failure of "
                    "e1-augmented codes (e1-augment).  Exit status 1 plus a "
                    "witness file if anything is violated.",
        epilog=_EPILOG)
    group = ve.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true",
                       help="run every verifier")
    group.add_argument("--verifiers",
                       help="comma list from: " + ",".join(ALL_VERIFIERS))
    ve.add_argument("--q", default="2,3", help="comma list of field orders")
    ve.add_argument("--nmax", type=int, default=6,
                    help="largest block length for random instances")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--out", help="report JSON path (default: stdout)")
    ve.add_argument("--witness-out",
                    help="witness JSON path on violation "
                         "(default: <out>.witness.json or witness.json)")
    ve.add_argument("--parallel", type=int, default=1,
                    help="worker threads; results are identical at any degree")

    er = sub.add_parser(
        "erasure",
        help="probability that erasures leave the sent codeword ambiguous",
        description="For each grid rate p, the probability that some other "
                    "codeword agrees with the sent one on all unerased "
                    "coordinates: exact enumeration over all 2^n erasure "
                    "patterns, or seeded Monte Carlo with Hoeffding "
                    "half-widths.  CSV columns: "
                    "p,ambiguity,mode,half_width,samples.",
        epilog=_EPILOG)
    _add_common(er)
    er.add_argument("--mode", choices=["exact", "mc"], default="exact")
    er.add_argument("--samples", type=int, default=100_000)
    er.add_argument("--delta", type=float, default=1e-6,
                    help="confidence parameter for mc half-widths")
    return parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--code", required=True,
                     help="builtin code spec or generator file path")
    sub.add_argument("--grid",
                     help="noise rates: start:stop:step, or a comma list "
                          "(default: 0 to (q-1)/q in steps of 0.01)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--out", help="output CSV path (default: stdout)")


def parse_grid(spec: str | None, q: int) -> list[float]:
    if spec is None:
        top = 100 * (q - 1) // q
        return [j / 100 for j in range(top + 1)]
    if spec == "":
        return []
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValidationError(
                f"bad grid {spec!r}: expected start:stop:step")
        try:
            start, stop, step = (float(x) for x in parts)
        except ValueError as exc:
            raise ValidationError(f"bad grid {spec!r}: non-numeric part") from exc
        if step <= 0 or stop < start:
            raise ValidationError(f"bad grid {spec!r}: need step > 0 and stop >= start")
        count = int((stop - start) / step + 1e-9) + 1
        values = [start + i * step for i in range(count)]
    else:
        try:
            values = [float(x) for x in spec.split(",") if x]
        except ValueError as exc:
            raise ValidationError(f"bad grid {spec!r}: non-numeric part") from exc
    for v in values:
        if not 0.0 <= v <= 1.0:
            raise ValidationError(f"grid value {v} outside [0, 1]")
    return sorted(values)   # output rows are ordered by p


def load_config_tokens(path: str) -> list[str]:
    """Flat key = value lines become --key value tokens (flags given on
    the command line afterwards override them)."""
    tokens: list[str] = []
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValidationError(
                    f"bad config line {raw.strip()!r}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            if not key or not value:
                raise ValidationError(
                    f"bad config line {raw.strip()!r}: expected key = value")
            tokens.extend([f"--{key}", value])
    return tokens


def _apply_config(argv: list[str]) -> list[str]:
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        raise ValidationError("--config needs a file path")
    if at == 0:
        raise ValidationError("--config must follow a subcommand")
    tokens = load_config_tokens(argv[at + 1])
    rest = argv[:at] + argv[at + 2:]
    return rest[:1] + tokens + rest[1:]


def _emit_or_print(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _cmd_threshold(args) -> int:
    code = parse_code_spec(args.code)
    grid = parse_grid(args.grid, code.q)
    if args.mode == "exact":
        curve = success_exact(code, grid)
    else:
        curve = curve_mc(code, grid, args.samples, args.seed,
                         confidence=args.delta, parallelism=args.parallel)
    _emit_or_print(curve_to_csv(curve), args.out)
    return 0


def _cmd_verify(args) -> int:
    verifiers = None if args.all else [v for v in args.verifiers.split(",") if v]
    qs = sorted({int(x) for x in args.q.split(",") if x})
    if not qs:
        raise ValidationError("--q must list at least one field order")
    entries = run_suite(qs, args.nmax, args.seed, verifiers=verifiers,
                        parallelism=args.parallel)
    payload = report_payload(entries, args.seed, {
        "q": qs, "nmax": args.nmax,
        "verifiers": list(verifiers or ALL_VERIFIERS),
    })
    _emit_or_print(to_json(payload), args.out)
    violations = [e for e in payload["entries"] if e["verdict"] == VIOLATED]
    if violations:
        witness_path = args.witness_out or (
            f"{args.out}.witness.json" if args.out else "witness.json")
        write_text(witness_path, to_json(
            {"report": "qthreshold-witness", "violations": violations}))
        sys.stderr.write(
            f"{len(violations)} verifier violation(s); witness written to "
            f"{witness_path}\n")
        return 1
    return 0


def _cmd_erasure(args) -> int:
    code = parse_code_spec(args.code)
    grid = parse_grid(args.grid, code.q)
    sent = zero_codeword(code)
    rows = [
        erasure_ambiguity(code, sent, p, mode=args.mode, samples=args.samples,
                          seed=args.seed, confidence=args.delta)
        for p in grid
    ]
    _emit_or_print(ambiguity_to_csv(rows), args.out)
    return 0


_COMMANDS = {
    "threshold": _cmd_threshold,
    "verify": _cmd_verify,
    "erasure": _cmd_erasure,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config(argv)
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:         # argparse usage errors / --help
        code = exc.code
        return code if isinstance(code, int) else 2
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except EnumerationCapError as exc:
        sys.stderr.write(f"resource error: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
