"""Command-line entry point: verify | reproduce | saturate.

Exit codes: 0 success, 1 I/O or configuration problems, 2 violated
invariants (failed bounds, inconsistent checkers, failed goldens, or a
construction that does not saturate).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import QuboundsError
from .linalg import Tolerance
from .reporting import (
    ARTIFACT_VERSION,
    RunManifest,
    SuiteReport,
    _utc_now,
    dumps_report,
    load_observable_pair,
    run_verification_suite,
    summary_csv,
)
from .sampling import SampleConfig
from .saturation import CONSTRUCTION_TOL, construct_case1, construct_case2, construct_w_mp6
from .goldens import run_goldens


class _Parser(argparse.ArgumentParser):
    # Flag and usage problems are configuration errors: exit 1, not 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qubounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[], help="run seeded property sweeps")
    verify.add_argument("--n", type=int, default=2, help="matrix dimension")
    verify.add_argument("--rank", type=int, default=None, help="density rank (default: n)")
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=7)
    _add_common(verify)

    reproduce = sub.add_parser("reproduce", help="evaluate the golden instances")
    _add_common(reproduce)

    saturate = sub.add_parser("saturate", help="construct a saturating state pair")
    saturate.add_argument("input", help='JSON file holding {"a": matrix, "b": matrix}')
    saturate.add_argument("--target", choices=("mp3", "mp6"), required=True)
    _add_common(saturate)
    return parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol-abs", type=float, default=1e-12)
    sub.add_argument("--tol-rel", type=float, default=1e-9)
    sub.add_argument("--out", default="-", help="output path, '-' for stdout")
    sub.add_argument("--format", choices=("json", "csv"), default="json")


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _tolerance(args) -> Tolerance:
    return Tolerance(absolute=args.tol_abs, relative=args.tol_rel)


def cmd_verify(args) -> int:
    rank = args.n if args.rank is None else args.rank
    config = SampleConfig(dimension=args.n, rank=rank, seed=args.seed, count=args.trials)
    report = run_verification_suite(config, _tolerance(args))
    text = summary_csv(report) if args.format == "csv" else dumps_report(report)
    _emit(text, args.out)
    return 0 if report.summary["failure_count"] == 0 else 2


def cmd_reproduce(args) -> int:
    started = _utc_now()
    results = run_goldens()
    manifest = RunManifest(
        command="reproduce",
        config=None,
        tolerance=_tolerance(args),
        started=started,
        finished=_utc_now(),
        artifact_version=ARTIFACT_VERSION,
        seed=0,
    )
    failures = [r.golden_id for r in results if not r.passed]
    report = SuiteReport(
        manifest=manifest,
        trials=tuple(
            {"golden_id": r.golden_id, "passed": r.passed, "detail": r.detail, "values": r.values}
            for r in results
        ),
        summary={
            "min_slack": {},
            "saturation_counts": {},
            "failure_count": len(failures),
            "failures": failures,
        },
    )
    text = summary_csv(report) if args.format == "csv" else dumps_report(report)
    _emit(text, args.out)
    for r in results:
        status = "pass" if r.passed else "FAIL"
        sys.stderr.write(f"{status} {r.golden_id}: {r.detail}\n")
    if failures:
        sys.stderr.write(f"failed goldens: {', '.join(failures)}\n")
        return 2
    return 0


def cmd_saturate(args) -> int:
    obs_a, obs_b = load_observable_pair(args.input)
    tol = _tolerance(args)
    n = obs_a.dimension
    if args.target == "mp3":
        pair = construct_case1(obs_a, obs_b, tol) if n == 2 else construct_case2(obs_a, obs_b, tol)
    else:
        pair = construct_w_mp6(obs_a, obs_b, tol)
    record = {
        "target": pair.target,
        "mu": [pair.mu.real, pair.mu.imag],
        "psi": {"re": pair.psi.amplitudes.real.tolist(), "im": pair.psi.amplitudes.imag.tolist()},
        "phi": {"re": pair.phi.amplitudes.real.tolist(), "im": pair.phi.amplitudes.imag.tolist()},
        "achieved_slack": pair.achieved_slack,
        "degenerate": pair.degenerate,
        "construction_tol": CONSTRUCTION_TOL,
    }
    _emit(json.dumps(record, sort_keys=True, indent=2), args.out)
    return 0 if abs(pair.achieved_slack) <= CONSTRUCTION_TOL else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "reproduce":
            return cmd_reproduce(args)
        return cmd_saturate(args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except QuboundsError as exc:
        # Bad inputs (non-Hermitian matrices, shape mismatches) are usage errors.
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
