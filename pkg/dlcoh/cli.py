"""Command-line entry point: ``dlcoh weyl | reduce | cohomology | complex | verify``.

Results go to standard output, diagnostics to standard error. Exit codes:
0 success, 1 verification failure, 2 usage error, 3 bound exceeded,
4 budget exhausted.
"""

import argparse
import sys
from typing import Callable, List, Optional

from pydantic import BaseModel

from dlcoh import services
from dlcoh.core.config import get_settings
from dlcoh.core.errors import BudgetExhaustedError, DLCohError
from dlcoh.core.logging import configure_logging, get_logger
from dlcoh.schemas.reports import CohomologyReport, RepKind, WeylSummary
from dlcoh.workflows.verification_workflow import create_verification_workflow

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(args: argparse.Namespace, payload: BaseModel, text: str) -> None:
    if args.format == "json":
        print(payload.model_dump_json(indent=2))
    else:
        print(text)


def _weyl_text(summary: WeylSummary) -> str:
    one_line = ",".join(str(x) for x in summary.one_line)
    chain = " ".join(f"s{step.generator}" for step in summary.gp_chain) or "(empty)"
    return "\n".join(
        [
            f"element ({one_line}) in S_{summary.n}",
            f"length {summary.length}",
            "support {" + ",".join(str(i) for i in summary.support) + "}",
            f"height {summary.height}",
            f"in C_min {'yes' if summary.in_cmin else 'no'}",
            f"coxeter {'yes' if summary.is_coxeter else 'no'}",
            "reduced word [" + ",".join(str(a) for a in summary.reduced_word) + "]",
            "gp_reduce (" + ",".join(str(x) for x in summary.gp_result) + f") via {chain}",
        ]
    )


def _report_text(report: CohomologyReport) -> str:
    word = ",".join(str(a) for a in report.word)
    tag = report.coefficients
    ring = tag.kind.value + (f" p={tag.p}" if tag.p else "") + (f" m={tag.m}" if tag.m else "")
    lines = [f"{report.variety.value} word=[{word}] n={report.n} q={report.q} coefficients={ring}"]
    for degree in sorted(report.entries):
        rep = report.entries[degree]
        if rep.kind == RepKind.ZERO:
            lines.append(f"H^{degree} = 0")
        else:
            parabolic = "{" + ",".join(str(i) for i in rep.parabolic) + "}"
            lines.append(f"H^{degree} = {rep.kind.value} P_{parabolic} dimension {rep.dimension}")
    lines.append(f"cross_checked {str(report.cross_checked).lower()}")
    lines.append(f"affine {'yes' if report.affine else 'unknown'}")
    lines.extend(f"note: {note}" for note in report.notes)
    if report.trace:
        lines.extend(report.trace)
    return "\n".join(lines)


def cmd_weyl(args: argparse.Namespace) -> int:
    summary = services.weyl_summary(args.n, services.parse_letters(args.word))
    _emit(args, summary, _weyl_text(summary))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    letters = services.parse_letters(args.word)
    try:
        result = services.reduce_word(args.n, letters, args.budget)
    except BudgetExhaustedError as exc:
        if exc.trace is not None:
            print(exc.trace.to_text())
        raise
    _emit(args, result, "\n".join(result.trace))
    return EXIT_OK


def cmd_cohomology(args: argparse.Namespace) -> int:
    report = services.cohomology_report(
        n=args.n,
        q=args.q,
        letters=services.parse_letters(args.word),
        coeff=args.coeff,
        variety=args.variety,
        p=args.p,
        m=args.m,
        run_cross_check=args.cross_check,
    )
    _emit(args, report, _report_text(report))
    if args.cross_check and not report.cross_checked:
        return EXIT_FAILED
    return EXIT_OK


def cmd_complex(args: argparse.Namespace) -> int:
    C = services.build_complex(args.n, args.q, services.parse_letters(args.word), args.p, args.m)
    export = services.export_complex(C, args.homology, args.p, args.m)
    text = C.to_text()
    if export.homology is not None:
        h = export.homology
        text += "\nhomology free " + " ".join(str(f) for f in h.free_ranks)
        text += f"\ncokernel {h.cokernel_rank}"
        text += f"\nd0_injective {str(h.d0_injective).lower()}"
        if h.modular_lengths is not None:
            text += "\nmodular_lengths " + " ".join(str(x) for x in h.modular_lengths)
    _emit(args, export, text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = create_verification_workflow().run(args.scale, seed=args.seed)
    _emit(args, report, report.to_table())
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlcoh",
        description="Exact cohomology of Deligne-Lusztig varieties for GL_n",
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--log-level", default=None)
    parser.add_argument("--log-json", action="store_true")
    parser.add_argument("--weyl-bound", type=int, default=None)
    parser.add_argument("--coset-bound", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    weyl = sub.add_parser("weyl", help="length, support, height and Geck-Pfeiffer data")
    weyl.add_argument("--n", type=int, required=True)
    weyl.add_argument("--word", default="")
    weyl.set_defaults(handler=cmd_weyl)

    reduce = sub.add_parser("reduce", help="rewrite a word to distinct letters")
    reduce.add_argument("--n", type=int, required=True)
    reduce.add_argument("--word", required=True)
    reduce.add_argument("--budget", type=int, default=None)
    reduce.set_defaults(handler=cmd_reduce)

    cohomology = sub.add_parser("cohomology", help="cohomology report for a word")
    cohomology.add_argument("--n", type=int, required=True)
    cohomology.add_argument("--q", type=int, required=True)
    cohomology.add_argument("--word", required=True)
    cohomology.add_argument("--coeff", choices=list(services.COEFFICIENTS), default="structure")
    cohomology.add_argument("--variety", choices=list(services.VARIETIES), default="compactified")
    cohomology.add_argument("--p", type=int, default=None)
    cohomology.add_argument("--m", type=int, default=None)
    cohomology.add_argument("--cross-check", action="store_true")
    cohomology.set_defaults(handler=cmd_cohomology)

    complex_ = sub.add_parser("complex", help="export the permutation-module complex")
    complex_.add_argument("--n", type=int, required=True)
    complex_.add_argument("--q", type=int, required=True)
    complex_.add_argument("--word", required=True)
    complex_.add_argument("--p", type=int, default=None)
    complex_.add_argument("--m", type=int, default=None)
    complex_.add_argument("--homology", action="store_true")
    complex_.set_defaults(handler=cmd_complex)

    verify = sub.add_parser("verify", help="run the acceptance suite")
    verify.add_argument("--scale", default="small")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = get_settings()
    if args.weyl_bound is not None:
        settings.weyl_bound = args.weyl_bound
    if args.coset_bound is not None:
        settings.coset_bound = args.coset_bound
    if args.seed is None:
        args.seed = settings.seed
    configure_logging(args.log_level or settings.log_level, args.log_json or settings.log_json)

    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except DLCohError as exc:
        logger.error("command_failed", command=args.command, error=type(exc).__name__, detail=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
