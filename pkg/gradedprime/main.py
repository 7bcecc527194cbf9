import argparse
import logging
import sys
from typing import List, Optional

from . import config
from .commands import command_handlers
from .errors import EXIT_MALFORMED, GradedPrimeError
from .ui_manager import print_error

# Set up logging
logger = logging.getLogger(__name__)


def _add_enumeration_options(parser: argparse.ArgumentParser):
    parser.add_argument("--budget", type=int, default=None,
                        help=f"max additive subgroups explored (default {config.ENUMERATION_BUDGET})")
    parser.add_argument("--workers", type=int, default=None,
                        help=f"worker threads (default {config.WORKERS})")


def _add_format_option(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=["table", "json"], default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedprime",
        description="Graded prime ideals of finite near-rings: validate, enumerate, construct and check.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a monoid, near-ring or graded near-ring document")
    p.add_argument("file")

    p = sub.add_parser("ideals", help="list ideals, graded ideals or normal subgroups")
    p.add_argument("file")
    p.add_argument("--graded", action="store_true", help="only graded ideals")
    p.add_argument("--normal-subgroups", action="store_true", help="all normal subgroups of (N, +)")
    _add_enumeration_options(p)
    _add_format_option(p)

    p = sub.add_parser("primes", help="primeness verdicts for every proper (graded) ideal")
    p.add_argument("file")
    p.add_argument("--graded", action="store_true", help="graded primeness of proper graded ideals")
    p.add_argument("--checker", default="def", help="def, homog, t28c2, t28c3, p29, p29c2 or p213")
    p.add_argument("--scope", choices=["all", "graded"], default="all",
                   help="ideals the quantifiers range over")
    _add_enumeration_options(p)
    _add_format_option(p)

    p = sub.add_parser("generate", help="ideal generated by a set of elements")
    p.add_argument("file")
    p.add_argument("--elements", required=True, help="comma separated element indices")

    p = sub.add_parser("quotient", help="emit the quotient by a graded ideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True, help="comma separated element indices of the ideal")
    p.add_argument("--out", help="write the document here instead of stdout")

    p = sub.add_parser("product", help="emit the componentwise direct product")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--name", default=None)
    p.add_argument("--out", help="write the document here instead of stdout")

    p = sub.add_parser("corpus", help="list or emit built-in structures")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    corpus_sub.add_parser("list", help="list corpus entries")
    emit = corpus_sub.add_parser("emit", help="emit a corpus entry as a document")
    emit.add_argument("name", nargs="?")
    emit.add_argument("--all", action="store_true", help="emit every entry into --out DIR")
    emit.add_argument("--out", help="output file, or directory with --all")

    p = sub.add_parser("check", help="run theorem checks on a document or corpus entry")
    p.add_argument("target")
    p.add_argument("--theorem", default="all", help="check id such as 2.8, or 'all'")
    p.add_argument("--scope", choices=["all", "graded"], default="all")
    _add_enumeration_options(p)
    _add_format_option(p)

    p = sub.add_parser("hom", help="validate a homomorphism between two structures")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", required=True, help="comma separated images of 0, 1, 2, ...")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_MALFORMED if e.code else 0

    if args.verbose:
        logging.getLogger("gradedprime").setLevel(logging.INFO if args.verbose == 1 else logging.DEBUG)

    handler = command_handlers[args.command]
    try:
        with config.enumeration_limits(getattr(args, "budget", None), getattr(args, "workers", None)):
            return handler(args)
    except GradedPrimeError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print_error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except KeyboardInterrupt:
        print_error("interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
