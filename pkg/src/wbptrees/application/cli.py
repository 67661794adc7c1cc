import argparse
import json
import sys

from src.wbptrees.application.verify import VerifySweep
from src.wbptrees.closedform.closed_count import closed_report
from src.wbptrees.closedform.types import PqParams
from src.wbptrees.count.engine import report
from src.wbptrees.exceptions.CensusExceptions import CensusError
from src.wbptrees.exceptions.CountingExceptions import CountingError
from src.wbptrees.exceptions.OracleExceptions import OracleBoundError, OracleError
from src.wbptrees.exceptions.PassportExceptions import PassportError
from src.wbptrees.hcmu.census import census
from src.wbptrees.infrastructure.config import EngineSettings, Infos, load_settings
from src.wbptrees.logs_management.console_logger import console_logs, log, log_error
from src.wbptrees.oracle.export import enumeration_to_dot, enumeration_to_json
from src.wbptrees.oracle.canonical import canonical_code
from src.wbptrees.oracle.generator import enumerate_trees
from src.wbptrees.passport.notation import parse_passport, print_passport

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def parse_pq(text: str) -> tuple[int, int]:
    try:
        p, q = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P,Q with two integers, got {text!r}")
    return p, q


def parse_positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=Infos.PROJECT_NAME,
                                     description="Exact counts of weighted bi-colored plane trees.")
    # accepted before or after the command
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS, help="path to a json settings file")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="thread pool width")
    common.add_argument("--log-level", choices=Infos.log_levels, default=argparse.SUPPRESS)
    common.add_argument("--max-weight", type=parse_positive, default=argparse.SUPPRESS)

    parser.add_argument("--format", choices=("json", "text", "dot"), default="json")
    parser.add_argument("--config", default=None, help="path to a json settings file")
    parser.add_argument("--workers", type=int, default=None, help="thread pool width")
    parser.add_argument("--log-level", choices=Infos.log_levels, default=None)
    parser.add_argument("--max-weight", type=parse_positive, default=None,
                        help=f"largest passport size for enumerate (default {Infos.default_oracle_max_points}), "
                             f"side weight bound for verify (default {Infos.default_verify_max_weight})")
    subparsers = parser.add_subparsers(dest="command", required=True)

    count_parser = subparsers.add_parser("count", parents=[common], help="count the trees of a passport")
    source = count_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--passport", help='passport notation, e.g. "6^10 | 10^6"')
    source.add_argument("--pq", type=parse_pq, help="P,Q for the passport (q^p | p^q), checked against the closed form")

    census_parser = subparsers.add_parser("census", parents=[common], help="census of the (p, q) of a cone angle")
    census_parser.add_argument("--alpha", type=int, required=True)

    enumerate_parser = subparsers.add_parser("enumerate", parents=[common], help="list the trees of a passport")
    enumerate_parser.add_argument("--passport", required=True)

    subparsers.add_parser("verify", parents=[common], help="check every formula against the oracle")
    return parser


class Cli:
    """
    Runs one command line: parses it, loads the settings, dispatches to the command and maps errors to exit codes.
    """

    def __init__(self, settings: EngineSettings | None = None):
        self.settings = settings
        self.output_format = "json"

    def run(self, argv: list[str] | None = None) -> int:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
            if args.format == "dot" and args.command != "enumerate":
                parser.error("--format dot is only available for enumerate")
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        try:
            settings = self.settings or load_settings(args.config)
            self.settings = settings.with_overrides(max_workers=args.workers, log_level=args.log_level)
            console_logs.set_level(self.settings.log_level)
            if not self.settings.log_to_file:
                console_logs.disable_file()
            self.output_format = args.format

            switcher = {
                "count": self.count,
                "census": self.census,
                "enumerate": self.enumerate,
                "verify": self.verify,
            }
            return switcher[args.command](args)
        except (PassportError, CensusError, OracleBoundError) as e:
            log_error(f"{args.command}: {e}", print_formatted=False)
            return EXIT_USAGE
        except (CountingError, OracleError) as e:
            log_error(f"{args.command}: internal consistency failure: {e}", print_formatted=False)
            return EXIT_FAILURE

    @staticmethod
    def emit(document: str) -> None:
        print(document, file=sys.stdout)

    def count(self, args) -> int:
        if args.passport is not None:
            counts = report(parse_passport(args.passport))
            self.emit(counts.to_json() if self.output_format == "json" else counts.to_text())
            return EXIT_OK

        p, q = args.pq
        params = PqParams(p, q)
        counts = report(params.passport())
        closed = closed_report(p, q)
        agrees = closed == counts
        if self.output_format == "json":
            document = counts.to_dict()
            document["closed_form_agrees"] = agrees
            self.emit(json.dumps(document, indent=4))
        else:
            self.emit(counts.to_text() + f"\nclosed form agrees: {'yes' if agrees else 'no'}")
        if not agrees:
            log_error(f"closed form for p={p}, q={q} gives {closed.to_dict()}", print_formatted=False)
            return EXIT_FAILURE
        return EXIT_OK

    def census(self, args) -> int:
        result = census(args.alpha, self.settings.max_workers)
        self.emit(result.to_json() if self.output_format == "json" else result.to_text())
        return EXIT_OK

    def enumerate(self, args) -> int:
        passport = parse_passport(args.passport)
        max_points = self.settings.oracle_max_points if args.max_weight is None else args.max_weight
        trees = enumerate_trees(passport, max_points)
        if self.output_format == "dot":
            self.emit(enumeration_to_dot(passport, trees))
        elif self.output_format == "json":
            self.emit(enumeration_to_json(passport, trees))
        else:
            lines = [f"{print_passport(passport)}: {len(trees)} trees"]
            for number, tree in enumerate(trees, start=1):
                code = canonical_code(tree)
                lines.append(f"  tree {number}: symmetry {code.aut_order}, "
                             f"edges {[(edge.black, edge.white, edge.weight) for edge in tree.edges]}")
            self.emit("\n".join(lines))
        return EXIT_OK

    def verify(self, args) -> int:
        verify_report = VerifySweep(self.settings).run(args.max_weight)
        self.emit(verify_report.to_json() if self.output_format == "json" else verify_report.to_text())
        if not verify_report.ok:
            log("Verification failed.", level="error", print_formatted=False)
            return EXIT_FAILURE
        return EXIT_OK


def cli_main(argv: list[str] | None = None) -> int:
    """
    :return: 0 on success, 1 on an internal consistency failure, 2 on a usage error
    """
    return Cli().run(argv)
