"""
Command-line entry point: affine-delta {info,reflect,delta,verify,orbits,table}.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success, 1
when a verification check or oracle comparison fails, 2 on invalid input.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from ..action.delta import delta_brute_force, delta_closed_form, delta_for_coweight
from ..action.tables import action_table, orbits
from ..exceptions import ArithmeticOverflowError, InconsistencyError, InvalidInputError
from ..export.json_export import dumps, orbits_payload, table_to_json, weight_payload
from ..export.text_report import (
    format_vector,
    format_weight,
    render_info,
    render_orbits,
    render_report,
    render_table,
)
from ..models.algebra import LevelWeight, LieType
from ..models.jobs import JobSpec
from ..roots.root_system import describe, miniscule_coweight_indices
from ..verification.checks import Verifier, supported_types
from ..weyl.words import apply_word, fundamental_weight_images

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2

DEFAULT_VERIFY_LEVEL = 3


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InvalidInputError(message)


def _int_list(text: str) -> Tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _lie_type(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    parser = _ArgumentParser(
        prog="affine-delta",
        description="Miniscule coweight actions on level-k integrable highest-weight modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    info = sub.add_parser("info", parents=[common], help="root system data")
    info.add_argument("--type", dest="lie_type", type=_lie_type, required=True)

    reflect = sub.add_parser("reflect", parents=[common], help="apply a Weyl word to a weight")
    reflect.add_argument("--type", dest="lie_type", type=_lie_type, required=True)
    reflect.add_argument("--word", type=_int_list, required=True, help="letters, rightmost acts first")
    reflect.add_argument("--weight", type=_int_list, required=True)

    delta = sub.add_parser("delta", parents=[common], help="act on one admissible weight")
    delta.add_argument("--type", dest="lie_type", type=_lie_type, required=True)
    delta.add_argument("--level", type=int, required=True)
    delta.add_argument("--weight", type=_int_list, required=True)
    delta.add_argument("--coweight", type=int, help="miniscule coweight index")
    delta.add_argument("--coweight-vector", dest="coweight_vector", type=_int_list,
                       help="arbitrary coweight in the fundamental coweight basis")
    delta.add_argument("--oracle", action="store_true", help="also compute via the Weyl word")

    verify = sub.add_parser("verify", parents=[common], help="check closed forms against the oracle")
    verify.add_argument("--type", dest="lie_type", type=_lie_type, help="default: every type of rank <= 8")
    verify.add_argument("--level", type=int, default=DEFAULT_VERIFY_LEVEL, help="check levels 1..LEVEL")
    verify.add_argument("--workers", type=int, default=4)

    for name, text in (("orbits", "orbits of the admissible set"), ("table", "full action table")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--type", dest="lie_type", type=_lie_type, required=True)
        p.add_argument("--level", type=int, required=True)

    return parser


def _job_from_args(args: argparse.Namespace) -> JobSpec:
    fields = {
        key: value
        for key, value in vars(args).items()
        if key in JobSpec.model_fields and value is not None
    }
    return JobSpec(**fields)


def _configure_logging(verbose: bool, stream: TextIO) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=stream,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _cmd_info(job: JobSpec, out: TextIO) -> int:
    data = describe(job.lie_type)
    images = {i: list(fundamental_weight_images(job.lie_type, i)) for i in miniscule_coweight_indices(job.lie_type)}
    if job.output_format == "json":
        data["sigma_images"] = {str(i): [list(w) for w in ws] for i, ws in images.items()}
        print(dumps(data), file=out)
    else:
        print(render_info(data, images), file=out)
    return EXIT_OK


def _cmd_reflect(job: JobSpec, out: TextIO) -> int:
    image = apply_word(job.lie_type, job.word, job.weight)
    if job.output_format == "json":
        print(dumps(weight_payload(job.lie_type, image, word=list(job.word), source=list(job.weight))), file=out)
    else:
        print(f"{format_vector(image)}  ({format_weight(image)})", file=out)
    return EXIT_OK


def _cmd_delta(job: JobSpec, out: TextIO) -> int:
    start = LevelWeight(lie_type=job.lie_type, level=job.level, weight=job.weight)
    if job.coweight_vector is not None:
        image = delta_for_coweight(job.lie_type, job.level, start.weight, job.coweight_vector)
        extra = {"level": job.level, "coweight_vector": list(job.coweight_vector)}
    else:
        image = delta_closed_form(job.lie_type, job.level, start.weight, job.coweight)
        extra = {"level": job.level, "coweight": job.coweight}
    extra["from"] = list(start.weight)

    status = EXIT_OK
    brute = None
    if job.oracle:
        brute = delta_brute_force(job.lie_type, job.level, start.weight, job.coweight)
        if brute != image:
            status = EXIT_MISMATCH

    if job.output_format == "json":
        payload = weight_payload(job.lie_type, image, **extra)
        if brute is not None:
            payload["oracle"] = list(brute)
            payload["verdict"] = "EQUAL" if brute == image else "UNEQUAL"
        print(dumps(payload), file=out)
    else:
        print(f"{format_vector(image)}  ({format_weight(image)})", file=out)
        if brute is not None:
            print(f"oracle: {format_vector(brute)}", file=out)
            print("EQUAL" if brute == image else "UNEQUAL", file=out)
    return status


def _cmd_verify(job: JobSpec, out: TextIO) -> int:
    types: List[LieType] = [job.lie_type] if job.lie_type is not None else supported_types()
    verifier = Verifier(levels=range(1, job.level + 1), max_workers=job.workers)
    reports = verifier.verify_all(types)
    passed = all(report.passed for report in reports)
    if job.output_format == "json":
        print(dumps({"passed": passed, "reports": [report.to_dict() for report in reports]}), file=out)
    else:
        for report in reports:
            print(render_report(report), file=out)
        print(f"overall: {'PASS' if passed else 'FAIL'}", file=out)
    return EXIT_OK if passed else EXIT_MISMATCH


def _cmd_orbits(job: JobSpec, out: TextIO) -> int:
    found = orbits(job.lie_type, job.level)
    if job.output_format == "json":
        print(dumps(orbits_payload(job.lie_type, job.level, found)), file=out)
    else:
        print(render_orbits(job.lie_type, job.level, found), file=out)
    return EXIT_OK


def _cmd_table(job: JobSpec, out: TextIO) -> int:
    table = action_table(job.lie_type, job.level)
    if job.output_format == "json":
        print(table_to_json(table), file=out)
    else:
        print(render_table(table), file=out)
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one command and return its exit status.

    Args:
        argv: arguments without the program name (default: sys.argv[1:])
        stdout: stream for results (default: sys.stdout)
        stderr: stream for diagnostics (default: sys.stderr)
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        job = _job_from_args(args)
    except InvalidInputError as e:
        print(f"error: {e}", file=err)
        return EXIT_INVALID
    except ValidationError as e:
        for problem in e.errors():
            print(f"error: {problem['msg']}", file=err)
        return EXIT_INVALID
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    _configure_logging(job.verbose, err)
    logger.debug(f"job: {job.model_dump()}")
    try:
        if job.command == "info":
            return _cmd_info(job, out)
        if job.command == "reflect":
            return _cmd_reflect(job, out)
        if job.command == "delta":
            return _cmd_delta(job, out)
        if job.command == "verify":
            return _cmd_verify(job, out)
        if job.command == "orbits":
            return _cmd_orbits(job, out)
        return _cmd_table(job, out)
    except (InvalidInputError, ArithmeticOverflowError) as e:
        print(f"error: {e}", file=err)
        return EXIT_INVALID
    except ValidationError as e:
        for problem in e.errors():
            print(f"error: {problem['msg']}", file=err)
        return EXIT_INVALID
    except InconsistencyError as e:
        logger.error(f"inconsistent result: {e}")
        print(f"error: {e}", file=err)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
