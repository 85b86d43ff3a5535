"""
Command line front end

``convert``, ``check``, ``render`` and ``roundtrip`` over files. Exit status is
0 on success, 1 for lint errors, strict-mode diagnostics or an exceeded
distance threshold, 2 for unreadable or unparsable input.
"""
import argparse
import logging
import sys

from conf import messages
from entity.picture import Diagnostic
from repository.sources import SourceFormat, infer_format, read_source, write_output
from schemas.options import CircleMode, EmitOptions, FidelityOptions, FlattenPolicy, ImportOptions, LineMode
from services import parser as picture_parser
from services import pipeline
from services.errors import LintFailed, PaintTexError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _circle_mode(text: str) -> CircleMode:
    try:
        return CircleMode.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _unit_step(text: str) -> float:
    value = float(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"expected a step in (0, 1], got {text!r}")
    return value


def _distance(text: str) -> float:
    value = float(text)
    if not 0 <= value < float("inf"):
        raise argparse.ArgumentTypeError(f"expected a finite distance >= 0, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="input file (.svg, .scene or .tex)")
    common.add_argument("-o", "--output", help="output file, standard output when omitted")
    common.add_argument("--format", choices=[f.value for f in SourceFormat], help="override the input format")
    common.add_argument("--scale", type=_positive, default=1.0, help="SVG user units per picture unit (default 1)")
    common.add_argument("--strict", action="store_true", help="treat import diagnostics as failures")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress (-vv for debug)")

    emitting = argparse.ArgumentParser(add_help=False)
    emitting.add_argument("--line-mode", choices=[m.value for m in LineMode], default=LineMode.qbezier.value,
                          help="straight strokes as degenerate \\qbezier or native \\line where exact")
    emitting.add_argument("--circle-mode", type=_circle_mode, default=CircleMode(), help="native or quads:N")
    emitting.add_argument("--unitlength", help="prepend \\setlength{\\unitlength}{S}")

    parser = argparse.ArgumentParser(prog="painttex", description="Draw to LaTeX picture code")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("convert", parents=[common, emitting], help="emit picture code")
    commands.add_parser("check", parents=[common], help="lint picture code")
    commands.add_parser("render", parents=[common], help="write an SVG preview")
    roundtrip = commands.add_parser("roundtrip", parents=[common, emitting], help="measure conversion drift")
    roundtrip.add_argument("--t-step", type=_unit_step, default=0.01, help="curve sampling step (default 0.01)")
    roundtrip.add_argument("--max-distance", type=_distance, default=1.5, help="accepted Hausdorff distance (default 1.5)")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def _report(diagnostics: list[Diagnostic], text: str, path: str) -> None:
    for diagnostic in diagnostics:
        print(picture_parser.format_diagnostic(diagnostic, text, path), file=sys.stderr)


def _emit(text: str, output: str | None) -> None:
    if output:
        write_output(output, text)
    else:
        sys.stdout.write(text)


def _emit_options(args) -> EmitOptions:
    return EmitOptions(line_mode=LineMode(args.line_mode), circle_mode=args.circle_mode, strict=args.strict)


def _run(args) -> int:
    text = read_source(args.input)
    if args.command == "check":
        result = pipeline.check_source(text)
        _report(result.diagnostics, text, args.input)
        return EXIT_FAILED if result.has_errors else EXIT_OK
    fmt = infer_format(args.input, args.format)
    import_options = ImportOptions(scale=args.scale)

    match args.command:
        case "convert":
            result = pipeline.convert_source(text, fmt, import_options, _emit_options(args), args.unitlength)
        case "render":
            result = pipeline.render_source(text, fmt, import_options)
        case "roundtrip":
            fidelity_options = FidelityOptions(max_distance=args.max_distance,
                                               policy=FlattenPolicy(t_step=args.t_step))
            result = pipeline.roundtrip_source(text, fmt, import_options, _emit_options(args), fidelity_options)
    _report(result.diagnostics, text, args.input)
    if args.strict and result.diagnostics:
        return EXIT_FAILED

    match result:
        case pipeline.ConvertResult():
            _emit(result.picture, args.output)
        case pipeline.RenderResult():
            _emit(result.svg, args.output)
        case pipeline.RoundtripResult():
            print(f"{result.distance:.6f}")
            if args.output:
                write_output(args.output, result.picture)
            return EXIT_OK if result.passed else EXIT_FAILED
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """
    Runs one command.

    :param argv: Arguments without the program name, ``sys.argv[1:]`` when None
    :type argv: list[str] | None
    :return: Exit status
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return _run(args)
    except LintFailed as err:
        _report(err.diagnostics, read_source(args.input), args.input)
        return EXIT_FAILED
    except PaintTexError as err:
        print(f"{args.input}: {err.detail}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError) as err:
        print(f"{args.input}: {messages.UNREADABLE_INPUT}: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
