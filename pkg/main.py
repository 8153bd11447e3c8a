#!/usr/bin/env python3
import sys
import argparse
import dataclasses
import logging
import platform
import traceback
from typing import Any, Dict, List, Optional

from classifier import classify_kleene, classify_positive, discrepancy_notes, predicates
from config import load_config
from constants import MODE_KLEENE, MODES, VERIFY_SUITES
from errors import AlphabetError, KlangError, RegexSyntaxError, UnknownSymbol
from export import build_document, to_dot, to_json, write_document
from language import Lang
from orbit import generate
from regexp import Alphabet
from utils import clean_exit, format_sizes, write_lines
from verify import VerifyOptions, run_all, run_suite

logger = logging.getLogger('klang')

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Exit codes
EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


def setup_logging(debug: bool = False, log_file: Optional[str] = None) -> None:
    """
    Configure the klang logger

    Logs go to log_file when given and to stderr with --debug; stdout is
    reserved for command output.
    """
    level = logging.DEBUG if debug else logging.INFO
    formatter = logging.Formatter(LOG_FORMAT)
    handlers: List[logging.Handler] = []

    if log_file:
        try:
            handlers.append(logging.FileHandler(log_file))
        except (IOError, PermissionError) as e:
            # If log file can't be created, log to stderr only
            handlers.append(logging.StreamHandler(sys.stderr))
            sys.stderr.write(f"Could not create log file at {log_file}: {e}\n")
    if debug:
        handlers.append(logging.StreamHandler(sys.stderr))
    if not handlers:
        handlers.append(logging.NullHandler())

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.setLevel(level)

    logger.debug(f"Running on {platform.system()} {platform.release()}, Python {platform.python_version()}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klang",
        description="Closure and complement algebras of regular languages"
    )
    parser.add_argument("--config", type=str, default=None, help="Path to custom configuration file")
    parser.add_argument("--debug", action="store_true", help="Enable verbose logging to stderr")

    commands = parser.add_subparsers(dest="command", required=True)

    def add_mode(sub):
        sub.add_argument("--mode", choices=MODES, default=None, help="Closure operator (default: positive)")

    classify = commands.add_parser("classify", help="Classify the algebra a language generates")
    classify.add_argument("regex", help="Regular expression; @ is the empty word, # the empty language")
    classify.add_argument("--alphabet", required=True, help="Letters of the alphabet, e.g. ab")
    add_mode(classify)

    orbit = commands.add_parser("orbit", help="Print the orbit graph of a language")
    orbit.add_argument("regex", help="Regular expression")
    orbit.add_argument("--alphabet", required=True, help="Letters of the alphabet")
    add_mode(orbit)
    orbit.add_argument("--format", choices=("dot", "json"), default="json", help="Output format (default: json)")
    orbit.add_argument("--output", type=str, default=None, help="Write to this file instead of stdout")

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES + ('all',), help="Suite to run")
    verify.add_argument("--alphabet", default=None, help="Sample over this alphabet only (default: a and ab)")
    verify.add_argument("--samples", type=int, default=None, help="Random languages per alphabet")
    verify.add_argument("--seed", type=int, default=None, help="Base seed; sample i uses seed + i")
    verify.add_argument("--horizon", type=int, default=None, help="Word length for the horizon oracle")

    member = commands.add_parser("member", help="Test whether a word is in a language")
    member.add_argument("regex", help="Regular expression")
    member.add_argument("word", help="The word; use '' for the empty word")
    member.add_argument("--alphabet", required=True, help="Letters of the alphabet")

    return parser


def _pick(flag: Any, config: Dict[str, Any], key: str) -> Any:
    return flag if flag is not None else config[key]


def cmd_classify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    alphabet = Alphabet.of(args.alphabet)
    mode = _pick(args.mode, config, 'mode')
    L = Lang.from_regex(args.regex, alphabet)

    if mode == MODE_KLEENE:
        case = classify_kleene(L)
    else:
        case = classify_positive(L)
    graph = generate(L, mode)
    base_name, _, whole_name = graph.family_names

    lines = [f"case {case.label}, {format_sizes({base_name: graph.base_size, whole_name: graph.size})}"]
    for name, value in predicates(L).as_dict().items():
        lines.append(f"  {name}: {str(value).lower()}")
    lines.extend(discrepancy_notes(L, case))
    write_lines(lines)
    return EXIT_OK


def cmd_orbit(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    alphabet = Alphabet.of(args.alphabet)
    mode = _pick(args.mode, config, 'mode')
    L = Lang.from_regex(args.regex, alphabet)

    case = classify_kleene(L) if mode == MODE_KLEENE else classify_positive(L)
    doc = build_document(generate(L, mode), args.regex, case.label)
    text = "".join(to_dot(doc)) if args.format == "dot" else to_json(doc)

    if args.output:
        write_document(text, args.output)
        logger.info(f"Orbit of {args.regex} written to {args.output}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    options = VerifyOptions(
        samples=_pick(args.samples, config, 'samples'),
        seed=_pick(args.seed, config, 'seed'),
        horizon=_pick(args.horizon, config, 'horizon'),
        lattice_horizon=config['lattice_horizon'],
        max_depth=config['max_depth'],
    )
    if args.alphabet:
        options = dataclasses.replace(options, alphabets=(str(Alphabet.of(args.alphabet)),))

    reports = run_all(options) if args.suite == 'all' else [run_suite(args.suite, options)]
    for report in reports:
        write_lines(report.lines())
    return EXIT_OK if all(report.ok for report in reports) else EXIT_FALSE


def cmd_member(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    alphabet = Alphabet.of(args.alphabet)
    L = Lang.from_regex(args.regex, alphabet)
    found = L.accepts(args.word)
    write_lines(["true" if found else "false"])
    return EXIT_OK if found else EXIT_FALSE


COMMANDS = {
    'classify': cmd_classify,
    'orbit': cmd_orbit,
    'verify': cmd_verify,
    'member': cmd_member,
}


def _check_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    """Range checks argparse types cannot express; parser.error exits with status 2"""
    if args.command != 'verify':
        return
    if args.samples is not None and args.samples < 1:
        parser.error(f"--samples must be a positive integer, got {args.samples}")
    if args.horizon is not None and args.horizon < 0:
        parser.error(f"--horizon must be a non-negative integer, got {args.horizon}")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one klang command

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None

    Returns:
        int: 0 ok or true, 1 false or failed, 2 usage or parse error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_args(parser, args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = load_config(args.config)
    setup_logging(args.debug, config['log_file'])
    logger.info(f"Running {args.command}")

    try:
        return COMMANDS[args.command](args, config)
    except (RegexSyntaxError, UnknownSymbol, AlphabetError) as e:
        logger.error(f"Invalid input: {e}")
        sys.stderr.write(f"Error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        sys.stderr.write(f"Error: {e}\n")
        return EXIT_FALSE
    except KlangError as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"Error: {type(e).__name__}: {e}\n")
        return EXIT_FALSE


def main():
    """Main entry point for the klang command"""
    try:
        exit_code = run()
    except KeyboardInterrupt:
        clean_exit(1, "Interrupted")
    except Exception as e:
        logger.critical(f"Unhandled exception: {e}")
        logger.critical(traceback.format_exc())
        clean_exit(1, f"Unexpected error: {e}")
    else:
        clean_exit(exit_code)


if __name__ == "__main__":
    main()
