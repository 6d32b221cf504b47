"""
Командная строка: отчёт о расслоении, проверка таблиц, проверка тождеств,
перебор параметров и встроенные примеры.

Коды возврата: 0 - успех, 1 - ошибка предметной области или проваленная
проверка, 2 - ошибка в аргументах.
"""
import argparse
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple
from utilities.bundle import BundleProfile
from utilities.cohomology import TableFormatError
from utilities.functions import cubic_root_structure
from utilities.identities import verify_lemma_identities
from utilities.quadratic import DomainError
from nonvanishing.bounds import BoundKind, bar_alpha, zeta
from nonvanishing.theorems import forced_nonvanishing
from addons.fixtures import builtin_fixtures, fixture_by_name, run_fixture
from addons.sweep import BoundSweep
from addons.tables import parse_table, serialize_table
from addons.verification import (all_passed, profile_from_table,
                                 verify_table)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SYNTAX = 2

Lines = List[Tuple[str, str]]


def _format_lines(lines: Lines, output_format: str) -> str:
    separator = "=" if output_format == "records" else ": "
    return "".join(f"{key}{separator}{value}\n" for key, value in lines)


def _format_record(record: Dict[str, str], output_format: str) -> str:
    if output_format == "records":
        return " ".join(f"{key}={value}" for key, value in record.items())
    return ", ".join(f"{key}: {value}" for key, value in record.items())


def _optional(value) -> str:
    return "unknown" if value is None else str(value)


def _report_lines(profile: BundleProfile) -> Lines:
    """Строки отчёта; отчёт вычисляется до вывода, чтобы ошибка не
    оставляла частичного результата"""
    report = forced_nonvanishing(profile)
    chern = profile.chern
    lines: Lines = [
        ("c1", str(chern.c1)), ("c2", str(chern.c2)),
        ("alpha", _optional(profile.alpha)),
        ("gamma", _optional(profile.gamma)),
        ("stability", profile.stability.value),
        ("delta", _optional(profile.delta)),
        ("root_structure", cubic_root_structure(chern).value),
    ]
    if chern.c2 >= 0:
        lines.append(("zeta", str(zeta(chern))))
        lines.append(("bar_alpha", str(bar_alpha(chern))))
    for bound in report.bounds:
        if bound.kind is not BoundKind.ZETA:
            lines.append((bound.kind.value, str(bound.value)))
    low, high = report.forced_interval
    lines.append(("forced", f"{low}..{high}"))
    for n, clauses in report.forced:
        tags = ",".join(sorted(clause.value for clause in clauses))
        lines.append(("forced_twist", f"{n} {tags}"))
    lines.extend(("conditional", clause.value)
                 for clause in report.conditional)
    lines.extend(("constraint", constraint.describe())
                 for constraint in report.constraints)
    lines.extend(("note", note) for note in report.notes)
    comparison = report.comparison
    if comparison is not None:
        lines += [("gamma_bound", str(comparison.gamma_bound)),
                  ("our_bound", str(comparison.our_bound)),
                  ("verdict", comparison.verdict.value)]
        if comparison.lower_bound_instanton is not None:
            lines += [("lower_bound_instanton",
                       str(comparison.lower_bound_instanton)),
                      ("lower_bound_general",
                       str(comparison.lower_bound_general))]
    return lines


def _cmd_report(args, stdout: TextIO, stderr: TextIO) -> int:
    # pylint: disable=unused-argument
    profile = BundleProfile.of(args.c1, args.c2, alpha=args.alpha,
                               gamma=args.gamma, beta=args.beta)
    stdout.write(_format_lines(_report_lines(profile), args.format))
    return EXIT_OK


def _cmd_verify(args, stdout: TextIO, stderr: TextIO) -> int:
    table = parse_table(Path(args.file).read_bytes())
    profile = profile_from_table(table, alpha=args.alpha, gamma=args.gamma,
                                 beta=args.beta)
    results = verify_table(table, profile)
    lines: Lines = []
    for result in results:
        status = result.status.value
        if result.reason:
            status += f" ({result.reason})"
        lines.append((result.name, status))
        if result.failed:
            for detail in result.details:
                stderr.write(f"{result.name}: {detail}\n")
    passed = all_passed(results)
    lines.append(("result", "pass" if passed else "fail"))
    stdout.write(_format_lines(lines, args.format))
    return EXIT_OK if passed else EXIT_ERROR


def _cmd_identities(args, stdout: TextIO, stderr: TextIO) -> int:
    # pylint: disable=unused-argument
    report = verify_lemma_identities((args.n_min, args.n_max),
                                     (args.alpha_min, args.alpha_max))
    lines: Lines = []
    for result in report.results:
        value = f"{'pass' if result.passed else 'fail'} " \
                f"checked={result.checked}"
        if result.counterexample is not None:
            value += f" counterexample={result.counterexample}"
        lines.append((result.name, value))
    lines.append(("result", "pass" if report.passed else "fail"))
    stdout.write(_format_lines(lines, args.format))
    return EXIT_OK if report.passed else EXIT_ERROR


def _cmd_sweep(args, stdout: TextIO, stderr: TextIO) -> int:
    # pylint: disable=unused-argument
    sweep = BoundSweep(args.c1, (args.c2_min, args.c2_max), alpha=args.alpha)
    for record in sweep.records():
        stdout.write(_format_record(record, args.format) + "\n")
    return EXIT_OK


def _cmd_fixtures(args, stdout: TextIO, stderr: TextIO) -> int:
    if args.dump is not None:
        fixture = fixture_by_name(args.dump)
        if fixture.table is None:
            raise KeyError(f"fixture {args.dump!r} has no table")
        stdout.write(serialize_table(fixture.table))
        return EXIT_OK
    lines: Lines = []
    passed = True
    for fixture in builtin_fixtures():
        if not args.run:
            lines.append((fixture.name, fixture.description))
            continue
        results = run_fixture(fixture)
        ok = all_passed(results)
        passed = passed and ok
        lines.append((fixture.name, "pass" if ok else "fail"))
        for result in results:
            if result.failed:
                for detail in result.details:
                    stderr.write(f"{fixture.name} {result.name}: {detail}\n")
    if args.run:
        lines.append(("result", "pass" if passed else "fail"))
    stdout.write(_format_lines(lines, args.format))
    return EXIT_OK if passed else EXIT_ERROR


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        '--format',
        help='Output format: key=value records or key: value text',
        choices=['records', 'plain'],
        default='records'
    )
    parser.add_argument(
        '--log',
        help='Set minimum logging level',
        metavar='debug|info|warning|error|critical',
        choices=['debug', 'info', 'warning', 'error', 'critical'],
        default='warning'
    )
    return parser


def _add_levels(parser: argparse.ArgumentParser, beta: bool = True) -> None:
    parser.add_argument('--alpha', type=int, help='First level alpha')
    parser.add_argument('--gamma', type=int, help='Third level gamma')
    if beta:
        parser.add_argument('--beta', type=int, help='Second level beta')


def make_args() -> argparse.ArgumentParser:
    """Разборщик аргументов со всеми подкомандами"""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='nonvanishing',
        description='Non-vanishing of first cohomology of rank-2 bundles '
                    'on projective 3-space.')
    commands = parser.add_subparsers(dest='command', required=True)

    report = commands.add_parser('report', parents=[common],
                                 help='Bounds and forced twists of a bundle')
    report.add_argument('--c1', type=int, required=True)
    report.add_argument('--c2', type=int, required=True)
    _add_levels(report)
    report.set_defaults(func=_cmd_report)

    verify = commands.add_parser('verify', parents=[common],
                                 help='Verify a cohomology table file')
    verify.add_argument('file', help='Table file to read')
    _add_levels(verify)
    verify.set_defaults(func=_cmd_verify)

    identities = commands.add_parser('identities', parents=[common],
                                     help='Check the polynomial identities')
    for name in ('--n-min', '--n-max', '--alpha-min', '--alpha-max'):
        identities.add_argument(name, type=int, required=True)
    identities.set_defaults(func=_cmd_identities)

    sweep = commands.add_parser('sweep', parents=[common],
                                help='Bounds for a range of c2')
    sweep.add_argument('--c1', type=int, required=True)
    sweep.add_argument('--c2-min', type=int, required=True)
    sweep.add_argument('--c2-max', type=int, required=True)
    sweep.add_argument('--alpha', type=int, help='First level alpha')
    sweep.set_defaults(func=_cmd_sweep)

    fixtures = commands.add_parser('fixtures', parents=[common],
                                   help='List or run the bundled examples')
    fixtures.add_argument('--run', action='store_true',
                          help='Verify every fixture')
    fixtures.add_argument('--dump', metavar='NAME',
                          help='Print the table of a fixture')
    fixtures.set_defaults(func=_cmd_fixtures)
    return parser


def do_common_args(args, stderr: TextIO) -> None:
    """Настройка журнала по общим аргументам"""
    logging.basicConfig(format='%(levelname)s (%(name)s): %(message)s',
                        level=args.log.upper(), stream=stderr, force=True)


def run(argv: Sequence[str], stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Запуск командной строки

    Args:
        argv: аргументы без имени программы
        stdout: поток вывода, по умолчанию sys.stdout
        stderr: поток ошибок, по умолчанию sys.stderr

    Returns:
        Код возврата
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        # argparse пишет справку и ошибки в sys.stdout и sys.stderr
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = make_args().parse_args(list(argv))
    except SystemExit as error:
        return EXIT_SYNTAX if error.code is None else int(error.code)
    do_common_args(args, stderr)
    command: Callable = args.func
    try:
        return command(args, stdout, stderr)
    except KeyError as error:
        stderr.write(f"error: {error.args[0]}\n")
    except (DomainError, TableFormatError, OSError) as error:
        stderr.write(f"error: {error}\n")
    logger.debug("%s failed", args.command)
    return EXIT_ERROR


def run_script(func: Callable[[Sequence[str]], int] = run) -> None:
    """Запуск с аргументами процесса и выходом с кодом возврата"""
    try:
        sys.exit(func(sys.argv[1:]))
    except KeyboardInterrupt:
        logger.error("Interrupted")
        sys.exit(EXIT_ERROR)
