"""
Command-line interface for rook_orbits.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional

from rook_orbits import __version__
from rook_orbits.andre import (
    decompose,
    decomposition_to_json,
    membership,
    verify_andre_dimensions,
    verify_andre_oracle,
    verify_andre_partition,
)
from rook_orbits.chevalley import build_chevalley
from rook_orbits.constants import (
    DEFAULT_ANDRE_FORMS,
    DEFAULT_DIMENSION_PLACEMENTS,
    DEFAULT_PARTITION_FORMS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    OUTPUT_FORMATS,
)
from rook_orbits.exact import format_rational
from rook_orbits.exceptions import ConsistencyError, RookOrbitsError
from rook_orbits.f4_certify import (
    certify_all,
    certify_distinctness,
    verify_exceptional_list,
    verify_maximal_list,
    verify_prop42_list,
    verify_prop44_table,
)
from rook_orbits.file_utils import resolve_data_file
from rook_orbits.g2_orbits import (
    classify,
    g2_constants,
    g2_dimension_report,
    get_case,
    verify_cases,
    verify_partition,
    verify_singular_collapse,
)
from rook_orbits.models import CheckResult, Report, RunConfig, Status
from rook_orbits.parsers import (
    load_f4_data,
    parse_linear_form,
    parse_matrix_form,
    parse_placement,
    parse_xi,
)
from rook_orbits.reporting import ReportWriter
from rook_orbits.rootsys import (
    PLACEMENT_FILTERS,
    RootSystem,
    build_root_system,
    enumerate_rook_placements,
    maximal_rook_placements,
)

logger = logging.getLogger(__name__)

SELFTEST_ANDRE_SYSTEM = 'A3'
SELFTEST_ANDRE_FORMS = 50
SELFTEST_TABLE_ROW = 17


def setup_logging(verbose: bool = False, quiet: bool = False) -> None:
    """
    Configure logging based on verbosity settings.

    Args:
        verbose: Enable debug output
        quiet: Suppress all but error messages
    """
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG
    else:
        level = logging.INFO

    logging.basicConfig(
        level=level,
        format='%(message)s',
        handlers=[logging.StreamHandler()]
    )


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--system',
        metavar='KIND',
        help='Root system: A<n>, G2 or F4 (default depends on the command)'
    )
    common.add_argument(
        '--seed',
        type=int,
        default=DEFAULT_SEED,
        help=f'Master seed for all sampling (default: {DEFAULT_SEED})'
    )
    common.add_argument(
        '--samples',
        type=int,
        default=DEFAULT_SAMPLES,
        metavar='N',
        help=f'Samples per check (default: {DEFAULT_SAMPLES})'
    )
    common.add_argument(
        '--output',
        choices=OUTPUT_FORMATS,
        default='text',
        help='Report format (default: text)'
    )
    common.add_argument(
        '--data',
        type=Path,
        metavar='PATH',
        help='F4 data file (default: $ROOK_ORBITS_DATA, then the packaged file)'
    )
    common.add_argument(
        '--report-file',
        type=Path,
        metavar='PATH',
        help='Write the report here instead of stdout'
    )

    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument(
        '-v', '--verbose',
        action='store_true',
        help='Enable verbose output'
    )
    verbosity.add_argument(
        '-q', '--quiet',
        action='store_true',
        help='Suppress non-error output'
    )
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create and configure argument parser."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='rook-orbits',
        description='Exact verification of coadjoint orbits attached to rook placements '
                    'in root systems of type A, G2 and F4.',
        epilog='Example: rook-orbits g2 verify --all --samples 200 --seed 7'
    )
    parser.add_argument(
        '--version',
        action='version',
        version=f'%(prog)s {__version__}'
    )
    commands = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    commands.add_parser('roots', parents=[common], help='List the positive roots')

    rooks = commands.add_parser('rooks', parents=[common], help='Enumerate rook placements')
    rooks.add_argument(
        '--filter',
        choices=PLACEMENT_FILTERS,
        default='all',
        help='Which placements to list (default: all)'
    )
    rooks.add_argument(
        '--maximal',
        action='store_true',
        help='List only maximal rook placements'
    )

    # Type A
    andre = commands.add_parser('andre', help="Andre's basic subvarieties in type A")
    andre_actions = andre.add_subparsers(dest='action', required=True, metavar='ACTION')
    decompose_parser = andre_actions.add_parser(
        'decompose', parents=[common], help='Find the basic subvariety of a form'
    )
    decompose_parser.add_argument(
        '--form', required=True, metavar='JSON',
        help='Strictly lower-triangular matrix as a JSON array of "p/q" rows'
    )
    member_parser = andre_actions.add_parser(
        'membership', parents=[common], help='Test a form against O_{D,xi}'
    )
    member_parser.add_argument('--placement', required=True, metavar='ROOTS',
                               help='Roots separated by ";", e.g. "1,1,0;0,0,1"')
    member_parser.add_argument('--xi', required=True, metavar='VALUES',
                               help='Comma-separated nonzero rationals, one per root')
    member_parser.add_argument('--form', required=True, metavar='JSON',
                               help='Strictly lower-triangular matrix as a JSON array of rows')
    partition_parser = andre_actions.add_parser(
        'partition', parents=[common], help='Check the partition into basic subvarieties'
    )
    partition_parser.add_argument(
        '--count', type=int, default=DEFAULT_ANDRE_FORMS, metavar='N',
        help=f'Random forms to decompose (default: {DEFAULT_ANDRE_FORMS})'
    )
    partition_parser.add_argument(
        '--dims', type=int, default=DEFAULT_DIMENSION_PLACEMENTS, metavar='N',
        help=f'Random placements in the dimension check (default: {DEFAULT_DIMENSION_PLACEMENTS})'
    )

    # G2
    g2 = commands.add_parser('g2', help='The twelve G2 basic subvarieties')
    g2_actions = g2.add_subparsers(dest='action', required=True, metavar='ACTION')
    verify_parser = g2_actions.add_parser('verify', parents=[common], help='Sample orbits against each system')
    which = verify_parser.add_mutually_exclusive_group(required=True)
    which.add_argument('--case', type=int, metavar='K', help='Case 1..12')
    which.add_argument('--all', action='store_true', help='All twelve cases')
    verify_parser.add_argument(
        '--tables', type=int, default=None, metavar='N',
        help='Randomly rescaled structure tables to repeat the check on'
    )
    classify_parser = g2_actions.add_parser('classify', parents=[common], help='Classify a form')
    classify_parser.add_argument('--form', required=True, metavar='JSON',
                                 help='{"coeffs": {"<root>": "p/q", ...}}')
    g2_actions.add_parser('dims', parents=[common], help='Dimension report per case')
    g2_partition = g2_actions.add_parser('partition', parents=[common], help='Check the partition')
    g2_partition.add_argument(
        '--count', type=int, default=DEFAULT_PARTITION_FORMS, metavar='N',
        help=f'Random forms to classify (default: {DEFAULT_PARTITION_FORMS})'
    )

    # F4
    f4 = commands.add_parser('f4', help='F4 distinctness certificates')
    f4_actions = f4.add_subparsers(dest='action', required=True, metavar='ACTION')
    f4_actions.add_parser('maximal', parents=[common], help='Compare maximal placements with D_1..D_24')
    table_parser = f4_actions.add_parser('table', parents=[common], help='Recompute the certificate table')
    table_parser.add_argument('--row', type=int, metavar='K', help='Only row K')
    certify_parser = f4_actions.add_parser('certify', parents=[common], help='Build certificates')
    target = certify_parser.add_mutually_exclusive_group(required=True)
    target.add_argument('--all', action='store_true', help='Every orthogonal non-singular placement')
    target.add_argument('--placement', metavar='ROOTS', help='One placement, roots separated by ";"')

    commands.add_parser('selftest', parents=[common], help='Run the fast invariant suite')
    return parser


def config_from_args(opts: argparse.Namespace) -> RunConfig:
    """Collect parsed arguments into a RunConfig."""
    shared = {'command', 'action', 'system', 'seed', 'samples', 'output',
              'data', 'report_file', 'verbose', 'quiet'}
    defaults = {'andre': 'A3', 'g2': 'G2', 'f4': 'F4'}
    return RunConfig(
        command=opts.command,
        action=getattr(opts, 'action', '') or '',
        system=opts.system or defaults.get(opts.command, 'F4'),
        seed=opts.seed,
        samples=opts.samples,
        output=opts.output,
        data_file=opts.data,
        report_file=opts.report_file,
        options={key: value for key, value in vars(opts).items() if key not in shared},
    )


# =============================================================================
# Commands
# =============================================================================

def _expected_root_count(system: RootSystem) -> int:
    if system.family == 'A':
        return system.rank * (system.rank + 1) // 2
    return {'G': 6, 'F': 24}[system.family]


def run_roots(config: RunConfig) -> Report:
    system = build_root_system(config.system)
    report = Report(title=f"{system.kind} positive roots", command='roots')
    count = len(system.positive_roots)
    expected = _expected_root_count(system)
    report.add(CheckResult(
        name='positive root count',
        status=Status.PASS if count == expected else Status.FAIL,
        message=f"{count} roots (expected {expected})",
    ))
    report.data['listing'] = [str(root) for root in system.positive_roots]
    return report


def run_rooks(config: RunConfig) -> Report:
    system = build_root_system(config.system)
    if config.options.get('maximal'):
        placements = maximal_rook_placements(system)
        label = 'maximal'
    else:
        label = config.options.get('filter', 'all')
        placements = enumerate_rook_placements(system, label)
    report = Report(title=f"{system.kind} rook placements ({label})", command='rooks')
    report.add(CheckResult(name='placements', status=Status.PASS, message=f"{len(placements)} listed"))
    report.data['listing'] = [str(placement) for placement in placements]
    return report


def _type_a_system(config: RunConfig) -> RootSystem:
    system = build_root_system(config.system)
    if system.family != 'A':
        raise ValueError(f"andre commands need a system of type A, got {system.kind}")
    return system


def run_andre(config: RunConfig) -> Report:
    system = _type_a_system(config)
    options = config.options

    if config.action == 'decompose':
        form = parse_matrix_form(options['form'])
        placement, xi = decompose(system, form)
        report = Report(title=f"{system.kind} decomposition", command='andre decompose')
        report.add(CheckResult(name='decompose', status=Status.PASS, message=f"D = {placement}"))
        report.data.update(decomposition_to_json(placement, xi))
        return report

    if config.action == 'membership':
        placement = parse_placement(options['placement'], system)
        xi = parse_xi(options['xi'], placement)
        form = parse_matrix_form(options['form'])
        member = membership(system, placement.roots, xi, form)
        report = Report(title=f"{system.kind} membership", command='andre membership')
        report.add(CheckResult(
            name='membership',
            status=Status.PASS,
            message=f"{'in' if member else 'not in'} O_(D,xi) for D = {placement}",
        ))
        report.data['member'] = member
        return report

    report = verify_andre_partition(system, options.get('count', DEFAULT_ANDRE_FORMS), config.seed)
    table = build_chevalley(system)
    report.extend(verify_andre_oracle(table, config.samples, config.seed))
    report.add(verify_andre_dimensions(system, options.get('dims', DEFAULT_DIMENSION_PLACEMENTS), config.seed))
    return report


def run_g2(config: RunConfig) -> Report:
    system = build_root_system('G2')
    table = build_chevalley(system)
    options = config.options

    if config.action == 'verify':
        cases = [get_case(options['case'])] if options.get('case') else None
        extra = {} if options.get('tables') is None else {'random_tables': options['tables']}
        return verify_cases(table, config.samples, config.seed, cases, **extra)

    if config.action == 'classify':
        form = parse_linear_form(options['form'], system)
        case, xi = classify(form, g2_constants(table))
        report = Report(title='G2 classification', command='g2 classify')
        report.add(CheckResult(name='classify', status=Status.PASS, message=str(case)))
        report.data['case'] = case.index
        report.data['placement'] = [str(root) for root in case.placement]
        report.data['xi'] = {str(root): format_rational(value) for root, value in xi.items()}
        return report

    if config.action == 'dims':
        return g2_dimension_report(table)

    report = verify_partition(table, options.get('count', DEFAULT_PARTITION_FORMS), config.seed)
    report.add(verify_singular_collapse(table, config.samples, config.seed))
    return report


def run_f4(config: RunConfig) -> Report:
    system = build_root_system('F4')
    options = config.options

    if config.action == 'certify' and options.get('placement'):
        placement = parse_placement(options['placement'], system)
        certificate = certify_distinctness(system, placement)
        report = Report(title=f"certificate {placement}", command='f4 certify')
        report.add(CheckResult(
            name=str(placement),
            status=(Status.PASS if certificate.complete
                    else Status.SKIP if certificate.excluded else Status.FAIL),
            message=('complete' if certificate.complete
                     else 'singular placement, excluded' if certificate.excluded else 'incomplete'),
            detail=certificate.to_json(),
        ))
        return report

    data = load_f4_data(resolve_data_file(config.data_file), system)
    if config.action == 'maximal':
        return verify_maximal_list(system, data)
    if config.action == 'table':
        rows = [options['row']] if options.get('row') else None
        return verify_prop44_table(system, data, rows=rows, table=build_chevalley(system))

    report = certify_all(system)
    report.extend(verify_prop42_list(system, data))
    report.extend(verify_exceptional_list(system, data))
    return report


def run_selftest(config: RunConfig) -> Report:
    """Jacobi on G2, the type A partition on A3, and table row 17."""
    report = Report(title='selftest', command='selftest')

    table = build_chevalley(build_root_system('G2'))
    try:
        table.validate(seed=config.seed)
        report.add(CheckResult(name='G2 Jacobi identity', status=Status.PASS))
    except ConsistencyError as exc:
        report.add(CheckResult(name='G2 Jacobi identity', status=Status.FAIL, message=str(exc)))

    report.extend(verify_andre_partition(
        build_root_system(SELFTEST_ANDRE_SYSTEM), SELFTEST_ANDRE_FORMS, config.seed
    ))

    f4 = build_root_system('F4')
    data = load_f4_data(resolve_data_file(config.data_file), f4)
    report.extend(verify_prop44_table(f4, data, rows=[SELFTEST_TABLE_ROW]))
    return report


COMMANDS: dict[str, Callable[[RunConfig], Report]] = {
    'roots': run_roots,
    'rooks': run_rooks,
    'andre': run_andre,
    'g2': run_g2,
    'f4': run_f4,
    'selftest': run_selftest,
}


def run(config: RunConfig) -> Report:
    """Execute the command a RunConfig names."""
    return COMMANDS[config.command](config)


def main(args: Optional[list[str]] = None) -> int:
    """
    Main entry point.

    Args:
        args: Command line arguments (uses sys.argv if None)

    Returns:
        Exit code: 0 when no check failed, 1 on a failed check or a hard
        inconsistency, 2 on bad input
    """
    parser = create_parser()
    opts = parser.parse_args(args)

    setup_logging(verbose=opts.verbose, quiet=opts.quiet)
    config = config_from_args(opts)
    logger.info(f"rook-orbits v{__version__}: {config.command} {config.action}".rstrip())

    try:
        report = run(config)
    except RookOrbitsError as exc:
        logger.critical(f"{type(exc).__name__}: {exc}")
        return 1
    except ValueError as exc:
        logger.error(f"Invalid input: {exc}")
        return 2

    writer = ReportWriter(config.output)
    if config.report_file:
        writer.write_file(report, config.report_file)
    else:
        writer.write(report, sys.stdout)

    for check in report.checks:
        if check.status is Status.FLAG:
            logger.warning(f"FLAG {check.name}: {check.message}")
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
