# -*- coding: utf-8 -*-
"""
Command line entry point: ``run``, ``sweep``, ``verify-targets``,
``blackwell`` and ``report``.
"""

from __future__ import print_function
import os
import sys
import glob
import logging
import argparse
from concurrent.futures import ProcessPoolExecutor
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.harness.config import ExperimentConfig
from approachabilitykit.harness.rates import fit_discrepancy_rate
from approachabilitykit.harness.recordfileformat import read_record
from approachabilitykit.harness.recorddocgen import RecordDocGen
from approachabilitykit.harness.runner import *
from approachabilitykit.harness.verifier import TargetVerifier


logger = logging.getLogger(__name__)


def command_run(args):
    for filepath in run_config_file(args.config, args.output_dir):
        print(filepath)
    return 0


def command_sweep(args):
    filepaths = sorted(glob.glob(os.path.join(args.config_dir, '*.ini')))
    if not filepaths:
        raise ConfigError('no *.ini configs in %s' % args.config_dir)
    # Parse everything first so a typo fails before any run starts.
    for filepath in filepaths:
        ExperimentConfig.from_file(filepath)
    output_dir = resolve_output_dir(args.output_dir)
    with ProcessPoolExecutor(max_workers=args.workers) as executor:
        results = list(executor.map(run_config_file, filepaths, [output_dir] * len(filepaths)))
    for paths in results:
        for filepath in paths:
            print(filepath)
    return 0


def command_verify_targets(args):
    verifier = TargetVerifier(args.resolution_one, args.resolution_two)
    passed = verifier.verify()
    verifier.write(resolve_output_dir(args.output_dir))
    for check in verifier.checks:
        print('%-4s %-40s %.3g' % (check.status, check.name, check.max_error))
    return 0 if passed else 1


def command_blackwell(args):
    config = ExperimentConfig.from_file(args.config).with_value('strategy', 'kind', 'blackwell')
    runner = ExperimentRunner(config, args.output_dir)
    record = runner.perform_run()
    for filepath in runner.generate(args.t_min):
        print(filepath)
    fit = fit_discrepancy_rate(record, args.t_min)
    print('|delta_T|/T fit: %r' % fit)
    print('max inequality slack: %.3g' % runner.strategy.max_inequality_slack)
    return 0


def command_report(args):
    fits = []
    for filepath in args.records:
        record = read_record(filepath)
        name = os.path.splitext(os.path.basename(filepath))[0]
        for column in record.columns:
            if column.startswith('dist_') or column == 'cost_distance':
                fits.append((name, column, safe_fit(record, column, args.t_min)))
        if record.strategy_id == 'blackwell':
            try:
                fits.append((name, 'delta_norm/t', fit_discrepancy_rate(record, args.t_min)))
            except RateFitError:
                fits.append((name, 'delta_norm/t', None))
    output_dir = resolve_output_dir(args.output_dir)
    os.makedirs(output_dir, exist_ok=True)
    doc_gen = RecordDocGen(REPORT_DOCUMENT_ID)
    doc_gen.set_doc_content({'id': REPORT_DOCUMENT_ID, 'fits': fits, 't_min': args.t_min})
    for filepath in doc_gen.generate(os.path.join(output_dir, 'report.csv')):
        print(filepath)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog='approachabilitykit',
                                     description='Approachability experiments in unknown games.')
    parser.add_argument('--output-dir', default=None,
                        help='where outputs go (default: $%s, else the current directory)' % OUTPUT_DIR_ENV_VAR)
    parser.add_argument('--verbose', '-v', action='store_true', help='log at DEBUG level')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    run_parser = subparsers.add_parser('run', help='play one configured run')
    run_parser.add_argument('config')
    run_parser.set_defaults(handler=command_run)

    sweep_parser = subparsers.add_parser('sweep', help='play every *.ini config of a directory')
    sweep_parser.add_argument('config_dir')
    sweep_parser.add_argument('--workers', type=int, default=None)
    sweep_parser.set_defaults(handler=command_sweep)

    verify_parser = subparsers.add_parser('verify-targets', help='check closed-form target functions against oracles')
    verify_parser.add_argument('--resolution-one', type=int, default=ONE_DIMENSIONAL_GRID_SIZE)
    verify_parser.add_argument('--resolution-two', type=int, default=TWO_DIMENSIONAL_GRID_SIZE)
    verify_parser.set_defaults(handler=command_verify_targets)

    blackwell_parser = subparsers.add_parser('blackwell', help='play a config with the known-game strategy')
    blackwell_parser.add_argument('config')
    blackwell_parser.add_argument('--t-min', type=int, default=RATE_FIT_T_MIN)
    blackwell_parser.set_defaults(handler=command_blackwell)

    report_parser = subparsers.add_parser('report', help='rate fits over run records')
    report_parser.add_argument('records', nargs='+')
    report_parser.add_argument('--t-min', type=int, default=RATE_FIT_T_MIN)
    report_parser.set_defaults(handler=command_report)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.handler(args)
    except ConfigError as error:
        print('approachabilitykit: %s' % error, file=sys.stderr)
        return 2
    except (ApproachabilityKitError, OSError) as error:
        print('approachabilitykit: %s' % error, file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
