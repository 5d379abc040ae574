#!/usr/bin/env python3
import os
import sys
import time
import yaml
import logging
import argparse

from modlab.base import types
from modlab.base.helpers import Caps, CapExceeded, parse_int_list
from modlab.base.algebra import PatternError, IdealError
from modlab.base.linalg import NotPrimeError, DimensionMismatch
from modlab.base.modules import ModuleValidityError, AlgebraMismatch
from modlab.applications.importer import SpecFileError, load_ring, load_module_script, parse_module_script
from modlab.applications.theorems import HypothesisError, build_census
from modlab.applications.exporter import ring_report, module_report, census_report, paper_report
from modlab.applications.exporters.json import JsonExportController
from modlab.applications.exporters.text import TextExportController

INPUT_ERRORS = (SpecFileError, PatternError, IdealError, NotPrimeError, DimensionMismatch, ModuleValidityError,
                AlgebraMismatch, HypothesisError, OSError, ValueError)


def cmd_ring_check(args, caps):
    return ring_report(load_ring(args.ring))


def cmd_module_report(args, caps):
    algebra = load_ring(args.ring)
    if args.script is not None:
        _, module, _ = load_module_script(args.script, algebra)
    else:
        _, module, _ = parse_module_script(args.expr, algebra, source='<expr>')
    return module_report(algebra, module, caps)


def cmd_census(args, caps):
    algebra = load_ring(args.ring)
    bounds = parse_int_list(args.bounds) if args.bounds else [1] * algebra.n
    return census_report(build_census(algebra, bounds, args.max_length, caps), caps)


def cmd_paper(args, caps):
    return paper_report(args.selection, caps)


COMMANDS = {types.RING_CHECK: cmd_ring_check,
            types.MODULE_REPORT: cmd_module_report,
            types.CENSUS: cmd_census,
            types.PAPER: cmd_paper}


def load_config(config_file):
    if os.path.isfile(config_file):
        with open(config_file, 'r') as f:
            try:
                return yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                print(f'An error occured during parsing of the YAML config file: {e}', file=sys.stderr)
                sys.exit(types.EXIT_INPUT_ERROR)
    print(f'No config file found, using default values', file=sys.stderr)
    return {}


def setup_logging(log_file, level):
    msg_fmt_str = '%(asctime)s - %(levelname)s: %(message)s'
    date_fmt_str = '%d-%b-%y %H:%M:%S'
    logging.basicConfig(filename=log_file,
                        filemode='w',
                        level=level,
                        format=msg_fmt_str,
                        datefmt=date_fmt_str)
    if log_file is not None:
        # log to file and stderr simultaneously
        stderr_handler = logging.StreamHandler(sys.stderr)
        stderr_handler.setFormatter(logging.Formatter(fmt=msg_fmt_str, datefmt=date_fmt_str))
        logging.getLogger().addHandler(stderr_handler)


def main(args):
    config = load_config(args.config_file)
    setup_logging(args.log_file, config.get('log_level', 'INFO'))
    try:
        caps = Caps.from_string(args.caps) if args.caps else Caps.from_config(config)
    except ValueError as e:
        logging.error(str(e))
        return types.EXIT_INPUT_ERROR

    start = time.time()
    try:
        report = COMMANDS[args.command](args, caps)
    except CapExceeded as e:
        logging.error('enumeration cap exceeded: {}'.format(e))
        return types.EXIT_CAP_EXCEEDED
    except INPUT_ERRORS as e:
        logging.error('{}: {}'.format(e.__class__.__name__, e))
        return types.EXIT_INPUT_ERROR
    report.timing = {'seconds': round(time.time() - start, 3)}

    if args.format == types.STRUCTURED:
        controller = JsonExportController()
    else:
        controller = TextExportController()
    controller.write(report, args.out)
    for verdict in report.failed_verdicts:
        logging.error('failed: {} over {}'.format(verdict['theorem'], verdict['universe']))
    return report.exit_code


def get_parser():
    parser = argparse.ArgumentParser(description='decide injectivity properties of modules over finite '
                                                 'poset-pattern algebras')
    parser.add_argument('--config-file', type=str, default='config/modlab.yml')
    parser.add_argument('--caps', type=str, help='enumeration caps "vectors,homs,lattice" (overrides config)')
    parser.add_argument('--format', choices=[x.value for x in types.OutputFormat], default=types.TEXT)
    parser.add_argument('-o', '--out', type=str, help='output path (default is stdout)')
    parser.add_argument('--log-file', help='write the log here as well as to stderr')

    groups = parser.add_subparsers(dest='group', required=True)
    ring = groups.add_parser(types.RING, help='ring specification files')
    ring_verbs = ring.add_subparsers(dest='verb', required=True)
    check = ring_verbs.add_parser(types.CHECK, help='parse and verify a ring file')
    check.add_argument('ring', help='ring specification file')
    check.set_defaults(command=types.RING_CHECK)

    module = groups.add_parser(types.MODULE, help='modules over a ring')
    module_verbs = module.add_subparsers(dest='verb', required=True)
    report = module_verbs.add_parser(types.REPORT, help='property profile of one module')
    report.add_argument('ring', help='ring specification file')
    given = report.add_mutually_exclusive_group(required=True)
    given.add_argument('expr', nargs='?', help='single module expression, e.g. "projective right 1"')
    given.add_argument('--script', help='module script file')
    report.set_defaults(command=types.MODULE_REPORT)

    census = groups.add_parser(types.CENSUS, help='isomorphism classes with bounded socle and length')
    census.add_argument('ring', help='ring specification file')
    census.add_argument('--bounds', help='socle multiplicity bound per simple label, e.g. 1,1,1 (default all 1)')
    census.add_argument('--max-length', type=int, default=6)
    census.set_defaults(command=types.CENSUS)

    paper = groups.add_parser(types.PAPER, aliases=[types.PAPER_ALIAS],
                              help='counterexample scenarios and census theorem checks')
    paper.add_argument('selection', nargs='?', default=types.ALL,
                       choices=[x.value for x in types.SuiteSelection])
    paper.set_defaults(command=types.PAPER)
    return parser


if __name__ == '__main__':
    sys.exit(main(get_parser().parse_args()))
