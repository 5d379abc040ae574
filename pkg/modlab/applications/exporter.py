import sys
import argparse

import numpy as np

from modlab.base import types
from modlab.base.helpers import get_repr, or_default
from modlab.base.algebra import verify_algebra, is_left_serial, is_right_serial, radical_squared_zero
from modlab.base.modules import top_labels, radical_layers, socle_layers
from modlab.base.envelope import injective_hull, property_profile
from modlab.applications.theorems import census_rows, reference_suite

TOOL_VERSION = '0.1.0'
SCHEMA_VERSION = 1


def plain(x):
    """numpy scalars, arrays and tuples -> builtin json types"""
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return plain(x.tolist())
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


class Report(object):
    """everything one CLI run produces; timing is the only field that changes between identical runs"""

    def __init__(self, command, algebra=None, profiles=None, verdicts=None, censuses=None, notices=None,
                 timing=None, cap_exceeded=False, tool_version=TOOL_VERSION, schema_version=SCHEMA_VERSION):
        self.command = command
        self.algebra = plain(algebra or {})
        self.profiles = plain(profiles or [])
        self.verdicts = plain(verdicts or [])
        self.censuses = plain(censuses or [])
        self.notices = plain(notices or [])
        self.timing = plain(timing or {})
        self.cap_exceeded = bool(cap_exceeded)
        self.tool_version = tool_version
        self.schema_version = schema_version

    @property
    def failed_verdicts(self):
        return [v for v in self.verdicts if not v['holds']]

    @property
    def exit_code(self):
        if self.failed_verdicts:
            return types.EXIT_VERDICT_FAILED
        if self.cap_exceeded:
            return types.EXIT_CAP_EXCEEDED
        return types.EXIT_OK

    def to_jsonable(self):
        return {'schema_version': self.schema_version,
                'tool_version': self.tool_version,
                'command': self.command,
                'algebra': self.algebra,
                'profiles': self.profiles,
                'verdicts': self.verdicts,
                'censuses': self.censuses,
                'notices': self.notices,
                'cap_exceeded': self.cap_exceeded,
                'timing': self.timing}

    @classmethod
    def from_jsonable(cls, data):
        if data.get('schema_version') != SCHEMA_VERSION:
            raise ValueError('unsupported report schema version {}'.format(data.get('schema_version')))
        return cls(data['command'], algebra=data['algebra'], profiles=data['profiles'], verdicts=data['verdicts'],
                   censuses=data['censuses'], notices=data['notices'], timing=data['timing'],
                   cap_exceeded=data.get('cap_exceeded', False),
                   tool_version=data['tool_version'], schema_version=data['schema_version'])

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_jsonable() == other.to_jsonable()

    def __repr__(self):
        return get_repr('Report', {'command': self.command, 'profiles': len(self.profiles),
                                   'verdicts': len(self.verdicts), 'censuses': len(self.censuses)})


class ReportArgParser(object):
    def __init__(self):
        self.parser = argparse.ArgumentParser()
        self.parser.add_argument('-i', '--report-in', type=str, required=True,
                                 help='structured report written by modlab_cli.py --format structured')
        self.parser.add_argument('-o', '--out', type=str,
                                 help="output file path, (default is stdout)")

        self.args = None

    def parse_args(self):
        self.args = self.parser.parse_args()


class ReportExportController(object):
    """base for the writers; subclasses implement serialize(report) -> str"""

    @staticmethod
    def _as_file_handle(file_out):
        if file_out is None:
            handle_out = sys.stdout
        else:
            handle_out = open(file_out, "w")
        return handle_out

    def serialize(self, report):
        raise NotImplementedError

    def write(self, report, file_out=None):
        handle_out = self._as_file_handle(file_out)
        handle_out.write(self.serialize(report))
        if handle_out is not sys.stdout:
            handle_out.close()


##### report builders #####

def algebra_summary(algebra):
    checks = verify_algebra(algebra)
    out = algebra.summary()
    out['checks'] = dict(checks.results)
    out['check_witnesses'] = dict(checks.witnesses)
    out['valid'] = checks.ok
    out['left_serial'] = is_left_serial(algebra)
    out['right_serial'] = is_right_serial(algebra)
    out['radical_squared_zero'] = radical_squared_zero(algebra)
    return out


def ring_report(algebra):
    return Report(types.RING_CHECK, algebra=algebra_summary(algebra))


def module_profile(module, caps=None):
    """PropertyProfile plus the layer structure and hull blocks"""
    profile = property_profile(module, caps)
    out = profile.as_dict()
    out['top_labels'] = top_labels(module)
    out['radical_layers'] = radical_layers(module)
    out['socle_layers'] = socle_layers(module)
    out['hull_blocks'] = [label for label, _ in injective_hull(module).blocks]
    return out, profile


def module_report(algebra, module, caps=None):
    out, profile = module_profile(module, caps)
    return Report(types.MODULE_REPORT, algebra=algebra_summary(algebra), profiles=[out], notices=profile.notices,
                  cap_exceeded=profile.cap_exceeded)


def census_section(census, caps=None):
    return {'universe': census.universe,
            'certificate': census.certificate(),
            'rows': census_rows(census, caps)}


def census_report(census, caps=None):
    return Report(types.CENSUS, algebra=algebra_summary(census.algebra), censuses=[census_section(census, caps)])


def paper_report(selection=types.ALL, caps=None):
    caps = or_default(caps)
    verdicts, censuses = reference_suite(selection, caps)
    return Report(types.PAPER, verdicts=[v.as_dict() for v in verdicts],
                  censuses=[census_section(c, caps) for c in censuses],
                  notices=['selection: {}'.format(selection)])
