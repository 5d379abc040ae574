import os
import json
import importlib.util
import pytest

from ..base import types
from ..applications.exporter import Report

ROOT = os.path.join(os.path.dirname(__file__), '..', '..')
TESTDATA = os.path.join(os.path.dirname(__file__), '..', 'testdata')
CONFIG = os.path.join(ROOT, 'config', 'modlab.yml')


def load_cli():
    spec = importlib.util.spec_from_file_location('modlab_cli', os.path.join(ROOT, 'modlab_cli.py'))
    cli = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(cli)
    return cli


modlab_cli = load_cli()


def data_path(name):
    return os.path.join(TESTDATA, name)


def run(tmp_path, *argv):
    out = str(tmp_path / 'report.json')
    args = modlab_cli.get_parser().parse_args(['--config-file', CONFIG, '--format', types.STRUCTURED,
                                               '-o', out] + list(argv))
    return modlab_cli.main(args), out


def test_nested_verbs():
    parser = modlab_cli.get_parser()
    args = parser.parse_args(['ring', 'check', 'r3.ring'])
    assert (args.command, args.ring) == (types.RING_CHECK, 'r3.ring')
    args = parser.parse_args(['module', 'report', 'r3.ring', 'projective right 1'])
    assert (args.command, args.expr, args.script) == (types.MODULE_REPORT, 'projective right 1', None)
    args = parser.parse_args(['module', 'report', 'r3.ring', '--script', 'e11r.script'])
    assert (args.expr, args.script) == (None, 'e11r.script')
    assert parser.parse_args(['paper', 'example1']).selection == types.EXAMPLE1
    assert parser.parse_args(['paper']).selection == types.ALL
    assert parser.parse_args(['suite', 'example2']).command == types.PAPER
    assert parser.parse_args(['census', 'r3.ring']).max_length == 6


def test_usage_errors_exit_two():
    parser = modlab_cli.get_parser()
    for argv in [['ring', 'r3.ring'], ['module', 'report', 'r3.ring'],
                 ['module', 'report', 'r3.ring', 'projective right 1', '--script', 'e11r.script'],
                 ['paper', 'example3']]:
        with pytest.raises(SystemExit) as e:
            parser.parse_args(argv)
        assert e.value.code == types.EXIT_INPUT_ERROR


def test_exit_ok(tmp_path):
    code, out = run(tmp_path, 'ring', 'check', data_path('r3.ring'))
    assert code == types.EXIT_OK
    with open(out) as f:
        report = json.load(f)
    assert report['command'] == types.RING_CHECK
    assert report['algebra']['dim'] == 5
    code, out = run(tmp_path, 'module', 'report', data_path('r3.ring'), '--script', data_path('e11r.script'))
    assert code == types.EXIT_OK


def test_exit_input_error(tmp_path):
    assert run(tmp_path, 'ring', 'check', data_path('not_transitive.ring'))[0] == types.EXIT_INPUT_ERROR
    assert run(tmp_path, 'ring', 'check', data_path('missing.ring'))[0] == types.EXIT_INPUT_ERROR
    assert run(tmp_path, 'module', 'report', data_path('r3.ring'),
               '--script', data_path('bad_vector.script'))[0] == types.EXIT_INPUT_ERROR
    assert run(tmp_path, '--caps', '0,1,1', 'ring', 'check', data_path('r3.ring'))[0] == types.EXIT_INPUT_ERROR


def test_exit_cap_exceeded(tmp_path):
    code, out = run(tmp_path, '--caps', '1,1,1', 'module', 'report', data_path('r3.ring'), 'projective right 1')
    assert code == types.EXIT_CAP_EXCEEDED
    with open(out) as f:
        report = json.load(f)
    assert report['cap_exceeded']
    assert report['profiles'][0]['flags'][types.AUTOMORPHISM_INVARIANT] is None
    code, _ = run(tmp_path, '--caps', '4194304,1048576,5', 'census', data_path('r3.ring'))
    assert code == types.EXIT_CAP_EXCEEDED


def test_exit_verdict_failed(tmp_path, monkeypatch):
    failing = {'theorem': 'x', 'universe': 'u', 'instances_checked': 1, 'status': types.FAILS, 'holds': False,
               'witness': {'m': 1}, 'details': {}}
    monkeypatch.setattr(modlab_cli, 'paper_report',
                        lambda selection, caps: Report(types.PAPER, verdicts=[failing]))
    code, out = run(tmp_path, 'paper', 'example1')
    assert code == types.EXIT_VERDICT_FAILED
    with open(out) as f:
        assert json.load(f)['verdicts'][0]['status'] == types.FAILS
