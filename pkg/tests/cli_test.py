"""Test the heron-quad command line interface."""
import json

import pytest
from click.testing import CliRunner

from heron_quad.cli import main
from heron_quad.cli.solve import solve
from heron_quad.cli.construct import construct
from heron_quad.cli.family import family
from heron_quad.cli.heron_table import heron_table
from heron_quad.cli.verify import verify
from heron_quad.cli.svg import svg
from heron_quad.cli.util import EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFICATION
from heron_quad.envelope import csv_to_rows
from heron_quad.family import TABLE_COLUMNS, heron_table as build_heron_table


def _envelope(result):
    return json.loads(result.stdout)


def test_solve():
    """Test the solve command on the Pythagorean example."""
    runner = CliRunner()
    result = runner.invoke(solve, ['3', '4', '5', '--k', '0..0'])
    assert result.exit_code == 0
    env = _envelope(result)
    assert env['command'] == 'solve'
    assert env['inputs'] == {'alpha': '3', 'beta': '4', 'gamma': '5',
                             'k_min': 0, 'k_max': 0}
    res = env['result']
    assert res['solution_set']['kind'] == 'Families'
    assert res['solution_set']['families'][0]['tan_half'] == '1/3'
    assert res['quadratic']['discriminant'] == '0'
    assert len(res['solutions']) == 1
    assert res['solutions'][0]['radians'] == pytest.approx(0.6435011088, abs=1e-10)
    assert res['max_residual'] < 1e-12


def test_solve_negative_and_special_sets():
    """Test negative coefficients, the all-reals set and the empty set."""
    runner = CliRunner()
    result = runner.invoke(solve, ['0', '1', '-1', '--k', '-1..0'])
    assert result.exit_code == 0
    res = _envelope(result)['result']
    assert res['solution_set']['families'][0]['provenance'] == 'OddPiFamily'
    assert [s['degrees'] for s in res['solutions']] == [-180.0, 180.0]

    result = runner.invoke(solve, ['0', '0', '0'])
    assert result.exit_code == 0
    assert _envelope(result)['result']['solutions'] is None

    result = runner.invoke(solve, ['1', '2', '5'])
    assert result.exit_code == 0
    assert _envelope(result)['result']['solutions'] == []


def test_solve_csv():
    """Test the CSV output of the solve command."""
    runner = CliRunner()
    result = runner.invoke(solve, ['1', '1', '1', '--k', '0..0', '--format', 'csv'])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 'radians,degrees,residual'
    assert len(lines) == 3
    assert float(lines[1].split(',')[0]) == 0
    assert float(lines[2].split(',')[1]) == 90


def test_solve_usage_errors():
    """Test that unparsable arguments exit with code 2."""
    runner = CliRunner()
    result = runner.invoke(solve, ['3', 'four', '5'])
    assert result.exit_code == EXIT_USAGE
    result = runner.invoke(solve, ['3', '4', '5', '--k', '2..1'])
    assert result.exit_code == EXIT_USAGE
    result = runner.invoke(solve, ['3', '4', '1/0'])
    assert result.exit_code == EXIT_USAGE


def test_construct():
    """Test the construct command and its errata."""
    runner = CliRunner()
    result = runner.invoke(construct, ['120', '35', '125'])
    assert result.exit_code == 0
    env = _envelope(result)
    res = env['result']
    assert res['diagonals']['GammaGamma2']['coef'] == '192'
    assert res['tangents']['Gamma']['value'] == '-4/3'
    assert res['area']['value'] == '12288'
    assert res['checks_passed']
    assert res['angle_identity']['max_spread'] < 1e-10
    assert len(env['errata']) == 4


def test_construct_errors():
    """Test that a non-Pythagorean triple exits with code 3."""
    runner = CliRunner()
    result = runner.invoke(construct, ['1', '1', '2'])
    assert result.exit_code == EXIT_DOMAIN
    assert 'must equal' in result.stderr
    result = runner.invoke(construct, ['-3', '4', '5'])
    assert result.exit_code == EXIT_DOMAIN


def test_construct_svg(tmp_path):
    """Test that construct writes the SVG drawing when asked."""
    svg_file = tmp_path / 'figure.svg'
    runner = CliRunner()
    result = runner.invoke(construct, ['3', '4', '5', '--svg', str(svg_file)])
    assert result.exit_code == 0
    assert svg_file.read_text(encoding='utf-8').startswith('<svg')


def test_construct_then_verify(tmp_path):
    """Test that the construct output verifies from a file."""
    runner = CliRunner()
    result = runner.invoke(construct, ['120', '35', '125'])
    assert result.exit_code == 0
    input_file = tmp_path / 'construct.json'
    input_file.write_text(result.stdout, encoding='utf-8')

    result = runner.invoke(verify, ['--input', str(input_file)])
    assert result.exit_code == 0
    env = _envelope(result)
    assert env['result']['passed']
    names = [chk['name'] for chk in env['result']['checks']]
    assert 'recorded sides' in names
    assert 'recorded area' in names
    assert len(env['errata']) == 4

    data = json.loads(input_file.read_text(encoding='utf-8'))
    data['result']['area']['value'] = '12888'
    input_file.write_text(json.dumps(data), encoding='utf-8')
    result = runner.invoke(verify, ['--input', str(input_file)])
    assert result.exit_code == EXIT_VERIFICATION
    assert not _envelope(result)['result']['passed']


def test_verify_inputs(tmp_path):
    """Test the triple, params and file inputs of the verify command."""
    runner = CliRunner()
    result = runner.invoke(verify, ['--triple', '3', '4', '5'])
    assert result.exit_code == 0
    assert _envelope(result)['result']['passed']

    result = runner.invoke(verify, ['--params', '1', '4', '3'])
    assert result.exit_code == 0
    res = _envelope(result)['result']
    assert not res['is_heron']
    assert len(res['notes']) == 1

    params_file = tmp_path / 'params.json'
    params_file.write_text(json.dumps({'params': [5, 4, 3]}))
    result = runner.invoke(verify, ['--input', str(params_file)])
    assert result.exit_code == 0
    assert _envelope(result)['result']['is_heron']


def test_verify_errors(tmp_path):
    """Test the exit codes of invalid verify inputs."""
    runner = CliRunner()
    assert runner.invoke(verify, []).exit_code == EXIT_USAGE
    result = runner.invoke(verify, ['--triple', '3', '4', '5', '--params', '5', '4', '3'])
    assert result.exit_code == EXIT_USAGE
    assert runner.invoke(verify, ['--params', '1', '3', '2']).exit_code == EXIT_DOMAIN
    assert runner.invoke(verify, ['--triple', '1', '1', '2']).exit_code == EXIT_DOMAIN

    bad_file = tmp_path / 'bad.json'
    bad_file.write_text('{"triple": [3, 4]}')
    assert runner.invoke(verify, ['--input', str(bad_file)]).exit_code == EXIT_USAGE
    bad_file.write_text('not json')
    assert runner.invoke(verify, ['--input', str(bad_file)]).exit_code == EXIT_USAGE


def test_family():
    """Test the family command in JSON and CSV."""
    runner = CliRunner()
    result = runner.invoke(family, ['--t-max', '3', '--delta-max', '13', '--heron-only'])
    assert result.exit_code == 0
    res = _envelope(result)['result']
    assert res['count'] == 3
    assert [m['params']['delta'] for m in res['members']] == [5, 10, 13]

    result = runner.invoke(family, ['--t-max', '3', '--delta-max', '2', '-f', 'csv'])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith('t1,t2,m,n,delta')
    assert lines[1] == '2,1,4,3,1,24,56/5,40,24,32,192/5,12288/25'
    assert len(lines) == 5

    assert runner.invoke(family, ['--t-max', '1']).exit_code == EXIT_DOMAIN


def test_heron_table():
    """Test the heron-table command in CSV and JSON."""
    runner = CliRunner()
    result = runner.invoke(heron_table, ['--t-max', '3'])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 't1,t2,m,n,delta,BGamma,GammaGamma1,Gamma1Gamma2,Gamma2B,' \
        'BGamma1,GammaGamma2,Area'
    assert lines[1] == '2,1,4,3,5,120,56,200,120,160,192,12288'
    assert lines[2] == '3,2,12,5,13,1560,2856,4056,1560,3744,2880,4976640'

    result = runner.invoke(heron_table, ['--t-max', '2', '--format', 'json'])
    assert result.exit_code == 0
    env = _envelope(result)
    assert len(env['result']['rows']) == 1
    assert env['result']['rows'][0]['Area'] == '12288'
    assert env['result']['verified']
    assert len(env['errata']) == 4


def test_svg():
    """Test the svg command on rational and irrational triples."""
    runner = CliRunner()
    result = runner.invoke(svg, ['3', '4', '5', '--width', '400', '--height', '300'])
    assert result.exit_code == 0
    assert result.stdout.startswith('<svg')
    assert 'width="400"' in result.stdout

    result = runner.invoke(svg, ['1', '1.4142135623730951', '1.7320508075688772'])
    assert result.exit_code == 0
    assert runner.invoke(svg, ['1', '1', '2']).exit_code == EXIT_DOMAIN


def test_main_group():
    """Test that every command is registered on the main group."""
    runner = CliRunner()
    result = runner.invoke(main, ['--help'])
    assert result.exit_code == 0
    for name in ('solve', 'construct', 'family', 'heron-table', 'verify', 'svg'):
        assert name in result.output
    result = runner.invoke(main, ['construct', '4', '3', '5'])
    assert result.exit_code == 0
    assert _envelope(result)['result']['area']['value'] == '128/5'


def test_solve_tiny_float_coefficients():
    """Test that tiny nonzero float coefficients give countable families."""
    runner = CliRunner()
    result = runner.invoke(solve, ['2e-13', '0', '1e-13', '--k', '0..0'])
    assert result.exit_code == 0
    res = _envelope(result)['result']
    assert res['solution_set']['kind'] == 'Families'
    assert res['solutions']


def test_repeated_runs_are_identical():
    """Test that identical arguments produce identical payloads."""
    runner = CliRunner()
    for command, args in ((construct, ['120', '35', '125']),
                          (heron_table, ['--t-max', '3', '--format', 'json']),
                          (solve, ['1', '1', '1/2', '--k', '-1..1'])):
        payloads = []
        for _ in range(2):
            result = runner.invoke(command, args)
            assert result.exit_code == 0
            env = _envelope(result)
            env.pop('version')
            payloads.append(env)
        assert payloads[0] == payloads[1]


def test_heron_table_delta_multiples():
    """Test that a second multiple of L adds the doubled row."""
    runner = CliRunner()
    result = runner.invoke(heron_table, ['--t-max', '2', '--delta-multiples', '2'])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 3
    assert lines[1] == '2,1,4,3,5,120,56,200,120,160,192,12288'
    assert lines[2] == '2,1,4,3,10,240,112,400,240,320,384,49152'


def test_heron_table_csv_round_trip():
    """Test that the heron-table CSV parses back to the member table rows."""
    runner = CliRunner()
    result = runner.invoke(heron_table, ['--t-max', '4', '--delta-multiples', '2'])
    assert result.exit_code == 0
    columns, rows = csv_to_rows(result.stdout)
    assert columns == list(TABLE_COLUMNS)
    assert rows == [mem.table_row() for mem in build_heron_table(4, 2)]
