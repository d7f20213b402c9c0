import json

import pytest
from click.testing import CliRunner

from polyoideals import CampaignReport
from polyoideals.cli import cli, main

from conftest import WITNESS_CELLS

L_TROMINO = '{{1,1},{2,1},{2,2}}'
SQUARE = '{{1,1},{1,2},{2,1},{2,2}}'
WITNESS = '{' + ','.join(f"{{{i},{j}}}" for (i, j) in WITNESS_CELLS) + '}'

@pytest.fixture
def runner():
    return CliRunner()

def test_hilbert(runner):
    result = runner.invoke(cli, ['hilbert', '--cells', SQUARE])
    assert result.exit_code == 0
    assert result.stdout.strip() == 'h(t) = 1 + 4t + t^2\ndim = 5'

def test_hilbert_json(runner):
    result = runner.invoke(cli, ['--json', 'hilbert', '-c', L_TROMINO])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload['h'] == [1, 3, 1]
    assert payload['krullDimension'] == 5

def test_rook_polynomials(runner):
    assert runner.invoke(cli, ['rook', '-c', L_TROMINO]).stdout.strip() == '1 + 3t + t^2'
    result = runner.invoke(cli, ['--json', 'switching-rook', '-c', SQUARE])
    assert json.loads(result.stdout)['coefficients'] == [1, 4, 1]

def test_ideal(runner):
    result = runner.invoke(cli, ['ideal', '-c', L_TROMINO])
    assert result.exit_code == 0
    assert len(result.stdout.split()) == 5
    assert 'x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)' in result.stdout.split()

def test_matrix(runner):
    result = runner.invoke(cli, ['--json', 'matrix', '-c', L_TROMINO])
    rows = json.loads(result.stdout)['matrix']
    assert len(rows) == 3
    assert rows[0] == ['0', 'x_(2,3)', 'x_(3,3)']

def test_describe(runner):
    frame = '{' + ','.join(f"{{{i},{j}}}" for i in range(1, 4) for j in range(1, 4) if (i, j) != (2, 2)) + '}'
    payload = json.loads(runner.invoke(cli, ['--json', 'describe', '-c', frame]).stdout)
    assert payload['isPolyomino']
    assert payload['numberOfHoles'] == 1
    assert payload['path']['kind'] == 'closedPath'
    assert payload['isHQComplement']
    assert payload['convexityDegree'] is None

def test_cells_from_a_file(runner, tmp_path):
    path = tmp_path / 'cells.json'
    path.write_text(json.dumps({'cells': [[1, 1], [1, 2], [2, 1], [2, 2]]}))
    result = runner.invoke(cli, ['rook', '--file', str(path)])
    assert result.exit_code == 0
    assert result.stdout.strip() == '1 + 4t + 2t^2'

def test_output_file(runner, tmp_path):
    path = tmp_path / 'stairs.json'
    result = runner.invoke(cli, ['--json', '--output', str(path), 'stairs', '-c', '{{1,1},{2,1},{2,2},{3,2}}'])
    assert result.exit_code == 0
    assert json.loads(path.read_text())['oddStairs'] == [[0, 3]]

def test_prime(runner):
    result = runner.invoke(cli, ['prime', '-c', L_TROMINO])
    assert result.exit_code == 0
    assert result.stdout.strip() == 'prime (certificate: simpleShape)'

def test_prime_out_of_budget(runner):
    result = runner.invoke(cli, ['--budget-zigzag', '1', 'prime', '-c', WITNESS])
    assert result.exit_code == 3
    assert result.stdout.startswith('indeterminate')

def test_zigzag_out_of_budget(runner):
    assert runner.invoke(cli, ['--budget-zigzag', '1', 'zigzag', '-c', L_TROMINO]).exit_code == 3

def test_no_zigzag_walk(runner):
    result = runner.invoke(cli, ['walks', '-c', SQUARE])
    assert result.exit_code == 0
    assert result.stdout.strip() == 'no zig-zag walk'

def test_fuss_catalan(runner):
    assert runner.invoke(cli, ['fuss-catalan', '--p', '2', '--n', '3']).stdout.strip() == '3'
    assert runner.invoke(cli, ['fuss-catalan', '--p', '0', '--n', '3']).exit_code == 4

def test_enumerate(runner):
    result = runner.invoke(cli, ['enumerate', '-n', '3'])
    assert result.exit_code == 0
    assert len(result.stdout.split()) == 6
    payload = json.loads(runner.invoke(cli, ['--json', 'enumerate', '-n', '4', '--mod-symmetry']).stdout)
    assert payload['count'] == 5
    assert runner.invoke(cli, ['enumerate', '-n', '11']).exit_code == 4

def test_campaign(runner, tmp_path):
    path = tmp_path / 'campaign.jsonl'
    result = runner.invoke(cli, ['--output', str(path), 'campaign', '--max-rank', '3'])
    assert result.exit_code == 0
    assert json.loads(result.stdout)['instances'] == 9
    report = CampaignReport.from_jsonl(path.read_text())
    assert report.Passed
    assert len(report.Records) == 9

def test_campaign_with_selected_checks(runner):
    result = runner.invoke(cli, ['--json', 'campaign', '--max-rank', '2', '--check', 'hEqualsSwitchingRook'])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert list(payload['summary']['checks']) == ['hEqualsSwitchingRook']
    assert payload['failures'] == []

@pytest.mark.parametrize('model', ['graph', 'mrr'])
def test_toric_ideal_of_the_empty_collection(runner, model):
    result = runner.invoke(cli, ['--json', 'toric', '--model', model, '-c', '{}'])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {'generators': []}

@pytest.mark.parametrize('arguments', [ ['rook', '-c', '{{1,1},{2'],
                                        ['rook'],
                                        ['rook', '-c', L_TROMINO, '-f', 'cells.txt'],
                                        ['--field', 'gf4', 'rook', '-c', L_TROMINO],
                                        ['--direction', 'UP', 'rook', '-c', L_TROMINO]])
def test_usage_errors(runner, arguments):
    assert runner.invoke(cli, arguments).exit_code == 2

def test_main_returns_exit_codes(capsys):
    assert main(['fuss-catalan', '--p', '3', '--n', '2']) == 0
    assert capsys.readouterr().out.strip() == '5'
    assert main(['rook', '-c', 'cells']) == 2
    assert main(['rook']) == 2
    assert main(['--budget-zigzag', '1', 'zigzag', '-c', L_TROMINO]) == 3
    assert main(['level', '-c', '{{1,1},{2,2}}']) == 4
