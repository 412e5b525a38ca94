from ..cli import main, EXIT_OK, EXIT_FAILED, EXIT_INFEASIBLE, EXIT_USAGE
from ..core import LatinSquare, verify_ils
from ..core.tests.test_utils import data_file, order8_outline_json
import json
import pytest


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConstruct(object):

    def test_refuted(self, capsys):
        code, out, err = _run(capsys, 'construct', '--parts', '2,2', '--order', '5')
        assert code == EXIT_INFEASIBLE
        data = json.loads(out)
        assert data['status'] == 'not_exists'
        assert data['certificate']['A'] == [1]
        assert data['certificate']['B'] == [2]
        assert "does not exist" in err

    def test_then_verify(self, capsys, tmp_path):
        out_file = tmp_path / "ils9.json"
        code, _, _ = _run(capsys, 'construct', '--parts', '3,2,1', '--order', '9',
                          '--out', str(out_file))
        assert code == EXIT_OK
        data = json.loads(out_file.read_text())
        assert [s['order'] for s in data['subsquares']] == [3, 2, 1]
        assert verify_ils(LatinSquare.from_json(data), (3, 2, 1))

        code, out, _ = _run(capsys, 'verify', '--in', str(out_file), '--parts', '3,2,1')
        assert code == EXIT_OK
        assert json.loads(out)['ok'] is True

    def test_trace(self, capsys):
        code, out, _ = _run(capsys, 'construct', '--parts', '2,2,1,1', '--order', '8',
                            '--trace')
        assert code == EXIT_OK
        trace = json.loads(out)['trace']
        assert trace[0]['construction'] == 'general'

    def test_grid(self, capsys):
        code, out, _ = _run(capsys, 'construct', '--parts', '2', '--order', '4',
                            '--format', 'grid')
        assert code == EXIT_OK
        rows = [line.split() for line in out.strip().splitlines()]
        assert len(rows) == 4 and all(len(row) == 4 for row in rows)


class TestVerify(object):

    def test_fixture(self, capsys):
        code, _, _ = _run(capsys, 'verify', '--in', data_file("order8.txt"),
                          '--parts', '3,2,1')
        assert code == EXIT_OK

    def test_wrong_parts(self, capsys):
        code, out, err = _run(capsys, 'verify', '--in', data_file("order8.txt"),
                              '--parts', '2,2,2')
        assert code == EXIT_FAILED
        assert json.loads(out)['ok'] is False
        assert "verification failed" in err


class TestOutlines(object):

    def test_reduce(self, capsys):
        code, out, _ = _run(capsys, 'reduce', '--in', data_file("order8.txt"),
                            '--p', '3,2,1,1,1')
        assert code == EXIT_OK
        assert json.loads(out) == order8_outline_json()

    def test_reduce_bad_partition(self, capsys):
        code, _, err = _run(capsys, 'reduce', '--in', data_file("order8.txt"),
                            '--p', '3,2,1')
        assert code == EXIT_USAGE
        assert "--p" in err

    def test_lift_roundtrip(self, capsys, tmp_path):
        square_file = tmp_path / "lifted.json"
        code, _, _ = _run(capsys, 'lift', '--in', data_file("outline_order8.json"),
                          '--out', str(square_file))
        assert code == EXIT_OK
        code, out, _ = _run(capsys, 'reduce', '--in', str(square_file), '--p', '3,2,1,1,1')
        assert code == EXIT_OK
        assert json.loads(out) == order8_outline_json()

    def test_lift_invalid(self, capsys, tmp_path):
        data = order8_outline_json()
        data['cells'][0]['count'] += 1
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        code, out, err = _run(capsys, 'lift', '--in', str(bad))
        assert code == EXIT_FAILED
        assert json.loads(out)['ok'] is False
        assert "invalid outline" in err


class TestExistence(object):

    def test_decide(self, capsys):
        code, out, _ = _run(capsys, 'decide', '--parts', '1,1,1', '--order', '5')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['status'] == 'exists'
        assert data['witness']['order'] == 5

    def test_search(self, capsys):
        code, out, _ = _run(capsys, 'search', '--parts', '2,2', '--order', '5')
        assert code == EXIT_INFEASIBLE
        assert json.loads(out)['witness'] is None

    @pytest.mark.parametrize(('parts', 'order', 'code', 'status'),
                             [('3', '5', EXIT_INFEASIBLE, 'not_exists'),
                              ('3,1', '6', EXIT_INFEASIBLE, 'not_exists'),
                              ('2,1', '6', EXIT_OK, 'exists')])
    def test_search_backtracking(self, capsys, parts, order, code, status):
        result, out, _ = _run(capsys, 'search', '--parts', parts, '--order', order)
        assert result == code
        assert json.loads(out)['status'] == status

    def test_decide_oracle(self, capsys):
        code, out, _ = _run(capsys, 'decide', '--parts', '2,2,1,1', '--order', '7')
        assert code in (EXIT_OK, EXIT_INFEASIBLE)
        assert json.loads(out)['status'] in ('exists', 'not_exists')

    def test_search_budget(self, capsys):
        code, out, _ = _run(capsys, 'search', '--parts', '1', '--order', '6',
                            '--budget', '3')
        assert code == EXIT_FAILED
        assert json.loads(out)['status'] == 'unknown'

    @pytest.mark.parametrize(('parts', 'order', 'code', 'holds'),
                             [('2,2', '5', EXIT_INFEASIBLE, False),
                              ('1', '2', EXIT_OK, True)])
    def test_check(self, capsys, parts, order, code, holds):
        result, out, _ = _run(capsys, 'check', '--parts', parts, '--order', order)
        assert result == code
        assert json.loads(out)['holds'] is holds


class TestUsage(object):

    @pytest.mark.parametrize('argv', [['construct', '--parts', '3,x', '--order', '9'],
                                      ['construct', '--parts', '3,2', '--order', '0'],
                                      ['decide', '--parts', '3,2'],
                                      ['frobnicate'],
                                      ])
    def test_arguments(self, capsys, argv):
        code, _, err = _run(capsys, *argv)
        assert code == EXIT_USAGE
        assert "error" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = _run(capsys, 'verify', '--in', str(tmp_path / "none.json"),
                            '--parts', '1')
        assert code == EXIT_USAGE
        assert "cannot read" in err

    def test_bad_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, _ = _run(capsys, 'lift', '--in', str(bad))
        assert code == EXIT_USAGE

    def test_garbage_grid(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2\nx y\n")
        code, _, _ = _run(capsys, 'verify', '--in', str(bad), '--parts', '1')
        assert code == EXIT_USAGE

    def test_oversized_parts(self, capsys):
        code, _, _ = _run(capsys, 'check', '--parts', '3,3', '--order', '5')
        assert code == EXIT_USAGE
