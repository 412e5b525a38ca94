from ..verdict import ExistenceVerdict, VerdictStatus
from ..latin import cyclic_square


class TestExistenceVerdict(object):

    def test_exists(self):
        verdict = ExistenceVerdict.exists((), 3, cyclic_square(3), "no subsquares")
        assert verdict
        data = verdict.to_json()
        assert data['status'] == 'exists'
        assert data['witness']['grid'][0] == [1, 2, 3]
        assert data['certificate'] is None

    def test_not_exists(self):
        verdict = ExistenceVerdict.not_exists((2, 2), 5, "two subsquares",
                                              certificate={'lhs': 0, 'rhs': 2})
        assert not verdict
        assert verdict.status is VerdictStatus.NOT_EXISTS
        assert verdict.to_json()['certificate'] == {'lhs': 0, 'rhs': 2}

    def test_unknown(self):
        verdict = ExistenceVerdict.unknown((3, 2, 2, 1), 9, "budget", nodes=10)
        assert not verdict
        assert verdict.to_json()['nodes'] == 10
        assert verdict.to_json()['witness'] is None
