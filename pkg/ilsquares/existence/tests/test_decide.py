from ..necessary import decide
from ...core import VerdictStatus, PreconditionError, verify_ils
from ...solver import brute_force_ils
import pytest


def _part_lists(n):
    """Nonincreasing lists of positive parts with sum at most n"""
    def extend(prefix, room, largest):
        yield prefix
        for h in range(min(room, largest), 0, -1):
            yield from extend(prefix + (h,), room - h, h)
    yield from extend((), n, n)


def _agrees_with_oracle(n):
    for parts in _part_lists(n):
        verdict = decide(parts, n, oracle_bound=0)
        if len(parts) <= 3 or len(set(parts)) <= 1:
            assert verdict.status is not VerdictStatus.UNKNOWN, (parts, n)
        if verdict.status is VerdictStatus.UNKNOWN:
            continue
        truth = brute_force_ils(parts, n)
        assert verdict.status is truth.status, (parts, n, verdict.reason)
        if verdict:
            assert verify_ils(verdict.witness, parts)


class TestDecide(object):

    def test_two_subsquares(self):
        verdict = decide((2, 2), 5)
        assert verdict.status is VerdictStatus.NOT_EXISTS
        assert verdict.to_json()['certificate'] == {'A': [1], 'B': [2], 'C': [], 'D': [],
                                                    'lhs': 0, 'rhs': 2}

    @pytest.mark.parametrize(('parts', 'n', 'reason'),
                             [((), 4, "no subsquares"),
                              ((2,), 4, "single subsquare"),
                              ((2, 2), 6, "two subsquares"),
                              ((1, 2, 3), 9, "three subsquares"),
                              ((2, 1, 1), 5, "three subsquares"),
                              ((2, 2, 2), 7, "three subsquares"),
                              ((2, 2, 2, 2), 9, "equal orders"),
                              ((3, 2, 1, 1), 10, "general construction"),
                              ((2, 1, 1, 1), 5, "realization criterion"),
                              ])
    def test_exists(self, parts, n, reason):
        verdict = decide(parts, n)
        assert verdict.status is VerdictStatus.EXISTS
        assert verdict.reason == reason
        assert verdict.parts == tuple(sorted(parts, reverse=True))
        assert verify_ils(verdict.witness, verdict.parts)

    @pytest.mark.parametrize(('parts', 'n'),
                             [((3,), 5), ((2, 1), 4), ((3, 2), 5), ((3, 1, 1), 6),
                              ((2, 2, 2, 2), 7), ((2, 2, 1, 1), 6), ((4, 3), 6)])
    def test_not_exists(self, parts, n):
        verdict = decide(parts, n)
        assert verdict.status is VerdictStatus.NOT_EXISTS
        assert verdict.witness is None

    def test_oversized_reason(self):
        verdict = decide((4, 3), 6)
        assert verdict.reason == "subsquares exceed the order"
        assert verdict.certificate is None

    def test_trace(self):
        trace = []
        decide((3, 2, 1), 9, trace=trace)
        assert trace[0].construction == 'ils_k3'

    def test_oracle(self):
        verdict = decide((2, 1, 1, 1), 6)
        assert verdict.status is not VerdictStatus.UNKNOWN
        if verdict.reason != "necessary condition":
            unknown = decide((2, 1, 1, 1), 6, oracle_bound=5)
            assert unknown.status is VerdictStatus.UNKNOWN
            assert unknown.reason == "no criterion applies"

    @pytest.mark.parametrize(('parts', 'n'), [((2, 0), 5), ((1,), 0)])
    def test_bad_arguments(self, parts, n):
        with pytest.raises(PreconditionError):
            decide(parts, n)

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6])
    def test_oracle_agreement(self, n):
        _agrees_with_oracle(n)

    @pytest.mark.parametrize('n', [4, 5, 6])
    def test_decided_with_oracle(self, n):
        for parts in _part_lists(n):
            verdict = decide(parts, n)
            assert verdict.status is not VerdictStatus.UNKNOWN, (parts, n)
            assert verdict.status is brute_force_ils(parts, n).status, (parts, n, verdict.reason)

    @pytest.mark.parametrize(('parts', 'n'), [((3, 1, 1, 1), 7), ((2, 2, 1, 1), 7)])
    def test_oracle_fallback(self, parts, n):
        verdict = decide(parts, n)
        assert verdict.status is not VerdictStatus.UNKNOWN
        if verdict:
            assert verify_ils(verdict.witness, parts)

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [7])
    def test_oracle_agreement_slow(self, n):
        _agrees_with_oracle(n)
