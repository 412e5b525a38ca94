from ..oracle import brute_force_ils
from ...core import VerdictStatus, PreconditionError, verify_ils
import pytest


class TestBruteForce(object):

    @pytest.mark.parametrize(('parts', 'n'),
                             [((1,), 1),
                              ((), 4),
                              ((2, 1), 5),
                              ((2, 2, 2), 6),
                              ((1, 1, 1, 1), 4),
                              ((2,), 4),
                              ((2, 1), 6),
                              ((2, 2), 7),
                              ((3,), 6),
                              ])
    def test_exists(self, parts, n):
        verdict = brute_force_ils(parts, n)
        assert verdict.status is VerdictStatus.EXISTS
        assert verify_ils(verdict.witness, parts)
        assert verdict.witness.order == n

    @pytest.mark.parametrize(('parts', 'n'),
                             [((2, 2), 5),
                              ((2, 1), 4),
                              ((2,), 3),
                              ((1, 1), 2),
                              ((2, 1, 1), 4),
                              ((3,), 5),
                              ((4,), 6),
                              ((3, 1), 6),
                              ])
    def test_not_exists(self, parts, n):
        verdict = brute_force_ils(parts, n)
        assert verdict.status is VerdictStatus.NOT_EXISTS
        assert verdict.witness is None

    def test_budget(self):
        verdict = brute_force_ils((), 6, budget=3)
        assert verdict.status is VerdictStatus.UNKNOWN
        assert verdict.nodes == 4

    def test_oversized(self):
        with pytest.raises(PreconditionError):
            brute_force_ils((3, 3), 5)

    def test_masks_after_backtracking(self):
        # order 5 with a subsquare of order 3 is only refuted after undoing placements
        verdict = brute_force_ils((3,), 5)
        assert verdict.status is VerdictStatus.NOT_EXISTS
        assert verdict.nodes > 1
