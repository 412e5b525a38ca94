from ..necessary import NecessaryViolation, necessary_sides, check_necessary
from ..criteria import single_subsquare_exists, two_subsquares_exist, three_subsquares_exist
from ...core import PreconditionError
import pytest


class TestNecessarySides(object):

    def test_two_subsquares(self):
        assert necessary_sides((2, 2), 5, A=(1,), B=(2,)) == (0, 2)

    def test_empty_sets(self):
        assert necessary_sides((3, 2), 8) == (0, 0)

    def test_slack_square_skipped(self):
        # the slack position enters the sums but not the squares
        assert necessary_sides((2,), 5, A=(2,)) == (9, -6)

    def test_overlap(self):
        with pytest.raises(PreconditionError):
            necessary_sides((2, 2), 5, A=(1,), B=(1,))

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            necessary_sides((2, 2), 5, C=(4,))

    def test_oversized(self):
        with pytest.raises(PreconditionError):
            necessary_sides((3, 3), 5)


class TestCheckNecessary(object):

    def test_two_subsquares(self):
        violation = check_necessary((2, 2), 5)
        assert violation == NecessaryViolation((1,), (2,), (), (), 0, 2)
        assert violation.to_json() == {'A': [1], 'B': [2], 'C': [], 'D': [],
                                       'lhs': 0, 'rhs': 2}

    @pytest.mark.parametrize(('parts', 'n'), [((1,), 2), ((3, 3, 3), 9), ((), 3),
                                              ((2, 1), 5), ((1,) * 8, 9)])
    def test_holds(self, parts, n):
        assert check_necessary(parts, n) is None

    @pytest.mark.parametrize(('parts', 'n'), [((2, 2), 5),
                                              ((3,), 5),
                                              ((7, 1, 1, 1, 1, 1, 1, 1), 14)])
    def test_certificate_replays(self, parts, n):
        violation = check_necessary(parts, n)
        assert violation is not None
        assert violation.evaluate(parts, n) == (violation.lhs, violation.rhs)
        assert violation.lhs < violation.rhs

    def test_first_position(self):
        # only none, A or C are tried for the first position
        violation = check_necessary((3,), 5)
        assert 1 not in violation.B + violation.D

    def test_max_parts(self):
        with pytest.raises(PreconditionError):
            check_necessary((1,) * 12, 20)
        with pytest.raises(PreconditionError):
            check_necessary((1, 1, 1), 6, max_parts=3)

    def test_configured_limit(self, monkeypatch):
        from .. import necessary
        monkeypatch.setattr(necessary, 'config_value', lambda section, key, default: 2)
        with pytest.raises(PreconditionError):
            check_necessary((1, 1), 3)

    def test_sound_on_known_squares(self):
        for n in range(1, 11):
            for h1 in range(1, n + 1):
                assert (check_necessary((h1,), n) is None) or not single_subsquare_exists(h1, n)
                for h2 in range(1, min(h1, n - h1) + 1):
                    if two_subsquares_exist(h1, h2, n):
                        assert check_necessary((h1, h2), n) is None
                    for h3 in range(1, min(h2, n - h1 - h2) + 1):
                        if three_subsquares_exist(h1, h2, h3, n):
                            assert check_necessary((h1, h2, h3), n) is None
