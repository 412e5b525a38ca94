from ..latin import (Partition, LatinSquare, PartialLatinSquare, EMPTY,
                     validate_latin, verify_ils, subsquare_specs, cyclic_square,
                     inflate, idempotent_square, permute_groups)
from ..exceptions import DimensionError, PreconditionError, InfeasibleError
from .test_utils import order8_square, random_latin_square
from numpy.testing import assert_equal
import numpy as np
import pytest


class TestPartition(object):

    def test_offsets(self):
        p = Partition((3, 2, 1, 1, 1))
        assert p.total == 8
        assert_equal(p.offsets, [0, 3, 5, 6, 7, 8])
        assert p.offset(2) == 5
        assert_equal(p.group_of(), [0, 0, 0, 1, 1, 2, 3, 4])

    def test_with_slack(self):
        assert Partition((3, 2)).with_slack(9).parts == (3, 2, 4)
        assert Partition((3, 2)).with_slack(5).parts == (3, 2)
        with pytest.raises(PreconditionError):
            Partition((3, 2)).with_slack(4)

    def test_order_kept(self):
        p = Partition((1, 3))
        assert p.parts == (1, 3)
        assert not p.is_nonincreasing()
        with pytest.raises(PreconditionError):
            Partition.nonincreasing((1, 3))

    def test_positive(self):
        with pytest.raises(PreconditionError):
            Partition((2, 0))


class TestValidateLatin(object):

    def test_fixture_passes(self):
        assert validate_latin(order8_square())

    def test_row_repeat(self):
        report = validate_latin([[1, 2, 3], [2, 3, 1], [3, 1, 1]])
        assert not report
        assert report.location == (2, 2, 1)
        assert "row 2" in report.reason

    def test_column_repeat(self):
        report = validate_latin([[1, 2], [1, 2]])
        assert not report
        assert report.location == (1, 0, 1)

    def test_single_cell(self):
        assert validate_latin([[1]])

    def test_empty_cells(self):
        partial = PartialLatinSquare(np.array([[1, EMPTY], [EMPTY, 1]]))
        assert validate_latin(partial)
        report = validate_latin(partial.grid)
        assert not report
        assert "empty" in report.reason

    def test_declared_order(self):
        with pytest.raises(DimensionError):
            validate_latin(cyclic_square(3), order=4)

    def test_not_square(self):
        with pytest.raises(DimensionError):
            LatinSquare(np.ones((2, 3), dtype=int))


class TestVerifyIls(object):

    def test_fixture(self):
        assert verify_ils(order8_square(), (3, 2, 1))

    def test_wrong_parts(self):
        report = verify_ils(order8_square(), (2, 3, 1))
        assert not report
        assert report.location == (0,)

    def test_no_parts(self):
        assert verify_ils(cyclic_square(5), ())

    def test_parts_too_large(self):
        with pytest.raises(PreconditionError):
            verify_ils(cyclic_square(4), (3, 2))

    def test_specs(self):
        specs = subsquare_specs((3, 2, 1))
        assert [(s.row_offset, s.order) for s in specs] == [(0, 3), (3, 2), (5, 1)]
        assert specs[1].symbol_set == frozenset({4, 5})
        assert all(s.holds_in(order8_square().grid) for s in specs)


class TestBuilders(object):

    @pytest.mark.parametrize('n', [1, 2, 5, 8])
    def test_cyclic(self, n):
        square = cyclic_square(n)
        assert validate_latin(square)
        assert_equal(square[0], np.arange(1, n + 1))

    @pytest.mark.parametrize('k', [1, 3, 4, 5, 6, 7, 10])
    def test_idempotent(self, k):
        square = idempotent_square(k)
        assert validate_latin(square)
        assert_equal(np.diag(square.grid), np.arange(1, k + 1))

    def test_idempotent_two(self):
        with pytest.raises(InfeasibleError):
            idempotent_square(2)

    @pytest.mark.parametrize(('k', 'h'), [(3, 2), (4, 3), (5, 1)])
    def test_inflate_idempotent(self, k, h):
        square = inflate(idempotent_square(k), h)
        assert square.order == k * h
        assert verify_ils(square, (h,) * k)

    def test_inflate_block_fill(self):
        square = inflate([[1, 2], [2, 1]], 2)
        assert_equal(square.grid, [[1, 2, 3, 4],
                                   [2, 1, 4, 3],
                                   [3, 4, 1, 2],
                                   [4, 3, 2, 1]])


class TestPermuteGroups(object):

    def test_slack_to_the_end(self):
        base = inflate(idempotent_square(3), 2)
        moved = permute_groups(base, (2, 2, 2), [2, 0, 1])
        assert verify_ils(moved, (2, 2, 2))

    def test_roundtrip(self):
        rng = np.random.default_rng(7)
        square = random_latin_square(6, rng)
        forward = permute_groups(square, (1, 2, 3), [2, 0, 1])
        back = permute_groups(forward, (3, 1, 2), [1, 2, 0])
        assert back == square

    def test_bad_order(self):
        with pytest.raises(PreconditionError):
            permute_groups(cyclic_square(3), (1, 2), [0, 0])


class TestSerialization(object):

    def test_json(self):
        square = order8_square()
        data = square.to_json(subsquare_specs((3, 2, 1)))
        assert data['order'] == 8
        assert data['subsquares'][0] == {'row_offset': 0, 'col_offset': 0, 'order': 3}
        assert LatinSquare.from_json(data) == square

    def test_json_order_mismatch(self):
        with pytest.raises(DimensionError):
            LatinSquare.from_json({'order': 3, 'grid': [[1, 2], [2, 1]]})

    def test_json_missing_field(self):
        with pytest.raises(ValueError, match="grid"):
            LatinSquare.from_json({'order': 2})

    def test_text(self):
        square = cyclic_square(4)
        assert LatinSquare.from_text(square.to_text()) == square

    def test_text_garbage(self):
        with pytest.raises(DimensionError):
            LatinSquare.from_text("1 2\n2 x")
