from ..freq_array import (FrequencyArray, OutlineArray, validate_outline_array,
                          sum_outline_arrays, amalgamate, amalgamate_frequency,
                          product_frequency, split_diagonal, outline_square_as_array,
                          array_as_outline_square)
from ..outline import OutlineRectangle, reduce_modulo, validate_outline
from ...core import DimensionError, PreconditionError, verify_ils
from ...core.tests.test_utils import order8_square, order8_outline_json
from numpy.testing import assert_equal
import numpy as np
import pytest

PARTS8 = (3, 2, 1, 1, 1)


def _single(k, cells):
    counts = np.zeros((k, k, k), dtype=int)
    for (i, j, ell), c in cells.items():
        counts[i, j, ell] = c
    return OutlineArray(counts)


class TestFrequencyArray(object):

    def test_product(self):
        assert_equal(product_frequency((2, 1)).F, [[4, 2], [2, 1]])

    def test_add(self):
        total = product_frequency((1, 1)) + FrequencyArray(np.eye(2, dtype=int))
        assert_equal(total.F, [[2, 1], [1, 2]])

    def test_add_orders(self):
        with pytest.raises(PreconditionError):
            FrequencyArray.zeros(2) + FrequencyArray.zeros(3)

    def test_not_square(self):
        with pytest.raises(DimensionError):
            FrequencyArray(np.zeros((2, 3)))

    def test_negative(self):
        with pytest.raises(PreconditionError):
            FrequencyArray([[-1]])


class TestValidateOutlineArray(object):

    def setup_method(self):
        golden = OutlineRectangle.from_json(order8_outline_json())
        self.array, self.freq = outline_square_as_array(golden)

    def test_outline_square(self):
        assert validate_outline_array(self.array, self.freq)

    def test_latin_square(self):
        # a latin square of order 2 is an outline array of the all-ones frequency
        array = _single(2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1})
        assert validate_outline_array(array, FrequencyArray(np.ones((2, 2), dtype=int)))

    def test_cell_failure(self):
        broken = self.array.copy()
        broken.counts[0, 0, 0] -= 1
        report = validate_outline_array(broken, self.freq)
        assert report.location == (0, 0)

    def test_row_failure(self):
        broken = self.array.copy()
        broken.counts[0, 1, 2] -= 1
        broken.counts[0, 1, 3] += 1
        report = validate_outline_array(broken, self.freq)
        assert report.location == (0, 2)

    def test_order_mismatch(self):
        with pytest.raises(PreconditionError):
            validate_outline_array(self.array, FrequencyArray.zeros(3))


class TestCombinations(object):

    def setup_method(self):
        golden = OutlineRectangle.from_json(order8_outline_json())
        self.array, self.freq = outline_square_as_array(golden)

    def test_sum(self):
        doubled = sum_outline_arrays(self.array, self.array)
        assert validate_outline_array(doubled, self.freq + self.freq)
        assert self.array + self.array == doubled

    def test_sum_three(self):
        tripled = sum_outline_arrays(self.array, self.array, self.array)
        assert tripled.counts[0, 0, 0] == 27

    def test_sum_orders(self):
        with pytest.raises(PreconditionError):
            sum_outline_arrays(self.array, OutlineArray.zeros(2))

    def test_amalgamate(self):
        classes = [[0], [1], [2, 3, 4]]
        merged = amalgamate(self.array, classes)
        F = amalgamate_frequency(self.freq, classes)
        assert validate_outline_array(merged, F)
        assert_equal(F.F, [[9, 6, 9], [6, 4, 6], [9, 6, 9]])
        # same as reducing the square by the coarser partition
        assert_equal(merged.counts, reduce_modulo(order8_square(), (3, 2, 3)).counts)

    def test_amalgamate_empty_class(self):
        merged = amalgamate(self.array, [[0, 1, 2, 3, 4], []])
        assert merged.order == 2
        assert merged.counts[0, 0, 0] == 64
        assert merged.counts[1].sum() == 0

    @pytest.mark.parametrize('classes', [[[0, 1], [1, 2, 3, 4]],
                                         [[0, 1, 2, 3]],
                                         [[0, 1, 2, 3, 5], [4]]])
    def test_amalgamate_bad_classes(self, classes):
        with pytest.raises(PreconditionError):
            amalgamate(self.array, classes)

    def test_split_diagonal(self):
        diag, diag_f, rest, rest_f = split_diagonal(self.array, PARTS8, [0, 1])
        assert validate_outline_array(diag, diag_f)
        assert validate_outline_array(rest, rest_f)
        assert diag + rest == self.array
        assert rest.counts[0, 0].sum() == 0

    def test_split_not_respected(self):
        with pytest.raises(PreconditionError):
            split_diagonal(self.array, PARTS8, [3])

    def test_back_to_square(self):
        outline = array_as_outline_square(self.array, PARTS8)
        assert validate_outline(outline, respect=(PARTS8, [0, 1, 2]))
        with pytest.raises(DimensionError):
            array_as_outline_square(self.array, (2, 2, 2, 1, 1))

    def test_json(self):
        data = self.array.to_json(self.freq)
        array, freq = OutlineArray.from_json(data)
        assert array == self.array
        assert freq == self.freq
        assert OutlineArray.from_json(self.array.to_json())[1] is None

    def test_lifted_array(self):
        from ..outline import ils_from_outline
        square, _ = ils_from_outline(array_as_outline_square(self.array, PARTS8), 3)
        assert verify_ils(square, (3, 2, 1))
