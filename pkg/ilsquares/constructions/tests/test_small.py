from ..small import (construct_single, k2_outline, construct_ils_k2, k3_outline,
                     construct_ils_k3, construct_ils_uniform)
from ...core import InfeasibleError, PreconditionError, validate_latin, verify_ils
from ...existence.criteria import three_subsquares_violation
from ...existence.necessary import check_necessary
from ...outline import (validate_outline, ils_from_outline, reduce_modulo, symmetrize,
                         validate_ros)
import pytest


def _three_subsquares_reference(h1, h2, h3, n):
    h4 = n - h1 - h2 - h3
    if h4 >= h1:
        return True
    if h4 >= h3:
        return h4 >= h1 - h3
    return (h1 * h4 >= h1 * (h2 + h3) - 2 * h2 * h3
            and h4 * h4 + h4 * (2 * h1 - h2 - h3) - h1 * h2 - h1 * h3 + 2 * h2 * h3 >= 0)


def _triples(nmax):
    for n in range(3, nmax + 1):
        for h1 in range(1, n + 1):
            for h2 in range(1, h1 + 1):
                for h3 in range(1, h2 + 1):
                    if h1 + h2 + h3 <= n:
                        yield h1, h2, h3, n


class TestSingle(object):

    def test_sweep(self):
        for n in range(1, 13):
            for h in range(1, n + 1):
                if n == h or n >= 2 * h:
                    square = construct_single(h, n)
                    assert square.order == n
                    assert verify_ils(square, (h,))
                else:
                    with pytest.raises(InfeasibleError):
                        construct_single(h, n)

    def test_bad_order(self):
        with pytest.raises(PreconditionError):
            construct_single(4, 3)


class TestTwoSubsquares(object):

    def test_outline(self):
        outline = k2_outline(3, 2, 8)
        assert validate_outline(outline, respect=(outline.P.parts, (0, 1)))

    def test_sweep(self):
        for n in range(2, 13):
            for h1 in range(1, n):
                for h2 in range(1, min(h1, n - h1) + 1):
                    if n - h1 - h2 >= h1:
                        square = construct_ils_k2(h1, h2, n)
                        assert verify_ils(square, (h1, h2))
                        assert check_necessary((h1, h2), n) is None
                    else:
                        with pytest.raises(InfeasibleError) as info:
                            construct_ils_k2(h1, h2, n)
                        assert info.value.condition == "h3 >= h1"

    def test_order6(self):
        outline = k2_outline(2, 2, 6)
        square, specs = ils_from_outline(outline, 2)
        assert verify_ils(square, (2, 2))
        assert [(s.row_offset, s.order) for s in specs] == [(0, 2), (2, 2)]

    def test_unsorted(self):
        with pytest.raises(PreconditionError):
            construct_ils_k2(1, 2, 6)


class TestThreeSubsquares(object):

    def test_reference(self):
        for h1, h2, h3, n in _triples(14):
            expected = _three_subsquares_reference(h1, h2, h3, n)
            assert (three_subsquares_violation(h1, h2, h3, n) is None) == expected

    @pytest.mark.slow
    def test_sweep(self):
        for h1, h2, h3, n in _triples(14):
            if _three_subsquares_reference(h1, h2, h3, n):
                square = construct_ils_k3(h1, h2, h3, n)
                assert verify_ils(square, (h1, h2, h3))
            else:
                with pytest.raises(InfeasibleError):
                    construct_ils_k3(h1, h2, h3, n)

    @pytest.mark.parametrize(('parts', 'n', 'case'),
                             [((2, 2, 1), 7, 1),
                              ((3, 2, 2), 9, 2),
                              ((3, 3, 3), 9, 3),
                              ((4, 3, 3), 12, 3),
                              ((3, 2, 1), 9, 1),
                              ])
    def test_cases(self, parts, n, case):
        trace = []
        square = construct_ils_k3(*parts, n, trace=trace)
        assert verify_ils(square, parts)
        assert trace[0].construction == 'ils_k3'
        assert trace[0].case == f"slack range {case}"
        assert trace[0].parameters.z is not None

    def test_infeasible(self):
        with pytest.raises(InfeasibleError) as info:
            construct_ils_k3(3, 1, 1, 6)
        assert info.value.condition == "h4 >= h1 - h3"

    def test_outline_without_slack(self):
        outline = k3_outline(3, 3, 3, 9, 0)
        assert outline.shape == (3, 3, 3)
        assert validate_outline(outline, respect=((3, 3, 3), (0, 1, 2)))

    def test_symmetrized_reduction(self):
        square = construct_ils_k3(2, 2, 2, 7)
        outline = reduce_modulo(square, (2, 2, 2, 1))
        ros = symmetrize(outline, 3)
        assert validate_ros(ros, respect=((2, 2, 2, 1), [0, 1, 2]))

    def test_not_fitting(self):
        with pytest.raises(PreconditionError):
            construct_ils_k3(3, 2, 2, 6)


class TestUniform(object):

    @pytest.mark.parametrize(('h', 'k', 'n', 'case'),
                             [(2, 3, 6, "inflation"),
                              (2, 4, 10, "inflation"),
                              (2, 3, 7, "realization search"),
                              (2, 4, 9, "realization search"),
                              (2, 3, 9, "general"),
                              (1, 5, 7, "inflation"),
                              ])
    def test_cases(self, h, k, n, case):
        trace = []
        square = construct_ils_uniform(h, k, n, trace=trace)
        assert verify_ils(square, (h,) * k)
        assert trace[0].case == case

    @pytest.mark.parametrize(('h', 'k', 'n'), [(2, 0, 3), (3, 1, 6), (2, 2, 6)])
    def test_few_subsquares(self, h, k, n):
        square = construct_ils_uniform(h, k, n)
        assert validate_latin(square)
        assert verify_ils(square, (h,) * k)

    @pytest.mark.parametrize(('h', 'k', 'n'), [(2, 1, 3), (2, 2, 5), (2, 4, 7)])
    def test_infeasible(self, h, k, n):
        with pytest.raises(InfeasibleError):
            construct_ils_uniform(h, k, n)

    def test_k2_order2(self):
        # two subsquares of order 1 never fit an order 2 square
        with pytest.raises(InfeasibleError):
            construct_ils_uniform(1, 2, 2)
