#
# Copyright (C) 2025 the ilsquares developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of version 2 of the GNU General
# Public License as published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor,
# Boston, MA  02110-1301, USA.
#

"""
Composition constructions: ILS(2h_1 + r; h_2 ... h_k) for h_1 = h_2.

Internally every square is kept slack first: group 0 is the slack of
order h_1, group 1 the subsquare h_2 = h_1, groups 2.. the subsquares
h_3 >= ... >= h_k, and groups 1..k-1 are the respected ones. Public
constructors return normal form squares (slack last).
"""

__all__ = ['FIVE_ROW_ARRAYS', 'five_row_frequency', 'MultisetPartition',
           'lemma_frequency', 'lemma_outline_arrays',
           'construct_case_A', 'construct_main', 'construct_general',
           ]

import heapq
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..core import (LatinSquare, PreconditionError, InfeasibleError, InvalidOutlineError,
                    cyclic_square, inflate, idempotent_square, permute_groups,
                    verify_ils, config_option)
from ..outline import (OutlineRectangle, OutlineArray, FrequencyArray,
                       validate_outline, validate_outline_array, amalgamate,
                       reduce_modulo, lift)
from ..solver import OutlineSpec, solve_outline_square
from .circulant import realization_circulant
from .trace import CaseParameters, ConstructionTrace

cologger = logging.getLogger('ilsquares.constructions')

# Outline arrays for five rows with |A| = 0..4 extra unit groups: cell
# entries are 1-based symbols, cells separated by '|'.
_FIVE_ROW_TEXT = {
    0: """4,5|3,5|1,2|1,2|3,4
          3,4||4,5|3,5|1,1
          1,1|4,5||2|2
          3,5|1,1|2||2
          2,2|3,4|1|1|""",
    1: """4,5|4,5|1,1|3,6|2,3|2
          3,3||4,6|1,5|1,4|5
          2,2|4,5||1|6|1
          5,6|1,1|2||2|3
          1,1|3,6|2|2||4
          4|3|5|2|1|""",
    2: """4,5|3,5|1,2|1,7|2,6|3|4
          3,3||1,5|1,6|4,7|4|5
          4,7|1,6||5|2|1|2
          2,2|1,7|6||1|5|3
          1,6|3,4|7|2||2|1
          1|5|4|2|3||
          5|4|2|3|1||""",
    3: """3,5|4,8|1,6|5,7|2,2|3|4|1
          3,4||1,8|3,6|1,7|4|5|5
          1,8|1,7||2|6|5|2|4
          2,6|1,5|7||8|1|3|2
          1,7|4,6|2|8||2|1|3
          2|5|4|1|3|||
          5|3|2|1|4|||
          4|3|5|2|1|||""",
    4: """2,4|3,6|4,9|1,8|2,7|5|3|1|5
          3,5||1,8|6,7|1,9|4|5|4|3
          2,7|5,8||9|6|1|1|2|4
          1,6|1,9|7||8|3|2|5|2
          8,9|1,7|6|2||2|4|3|1
          5|4|1|2|3||||
          4|3|2|5|1||||
          3|4|5|1|2||||
          1|5|2|3|4||||""",
}


def _parse_cells(text):
    rows = [line.strip().split('|') for line in text.strip().splitlines()]
    k = len(rows)
    counts = np.zeros((k, k, k), dtype=int)
    for i, row in enumerate(rows):
        if len(row) != k:
            raise ValueError(f"row {i} has {len(row)} cells, expected {k}")
        for j, cell in enumerate(row):
            for symbol in filter(None, cell.split(',')):
                counts[i, j, int(symbol) - 1] += 1
    return OutlineArray(counts)


def five_row_frequency(s: int) -> FrequencyArray:
    """
    Frequency array of the five-row block with s extra unit groups

    2 where one index is below 2 and the other below 5 (except (1, 1)),
    1 off the diagonal of {2, 3, 4}, 1 between the first five and the
    unit groups, 0 elsewhere.
    """
    k = 5 + s
    F = np.zeros((k, k), dtype=int)
    F[:5, :2] = 2
    F[:2, :5] = 2
    F[1, 1] = 0
    F[2:5, 2:5] = 1 - np.eye(3, dtype=int)
    F[:5, 5:] = 1
    F[5:, :5] = 1
    return FrequencyArray(F)


FIVE_ROW_ARRAYS = {s: _parse_cells(text) for s, text in _FIVE_ROW_TEXT.items()}
for _s, _array in FIVE_ROW_ARRAYS.items():
    _report = validate_outline_array(_array, five_row_frequency(_s))
    if not _report:
        raise InvalidOutlineError(f"five-row array with {_s} unit groups: {_report.reason}")


@dataclass
class MultisetPartition:
    """
    Multiset with weights[t] copies of tail group t, split into blocks

    Attributes
    ----------
    weights : tuple of int
    blocks : list of tuple
        blocks[l][t] copies of t in block l, each block of size at most capacity
    capacity : int
    """
    weights: tuple
    blocks: list
    capacity: int

    @classmethod
    def pack(cls, weights, nblocks, capacity):
        """
        Greedy packing: heaviest groups first, every copy to the emptiest block

        Raises
        ------
        InfeasibleError
            More copies than nblocks * capacity
        """
        weights = tuple(int(w) for w in weights)
        if sum(weights) > nblocks * capacity:
            raise InfeasibleError(f"{sum(weights)} copies do not fit {nblocks} blocks of "
                                  f"size {capacity}", condition="capacity")
        blocks = [[0] * len(weights) for _ in range(nblocks)]
        heap = [(0, idx) for idx in range(nblocks)]
        for t in sorted(range(len(weights)), key=lambda x: (-weights[x], x)):
            for _ in range(weights[t]):
                size, idx = heapq.heappop(heap)
                blocks[idx][t] += 1
                heapq.heappush(heap, (size + 1, idx))
        result = cls(weights, [tuple(block) for block in blocks], capacity)
        assert result.is_valid(), "packing broke the multiset"
        return result

    def is_valid(self) -> bool:
        totals = np.sum(self.blocks, axis=0) if self.blocks else np.zeros(len(self.weights))
        return (all(sum(block) <= self.capacity for block in self.blocks)
                and all(int(x) == w for x, w in zip(totals, self.weights)))


def lemma_frequency(m, b, c, tail, variant='plain', a=None) -> FrequencyArray:
    """
    Target frequency array of :func:`lemma_outline_arrays`.

    plain: b on the first m indices, off the diagonal plus (0, 0).
    five_row: a where one index is below 2 and the other below 5, except
    (1, 1), and b off the diagonal of {2, 3, 4}. Both give c h_t between
    the first m indices and tail group t.
    """
    tail = np.array(list(tail), dtype=int)
    k = m + len(tail)
    F = np.zeros((k, k), dtype=int)
    if variant == 'plain':
        F[:m, :m] = b * (1 - np.eye(m, dtype=int))
        F[0, 0] = b
    elif variant == 'five_row':
        F[:5, :2] = a
        F[:2, :5] = a
        F[1, 1] = 0
        F[2:5, 2:5] = b * (1 - np.eye(3, dtype=int))
    else:
        raise PreconditionError(f"unknown variant '{variant}'")
    F[:m, m:] = c * tail[None, :]
    F[m:, :m] = c * tail[:, None]
    return FrequencyArray(F)


@lru_cache(maxsize=None)
def _unit_block_square(m, s):
    """LS(1^m s) as a read-only grid, the order-s subsquare last"""
    if s <= 1:
        grid = idempotent_square(m + s).grid
    else:
        spec = OutlineSpec((1,) * m + (s,), frozenset(range(m + 1)))
        outline = solve_outline_square(spec)
        assert outline is not None, f"LS(1^{m} {s}) must exist"
        grid = lift(outline).grid
    assert verify_ils(grid, (1,) * m + ((s,) if s else ())), "unit block lost a subsquare"
    grid.setflags(write=False)
    return grid


def _plain_block(m, s):
    """Outline array of one plain block with s unit groups after the first m"""
    if m == 2 and s == 0:
        counts = np.zeros((2, 2, 2), dtype=int)
        counts[0, 0, 1] = counts[0, 1, 0] = counts[1, 0, 0] = 1
        return OutlineArray(counts)
    k = m + s
    counts = reduce_modulo(LatinSquare(_unit_block_square(m, s)), (1,) * k).counts.copy()
    for i in range(1, m):
        counts[i, i, :] = 0
    counts[m:, m:, :] = 0
    return OutlineArray(counts)


def lemma_outline_arrays(m: int, b: int, c: int, tail, variant: str = 'plain',
                         a: int = None) -> OutlineArray:
    """
    Outline array for the frequency array given by :func:`lemma_frequency`.

    The multiset holding c h_t copies of every tail group t is split into
    b blocks of at most m - 1 elements. Each block becomes a small outline
    array (a latin square with m unit subsquares and one subsquare for the
    block, with its subsquares removed except cell (0, 0), or a five-row
    array for the first a - b blocks of the five_row variant), whose unit
    groups are merged into their tail groups. The blocks are summed.

    Parameters
    ----------
    m : int
        At least 2; exactly 5 for five_row
    b, c : int
        Nonnegative
    tail : sequence of int
        Tail sizes h_{m+1}, ..., h_k; zeros are allowed
    variant : {'plain', 'five_row'}
    a : int, optional
        five_row only, b <= a <= 2b

    Returns
    -------
    OutlineArray
        Order m + len(tail)

    Raises
    ------
    InfeasibleError
        (m - 1) b < c sum(tail) for plain, or the five_row conditions fail
    """
    tail = tuple(int(h) for h in tail)
    if m < 2 or b < 0 or c < 0 or any(h < 0 for h in tail):
        raise PreconditionError(f"need m >= 2 and nonnegative b, c, tail; got m={m}, "
                                f"b={b}, c={c}, tail={tail}")
    total = c * sum(tail)
    if variant == 'plain':
        if (m - 1) * b < total:
            raise InfeasibleError(f"(m - 1) b = {(m - 1) * b} < c sum = {total}",
                                  condition="(m - 1) b >= c sum")
        fancy = 0
    elif variant == 'five_row':
        if m != 5 or a is None:
            raise PreconditionError("the five_row variant needs m = 5 and a value for a")
        if not b <= a <= 2 * b:
            raise InfeasibleError(f"need b <= a <= 2b, got a={a}, b={b}",
                                  condition="b <= a <= 2b")
        if 4 * b < total:
            raise InfeasibleError(f"4b = {4 * b} < c sum = {total}", condition="4b >= c sum")
        fancy = a - b
    else:
        raise PreconditionError(f"unknown variant '{variant}'")

    k = m + len(tail)
    frequency = lemma_frequency(m, b, c, tail, variant, a)
    result = np.zeros((k, k, k), dtype=int)
    if b == 0:
        return OutlineArray(result)

    packing = MultisetPartition.pack([c * h for h in tail], b, m - 1)
    kinds = Counter((idx < fancy, block) for idx, block in enumerate(packing.blocks))
    for (five_row, block), copies in sorted(kinds.items()):
        s = sum(block)
        unit = FIVE_ROW_ARRAYS[s] if five_row else _plain_block(m, s)
        starts = m + np.concatenate([[0], np.cumsum(block)]).astype(int)
        classes = [[i] for i in range(m)] + [list(range(starts[t], starts[t + 1]))
                                             for t in range(len(tail))]
        result += copies * amalgamate(unit, classes).counts

    array = OutlineArray(result)
    report = validate_outline_array(array, frequency)
    assert report, f"lemma outline array is invalid: {report.reason}"
    return array


def _embed(counts, k):
    """Pad a k' x k' x k' count array with empty trailing groups"""
    result = np.zeros((k, k, k), dtype=int)
    kk = counts.shape[0]
    result[:kk, :kk, :kk] = counts
    return result


def _reduced_square(sub, k, trace, logger):
    """Reduction of the slack-first ILS for sub, embedded in order k"""
    sub = tuple(sub)
    while sub and sub[-1] == 0:
        sub = sub[:-1]
    if not sub:
        return np.zeros((k, k, k), dtype=int)
    grid = _slack_first(sub, trace, logger)
    return _embed(reduce_modulo(grid, sub).counts, k)


def _finish(counts, parts, logger):
    """Fill the respected diagonal cells and lift"""
    k = len(parts)
    for i in range(1, k):
        others = np.delete(counts[i, i], i)
        assert not np.any(others), f"cell ({i}, {i}) holds foreign symbols"
        counts[i, i, i] = parts[i] ** 2
    outline = OutlineRectangle.square(parts, counts)
    report = validate_outline(outline, respect=(parts, range(1, k)))
    assert report, f"composed outline square is invalid: {report.reason}"
    return lift(outline, logger=logger).grid


def _lifted_realization(parts, trace, logger):
    """LS(parts) with r = sum(parts[1:]), circulant or searched for odd r"""
    r = sum(parts[1:])
    if r % 2 and config_option('constructions', 'odd_r', 'circulant') == 'solver':
        ConstructionTrace.record(trace, 'realization_search', parts, sum(parts), r=r)
        outline = solve_outline_square(OutlineSpec(parts, frozenset(range(len(parts)))),
                                       logger=logger)
        assert outline is not None, f"LS{parts} must exist"
        return lift(outline, logger=logger).grid
    return realization_circulant(parts, trace=trace, logger=logger).grid


def _case_a(parts, node, logger):
    h1 = parts[0]
    rest = parts[2:]
    h3 = rest[0]
    r = sum(rest)
    k = len(parts)

    if 2 * h1 <= r + 1 - 2 * h3:
        node.case = "large slack realization"
        node.parameters.r = r
        grid = _lifted_realization((2 * h1,) + rest, node.children, logger).copy()
        grid[:2 * h1, :2 * h1] = inflate(np.array([[2, 1], [1, 2]]), h1).grid
        return grid

    g = (r + 1 - 2 * h3) // 2 if r % 2 else (r - 2 * h3) // 2
    node.case = "reduced slack"
    node.parameters.r = r
    node.parameters.g = g
    logger.debug(f"reducing the slack of {parts} to g={g}")
    counts = _reduced_square((g, g) + rest, k, node.children, logger)
    assert np.all(np.delete(counts[0, 0], 1) == 0), "cell (0, 0) must only hold symbol 1"
    assert np.all(counts[0, 1, 1:] == 0) and np.all(counts[1, 0, 1:] == 0), \
        "cells (0, 1) and (1, 0) must only hold symbol 0"
    counts[0, 1] = 0
    counts[1, 0] = 0
    for i in range(k):
        counts[i, i] = 0
    counts += lemma_outline_arrays(2, h1 * h1, h1 - g, rest).counts
    return _finish(counts, parts, logger)


def _case_five(parts, node, logger):
    """h_3 = h_4 = h_5"""
    h1, h3 = parts[0], parts[2]
    k = len(parts)
    r = sum(parts[2:])
    m = r - 3 * h3
    g3 = m + 1
    c = h3 - g3
    h1p = min(h1, 3 * h3 + 2 * g3)
    g1 = h1p - c
    a = min(2 * (h3 * h3 - g3 * g3), h1p * h3 - g1 * g3)
    node.case = "three equal"
    node.parameters = CaseParameters(r=r, m=m, g3=g3, c=c, h1p=h1p, g1=g1, a=a)
    logger.debug(f"{parts}: m={m}, g3={g3}, c={c}, h1'={h1p}, g1={g1}, a={a}")

    counts = _reduced_square((g1, g1, g3, g3, g3) + parts[5:], k, node.children, logger)
    counts += lemma_outline_arrays(5, h3 * h3 - g3 * g3, c, parts[5:], 'five_row', a).counts
    counts += lemma_outline_arrays(2, h1p * h1p - g1 * g1 - a, h1p * h3 - g1 * g3 - a,
                                   (1, 1, 1) + (0,) * (k - 5)).counts
    counts += lemma_outline_arrays(2, h1 * h1 - h1p * h1p, h1 - h1p, parts[2:]).counts
    return _finish(counts, parts, logger)


def _case_four(parts, node, logger):
    """h_3 = h_4 > h_5"""
    h1, h3 = parts[0], parts[2]
    k = len(parts)
    h5 = parts[4] if k >= 5 else 0
    c = h3 - h5
    g1 = h1 - c
    node.case = "two equal"
    node.parameters = CaseParameters(r=sum(parts[2:]), c=c, g1=g1)
    logger.debug(f"{parts}: c={c}, g1={g1}")

    sub = ((g1, g1) + (h5,) * 3 + parts[5:])[:k]
    counts = _reduced_square(sub, k, node.children, logger)
    counts += lemma_outline_arrays(4, h3 * h3 - h5 * h5, c, parts[4:]).counts
    counts += lemma_outline_arrays(2, 2 * c * (h1 - h3), c * (h1 - h3),
                                   (1, 1) + (0,) * (k - 4)).counts
    return _finish(counts, parts, logger)


def _case_three(parts, node, logger):
    """h_3 > h_4"""
    h1, h3 = parts[0], parts[2]
    k = len(parts)
    m = sum(parts[3:])
    h4 = parts[3] if k >= 4 else 0
    g3 = max(h4, (m + 1) // 3)
    c = h3 - g3
    g1 = h1 - c
    node.case = "one largest"
    node.parameters = CaseParameters(r=sum(parts[2:]), m=m, g3=g3, c=c, g1=g1)
    logger.debug(f"{parts}: m={m}, g3={g3}, c={c}, g1={g1}")

    counts = _reduced_square((g1, g1, g3) + parts[3:], k, node.children, logger)
    counts += lemma_outline_arrays(3, h1 * h3 - g1 * g3, c, parts[3:]).counts
    counts += lemma_outline_arrays(2, c * (h1 - h3), 0, (0,) * (k - 2)).counts
    return _finish(counts, parts, logger)


def _slack_first(parts, trace, logger):
    """Grid of the slack-first ILS for parts = (h_1, h_1, h_3, ..., h_k)"""
    parts = tuple(int(h) for h in parts)
    k = len(parts)
    node = ConstructionTrace.record(trace, 'composition', parts[1:], sum(parts))
    if k == 2:
        node.case = "inflated order 2"
        return inflate(np.array([[2, 1], [1, 2]]), parts[0]).grid

    h3 = parts[2]
    r = sum(parts[2:])
    if 4 * h3 <= r + 1:
        grid = _case_a(parts, node, logger)
    elif k >= 5 and parts[2] == parts[4]:
        grid = _case_five(parts, node, logger)
    elif k >= 4 and parts[2] == parts[3]:
        grid = _case_four(parts, node, logger)
    else:
        grid = _case_three(parts, node, logger)
    logger.debug(f"slack-first square for {parts} done ({node.case})")
    return grid


def _check_main_parts(parts):
    parts = tuple(int(h) for h in parts)
    if len(parts) < 2 or parts[0] != parts[1]:
        raise PreconditionError(f"need h1 = h2 as the first two parts, got {parts}")
    if any(h < 1 for h in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise PreconditionError(f"parts must be positive and nonincreasing, got {parts}")
    return parts


def _to_normal_form(grid, parts):
    k = len(parts)
    square = permute_groups(grid, parts, list(range(1, k)) + [0])
    report = verify_ils(square, parts[1:])
    assert report, f"composition lost a subsquare: {report.reason}"
    return square


def construct_case_A(parts, trace=None, logger=None) -> LatinSquare:
    """
    ILS(2h_1 + r; h_2 ... h_k) when h_3 <= (r + 1)/4

    Parameters
    ----------
    parts : sequence of int
        (h_1, h_2, ..., h_k) with h_1 = h_2 >= h_3 >= ... >= h_k, h_1 being
        the slack
    trace : list, optional
    logger : logging.Logger, optional

    Returns
    -------
    LatinSquare
        Subsquares h_2 ... h_k in normal form, slack last
    """
    if logger is None:
        logger = cologger
    parts = _check_main_parts(parts)
    if len(parts) < 3 or 4 * parts[2] > sum(parts[2:]) + 1:
        raise PreconditionError(f"{parts} needs at least three parts and h3 <= (r + 1)/4")
    node = ConstructionTrace.record(trace, 'case_A', parts[1:], sum(parts))
    grid = _case_a(parts, node, logger)
    return _to_normal_form(grid, parts)


def construct_main(parts, trace=None, logger=None) -> LatinSquare:
    """
    ILS(2h_1 + r; h_2 ... h_k) for any h_1 = h_2 >= h_3 >= ... >= h_k >= 1.

    Small h_3 goes through the circulant realizations. Otherwise the
    largest parts are shrunk, the smaller square is built recursively and
    reduced to an outline square, and lemma outline arrays make up the
    difference before lifting.

    Parameters
    ----------
    parts : sequence of int
        (h_1, h_2, ..., h_k), h_1 being the slack and r = h_3 + ... + h_k
    trace : list, optional
        Receives the ConstructionTrace tree
    logger : logging.Logger, optional

    Returns
    -------
    LatinSquare
        Subsquares h_2 ... h_k in normal form, slack last
    """
    if logger is None:
        logger = cologger
    parts = _check_main_parts(parts)
    logger.info(f"composition for ILS({sum(parts)}; {' '.join(map(str, parts[1:]))})")
    grid = _slack_first(parts, trace, logger)
    return _to_normal_form(grid, parts)


def construct_general(parts, n: int, trace=None, logger=None) -> LatinSquare:
    """
    ILS(n; g_1 ... g_k) whenever n >= g_1 + sum(g).

    The slack h_1 = n - sum(g) is reduced to g_1 by adding h_1 - g_1
    subsquares of order 1, which are then forgotten.

    Parameters
    ----------
    parts : sequence of int
        g_1 >= ... >= g_k >= 1
    n : int

    Raises
    ------
    PreconditionError
        n < g_1 + sum(g), outside the reach of this construction
    """
    if logger is None:
        logger = cologger
    parts = tuple(int(h) for h in parts)
    if any(h < 1 for h in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise PreconditionError(f"parts must be positive and nonincreasing, got {parts}")
    if not parts:
        ConstructionTrace.record(trace, 'general', parts, n, case="no subsquares")
        return cyclic_square(n)
    slack = n - sum(parts)
    if slack < parts[0]:
        raise PreconditionError(f"order {n} is below {parts[0] + sum(parts)}, the reach "
                                f"of the general construction")

    padding = slack - parts[0]
    node = ConstructionTrace.record(trace, 'general', parts, n,
                                    case=f"padded with {padding} unit subsquares")
    internal = (parts[0],) + parts + (1,) * padding
    square = construct_main(internal, trace=node.children, logger=logger)
    report = verify_ils(square, parts)
    assert report, f"general construction failed: {report.reason}"
    return square
