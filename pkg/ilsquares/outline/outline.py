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

__all__ = ['OutlineRectangle', 'RationalOutlineSquare',
           'validate_outline', 'reduce_modulo', 'lift', 'ils_from_outline',
           'symmetrize', 'validate_ros', 'format_outline',
           ]

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow, maximum_bipartite_matching

from ..core import (Partition, LatinSquare, ValidityReport, DimensionError,
                    PreconditionError, InvalidOutlineError, validate_latin,
                    subsquare_specs, verify_ils)

oulogger = logging.getLogger('ilsquares.outline')


def _as_partition(parts):
    return parts if isinstance(parts, Partition) else Partition(tuple(parts))


@dataclass
class OutlineRectangle:
    """
    Array of multisets associated to the partitions (P, Q, R)

    counts[i, j, l] is the number of copies of symbol group l in cell (i, j).
    All indices are 0-based.
    """
    P: Partition
    Q: Partition
    R: Partition
    counts: np.ndarray

    def __post_init__(self):
        self.P = _as_partition(self.P)
        self.Q = _as_partition(self.Q)
        self.R = _as_partition(self.R)
        self.counts = np.asarray(self.counts, dtype=int)
        shape = (len(self.P), len(self.Q), len(self.R))
        if self.counts.shape != shape:
            raise DimensionError(f"counts have shape {self.counts.shape}, partitions "
                                 f"require {shape}")

    @classmethod
    def square(cls, P, counts):
        """Outline square, P = Q = R"""
        P = _as_partition(P)
        return cls(P, P, P, counts)

    @property
    def is_square(self) -> bool:
        return self.P == self.Q == self.R

    @property
    def shape(self):
        return self.counts.shape

    def cell(self, i, j) -> dict:
        """Multiset of cell (i, j) as {symbol group: copies}"""
        return {int(ell): int(c) for ell, c in enumerate(self.counts[i, j]) if c}

    def copy(self):
        return OutlineRectangle(self.P, self.Q, self.R, self.counts.copy())

    def __eq__(self, other):
        if not isinstance(other, OutlineRectangle):
            return NotImplemented
        return (self.P == other.P and self.Q == other.Q and self.R == other.R
                and bool(np.all(self.counts == other.counts)))

    def to_json(self) -> dict:
        """JSON-ready dictionary, cells listed with 1-based indices and zero counts omitted"""
        cells = [{'i': int(i) + 1, 'j': int(j) + 1, 'symbol': int(ell) + 1,
                  'count': int(self.counts[i, j, ell])}
                 for i, j, ell in zip(*np.nonzero(self.counts))]
        return {'P': list(self.P.parts), 'Q': list(self.Q.parts), 'R': list(self.R.parts),
                'cells': cells}

    @classmethod
    def from_json(cls, data: dict) -> 'OutlineRectangle':
        for key in ('P', 'cells'):
            if key not in data:
                raise ValueError(f"outline JSON lacks the '{key}' field")
        P = Partition(tuple(data['P']))
        Q = Partition(tuple(data.get('Q', data['P'])))
        R = Partition(tuple(data.get('R', data['P'])))
        counts = np.zeros((len(P), len(Q), len(R)), dtype=int)
        for entry in data['cells']:
            try:
                i, j, ell = entry['i'] - 1, entry['j'] - 1, entry['symbol'] - 1
                count = entry['count']
            except KeyError as err:
                raise ValueError(f"outline cell entry lacks the {err} field")
            if not (0 <= i < len(P) and 0 <= j < len(Q) and 0 <= ell < len(R)):
                raise DimensionError(f"cell entry {entry} lies outside the partitions")
            counts[i, j, ell] += count
        return cls(P, Q, R, counts)


def validate_outline(o: OutlineRectangle, respect=None) -> ValidityReport:
    """
    Check the three outline conditions, and optionally respect of (P, S).

    Failures are reported, never raised. Conditions are checked in order:
    nonnegativity, cell sizes, row symbol counts, column symbol counts
    and finally the respected diagonal cells.

    Parameters
    ----------
    o : OutlineRectangle
    respect : (parts, S), optional
        Requires counts[i, i, i] == parts[i]**2 for every i in S

    Returns
    -------
    ValidityReport
        location is (i, j) for cell sizes, (i, l) for rows, (j, l) for
        columns, (i,) for respect
    """
    counts = o.counts
    p = np.array(o.P.parts)
    q = np.array(o.Q.parts)
    r = np.array(o.R.parts)

    negative = np.argwhere(counts < 0)
    if len(negative):
        i, j, ell = (int(x) for x in negative[0])
        return ValidityReport.failed(f"negative count of symbol {ell} in cell ({i}, {j})",
                                     (i, j, ell))

    bad = np.argwhere(counts.sum(axis=2) != np.outer(p, q))
    if len(bad):
        i, j = (int(x) for x in bad[0])
        return ValidityReport.failed(f"cell ({i}, {j}) holds {counts[i, j].sum()} symbols, "
                                     f"expected {p[i] * q[j]}", (i, j))

    bad = np.argwhere(counts.sum(axis=1) != np.outer(p, r))
    if len(bad):
        i, ell = (int(x) for x in bad[0])
        return ValidityReport.failed(f"symbol {ell} occurs {counts[i, :, ell].sum()} times in "
                                     f"row {i}, expected {p[i] * r[ell]}", (i, ell))

    bad = np.argwhere(counts.sum(axis=0) != np.outer(q, r))
    if len(bad):
        j, ell = (int(x) for x in bad[0])
        return ValidityReport.failed(f"symbol {ell} occurs {counts[:, j, ell].sum()} times in "
                                     f"column {j}, expected {q[j] * r[ell]}", (j, ell))

    if respect is not None:
        parts, subset = respect
        for i in sorted(subset):
            if i >= min(counts.shape):
                return ValidityReport.failed(f"respected index {i} is outside the outline", (i,))
            if counts[i, i, i] != parts[i] ** 2:
                return ValidityReport.failed(f"cell ({i}, {i}) holds {counts[i, i, i]} copies of "
                                             f"symbol {i}, expected {parts[i] ** 2}", (i,))

    return ValidityReport.passed()


def reduce_modulo(square: Union[LatinSquare, np.ndarray], P, Q=None, R=None,
                  ) -> OutlineRectangle:
    """
    Amalgamate the rows, columns and symbols of a latin square.

    Parameters
    ----------
    square : LatinSquare or array_like
    P, Q, R : Partition or sequence of int
        Row, column and symbol groups. Q and R default to P

    Returns
    -------
    OutlineRectangle
    """
    grid = square.grid if isinstance(square, LatinSquare) else np.asarray(square, dtype=int)
    P = _as_partition(P)
    Q = P if Q is None else _as_partition(Q)
    R = P if R is None else _as_partition(R)
    n = grid.shape[0]
    for name, part in (('P', P), ('Q', Q), ('R', R)):
        if part.total != n:
            raise PreconditionError(f"partition {name}={part.parts} sums to {part.total}, "
                                    f"the square has order {n}")

    counts = np.zeros((len(P), len(Q), len(R)), dtype=int)
    np.add.at(counts,
              (P.group_of()[:, None], Q.group_of()[None, :], R.group_of()[grid - 1]),
              1)
    return OutlineRectangle(P, Q, R, counts)


def _extract_unit(cells, line_sizes, symbol_sizes):
    """
    Peel one unit line off an amalgamated line.

    cells[a, l] are the symbol counts of the amalgamated line. Returns an
    integer x <= cells with x.sum(1) == line_sizes and x.sum(0) == symbol_sizes,
    found as a maximum flow source -> a -> l -> sink.
    """
    n_first, n_sym = cells.shape
    source, sink = 0, n_first + n_sym + 1
    first_nodes = np.arange(1, n_first + 1)
    sym_nodes = np.arange(n_first + 1, n_first + n_sym + 1)

    a_idx, l_idx = np.nonzero(cells)
    tails = np.concatenate([np.full(n_first, source), first_nodes[a_idx], sym_nodes])
    heads = np.concatenate([first_nodes, sym_nodes[l_idx], np.full(n_sym, sink)])
    caps = np.concatenate([line_sizes, cells[a_idx, l_idx], symbol_sizes]).astype(np.int32)
    keep = caps > 0
    graph = csr_matrix((caps[keep], (tails[keep], heads[keep])),
                       shape=(sink + 1, sink + 1))
    result = maximum_flow(graph, source, sink)
    if result.flow_value != int(np.sum(line_sizes)):
        raise InvalidOutlineError(f"no unit line fits: flow {result.flow_value}, "
                                  f"needed {int(np.sum(line_sizes))}")

    flow = result.flow.toarray()
    unit = np.zeros_like(cells)
    unit[a_idx, l_idx] = flow[first_nodes[a_idx], sym_nodes[l_idx]]
    return unit


def lift(o: OutlineRectangle, logger=None) -> LatinSquare:
    """
    Latin square whose reduction modulo (P, Q, R) is o.

    Row groups are split into unit rows one at a time, then column groups,
    each extraction being an integral flow. Afterwards every cell holds a
    single symbol group, and the cells of group l form an r_l-regular
    bipartite graph that is decomposed into perfect matchings, matching d
    receiving the d-th symbol of the group.

    Parameters
    ----------
    o : OutlineRectangle
        Must pass validate_outline
    logger : logging.Logger, optional

    Returns
    -------
    LatinSquare

    Raises
    ------
    InvalidOutlineError
        o fails the outline conditions
    """
    if logger is None:
        logger = oulogger

    report = validate_outline(o)
    if not report:
        raise InvalidOutlineError(f"cannot lift: {report.reason}")

    n = o.P.total
    q = np.array(o.Q.parts)
    r = np.array(o.R.parts)
    logger.debug(f"lifting a {o.shape} outline to order {n}")

    rows = []
    for i, p_i in enumerate(o.P.parts):
        remaining = o.counts[i].copy()
        for left in range(p_i - 1, 0, -1):
            unit = _extract_unit(remaining, q, r)
            remaining -= unit
            assert np.all(remaining.sum(axis=1) == left * q) \
                and np.all(remaining.sum(axis=0) == left * r), "row split broke the outline"
            rows.append(unit)
        rows.append(remaining)
    by_row = np.array(rows)
    logger.debug(f"rows split into {n} unit rows")

    ones = np.ones(n, dtype=int)
    columns = []
    for j, q_j in enumerate(o.Q.parts):
        remaining = by_row[:, j, :].copy()
        for left in range(q_j - 1, 0, -1):
            unit = _extract_unit(remaining, ones, r)
            remaining -= unit
            assert np.all(remaining.sum(axis=1) == left) \
                and np.all(remaining.sum(axis=0) == left * r), "column split broke the outline"
            columns.append(unit)
        columns.append(remaining)
    cells = np.stack(columns, axis=1)
    assert np.all(cells.sum(axis=2) == 1), "unit cells must hold one symbol"
    groups = cells.argmax(axis=2)

    grid = np.zeros((n, n), dtype=int)
    offsets = o.R.offsets
    row_idx = np.arange(n)
    for ell, r_ell in enumerate(o.R.parts):
        mask = groups == ell
        for d in range(r_ell):
            matched = maximum_bipartite_matching(csr_matrix(mask.astype(np.int8)),
                                                 perm_type='column')
            if np.any(matched < 0):
                raise InvalidOutlineError(f"symbol group {ell} has no perfect matching "
                                          f"at round {d}")
            grid[row_idx, matched] = offsets[ell] + d + 1
            mask[row_idx, matched] = False

    square = LatinSquare(grid)
    assert validate_latin(square), "lift produced a non latin square"
    assert reduce_modulo(square, o.P, o.Q, o.R) == o, "lift does not reduce back"
    return square


def ils_from_outline(o: OutlineRectangle, k: int = None, logger=None):
    """
    ILS(n; h_1..h_k) from an outline square respecting (P, {0..k-1}).

    Parameters
    ----------
    o : OutlineRectangle
        Outline square, P = Q = R
    k : int, optional
        Number of leading groups that must become subsquares. Defaults
        to all groups but the last

    Returns
    -------
    (LatinSquare, list of SubsquareSpec)
    """
    if not o.is_square:
        raise PreconditionError("an outline square (P = Q = R) is required")
    parts = o.P.parts
    if k is None:
        k = len(parts) - 1
    if not 0 <= k <= len(parts):
        raise PreconditionError(f"cannot respect {k} groups of a {len(parts)}-group outline")
    report = validate_outline(o, respect=(parts, range(k)))
    if not report:
        raise PreconditionError(f"outline does not respect its first {k} groups: "
                                f"{report.reason}")

    square = lift(o, logger=logger)
    assert verify_ils(square, parts[:k]), "lifted square lost its subsquares"
    return square, subsquare_specs(parts[:k])


@dataclass
class RationalOutlineSquare:
    """
    Symmetric outline square with exact rational values.

    values maps sorted triples (i, j, l) to Fraction, missing triples are 0.
    """
    P: Partition
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.P = _as_partition(self.P)
        self.values = {tuple(sorted(key)): Fraction(val) for key, val in self.values.items()}

    def value(self, i, j, ell) -> Fraction:
        return self.values.get(tuple(sorted((i, j, ell))), Fraction(0))

    def to_json(self) -> dict:
        return {'P': list(self.P.parts),
                'values': [{'i': i + 1, 'j': j + 1, 'symbol': ell + 1, 'value': str(val)}
                           for (i, j, ell), val in sorted(self.values.items()) if val]}


def symmetrize(o: OutlineRectangle, k: int = None) -> RationalOutlineSquare:
    """
    Average an outline square over the six permutations of (i, j, l).

    Parameters
    ----------
    o : OutlineRectangle
        Outline square, P = Q = R
    k : int, optional
        If given, o must respect its first k groups
    """
    if not o.is_square:
        raise PreconditionError("symmetrization needs an outline square (P = Q = R)")
    respect = None if k is None else (o.P.parts, range(k))
    report = validate_outline(o, respect=respect)
    if not report:
        raise PreconditionError(f"cannot symmetrize: {report.reason}")

    total = sum(np.transpose(o.counts, perm) for perm in itertools.permutations(range(3)))
    u = len(o.P)
    values = {(i, j, ell): Fraction(int(total[i, j, ell]), 6)
              for i, j, ell in itertools.combinations_with_replacement(range(u), 3)}
    return RationalOutlineSquare(o.P, values)


def validate_ros(x: RationalOutlineSquare, respect=None) -> ValidityReport:
    """
    Nonnegativity, plane sums and respected diagonal of a rational outline square.

    Returns
    -------
    ValidityReport
        location is the offending triple, (i, j) pair or (i,)
    """
    p = x.P.parts
    u = len(p)
    for key, val in sorted(x.values.items()):
        if val < 0:
            return ValidityReport.failed(f"negative value {val} at {key}", key)
    for i, j in itertools.product(range(u), repeat=2):
        plane = sum(x.value(i, j, ell) for ell in range(u))
        if plane != p[i] * p[j]:
            return ValidityReport.failed(f"values over ({i}, {j}, *) sum to {plane}, "
                                         f"expected {p[i] * p[j]}", (i, j))
    if respect is not None:
        parts, subset = respect
        for i in sorted(subset):
            if x.value(i, i, i) != parts[i] ** 2:
                return ValidityReport.failed(f"value at ({i}, {i}, {i}) is {x.value(i, i, i)}, "
                                             f"expected {parts[i] ** 2}", (i,))
    return ValidityReport.passed()


def format_outline(o, one_based=True) -> str:
    """
    Text table of an outline, each cell listed as 'symbol:count' entries

    Parameters
    ----------
    o : OutlineRectangle or OutlineArray
    one_based : bool, optional
        Print group labels starting at 1
    """
    counts = o.counts
    shift = 1 if one_based else 0
    texts = [[" ".join(f"{ell + shift}:{c}" for ell, c in enumerate(counts[i, j]) if c) or "-"
              for j in range(counts.shape[1])]
             for i in range(counts.shape[0])]
    widths = [max(len(texts[i][j]) for i in range(len(texts))) for j in range(counts.shape[1])]
    return "\n".join(" | ".join(f"{cell:<{w}}" for cell, w in zip(row, widths)).rstrip()
                     for row in texts)
