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

__all__ = ['FrequencyArray', 'OutlineArray',
           'validate_outline_array', 'sum_outline_arrays', 'amalgamate',
           'amalgamate_frequency', 'product_frequency', 'split_diagonal',
           'outline_square_as_array', 'array_as_outline_square',
           ]

from dataclasses import dataclass

import numpy as np

from ..core import (ValidityReport, DimensionError, PreconditionError)
from .outline import OutlineRectangle


@dataclass
class FrequencyArray:
    """k x k array of nonnegative targets F(i, j)"""
    F: np.ndarray

    def __post_init__(self):
        self.F = np.asarray(self.F, dtype=int)
        if self.F.ndim != 2 or self.F.shape[0] != self.F.shape[1]:
            raise DimensionError(f"frequency arrays are square, got shape {self.F.shape}")
        if np.any(self.F < 0):
            raise PreconditionError("frequency arrays hold nonnegative entries")

    @property
    def order(self) -> int:
        return self.F.shape[0]

    @classmethod
    def zeros(cls, k):
        return cls(np.zeros((k, k), dtype=int))

    def __add__(self, other):
        if not isinstance(other, FrequencyArray):
            return NotImplemented
        if self.order != other.order:
            raise PreconditionError(f"cannot add frequency arrays of orders {self.order} "
                                    f"and {other.order}")
        return FrequencyArray(self.F + other.F)

    def __eq__(self, other):
        if not isinstance(other, FrequencyArray):
            return NotImplemented
        return self.F.shape == other.F.shape and bool(np.all(self.F == other.F))

    def to_json(self):
        return {'F': self.F.tolist()}


@dataclass
class OutlineArray:
    """
    k x k array of multisets over the k symbols

    counts[i, j, l] is the number of copies of symbol l in cell (i, j).
    """
    counts: np.ndarray

    def __post_init__(self):
        self.counts = np.asarray(self.counts, dtype=int)
        shape = self.counts.shape
        if len(shape) != 3 or not shape[0] == shape[1] == shape[2]:
            raise DimensionError(f"outline arrays need shape (k, k, k), got {shape}")

    @property
    def order(self) -> int:
        return self.counts.shape[0]

    @classmethod
    def zeros(cls, k):
        return cls(np.zeros((k, k, k), dtype=int))

    def copy(self):
        return OutlineArray(self.counts.copy())

    def __add__(self, other):
        return sum_outline_arrays(self, other)

    def __eq__(self, other):
        if not isinstance(other, OutlineArray):
            return NotImplemented
        return self.counts.shape == other.counts.shape and bool(np.all(self.counts == other.counts))

    def to_json(self, frequency: FrequencyArray = None) -> dict:
        cells = [{'i': int(i) + 1, 'j': int(j) + 1, 'symbol': int(ell) + 1,
                  'count': int(self.counts[i, j, ell])}
                 for i, j, ell in zip(*np.nonzero(self.counts))]
        result = {'k': self.order, 'cells': cells}
        if frequency is not None:
            result.update(frequency.to_json())
        return result

    @classmethod
    def from_json(cls, data: dict):
        """OutlineArray, plus the FrequencyArray when the JSON carries 'F' (else None)"""
        if 'k' not in data or 'cells' not in data:
            raise ValueError("outline array JSON needs the 'k' and 'cells' fields")
        k = int(data['k'])
        counts = np.zeros((k, k, k), dtype=int)
        for entry in data['cells']:
            i, j, ell = entry['i'] - 1, entry['j'] - 1, entry['symbol'] - 1
            if not all(0 <= x < k for x in (i, j, ell)):
                raise DimensionError(f"cell entry {entry} lies outside order {k}")
            counts[i, j, ell] += entry['count']
        frequency = FrequencyArray(data['F']) if 'F' in data else None
        return cls(counts), frequency


def validate_outline_array(o: OutlineArray, f: FrequencyArray) -> ValidityReport:
    """
    Check that o is an outline array corresponding to f.

    Cell (i, j) must hold F(i, j) symbols, row i must hold F(i, l) copies
    of l and column j must hold F(l, j) copies of l.

    Raises
    ------
    PreconditionError
        o and f have different orders
    """
    if o.order != f.order:
        raise PreconditionError(f"outline array of order {o.order} checked against a "
                                f"frequency array of order {f.order}")
    counts = o.counts
    F = f.F

    negative = np.argwhere(counts < 0)
    if len(negative):
        i, j, ell = (int(x) for x in negative[0])
        return ValidityReport.failed(f"negative count of symbol {ell} in cell ({i}, {j})",
                                     (i, j, ell))

    bad = np.argwhere(counts.sum(axis=2) != F)
    if len(bad):
        i, j = (int(x) for x in bad[0])
        return ValidityReport.failed(f"cell ({i}, {j}) holds {counts[i, j].sum()} symbols, "
                                     f"expected {F[i, j]}", (i, j))

    bad = np.argwhere(counts.sum(axis=1) != F)
    if len(bad):
        i, ell = (int(x) for x in bad[0])
        return ValidityReport.failed(f"row {i} holds {counts[i, :, ell].sum()} copies of "
                                     f"{ell}, expected {F[i, ell]}", (i, ell))

    bad = np.argwhere(counts.sum(axis=0) != F.T)
    if len(bad):
        j, ell = (int(x) for x in bad[0])
        return ValidityReport.failed(f"column {j} holds {counts[:, j, ell].sum()} copies of "
                                     f"{ell}, expected {F[ell, j]}", (j, ell))

    return ValidityReport.passed()


def sum_outline_arrays(o1: OutlineArray, o2: OutlineArray, *more) -> OutlineArray:
    """Cell-wise multiset union"""
    arrays = (o1, o2) + more
    orders = {o.order for o in arrays}
    if len(orders) != 1:
        raise PreconditionError(f"outline arrays of different orders {sorted(orders)}")
    return OutlineArray(sum(o.counts for o in arrays))


def _class_labels(classes, k):
    labels = np.full(k, -1, dtype=int)
    for idx, members in enumerate(classes):
        for x in members:
            if not 0 <= x < k:
                raise PreconditionError(f"index {x} is outside 0..{k - 1}")
            if labels[x] >= 0:
                raise PreconditionError(f"index {x} appears in two classes")
            labels[x] = idx
    if np.any(labels < 0):
        raise PreconditionError(f"classes do not cover {np.flatnonzero(labels < 0).tolist()}")
    return labels


def amalgamate(o: OutlineArray, classes) -> OutlineArray:
    """
    Merge row, column and symbol indices by a partition of 0..k-1.

    Parameters
    ----------
    o : OutlineArray
    classes : sequence of iterables of int
        Disjoint classes covering every index. A class may be empty and
        then yields an empty row, column and symbol of the result.

    Returns
    -------
    OutlineArray
        Order len(classes), symbol x renamed to the class holding it
    """
    labels = _class_labels(classes, o.order)
    result = np.zeros((len(classes),) * 3, dtype=int)
    np.add.at(result,
              (labels[:, None, None], labels[None, :, None], labels[None, None, :]),
              o.counts)
    return OutlineArray(result)


def amalgamate_frequency(f: FrequencyArray, classes) -> FrequencyArray:
    """F*(a, b) as the sum of F over class a times class b"""
    labels = _class_labels(classes, f.order)
    result = np.zeros((len(classes),) * 2, dtype=int)
    np.add.at(result, (labels[:, None], labels[None, :]), f.F)
    return FrequencyArray(result)


def product_frequency(parts) -> FrequencyArray:
    h = np.array(list(parts), dtype=int)
    return FrequencyArray(np.outer(h, h))


def split_diagonal(o: OutlineArray, parts, respected):
    """
    Separate the respected diagonal counts of an outline square.

    An outline square respecting (P, S) is the sum of the array holding
    h_i^2 copies of i in cell (i, i) for i in S, and of a remainder
    whose frequency array is h_i h_j with those diagonal entries zeroed.

    Returns
    -------
    (OutlineArray, FrequencyArray, OutlineArray, FrequencyArray)
        diagonal part, its frequency, remainder, its frequency
    """
    h = np.array(list(parts), dtype=int)
    k = o.order
    if len(h) != k:
        raise PreconditionError(f"{len(h)} parts given for an outline array of order {k}")
    diag = np.zeros((k, k, k), dtype=int)
    diag_f = np.zeros((k, k), dtype=int)
    for i in respected:
        diag[i, i, i] = h[i] ** 2
        diag_f[i, i] = h[i] ** 2
    rest = o.counts - diag
    if np.any(rest < 0):
        raise PreconditionError("outline array does not respect the requested diagonal")
    return (OutlineArray(diag), FrequencyArray(diag_f),
            OutlineArray(rest), FrequencyArray(np.outer(h, h) - diag_f))


def outline_square_as_array(o: OutlineRectangle):
    """
    Outline square seen as an outline array

    Returns
    -------
    (OutlineArray, FrequencyArray)
        The frequency array is F(i, j) = h_i h_j
    """
    if not o.is_square:
        raise PreconditionError("only outline squares (P = Q = R) convert to outline arrays")
    return OutlineArray(o.counts.copy()), product_frequency(o.P.parts)


def array_as_outline_square(o: OutlineArray, parts) -> OutlineRectangle:
    h = np.array(list(parts), dtype=int)
    if len(h) != o.order:
        raise DimensionError(f"{len(h)} parts given for an outline array of order {o.order}")
    sizes = o.counts.sum(axis=2)
    bad = np.argwhere(sizes != np.outer(h, h))
    if len(bad):
        i, j = (int(x) for x in bad[0])
        raise DimensionError(f"cell ({i}, {j}) holds {sizes[i, j]} symbols, an outline "
                             f"square needs {h[i] * h[j]}")
    return OutlineRectangle.square(tuple(h), o.counts.copy())
