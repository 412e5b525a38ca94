#
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
#

__all__ = ['EMPTY', 'Partition', 'LatinSquare', 'PartialLatinSquare',
           'SubsquareSpec', 'ValidityReport',
           'validate_latin', 'verify_ils', 'inflate', 'idempotent_square',
           'cyclic_square', 'permute_groups', 'subsquare_specs',
           ]

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .exceptions import DimensionError, PreconditionError, InfeasibleError

EMPTY = 0


@dataclass(frozen=True)
class Partition:
    """
    Ordered list of positive group sizes.

    Group sizes are kept in the order given: a subsquare request is
    nonincreasing, but the partitions that carry a slack part (which
    goes last) need not be.

    Parameters
    ----------
    parts : sequence of int
        Group sizes, each at least 1
    """
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise PreconditionError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def nonincreasing(cls, parts):
        """Build a partition, requiring h_1 >= h_2 >= ... >= h_m"""
        parts = tuple(int(p) for p in parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"parts must be nonincreasing, got {parts}")
        return cls(parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, item):
        return self.parts[item]

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def offsets(self) -> np.ndarray:
        """offsets[i] is the first (0-based) position of group i, offsets[-1] the total"""
        return np.concatenate([[0], np.cumsum(self.parts, dtype=int)]).astype(int)

    def offset(self, i: int) -> int:
        return int(sum(self.parts[:i]))

    def group_of(self) -> np.ndarray:
        """Group index of every position 0..total-1"""
        return np.repeat(np.arange(len(self.parts)), self.parts)

    def is_nonincreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def with_slack(self, n: int) -> 'Partition':
        """Append the slack part n - total (dropped when zero)"""
        slack = n - self.total
        if slack < 0:
            raise PreconditionError(f"parts {self.parts} sum to more than the order {n}")
        return Partition(self.parts + ((slack,) if slack else ()))

    def __repr__(self):
        return f"Partition{self.parts}"


def _as_grid(grid):
    grid = np.asarray(grid)
    if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
        raise DimensionError(f"a square grid is required, got shape {grid.shape}")
    return grid.astype(int)


@dataclass
class LatinSquare:
    """
    Latin square of order n with symbols 1..n

    The latin property itself is checked by :func:`validate_latin`.
    """
    grid: np.ndarray

    def __post_init__(self):
        self.grid = _as_grid(self.grid)
        if self.order < 1:
            raise DimensionError("latin squares have order at least 1")

    @property
    def order(self) -> int:
        return self.grid.shape[0]

    def __getitem__(self, item):
        return self.grid[item]

    def __eq__(self, other):
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return self.grid.shape == other.grid.shape and bool(np.all(self.grid == other.grid))

    def to_json(self, subsquares=None) -> dict:
        """
        JSON-ready dictionary: {"order", "grid", "subsquares"}

        Parameters
        ----------
        subsquares : list of SubsquareSpec, optional
        """
        return {'order': self.order,
                'grid': self.grid.tolist(),
                'subsquares': [s.to_json() for s in (subsquares or [])],
                }

    @classmethod
    def from_json(cls, data: dict) -> 'LatinSquare':
        for key in ('order', 'grid'):
            if key not in data:
                raise ValueError(f"square JSON lacks the '{key}' field")
        square = cls(np.array(data['grid'], dtype=int))
        if square.order != int(data['order']):
            raise DimensionError(f"declared order {data['order']} but the grid is "
                                 f"{square.order}x{square.order}")
        return square

    def to_text(self) -> str:
        width = len(str(self.order))
        return "\n".join(" ".join(f"{s:>{width}}" for s in row) for row in self.grid)

    @classmethod
    def from_text(cls, text: str) -> 'LatinSquare':
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        try:
            return cls(np.array([[int(s) for s in row] for row in rows], dtype=int))
        except ValueError as err:
            raise DimensionError(f"unreadable grid text: {err}")


@dataclass
class PartialLatinSquare:
    """Square array whose entries are symbols 1..order or EMPTY"""
    grid: np.ndarray

    def __post_init__(self):
        self.grid = _as_grid(self.grid)

    @property
    def order(self) -> int:
        return self.grid.shape[0]

    def empty_cells(self) -> np.ndarray:
        return self.grid == EMPTY

    def to_text(self) -> str:
        width = len(str(self.order))
        return "\n".join(" ".join(f"{s:>{width}}" if s != EMPTY else "_" * width
                                  for s in row)
                         for row in self.grid)


@dataclass(frozen=True)
class SubsquareSpec:
    """h x h block at (row_offset, col_offset) using exactly symbol_set"""
    row_offset: int
    col_offset: int
    order: int
    symbol_set: frozenset = field(default_factory=frozenset)

    def to_json(self) -> dict:
        return {'row_offset': self.row_offset,
                'col_offset': self.col_offset,
                'order': self.order,
                }

    def holds_in(self, grid) -> bool:
        block = np.asarray(grid)[self.row_offset:self.row_offset + self.order,
                                 self.col_offset:self.col_offset + self.order]
        if block.shape != (self.order, self.order):
            return False
        return (all(set(row) == set(self.symbol_set) for row in block.tolist())
                and all(set(col) == set(self.symbol_set) for col in block.T.tolist()))


@dataclass
class ValidityReport:
    """
    Outcome of a validation. Truthy when the object passes.

    Attributes
    ----------
    ok : bool
    reason : str
        Human readable description of the first failure
    location : tuple, optional
        0-based indices of the first failure, meaning depends on the validator
    """
    ok: bool
    reason: str = ""
    location: Optional[tuple] = None

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls):
        return cls(True)

    @classmethod
    def failed(cls, reason, location=None):
        return cls(False, reason, location)

    def to_json(self) -> dict:
        return {'ok': self.ok, 'reason': self.reason,
                'location': list(self.location) if self.location is not None else None}


def _first_repeat(line):
    seen = set()
    for idx, symbol in enumerate(line):
        if symbol == EMPTY:
            continue
        if symbol in seen:
            return idx, symbol
        seen.add(symbol)
    return None


def validate_latin(square: Union[LatinSquare, PartialLatinSquare, np.ndarray],
                   order: int = None,
                   ) -> ValidityReport:
    """
    Check that no symbol repeats in a row or column.

    Full squares (:class:`LatinSquare` or a bare array) must also be
    free of empty cells. Rows are scanned before columns.

    Parameters
    ----------
    square : LatinSquare, PartialLatinSquare or array_like
    order : int, optional
        Declared order; a grid of a different size is a structural error

    Returns
    -------
    ValidityReport
        location is (row, col, symbol) of the first violation
    """
    partial = isinstance(square, PartialLatinSquare)
    grid = square.grid if isinstance(square, (LatinSquare, PartialLatinSquare)) \
        else _as_grid(square)
    n = grid.shape[0]
    if order is not None and order != n:
        raise DimensionError(f"grid is {n}x{n} but the declared order is {order}")

    lowest = EMPTY if partial else 1
    out_of_range = np.argwhere((grid < lowest) | (grid > n))
    if len(out_of_range):
        row, col = out_of_range[0]
        symbol = int(grid[row, col])
        what = "empty cell" if symbol == EMPTY else f"symbol {symbol} outside 1..{n}"
        return ValidityReport.failed(f"{what} at ({row}, {col})",
                                     (int(row), int(col), symbol))

    for row in range(n):
        repeat = _first_repeat(grid[row].tolist())
        if repeat is not None:
            col, symbol = repeat
            return ValidityReport.failed(f"symbol {symbol} repeats in row {row}",
                                         (row, col, symbol))
    for col in range(n):
        repeat = _first_repeat(grid[:, col].tolist())
        if repeat is not None:
            row, symbol = repeat
            return ValidityReport.failed(f"symbol {symbol} repeats in column {col}",
                                         (row, col, symbol))
    return ValidityReport.passed()


def subsquare_specs(parts) -> list:
    """Normal form placement of subsquares of the given orders"""
    specs = []
    offset = 0
    for h in parts:
        specs.append(SubsquareSpec(offset, offset, int(h),
                                   frozenset(range(offset + 1, offset + h + 1))))
        offset += h
    return specs


def verify_ils(square: Union[LatinSquare, np.ndarray], parts) -> ValidityReport:
    """
    Check that a latin square has the subsquares h_1..h_k in normal form.

    Block i occupies rows and columns offset(i) + [h_i] and must use
    exactly the symbols offset(i) + [h_i].

    Parameters
    ----------
    square : LatinSquare or array_like
    parts : sequence of int
        Subsquare orders h_1..h_k

    Returns
    -------
    ValidityReport
        location is (block index,) of the first failing block
    """
    grid = square.grid if isinstance(square, LatinSquare) else _as_grid(square)
    parts = tuple(int(h) for h in parts)
    n = grid.shape[0]
    if any(h < 1 for h in parts):
        raise PreconditionError(f"subsquare orders must be positive, got {parts}")
    if sum(parts) > n:
        raise PreconditionError(f"subsquares {parts} do not fit in order {n}")

    report = validate_latin(grid)
    if not report:
        return report

    for idx, spec in enumerate(subsquare_specs(parts)):
        block = grid[spec.row_offset:spec.row_offset + spec.order,
                     spec.col_offset:spec.col_offset + spec.order]
        low, high = spec.row_offset + 1, spec.row_offset + spec.order
        if np.any((block < low) | (block > high)):
            return ValidityReport.failed(f"block {idx + 1} (order {spec.order}) is not a "
                                         f"subsquare on symbols {low}..{high}",
                                         (idx,))
    return ValidityReport.passed()


def cyclic_square(n: int) -> LatinSquare:
    """Addition table of Z_n on symbols 1..n"""
    idx = np.arange(n)
    return LatinSquare((idx[:, None] + idx[None, :]) % n + 1)


def inflate(base: Union[LatinSquare, np.ndarray], h: int) -> LatinSquare:
    """
    Replace every cell of an order-k square by an h x h latin block.

    Block (i, j) holds the symbols (base(i,j) - 1)h + [h], filled with
    the cyclic shift: inner cell (a, b) gets (base(i,j) - 1)h + ((a+b) mod h) + 1.

    Parameters
    ----------
    base : LatinSquare or array_like
    h : int
        Block order, at least 1

    Returns
    -------
    LatinSquare
        Order kh
    """
    grid = base.grid if isinstance(base, LatinSquare) else _as_grid(base)
    if h < 1:
        raise PreconditionError(f"inflation factor must be at least 1, got {h}")
    k = grid.shape[0]
    inner = np.arange(h)
    shift = (inner[:, None] + inner[None, :]) % h
    return LatinSquare(np.kron(grid - 1, np.ones((h, h), dtype=int)) * h
                       + np.tile(shift, (k, k)) + 1)


def idempotent_square(k: int) -> LatinSquare:
    """
    Latin square of order k with L(i,i) = i.

    Odd orders use L(i,j) = ((i+j)(k+1)/2 - 1 mod k) + 1. Even orders
    k >= 4 prolong the odd square of order k-1 along its transversal
    {(i, i+1)}, which avoids the diagonal.

    Raises
    ------
    InfeasibleError
        k == 2, where no idempotent square exists
    """
    if k < 1:
        raise PreconditionError(f"order must be positive, got {k}")
    if k == 2:
        raise InfeasibleError("no idempotent latin square of order 2 exists",
                              condition="k != 2")
    if k % 2:
        idx = np.arange(k)
        return LatinSquare(((idx[:, None] + idx[None, :]) * ((k + 1) // 2)) % k + 1)

    odd = idempotent_square(k - 1).grid
    m = k - 1
    grid = np.full((k, k), k, dtype=int)
    grid[:m, :m] = odd
    for i in range(m):
        j = (i + 1) % m
        grid[i, m] = odd[i, j]
        grid[m, j] = odd[i, j]
        grid[i, j] = k
    return LatinSquare(grid)


def permute_groups(grid: Union[LatinSquare, np.ndarray], parts, order) -> LatinSquare:
    """
    Reorder row, column and symbol groups together.

    Parameters
    ----------
    grid : LatinSquare or array_like
    parts : sequence of int
        Group sizes in the current layout
    order : sequence of int
        Current group indices listed in their new order

    Returns
    -------
    LatinSquare
        Group order[t] of the input is group t of the output
    """
    grid = grid.grid if isinstance(grid, LatinSquare) else _as_grid(grid)
    parts = [int(p) for p in parts]
    if sorted(order) != list(range(len(parts))):
        raise PreconditionError(f"{order} is not a permutation of the {len(parts)} groups")
    if sum(parts) != grid.shape[0]:
        raise PreconditionError(f"groups {parts} do not cover order {grid.shape[0]}")
    offsets = np.concatenate([[0], np.cumsum(parts)]).astype(int)
    perm = np.concatenate([np.arange(offsets[g], offsets[g + 1]) for g in order]
                          + [np.zeros(0, dtype=int)]).astype(int)
    relabel = np.zeros(grid.shape[0] + 1, dtype=int)
    relabel[perm + 1] = np.arange(1, grid.shape[0] + 1)
    return LatinSquare(relabel[grid[np.ix_(perm, perm)]])
