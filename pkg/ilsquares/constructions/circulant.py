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
Circulant partial latin squares and the realizations LS(h_1 h_2 ... h_k)
built on them.

Positions, diagonals and symbols are 0-based inside this module except
in the PartialLatinSquare grids, which hold symbols 1..r (0 is empty).
Diagonal d is the set of cells (p, p + d mod r).
"""

__all__ = ['CirculantPartial', 'circulant_first_row', 'circulant_partial',
           'circulant_outline', 'realization_circulant', 'realization_even_r',
           ]

import logging
from dataclasses import dataclass

import numpy as np

from ..core import (PartialLatinSquare, LatinSquare, Partition, EMPTY,
                    PreconditionError, InfeasibleError,
                    validate_latin, verify_ils)
from ..outline import OutlineRectangle, validate_outline, lift
from .trace import ConstructionTrace

cologger = logging.getLogger('ilsquares.constructions')


@dataclass
class CirculantPartial:
    """
    Circulant partial latin square of order r with h1 empty cells per line

    Attributes
    ----------
    square : PartialLatinSquare
    h1, h2 : int
    empty_diagonals : tuple of int
        Diagonals left empty by the first row
    removed_diagonals : tuple of int
        Transversals removed on top of those, lowest first
    """
    square: PartialLatinSquare
    h1: int
    h2: int
    empty_diagonals: tuple
    removed_diagonals: tuple

    @property
    def r(self) -> int:
        return self.square.order


def _check_circulant_range(r, h1, h2):
    limit = r if r % 2 == 0 else r + 1
    if h2 < 1 or 4 * h2 > limit:
        raise PreconditionError(f"need 1 <= h2 <= {limit}/4 for r={r}, got h2={h2}")
    if not 2 * h2 <= h1 <= r + 1 - 2 * h2:
        raise PreconditionError(f"need {2 * h2} <= h1 <= {r + 1 - 2 * h2}, got h1={h1}")


def circulant_first_row(r: int, h2: int) -> np.ndarray:
    """
    First row of the even-order circulant square, EMPTY where unfilled

    Entry i (1-based) is (i+1)/2 for odd i <= 2h2, r-i+h2+2 up to the
    middle and r-i-h2+3 after it, and (i+r+1)/2 for the odd distances
    r+2-i of the last 2h2-1 entries. The remaining entries are empty.
    """
    row = np.full(r, EMPTY, dtype=int)
    for i in range(1, r + 1):
        if i <= 2 * h2:
            if i % 2:
                row[i - 1] = (i + 1) // 2
        elif i <= r + 1 - 2 * h2:
            row[i - 1] = r - i + h2 + 2 if i <= (r + 2) // 2 else r - i - h2 + 3
        elif (r + 2 - i) % 2:
            row[i - 1] = (i + r + 1) // 2
    return row


def circulant_partial(r: int, h1: int, h2: int) -> CirculantPartial:
    """
    Partial latin square of order r with exactly h1 empty cells per line.

    Even r develops the first row cyclically, L(p, q) = F(q - p) + p.
    Odd r uses the halving square L(p, q) = (p + q)(r + 1)/2 with the
    diagonals +-1, +-3, ..., +-(2h2 - 1) emptied. In both cases the
    transversals 2h2, ..., h1 - 1 are removed as well, and
    L(p, p + 2d) = p + d for 0 <= d < h2.

    Parameters
    ----------
    r : int
    h1 : int
        2h2 <= h1 <= r + 1 - 2h2
    h2 : int
        1 <= h2 <= r/4 (r even) or (r+1)/4 (r odd)

    Returns
    -------
    CirculantPartial
    """
    _check_circulant_range(r, h1, h2)
    p = np.arange(r)
    delta = (p[None, :] - p[:, None]) % r

    if r % 2 == 0:
        first = circulant_first_row(r, h2)
        values = first[delta]
        grid = np.where(values == EMPTY, EMPTY, (values - 1 + p[:, None]) % r + 1)
    else:
        grid = ((p[:, None] + p[None, :]) * ((r + 1) // 2)) % r + 1
        odd = [2 * ell - 1 for ell in range(1, h2 + 1)]
        grid[np.isin(delta, odd + [r - d for d in odd])] = EMPTY

    empty_diagonals = tuple(sorted(int(d) for d in set(delta[0][grid[0] == EMPTY])))
    removed = tuple(range(2 * h2, h1))
    grid[np.isin(delta, removed)] = EMPTY

    square = PartialLatinSquare(grid)
    assert validate_latin(square), "circulant square repeats a symbol"
    assert np.all((grid == EMPTY).sum(axis=0) == h1) and np.all((grid == EMPTY).sum(axis=1) == h1), \
        "circulant square must have h1 empty cells per line"
    for d in range(h2):
        assert np.all(grid[p, (p + 2 * d) % r] == (p + d) % r + 1), "halving diagonal broken"
    return CirculantPartial(square, h1, h2, empty_diagonals, removed)


def _swap_intercalates(groups, blocks, offsets, r):
    """
    Move group b onto its diagonal block by swaps on 2 x 2 patterns

    For a < bb in block b with odd difference, the cells (S+a-1, S+bb-1),
    (S+a-1, y), (x, S+bb-1), (x, y) hold groups (0, b, b, 0) and are
    exchanged, where x = S - a and y = S + 2h_b - bb. The transposed
    pattern is exchanged as well.
    """
    for b, (h, start) in enumerate(zip(blocks, offsets), start=1):
        for a in range(1, h + 1):
            for bb in range(a + 1, h + 1, 2):
                x = (start - a) % r
                y = (start + 2 * h - bb) % r
                ra, cb = start + a - 1, start + bb - 1
                for quad in (((ra, cb), (ra, y), (x, cb), (x, y)),
                             ((cb, ra), (cb, x), (y, ra), (y, x))):
                    found = tuple(int(groups[cell]) for cell in quad)
                    assert found == (0, b, b, 0), \
                        f"intercalate at {quad} holds groups {found}"
                    for cell, group in zip(quad, (b, 0, 0, b)):
                        groups[cell] = group


def circulant_outline(parts, logger=None) -> OutlineRectangle:
    """
    Outline rectangle of LS(h_1 h_2 ... h_k) over (Q, Q, P), Q = (h_1 1^r)

    Parameters
    ----------
    parts : sequence of int
        h_1 followed by the nonincreasing orders h_2 >= ... >= h_k, r their sum
    logger : logging.Logger, optional

    Returns
    -------
    OutlineRectangle
        Row 0 and column 0 amalgamate the first h_1 lines; symbol groups are P
    """
    if logger is None:
        logger = cologger
    parts = tuple(int(h) for h in parts)
    h1, blocks = parts[0], parts[1:]
    if not blocks:
        raise InfeasibleError("the circulant realization needs at least two parts")
    r = sum(blocks)
    h2 = blocks[0]
    if any(a < b for a, b in zip(blocks, blocks[1:])):
        raise PreconditionError(f"parts after the first must be nonincreasing, got {blocks}")
    limit = r if r % 2 == 0 else r + 1
    if 4 * h2 > limit:
        raise InfeasibleError(f"circulant realization needs 4 h2 <= {limit}, got h2={h2}",
                              condition="h2 <= r/4")
    if not 2 * h2 <= h1 <= r + 1 - 2 * h2:
        raise InfeasibleError(f"circulant realization needs {2 * h2} <= h1 <= "
                              f"{r + 1 - 2 * h2}, got h1={h1}",
                              condition="2 h2 <= h1 <= r + 1 - 2 h2")

    partial = circulant_partial(r, h1, h2)
    grid = partial.square.grid
    symbol_group = np.repeat(np.arange(1, len(blocks) + 1), blocks)
    groups = np.where(grid == EMPTY, 0, symbol_group[np.maximum(grid, 1) - 1])
    offsets = np.concatenate([[0], np.cumsum(blocks)[:-1]]).astype(int)
    _swap_intercalates(groups, blocks, offsets, r)
    for b, (h, start) in enumerate(zip(blocks, offsets), start=1):
        assert np.all(groups[start:start + h, start:start + h] == b), \
            f"block {b} is not filled by its own symbols"

    k = len(parts)
    counts = np.zeros((r + 1, r + 1, k), dtype=int)
    counts[0, 0, 0] = h1 * h1
    rows, cols = np.indices((r, r))
    counts[1 + rows.ravel(), 1 + cols.ravel(), groups.ravel()] = 1
    h = np.array(parts)
    per_column = np.stack([(groups == ell).sum(axis=0) for ell in range(k)], axis=1)
    per_row = np.stack([(groups == ell).sum(axis=1) for ell in range(k)], axis=1)
    counts[0, 1:, 1:] = h[None, 1:] - per_column[:, 1:]
    counts[1:, 0, 1:] = h[None, 1:] - per_row[:, 1:]

    Q = Partition((h1,) + (1,) * r)
    outline = OutlineRectangle(Q, Q, Partition(parts), counts)
    report = validate_outline(outline)
    assert report, f"circulant outline is invalid: {report.reason}"
    logger.debug(f"circulant outline for {parts} (r={r}, removed diagonals "
                 f"{partial.removed_diagonals})")
    return outline


def realization_circulant(parts, trace=None, logger=None) -> LatinSquare:
    """
    LS(h_1 h_2 ... h_k) from the circulant outline, any parity of r

    Every part becomes a subsquare, in normal form.

    Raises
    ------
    InfeasibleError
        h2 > r/4 (r even) or (r+1)/4 (r odd), or h1 outside [2h2, r+1-2h2]
    """
    parts = tuple(int(h) for h in parts)
    ConstructionTrace.record(trace, 'realization_circulant', parts, sum(parts),
                             r=sum(parts[1:]))
    square = lift(circulant_outline(parts, logger=logger), logger=logger)
    assert verify_ils(square, parts), "circulant realization lost a subsquare"
    return square


def realization_even_r(parts, trace=None, logger=None) -> LatinSquare:
    """LS(h_1 h_2 ... h_k) for an even r = h_2 + ... + h_k"""
    r = sum(parts[1:])
    if r % 2:
        raise InfeasibleError(f"r = {r} is odd", condition="r even")
    return realization_circulant(parts, trace=trace, logger=logger)
