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

__all__ = ['brute_force_ils']

import logging

import numpy as np

from ..core import (LatinSquare, PreconditionError, ExistenceVerdict,
                    subsquare_specs, verify_ils, node_budget)

sologger = logging.getLogger('ilsquares.solver')


def _popcount(mask):
    return bin(mask).count("1")


def brute_force_ils(parts, n: int, budget: int = None, logger=None) -> ExistenceVerdict:
    """
    Exhaustive search for an ILS(n; parts) in normal form.

    The diagonal blocks are filled with cyclic squares on their symbols
    (any latin square on the same symbols can replace a subsquare), the
    remaining cells are filled by backtracking on the cell with fewest
    candidates. A line whose open cells cannot jointly host its missing
    symbols is a dead end.

    Parameters
    ----------
    parts : sequence of int
        Subsquare orders, any order, each at least 1
    n : int
        Order of the square
    budget : int, optional
        Node limit, defaults to the [oracle] node_budget setting or ILS_NODE_BUDGET
    logger : logging.Logger, optional

    Returns
    -------
    ExistenceVerdict
        EXISTS with a witness, NOT_EXISTS after an exhausted search, or
        UNKNOWN when the budget ran out
    """
    if logger is None:
        logger = sologger
    parts = tuple(int(h) for h in parts)
    if n < 1:
        raise PreconditionError(f"order must be positive, got {n}")
    if any(h < 1 for h in parts) or sum(parts) > n:
        raise PreconditionError(f"parts {parts} do not fit in order {n}")
    budget = node_budget('oracle', budget)

    full = (1 << n) - 1
    grid = np.zeros((n, n), dtype=int)
    row_used = [0] * n
    col_used = [0] * n

    def place(r, c, s):
        grid[r, c] = s
        row_used[r] |= 1 << (s - 1)
        col_used[c] |= 1 << (s - 1)

    def unplace(r, c):
        bit = ~(1 << (int(grid[r, c]) - 1))
        row_used[r] &= bit
        col_used[c] &= bit
        grid[r, c] = 0

    for spec in subsquare_specs(parts):
        h, start = spec.order, spec.row_offset
        for a in range(h):
            for b in range(h):
                place(start + a, start + b, start + (a + b) % h + 1)

    empties = [(r, c) for r in range(n) for c in range(n) if grid[r, c] == 0]
    open_cells = set(range(len(empties)))

    def select():
        """Open cell with fewest candidates, None on a dead end"""
        best = None
        row_cover = [0] * n
        col_cover = [0] * n
        for idx in open_cells:
            r, c = empties[idx]
            mask = full & ~(row_used[r] | col_used[c])
            if not mask:
                return None
            row_cover[r] |= mask
            col_cover[c] |= mask
            count = _popcount(mask)
            if best is None or count < best[2]:
                best = (idx, mask, count)
        rows_open = {empties[idx][0] for idx in open_cells}
        cols_open = {empties[idx][1] for idx in open_cells}
        if any(full & ~row_used[r] & ~row_cover[r] for r in rows_open) \
                or any(full & ~col_used[c] & ~col_cover[c] for c in cols_open):
            return None
        return best

    nodes = 0
    stack = []
    descend = True
    while True:
        if descend:
            if not open_cells:
                witness = LatinSquare(grid.copy())
                assert verify_ils(witness, parts), "oracle witness fails verification"
                logger.debug(f"ILS({n}; {parts}) found after {nodes} nodes")
                return ExistenceVerdict.exists(parts, n, witness,
                                               "exhaustive search", nodes=nodes)
            choice = select()
            if choice is not None:
                idx, mask, _ = choice
                stack.append([idx, mask])
                open_cells.discard(idx)

        if not stack:
            logger.debug(f"ILS({n}; {parts}) excluded after {nodes} nodes")
            return ExistenceVerdict.not_exists(parts, n,
                                               "exhaustive search found no completion",
                                               nodes=nodes)
        top = stack[-1]
        idx, mask = top
        r, c = empties[idx]
        if grid[r, c]:
            unplace(r, c)
        mask &= full & ~(row_used[r] | col_used[c])
        if not mask:
            stack.pop()
            open_cells.add(idx)
            descend = False
            continue

        bit = mask & -mask
        top[1] = mask ^ bit
        nodes += 1
        if nodes > budget:
            logger.warning(f"oracle budget of {budget} nodes exhausted on ILS({n}; {parts})")
            return ExistenceVerdict.unknown(parts, n, f"oracle budget of {budget} nodes exhausted",
                                            nodes=nodes)
        place(r, c, bit.bit_length())
        descend = True
