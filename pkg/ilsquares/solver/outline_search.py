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

__all__ = ['OutlineSpec', 'solve_outline_square']

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog, milp, LinearConstraint, Bounds
from scipy.sparse import coo_matrix

from ..core import (Partition, PreconditionError, SearchBudgetExceeded, node_budget)
from ..outline import OutlineRectangle, validate_outline

sologger = logging.getLogger('ilsquares.solver')


@dataclass
class OutlineSpec:
    """
    Outline square to be found

    Attributes
    ----------
    P : Partition
    S : frozenset of int
        Groups i with counts[i, i, i] pinned to p_i**2
    fixed : dict
        Extra pinned counts {(i, j, l): value}
    """
    P: Partition
    S: frozenset = frozenset()
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.P, Partition):
            self.P = Partition(tuple(self.P))
        self.S = frozenset(int(i) for i in self.S)
        u = len(self.P)
        if any(not 0 <= i < u for i in self.S):
            raise PreconditionError(f"respected set {sorted(self.S)} is outside 0..{u - 1}")
        for key, value in self.fixed.items():
            if len(key) != 3 or any(not 0 <= x < u for x in key):
                raise PreconditionError(f"fixed entry {key} is outside the outline")
            if value < 0:
                raise PreconditionError(f"fixed entry {key} is negative")

    @property
    def size(self) -> int:
        return len(self.P)


def _equalities(p):
    """Sparse plane-sum system A x = b over x[i, j, l] flattened in C order"""
    u = len(p)
    i, j, ell = np.meshgrid(np.arange(u), np.arange(u), np.arange(u), indexing='ij')
    var = (i * u * u + j * u + ell).ravel()
    cell_row = (i * u + j).ravel()
    row_row = u * u + (i * u + ell).ravel()
    col_row = 2 * u * u + (j * u + ell).ravel()
    rows = np.concatenate([cell_row, row_row, col_row])
    cols = np.concatenate([var, var, var])
    matrix = coo_matrix((np.ones(len(rows)), (rows, cols)),
                        shape=(3 * u * u, u ** 3)).tocsr()
    pp = np.outer(p, p).ravel()
    return matrix, np.concatenate([pp, pp, pp]).astype(float)


def _bounds(spec):
    p = np.array(spec.P.parts)
    pp = np.outer(p, p)
    upper = np.minimum(np.minimum(pp[:, :, None], pp[:, None, :]), pp[None, :, :])
    lower = np.zeros_like(upper)
    for i in spec.S:
        lower[i, i, i] = upper[i, i, i] = p[i] ** 2
    for (i, j, ell), value in spec.fixed.items():
        if value > upper[i, j, ell] or value < lower[i, j, ell]:
            return None
        lower[i, j, ell] = upper[i, j, ell] = value
    return lower, upper


def solve_outline_square(spec: OutlineSpec, budget: int = None, logger=None):
    """
    Integer outline square respecting (P, S), or None if there is none.

    The linear relaxation is solved first: an infeasible relaxation
    proves infeasibility. The integer problem is then handed to HiGHS
    with the node budget as limit. A valid incumbent left by HiGHS at its
    limit is returned as is; without one, a depth-first search over cell
    counts, ordered by distance to the relaxed solution, takes over under
    the same budget.

    Parameters
    ----------
    spec : OutlineSpec
    budget : int, optional
        Node limit; defaults to the [solver] node_budget setting or ILS_NODE_BUDGET
    logger : logging.Logger, optional

    Returns
    -------
    OutlineRectangle or None

    Raises
    ------
    SearchBudgetExceeded
        Neither HiGHS nor the fallback search settled the question within budget
    """
    if logger is None:
        logger = sologger
    budget = node_budget('solver', budget)

    p = np.array(spec.P.parts)
    u = len(p)
    bounds = _bounds(spec)
    if bounds is None:
        logger.debug("fixed entries exceed their cell capacity")
        return None
    lower, upper = bounds
    matrix, rhs = _equalities(p)

    relaxed = linprog(np.zeros(u ** 3), A_eq=matrix, b_eq=rhs,
                      bounds=list(zip(lower.ravel(), upper.ravel())), method='highs')
    if relaxed.status == 2:
        logger.debug(f"relaxation of {spec.P.parts} respecting {sorted(spec.S)} is infeasible")
        return None
    if relaxed.status != 0:
        raise RuntimeError(f"linear relaxation failed: {relaxed.message}")

    result = milp(np.zeros(u ** 3),
                  constraints=LinearConstraint(matrix, rhs, rhs),
                  integrality=np.ones(u ** 3),
                  bounds=Bounds(lower.ravel(), upper.ravel()),
                  options={'node_limit': budget, 'disp': False})
    if result.status == 2:
        logger.debug(f"no integer outline square for {spec.P.parts}")
        return None
    if result.x is not None:
        counts = np.rint(result.x).astype(int).reshape(u, u, u)
        outline = OutlineRectangle.square(spec.P, counts)
        report = validate_outline(outline, respect=(spec.P.parts, spec.S))
        assert report or result.status != 0, \
            "integer solution breaks the outline conditions"
        if report:
            logger.debug(f"outline square for {spec.P.parts} found by HiGHS "
                         f"(status {result.status})")
            return outline

    logger.warning(f"HiGHS stopped ({result.message}), falling back to depth-first search")
    seed = relaxed.x.reshape(u, u, u)
    return _depth_first(spec, lower, upper, seed, budget, logger)


def _depth_first(spec, lower, upper, seed, budget, logger):
    p = np.array(spec.P.parts)
    u = len(p)
    pp = np.outer(p, p)

    cells = sorted(((i, j) for i in range(u) for j in range(u)),
                   key=lambda c: (-pp[c], c))
    variables = [(i, j, ell) for i, j in cells for ell in range(u)]
    nvars = len(variables)

    cell_rem = pp.copy()
    row_rem = pp.copy()
    col_rem = pp.copy()
    open_row = np.full((u, u), u)
    open_col = np.full((u, u), u)
    values = np.zeros(nvars, dtype=int)

    def candidates(d):
        i, j, ell = variables[d]
        hi = min(cell_rem[i, j], row_rem[i, ell], col_rem[j, ell], upper[i, j, ell])
        later = sum(min(row_rem[i, m], col_rem[j, m], upper[i, j, m])
                    for m in range(ell + 1, u))
        lo = max(lower[i, j, ell], cell_rem[i, j] - later)
        target = seed[i, j, ell]
        return sorted(range(lo, hi + 1), key=lambda v: (abs(v - target), v))

    def assign(d, v, sign):
        i, j, ell = variables[d]
        cell_rem[i, j] -= sign * v
        row_rem[i, ell] -= sign * v
        col_rem[j, ell] -= sign * v
        open_row[i, ell] -= sign
        open_col[j, ell] -= sign

    def closed_lines_ok(d):
        i, j, ell = variables[d]
        return ((open_row[i, ell] > 0 or row_rem[i, ell] == 0)
                and (open_col[j, ell] > 0 or col_rem[j, ell] == 0))

    options = [None] * nvars
    position = [0] * nvars
    options[0] = candidates(0)
    depth = 0
    nodes = 0
    while depth >= 0:
        if position[depth] >= len(options[depth]):
            depth -= 1
            if depth >= 0:
                assign(depth, values[depth], -1)
            continue

        value = options[depth][position[depth]]
        position[depth] += 1
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"outline search for {spec.P.parts} exceeded "
                                       f"{budget} nodes", nodes=nodes)
        values[depth] = value
        assign(depth, value, 1)
        if not closed_lines_ok(depth):
            assign(depth, value, -1)
            continue

        depth += 1
        if depth == nvars:
            counts = np.zeros((u, u, u), dtype=int)
            for (i, j, ell), v in zip(variables, values):
                counts[i, j, ell] = v
            outline = OutlineRectangle.square(spec.P, counts)
            assert validate_outline(outline, respect=(spec.P.parts, spec.S)), \
                "depth-first solution breaks the outline conditions"
            logger.debug(f"depth-first search settled {spec.P.parts} after {nodes} nodes")
            return outline
        options[depth] = candidates(depth)
        position[depth] = 0

    logger.debug(f"depth-first search exhausted {spec.P.parts} after {nodes} nodes")
    return None
