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

__all__ = ['NecessaryViolation', 'necessary_sides', 'check_necessary', 'decide']

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from ..core import (ExistenceVerdict, PreconditionError, SearchBudgetExceeded,
                    config_value, verify_ils)
from ..constructions import (construct_single, construct_ils_k2, construct_ils_k3,
                             construct_ils_uniform, construct_general)
from ..outline import ils_from_outline
from ..solver import OutlineSpec, solve_outline_square, brute_force_ils
from .criteria import (single_subsquare_exists, two_subsquares_exist,
                       three_subsquares_violation, uniform_exists, realization_exists)

exlogger = logging.getLogger('ilsquares.existence')

# digits of the assignment: 0 outside E, 1..4 for A..D
_FIRST_DIGITS = (0, 1, 3)
_VECTOR_TAIL = 8


def _with_slack(parts, n):
    parts = tuple(int(h) for h in parts)
    if any(h < 1 for h in parts):
        raise PreconditionError(f"subsquare orders must be positive, got {parts}")
    slack = n - sum(parts)
    if slack < 0:
        raise PreconditionError(f"subsquares {parts} do not fit in order {n}")
    return parts, np.array(parts + (slack,), dtype=np.int64)


def necessary_sides(parts, n, A=(), B=(), C=(), D=()):
    """
    Both sides of the necessary inequality for the sets A, B, C, D

    Elements are 1-based positions in (h_1, ..., h_k, h_{k+1}), h_{k+1}
    being the slack n - sum(parts). The square can only exist when
    lhs >= rhs.

    Returns
    -------
    (int, int)
        lhs, rhs
    """
    parts, h = _with_slack(parts, n)
    k1 = len(h)
    sets = [set(int(x) for x in s) for s in (A, B, C, D)]
    everything = set().union(*sets)
    if sum(len(s) for s in sets) != len(everything):
        raise PreconditionError("A, B, C and D must be pairwise disjoint")
    if any(not 1 <= x <= k1 for x in everything):
        raise PreconditionError(f"set elements must lie in 1..{k1}")

    def total(*members):
        return int(sum(h[x - 1] for s in members for x in s))

    sa, sb, sc, sd = sets
    squares = sum(int(h[x - 1]) ** 2 for x in everything if x != k1)
    outside = int(h.sum()) - total(*sets)
    lhs = total(sa, sc) ** 2 + total(sb, sd) ** 2 - squares
    rhs = total(sa, sd) * (total(sb, sc) - outside)
    return lhs, rhs


@dataclass
class NecessaryViolation:
    """
    Sets A, B, C, D for which lhs < rhs, ruling the square out

    Elements are 1-based positions in (h_1, ..., h_k, slack).
    """
    A: tuple
    B: tuple
    C: tuple
    D: tuple
    lhs: int
    rhs: int

    def evaluate(self, parts, n):
        """Recompute (lhs, rhs) for the stored sets"""
        return necessary_sides(parts, n, self.A, self.B, self.C, self.D)

    def to_json(self) -> dict:
        return {'A': list(self.A), 'B': list(self.B), 'C': list(self.C), 'D': list(self.D),
                'lhs': self.lhs, 'rhs': self.rhs}


def check_necessary(parts, n: int, max_parts: int = None):
    """
    Scan every assignment of positions to A, B, C, D or none.

    Assignments are visited in lexicographic order of their digits
    (0 none, 1..4 for A..D), the first position restricted to none, A
    or C: swapping A with D and B with C leaves both sides unchanged.
    The last positions are evaluated together as numpy arrays.

    Parameters
    ----------
    parts : sequence of int
        Subsquare orders h_1 ... h_k
    n : int
        Order, at least sum(parts)
    max_parts : int, optional
        Largest k + 1 accepted, defaults to the [necessary] max_parts setting

    Returns
    -------
    NecessaryViolation or None
        The first violation, None when the condition holds

    Raises
    ------
    PreconditionError
        k + 1 exceeds max_parts
    """
    parts, h = _with_slack(parts, n)
    if max_parts is None:
        max_parts = config_value('necessary', 'max_parts', 12)
    k1 = len(h)
    if k1 > max_parts:
        raise PreconditionError(f"{k1} positions exceed the exhaustive scan limit {max_parts}")

    width = min(k1, _VECTOR_TAIL)
    lead = k1 - width
    tail_h = h[lead:]
    tail_sq = tail_h ** 2
    tail_sq[-1] = 0
    digits = np.array(list(itertools.product(range(5), repeat=width)), dtype=np.int64)
    if lead == 0:
        digits = digits[np.isin(digits[:, 0], _FIRST_DIGITS)]
    member = [(digits == d) for d in range(5)]
    tail_sums = [m @ tail_h for m in member]
    tail_squares = (digits != 0) @ tail_sq
    total = int(h.sum())

    first_choices = [_FIRST_DIGITS] + [range(5)] * (lead - 1) if lead else []
    for prefix in itertools.product(*first_choices):
        pre = np.array(prefix, dtype=np.int64)
        pre_h = h[:lead]
        sums = [int(pre_h[pre == d].sum()) + tail_sums[d] for d in range(5)]
        squares = int((pre_h[pre != 0] ** 2).sum()) + tail_squares
        sa, sb, sc, sd = sums[1:]
        outside = total - (sa + sb + sc + sd)
        lhs = (sa + sc) ** 2 + (sb + sd) ** 2 - squares
        rhs = (sa + sd) * (sb + sc - outside)
        bad = np.flatnonzero(lhs < rhs)
        if len(bad):
            idx = bad[0]
            assignment = tuple(prefix) + tuple(int(d) for d in digits[idx])
            sets = [tuple(pos + 1 for pos, d in enumerate(assignment) if d == cls)
                    for cls in range(1, 5)]
            return NecessaryViolation(*sets, lhs=int(lhs[idx]), rhs=int(rhs[idx]))
    return None


def _certificate(parts, n, logger):
    try:
        return check_necessary(parts, n)
    except PreconditionError as err:
        logger.debug(f"no certificate: {err}")
        return None


def _refuted(parts, n, reason, logger):
    logger.info(f"ILS({n}; {parts}) does not exist ({reason})")
    return ExistenceVerdict.not_exists(parts, n, reason,
                                       certificate=_certificate(parts, n, logger))


def _built(parts, n, square, reason, logger):
    assert verify_ils(square, parts), f"witness from '{reason}' fails verification"
    logger.info(f"ILS({n}; {parts}) exists ({reason})")
    return ExistenceVerdict.exists(parts, n, square, reason)


def decide(parts, n: int, oracle_bound: int = None, budget: int = None,
           trace=None, logger=None) -> ExistenceVerdict:
    """
    Existence of an ILS(n; parts), with a witness or a certificate.

    Tried in order: no subsquares, one, two or three subsquares, equal
    orders, slack at least the largest part, the necessary condition,
    known realization criteria (sum(parts) == n), and the brute-force
    oracle for n <= oracle_bound. Anything else is UNKNOWN.

    Parameters
    ----------
    parts : sequence of int
        Subsquare orders, any order
    n : int
    oracle_bound : int, optional
        Largest order handed to the oracle, defaults to the [oracle] bound setting
    budget : int, optional
        Node budget for the solver and the oracle
    trace : list, optional
        Receives the ConstructionTrace of the construction used
    logger : logging.Logger, optional

    Returns
    -------
    ExistenceVerdict
    """
    if logger is None:
        logger = exlogger
    if oracle_bound is None:
        oracle_bound = config_value('oracle', 'bound', 7)
    parts = tuple(sorted((int(h) for h in parts), reverse=True))
    if n < 1 or any(h < 1 for h in parts):
        raise PreconditionError(f"need n >= 1 and positive parts, got n={n}, parts={parts}")
    if sum(parts) > n:
        return ExistenceVerdict.not_exists(parts, n, "subsquares exceed the order")
    k = len(parts)

    if k == 0:
        return _built(parts, n, construct_general((), n, trace=trace, logger=logger),
                      "no subsquares", logger)
    if k == 1:
        if single_subsquare_exists(parts[0], n):
            return _built(parts, n, construct_single(parts[0], n, trace=trace, logger=logger),
                          "single subsquare", logger)
        return _refuted(parts, n, "single subsquare needs n == h or n >= 2h", logger)
    if k == 2:
        if two_subsquares_exist(*parts, n):
            return _built(parts, n, construct_ils_k2(*parts, n, trace=trace, logger=logger),
                          "two subsquares", logger)
        return _refuted(parts, n, "two subsquares need slack >= h1", logger)
    if k == 3:
        violation = three_subsquares_violation(*parts, n)
        if violation is None:
            return _built(parts, n, construct_ils_k3(*parts, n, trace=trace, logger=logger),
                          "three subsquares", logger)
        return _refuted(parts, n, f"three subsquares need {violation}", logger)
    if parts[0] == parts[-1]:
        if uniform_exists(parts[0], k, n):
            return _built(parts, n, construct_ils_uniform(parts[0], k, n, trace=trace,
                                                              logger=logger),
                          "equal orders", logger)
        return _refuted(parts, n, "equal orders need n >= kh", logger)
    if n >= parts[0] + sum(parts):
        return _built(parts, n, construct_general(parts, n, trace=trace, logger=logger),
                      "general construction", logger)

    violation = _certificate(parts, n, logger)
    if violation is not None:
        logger.info(f"ILS({n}; {parts}) violates the necessary condition")
        return ExistenceVerdict.not_exists(parts, n, "necessary condition",
                                           certificate=violation)

    if sum(parts) == n:
        known = realization_exists(parts)
        if known is False:
            return _refuted(parts, n, "realization criterion", logger)
        if known:
            try:
                outline = solve_outline_square(OutlineSpec(parts, frozenset(range(k))),
                                               budget=budget, logger=logger)
            except SearchBudgetExceeded as err:
                logger.warning(f"realization search gave up: {err}")
            else:
                assert outline is not None, f"LS{parts} must exist"
                square, _ = ils_from_outline(outline, k, logger=logger)
                return _built(parts, n, square, "realization criterion", logger)

    if n <= oracle_bound:
        verdict = brute_force_ils(parts, n, budget=budget, logger=logger)
        logger.info(f"oracle on ILS({n}; {parts}): {verdict.status.value}")
        return verdict

    logger.info(f"ILS({n}; {parts}) is undecided")
    return ExistenceVerdict.unknown(parts, n, "no criterion applies")
