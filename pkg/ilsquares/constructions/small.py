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

__all__ = ['construct_single', 'construct_ils_k2', 'construct_ils_k3',
           'construct_ils_uniform', 'k2_outline', 'k3_outline',
           ]

import logging

import numpy as np

from ..core import (LatinSquare, PreconditionError, InfeasibleError,
                    cyclic_square, inflate, idempotent_square, verify_ils)
from ..outline import OutlineRectangle, validate_outline, ils_from_outline
from ..solver import OutlineSpec, solve_outline_square
from .composition import construct_general
from .trace import ConstructionTrace

cologger = logging.getLogger('ilsquares.constructions')


def _outline_from_cells(parts, cells):
    """Outline square from {(i, j): {symbol group: count}}"""
    u = len(parts)
    counts = np.zeros((u, u, u), dtype=int)
    for (i, j), multiset in cells.items():
        for ell, count in multiset.items():
            counts[i, j, ell] = count
    return OutlineRectangle.square(tuple(parts), counts)


def construct_single(h: int, n: int, trace=None, logger=None) -> LatinSquare:
    """
    Latin square of order n with a subsquare of order h on the first rows and symbols

    Exists if and only if n == h or n >= 2h.

    Raises
    ------
    InfeasibleError
        h < n < 2h
    """
    if logger is None:
        logger = cologger
    if not 1 <= h <= n:
        raise PreconditionError(f"need 1 <= h <= n, got h={h}, n={n}")
    if h < n < 2 * h:
        raise InfeasibleError(f"no latin square of order {n} has a subsquare of order {h}",
                              condition="n == h or n >= 2h")
    ConstructionTrace.record(trace, 'single', (h,), n)
    if n == h:
        return cyclic_square(n)

    s = n - h
    outline = _outline_from_cells((h, s), {(0, 0): {0: h * h},
                                           (0, 1): {1: h * s},
                                           (1, 0): {1: h * s},
                                           (1, 1): {0: h * s, 1: s * s - h * s}})
    logger.debug(f"single subsquare outline for h={h}, s={s}")
    square, _ = ils_from_outline(outline, 1, logger=logger)
    return square


def k2_outline(h1: int, h2: int, n: int) -> OutlineRectangle:
    """Outline square of an ILS(n; h1 h2), slack h3 = n - h1 - h2 >= h1"""
    h3 = n - h1 - h2
    return _outline_from_cells((h1, h2, h3), {
        (0, 0): {0: h1 * h1},
        (0, 1): {2: h1 * h2},
        (0, 2): {1: h1 * h2, 2: h1 * h3 - h1 * h2},
        (1, 0): {2: h1 * h2},
        (1, 1): {1: h2 * h2},
        (1, 2): {0: h1 * h2, 2: h2 * h3 - h1 * h2},
        (2, 0): {1: h1 * h2, 2: h1 * h3 - h1 * h2},
        (2, 1): {0: h1 * h2, 2: h2 * h3 - h1 * h2},
        (2, 2): {0: h1 * h3 - h1 * h2, 1: h2 * h3 - h1 * h2,
                 2: h3 * h3 - h1 * h3 - h2 * h3 + 2 * h1 * h2},
    })


def construct_ils_k2(h1: int, h2: int, n: int, trace=None, logger=None) -> LatinSquare:
    """
    ILS(n; h1 h2) in normal form

    Parameters
    ----------
    h1, h2 : int
        Subsquare orders, h1 >= h2 >= 1
    n : int
        Order

    Raises
    ------
    InfeasibleError
        The slack n - h1 - h2 is smaller than h1
    """
    if logger is None:
        logger = cologger
    if not h1 >= h2 >= 1:
        raise PreconditionError(f"need h1 >= h2 >= 1, got ({h1}, {h2})")
    h3 = n - h1 - h2
    if h3 < h1:
        raise InfeasibleError(f"ILS({n}; {h1} {h2}) needs slack at least {h1}, has {h3}",
                              condition="h3 >= h1")
    ConstructionTrace.record(trace, 'ils_k2', (h1, h2), n)

    outline = k2_outline(h1, h2, n)
    assert validate_outline(outline, respect=(outline.P.parts, (0, 1))), \
        "two subsquare outline is invalid"
    logger.debug(f"lifting the ILS({n}; {h1} {h2}) outline")
    square, _ = ils_from_outline(outline, 2, logger=logger)
    return square


def _k3_z(h1, h2, h3, h4):
    if h4 >= h1:
        return 1, h2 * h3
    if h4 >= h3:
        return 2, h2 * h4 - h1 * h2 + h2 * h3
    return 3, h1 * h4 - h1 * h2 - h1 * h3 + 2 * h2 * h3


def k3_outline(h1: int, h2: int, h3: int, n: int, z: int) -> OutlineRectangle:
    """
    Outline square of an ILS(n; h1 h2 h3) for a free parameter z

    When the slack h4 is zero its (empty) group is dropped.
    """
    h4 = n - h1 - h2 - h3
    e = h1 * h4 - h1 * h2 - h1 * h3 + 2 * h2 * h3 - z
    f = h2 * h4 - h1 * h2 + h2 * h3 - z
    g = h3 * h4 - h1 * h3 + h2 * h3 - z
    cells = {
        (0, 0): {0: h1 * h1},
        (0, 1): {2: h2 * h3, 3: h1 * h2 - h2 * h3},
        (0, 2): {1: h2 * h3 - z, 3: h1 * h3 - h2 * h3 + z},
        (0, 3): {1: h1 * h2 - h2 * h3 + z, 2: h1 * h3 - h2 * h3, 3: e},
        (1, 0): {2: h2 * h3 - z, 3: h1 * h2 - h2 * h3 + z},
        (1, 1): {1: h2 * h2},
        (1, 2): {0: h2 * h3},
        (1, 3): {0: h1 * h2 - h2 * h3, 2: z, 3: f},
        (2, 0): {1: h2 * h3, 3: h1 * h3 - h2 * h3},
        (2, 1): {0: h2 * h3 - z, 3: z},
        (2, 2): {2: h3 * h3},
        (2, 3): {0: h1 * h3 - h2 * h3 + z, 3: g},
        (3, 0): {1: h1 * h2 - h2 * h3, 2: h1 * h3 - h2 * h3 + z, 3: e},
        (3, 1): {0: h1 * h2 - h2 * h3 + z, 3: f},
        (3, 2): {0: h1 * h3 - h2 * h3, 1: z, 3: g},
        (3, 3): {0: e, 1: f, 2: g,
                 3: h4 * h4 - h4 * (h1 + h2 + h3) + 2 * h1 * h2 + 2 * h1 * h3
                 - 4 * h2 * h3 + 3 * z},
    }
    if h4 == 0:
        cells = {(i, j): {ell: c for ell, c in multiset.items() if ell < 3}
                 for (i, j), multiset in cells.items() if i < 3 and j < 3}
        return _outline_from_cells((h1, h2, h3), cells)
    return _outline_from_cells((h1, h2, h3, h4), cells)


def construct_ils_k3(h1: int, h2: int, h3: int, n: int, trace=None, logger=None,
                     ) -> LatinSquare:
    """
    ILS(n; h1 h2 h3) in normal form.

    The free parameter z of the outline square is chosen by the range of
    the slack h4 = n - h1 - h2 - h3: z = h2 h3 when h4 >= h1,
    z = h2 h4 - h1 h2 + h2 h3 when h1 > h4 >= h3, and
    z = h1 h4 - h1 h2 - h1 h3 + 2 h2 h3 when h4 < h3.

    Parameters
    ----------
    h1, h2, h3 : int
        h1 >= h2 >= h3 >= 1
    n : int
        At least h1 + h2 + h3
    trace : list, optional
        Receives a ConstructionTrace
    logger : logging.Logger, optional

    Raises
    ------
    InfeasibleError
        The slack misses the inequality named in the error's condition
    """
    from ..existence.criteria import three_subsquares_violation

    if logger is None:
        logger = cologger
    if not h1 >= h2 >= h3 >= 1:
        raise PreconditionError(f"need h1 >= h2 >= h3 >= 1, got ({h1}, {h2}, {h3})")
    h4 = n - h1 - h2 - h3
    if h4 < 0:
        raise PreconditionError(f"subsquares ({h1}, {h2}, {h3}) do not fit in order {n}")
    violation = three_subsquares_violation(h1, h2, h3, n)
    if violation is not None:
        raise InfeasibleError(f"no ILS({n}; {h1} {h2} {h3}): {violation} fails",
                              condition=violation)

    case, z = _k3_z(h1, h2, h3, h4)
    ConstructionTrace.record(trace, 'ils_k3', (h1, h2, h3), n, case=f"slack range {case}", z=z)
    assert 0 <= z <= h2 * h3, "z outside 0..h2 h3"
    assert z <= h1 * h4 - h1 * h2 - h1 * h3 + 2 * h2 * h3, "z too large for cell (1, 4)"
    assert z <= h2 * h4 - h1 * h2 + h2 * h3, "z too large for cell (2, 4)"
    assert z <= h3 * h4 - h1 * h3 + h2 * h3, "z too large for cell (3, 4)"
    assert h4 * h4 - h4 * (h1 + h2 + h3) + 2 * h1 * h2 + 2 * h1 * h3 - 4 * h2 * h3 + 3 * z >= 0, \
        "slack cell would hold a negative count"

    outline = k3_outline(h1, h2, h3, n, z)
    assert validate_outline(outline, respect=(outline.P.parts, (0, 1, 2))), \
        "three subsquare outline is invalid"
    logger.debug(f"ILS({n}; {h1} {h2} {h3}) with z={z} (slack range {case})")
    square, _ = ils_from_outline(outline, 3, logger=logger)
    return square


def construct_ils_uniform(h: int, k: int, n: int, trace=None, logger=None) -> LatinSquare:
    """
    ILS(n; h^k), k disjoint subsquares of order h.

    With k >= 3 the slack is written as mh + r'. For r' = 0 the result is
    an inflated idempotent square; with at least h of slack beyond the
    subsquares the general construction applies; otherwise the outline
    square of the realization LS(h^k r') is searched for and lifted.

    Raises
    ------
    InfeasibleError
        k = 1 and h < n < 2h, k = 2 and n < 3h, or n < kh
    """
    from ..existence.criteria import uniform_exists

    if logger is None:
        logger = cologger
    if h < 1 or k < 0:
        raise PreconditionError(f"need h >= 1 and k >= 0, got h={h}, k={k}")
    if not uniform_exists(h, k, n):
        raise InfeasibleError(f"no ILS({n}; {h}^{k})", condition="uniform order bound")

    node = ConstructionTrace.record(trace, 'ils_uniform', (h,) * k, n)
    if k == 0:
        return cyclic_square(n)
    if k == 1:
        return construct_single(h, n, trace=node.children, logger=logger)
    if k == 2:
        return construct_ils_k2(h, h, n, trace=node.children, logger=logger)

    m, rest = divmod(n - k * h, h)
    if rest == 0:
        node.case = "inflation"
        square = inflate(idempotent_square(k + m), h)
    elif n >= (k + 1) * h:
        node.case = "general"
        square = construct_general((h,) * k, n, trace=node.children, logger=logger)
    else:
        node.case = "realization search"
        spec = OutlineSpec((h,) * k + (rest,), frozenset(range(k + 1)))
        outline = solve_outline_square(spec, logger=logger)
        assert outline is not None, f"LS({h}^{k} {rest}) must exist"
        square, _ = ils_from_outline(outline, k, logger=logger)

    assert verify_ils(square, (h,) * k), "uniform construction lost a subsquare"
    return square
