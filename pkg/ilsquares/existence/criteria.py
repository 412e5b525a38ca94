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
Closed-form existence criteria for squares with disjoint subsquares.

All functions take subsquare orders in any order and sort them
internally. Integer arithmetic only.
"""

__all__ = ['single_subsquare_exists', 'two_subsquares_exist',
           'three_subsquares_violation', 'three_subsquares_exist', 'three_subsquares_case',
           'uniform_exists', 'realization_exists',
           ]

from collections import Counter

from ..core import PreconditionError


def _sorted_parts(parts, n=None):
    parts = tuple(sorted((int(h) for h in parts), reverse=True))
    if any(h < 1 for h in parts):
        raise PreconditionError(f"subsquare orders must be positive, got {parts}")
    if n is not None and sum(parts) > n:
        raise PreconditionError(f"subsquares {parts} do not fit in order {n}")
    return parts


def single_subsquare_exists(h: int, n: int) -> bool:
    """Order-n latin square with a subsquare of order h: n == h or n >= 2h"""
    _sorted_parts((h,), n)
    return n == h or n >= 2 * h


def two_subsquares_exist(h1: int, h2: int, n: int) -> bool:
    h1, h2 = _sorted_parts((h1, h2), n)
    return n - h1 - h2 >= h1


def three_subsquares_case(h1: int, h2: int, h3: int, n: int) -> int:
    """
    Which of the three slack ranges applies: 1 if h4 >= h1, 2 if h1 > h4 >= h3, 3 otherwise

    h4 is the slack n - h1 - h2 - h3.
    """
    h1, h2, h3 = _sorted_parts((h1, h2, h3), n)
    h4 = n - h1 - h2 - h3
    if h4 >= h1:
        return 1
    if h4 >= h3:
        return 2
    return 3


def three_subsquares_violation(h1: int, h2: int, h3: int, n: int):
    """
    The failing inequality for ILS(n; h1 h2 h3), or None when it exists

    Returns
    -------
    str or None
        Inequality written in terms of h1..h4, h4 being the slack
    """
    h1, h2, h3 = _sorted_parts((h1, h2, h3), n)
    h4 = n - h1 - h2 - h3
    case = three_subsquares_case(h1, h2, h3, n)
    if case == 1:
        return None
    if case == 2:
        return None if h4 >= h1 - h3 else "h4 >= h1 - h3"
    if h1 * h4 < h1 * (h2 + h3) - 2 * h2 * h3:
        return "h1 h4 >= h1 (h2 + h3) - 2 h2 h3"
    if h4 * h4 + h4 * (2 * h1 - h2 - h3) - h1 * h2 - h1 * h3 + 2 * h2 * h3 < 0:
        return "h4^2 + h4 (2 h1 - h2 - h3) - h1 h2 - h1 h3 + 2 h2 h3 >= 0"
    return None


def three_subsquares_exist(h1: int, h2: int, h3: int, n: int) -> bool:
    return three_subsquares_violation(h1, h2, h3, n) is None


def uniform_exists(h: int, k: int, n: int) -> bool:
    """
    ILS(n; h^k), k subsquares of the same order h

    k = 1 follows the single subsquare criterion, k = 2 needs n >= 3h and
    k >= 3 needs n >= kh.
    """
    if h < 1 or k < 0:
        raise PreconditionError(f"need h >= 1 and k >= 0, got h={h}, k={k}")
    if k * h > n:
        return False
    if k == 0:
        return n >= 1
    if k == 1:
        return single_subsquare_exists(h, n)
    if k == 2:
        return n >= 3 * h
    return True


def realization_exists(parts):
    """
    Known existence results for realizations LS(h_1 ... h_k), sum = order.

    Covers k <= 4, all parts equal, at most two distinct orders with
    k > 4, and three equal largest orders.

    Returns
    -------
    bool or None
        None when no criterion applies
    """
    parts = _sorted_parts(parts)
    k = len(parts)
    if k == 0:
        return None
    if k == 1:
        return True
    if k == 2:
        return False
    if k == 3:
        return parts[0] == parts[2]
    if k == 4:
        h1, h2, h3, h4 = parts
        return h1 == h3 or (h2 == h4 and h1 <= 2 * h4)

    if parts[0] == parts[2]:
        return True
    sizes = Counter(parts)
    if len(sizes) == 2:
        a, b = parts[0], parts[-1]
        u = sizes[a]
        return u >= 3 or (0 < u < 3 and a <= (k - 2) * b)
    return None
