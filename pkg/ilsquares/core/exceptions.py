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

__all__ = ['DimensionError', 'PreconditionError', 'InfeasibleError',
           'InvalidOutlineError', 'SearchBudgetExceeded',
           ]


class DimensionError(ValueError):
    """Shape of an array does not match its declared order"""


class PreconditionError(ValueError):
    """Arguments are outside the range an operation is defined for"""


class InfeasibleError(ValueError):
    """
    The requested square does not exist.

    Parameters
    ----------
    message : str
    condition : str, optional
        Name of the violated existence condition
    certificate : object, optional
        Anything that re-evaluates to the violation, e.g. a NecessaryViolation
    """
    def __init__(self, message, condition=None, certificate=None):
        super().__init__(message)
        self.condition = condition
        self.certificate = certificate


class InvalidOutlineError(ValueError):
    """An outline object fails its conditions where a valid one is required"""


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes
