#
# ilsquares - Incomplete latin squares with disjoint subsquares
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

"""
Construction and verification of latin squares with prescribed disjoint subsquares
"""
import logging as _log

islogger = _log.getLogger('ilsquares')
_ch = _log.StreamHandler()
_formatter = _log.Formatter('%(name)s (%(module)s.%(funcName)s) %(levelname)s: %(message)s')
_ch.setFormatter(_formatter)
islogger.addHandler(_ch)

from . import core
from .core import *
from . import outline
from .outline import *
from . import solver
from .solver import *
from . import constructions
from .constructions import *
from . import existence
from .existence import *

__all__ = ['core', 'outline', 'solver', 'constructions', 'existence', 'islogger']
__all__ += core.__all__
__all__ += outline.__all__
__all__ += solver.__all__
__all__ += constructions.__all__
__all__ += existence.__all__

__version__ = "0.0.0"
