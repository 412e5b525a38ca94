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


from . import trace
from .trace import *
from . import small
from .small import *
from . import circulant
from .circulant import *
from . import composition
from .composition import *

__all__ = []
__all__ += trace.__all__
__all__ += small.__all__
__all__ += circulant.__all__
__all__ += composition.__all__
