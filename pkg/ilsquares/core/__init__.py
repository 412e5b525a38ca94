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


from . import exceptions
from .exceptions import *
from . import latin
from .latin import *
from . import verdict
from .verdict import *
from . import misc_general
from .misc_general import *

__all__ = []
__all__ += exceptions.__all__
__all__ += latin.__all__
__all__ += verdict.__all__
__all__ += misc_general.__all__
