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

__all__ = ['CaseParameters', 'ConstructionTrace']

from dataclasses import dataclass, field, fields
from typing import Optional


@dataclass
class CaseParameters:
    """Integers chosen by a construction case, unset ones stay None"""
    r: Optional[int] = None
    z: Optional[int] = None
    g: Optional[int] = None
    m: Optional[int] = None
    c: Optional[int] = None
    g1: Optional[int] = None
    g3: Optional[int] = None
    h1p: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)
                if getattr(self, f.name) is not None}


@dataclass
class ConstructionTrace:
    """
    Record of one constructor call and the calls it made.

    Constructors accept ``trace=None``; given a list, they append their own
    node to it and pass ``node.children`` to the constructions they use.
    """
    construction: str
    parts: tuple
    order: int
    case: str = ""
    parameters: CaseParameters = field(default_factory=CaseParameters)
    children: list = field(default_factory=list)

    @classmethod
    def record(cls, trace, construction, parts, order, case="", **parameters):
        """Append a new node to trace (when not None) and return it"""
        node = cls(construction, tuple(int(h) for h in parts), int(order), case,
                   CaseParameters(**{key: int(val) for key, val in parameters.items()}))
        if trace is not None:
            trace.append(node)
        return node

    def to_json(self) -> dict:
        return {'construction': self.construction,
                'parts': list(self.parts),
                'order': self.order,
                'case': self.case,
                'parameters': self.parameters.to_json(),
                'children': [child.to_json() for child in self.children],
                }
