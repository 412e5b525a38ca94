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

__all__ = ['VerdictStatus', 'ExistenceVerdict']

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from .latin import LatinSquare, subsquare_specs


class VerdictStatus(Enum):
    EXISTS = 'exists'
    NOT_EXISTS = 'not_exists'
    UNKNOWN = 'unknown'


@dataclass
class ExistenceVerdict:
    """
    Outcome of an existence question for ILS(n; h_1..h_k)

    Attributes
    ----------
    status : VerdictStatus
    witness : LatinSquare, optional
        Present with EXISTS, a square in normal form
    certificate : object, optional
        With NOT_EXISTS, usually a NecessaryViolation that can be replayed
    reason : str
        Which characterization or search produced the verdict
    nodes : int
        Search nodes spent, when a search was involved
    """
    status: VerdictStatus
    parts: tuple = ()
    order: int = 0
    witness: Optional[LatinSquare] = None
    certificate: Any = None
    reason: str = ""
    nodes: int = 0

    @classmethod
    def exists(cls, parts, order, witness, reason, nodes=0):
        return cls(VerdictStatus.EXISTS, tuple(parts), order, witness=witness,
                   reason=reason, nodes=nodes)

    @classmethod
    def not_exists(cls, parts, order, reason, certificate=None, nodes=0):
        return cls(VerdictStatus.NOT_EXISTS, tuple(parts), order,
                   certificate=certificate, reason=reason, nodes=nodes)

    @classmethod
    def unknown(cls, parts, order, reason, nodes=0):
        return cls(VerdictStatus.UNKNOWN, tuple(parts), order, reason=reason, nodes=nodes)

    def __bool__(self):
        return self.status is VerdictStatus.EXISTS

    def to_json(self) -> dict:
        certificate = self.certificate
        if hasattr(certificate, 'to_json'):
            certificate = certificate.to_json()
        return {'status': self.status.value,
                'parts': list(self.parts),
                'order': self.order,
                'reason': self.reason,
                'nodes': self.nodes,
                'certificate': certificate,
                'witness': (self.witness.to_json(subsquare_specs(self.parts))
                            if self.witness is not None else None),
                }
