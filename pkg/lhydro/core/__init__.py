# Copyright (C) 2026  lhydro developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA.

import functools

from .complex import CubicalComplex
from .lattice import Chain, LatticeConfig

# complex related  --


@functools.lru_cache(maxsize=8)
def get_complex(config: LatticeConfig) -> CubicalComplex:
    """Shared, immutable operator set for a lattice."""
    return CubicalComplex(config)


# operators on chains  --


def boundary(chain: Chain) -> Chain:
    return get_complex(chain.config).boundary(chain)


def coboundary(chain: Chain) -> Chain:
    return get_complex(chain.config).coboundary(chain)


def star(chain: Chain) -> Chain:
    return get_complex(chain.config).star(chain)


def laplacian(chain: Chain) -> Chain:
    """Delta = boundary o delta + delta o boundary, positive semidefinite."""
    return get_complex(chain.config).laplacian(chain)
