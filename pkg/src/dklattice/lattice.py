"""Finite periodic 4-D lattice: site indexing, shift operator, iteration.

Sites carry a multi-index k = (k0, k1, k2, k3) with 0 <= k_mu < N_mu.
All boundaries wrap (periodic), so shifts are defined everywhere and
constant fields are shift-invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

NDIRS = 4

SiteIndex = tuple[int, int, int, int]


@dataclass(frozen=True)
class LatticeShape:
    """Extents (N0, N1, N2, N3) of the periodic lattice, each >= 2."""

    extents: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.extents) != NDIRS:
            raise ValueError(f"need {NDIRS} extents, got {len(self.extents)}")
        for n in self.extents:
            if not isinstance(n, int) or n < 2:
                raise ValueError(f"every extent must be an integer >= 2, got {n}")

    @property
    def site_count(self) -> int:
        n0, n1, n2, n3 = self.extents
        return n0 * n1 * n2 * n3

    def contains(self, site: SiteIndex) -> bool:
        return all(0 <= k < n for k, n in zip(site, self.extents))


def shift(site: SiteIndex, mu: int, shape: LatticeShape) -> SiteIndex:
    """Shifted index tau_mu k: increment k_mu by one, wrapping periodically."""
    if mu not in range(NDIRS):
        raise ValueError(f"direction must be in 0..3, got {mu}")
    if not shape.contains(site):
        raise ValueError(f"site {site} outside shape {shape.extents}")
    k = list(site)
    k[mu] = (k[mu] + 1) % shape.extents[mu]
    return tuple(k)


def sites(shape: LatticeShape):
    """All sites in lexicographic order, k0 outermost and k3 innermost."""
    return itertools.product(*(range(n) for n in shape.extents))
