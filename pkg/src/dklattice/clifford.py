"""The 16-blade basis of the spacetime Clifford algebra Cl(1,3).

A blade is encoded as a 4-bit mask: bit mu set means the generator e_mu
is present, with generators kept in ascending index order.  Mask 0 is the
unit x, mask 0b1111 the volume element e = e0 e1 e2 e3.  The metric is
diag(+1, -1, -1, -1).

The full 16x16 signed product table is precomputed at import; since the
metric is nondegenerate, every blade product is +/- another blade.
"""

from __future__ import annotations

import numpy as np

NBLADES = 16
METRIC = (1, -1, -1, -1)

MASK_X = 0b0000
MASK_E = 0b1111


def blade_mask(*indices: int) -> int:
    """Mask of the blade with the given ascending generator indices."""
    m = 0
    for i in indices:
        if i not in range(4):
            raise ValueError(f"generator index must be in 0..3, got {i}")
        if m & (1 << i):
            raise ValueError(f"repeated generator index {i}")
        m |= 1 << i
    return m


def grade(mask: int) -> int:
    """Number of generators in the blade."""
    return bin(mask & MASK_E).count("1")


def blade_name(mask: int) -> str:
    if mask == MASK_X:
        return "x"
    return "e" + "".join(str(i) for i in range(4) if mask & (1 << i))


def _reorder_sign(a: int, b: int) -> int:
    # Transpositions needed to merge the ascending generator lists of a
    # and b into one sorted sequence: each generator of b passes every
    # generator of a with a strictly larger index.
    a >>= 1
    total = 0
    while a:
        total += bin(a & b).count("1")
        a >>= 1
    return -1 if total & 1 else 1


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Signed product of two blades: (sign, mask of the resulting blade).

    The sign accumulates the transpositions that sort the concatenated
    generator sequence plus a metric factor g_mumu for every repeated
    generator contracted away.
    """
    sign = _reorder_sign(a, b)
    common = a & b
    for mu in range(4):
        if common & (1 << mu):
            sign *= METRIC[mu]
    return sign, a ^ b


def _build_tables() -> tuple[np.ndarray, np.ndarray]:
    signs = np.zeros((NBLADES, NBLADES), dtype=np.int64)
    masks = np.zeros((NBLADES, NBLADES), dtype=np.int64)
    for a in range(NBLADES):
        for b in range(NBLADES):
            s, m = blade_product(a, b)
            signs[a, b] = s
            masks[a, b] = m
    return signs, masks


PRODUCT_SIGN, PRODUCT_MASK = _build_tables()

GRADES = np.array([grade(m) for m in range(NBLADES)], dtype=np.int64)
