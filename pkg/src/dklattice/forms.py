"""Discrete inhomogeneous forms: 16 complex coefficients per lattice site.

A FormField stores its coefficients as a complex array of shape
extents + (16,), blade axis ordered by mask value 0..15.  All operations
are site-local except the shifts applied in the calculus module, so they
vectorize directly over the lattice axes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import GRADES, MASK_E, NBLADES, PRODUCT_MASK, PRODUCT_SIGN, blade_mask
from .lattice import LatticeShape


@dataclass(frozen=True)
class FormField:
    shape: LatticeShape
    data: np.ndarray  # complex128, extents + (16,)

    def __post_init__(self):
        expected = self.shape.extents + (NBLADES,)
        if self.data.shape != expected:
            raise ValueError(f"data shape {self.data.shape} != {expected}")

    def __add__(self, other: "FormField") -> "FormField":
        _check_same_shape(self, other)
        return FormField(self.shape, self.data + other.data)

    def __sub__(self, other: "FormField") -> "FormField":
        _check_same_shape(self, other)
        return FormField(self.shape, self.data - other.data)

    def __mul__(self, c: complex) -> "FormField":
        return FormField(self.shape, self.data * c)

    __rmul__ = __mul__

    def __neg__(self) -> "FormField":
        return FormField(self.shape, -self.data)


def _check_same_shape(a: FormField, b: FormField):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape.extents} vs {b.shape.extents}")


def zero(shape: LatticeShape) -> FormField:
    return FormField(shape, np.zeros(shape.extents + (NBLADES,), dtype=complex))


def constant(shape: LatticeShape, coeffs) -> FormField:
    """Constant form with the same 16 blade coefficients at every site."""
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (NBLADES,):
        raise ValueError(f"need 16 blade coefficients, got shape {coeffs.shape}")
    data = np.broadcast_to(coeffs, shape.extents + (NBLADES,)).copy()
    return FormField(shape, data)


def blade_form(shape: LatticeShape, mask: int, coeff: complex = 1.0) -> FormField:
    """Constant form with a single nonzero blade coefficient."""
    c = np.zeros(NBLADES, dtype=complex)
    c[mask] = coeff
    return constant(shape, c)


def unit_x(shape: LatticeShape) -> FormField:
    """The unit 0-form x (coefficient 1 at the empty blade everywhere)."""
    return blade_form(shape, 0)


def basis_e(shape: LatticeShape, mu: int) -> FormField:
    """The constant unit 1-form e_mu."""
    if mu not in range(4):
        raise ValueError(f"direction must be in 0..3, got {mu}")
    return blade_form(shape, blade_mask(mu))


def unit_e(shape: LatticeShape) -> FormField:
    """The unit 4-form e = e0 e1 e2 e3; satisfies e*e = -x."""
    return blade_form(shape, MASK_E)


def add(a: FormField, b: FormField) -> FormField:
    return a + b


def scale(c: complex, a: FormField) -> FormField:
    return a * c


def clifford_mul(a: FormField, b: FormField) -> FormField:
    """Site-wise Clifford product, bilinear over the blade coefficients.

    Products only couple coefficients at the same site; the 256 signed
    blade products come from the precomputed table.
    """
    _check_same_shape(a, b)
    out = np.zeros_like(a.data)
    for i in range(NBLADES):
        ai = a.data[..., i]
        for j in range(NBLADES):
            out[..., PRODUCT_MASK[i, j]] += PRODUCT_SIGN[i, j] * ai * b.data[..., j]
    return FormField(a.shape, out)


def grade_project(a: FormField, r: int) -> FormField:
    """Zero every coefficient whose blade grade differs from r."""
    if r not in range(5):
        raise ValueError(f"grade must be in 0..4, got {r}")
    out = a.data.copy()
    out[..., GRADES != r] = 0
    return FormField(a.shape, out)


def even_part(a: FormField) -> FormField:
    out = a.data.copy()
    out[..., GRADES % 2 == 1] = 0
    return FormField(a.shape, out)


def odd_part(a: FormField) -> FormField:
    out = a.data.copy()
    out[..., GRADES % 2 == 0] = 0
    return FormField(a.shape, out)


def conjugate(a: FormField) -> FormField:
    return FormField(a.shape, np.conj(a.data))


def real_part(a: FormField) -> FormField:
    return FormField(a.shape, a.data.real.astype(complex))


def imag_part(a: FormField) -> FormField:
    return FormField(a.shape, a.data.imag.astype(complex))


def sup_norm(a: FormField) -> float:
    return float(np.max(np.abs(a.data)))


def random_form(shape: LatticeShape, rng: np.random.Generator) -> FormField:
    """I.i.d. complex coefficients, real and imaginary parts uniform in [-1, 1]."""
    dims = shape.extents + (NBLADES,)
    data = rng.uniform(-1, 1, dims) + 1j * rng.uniform(-1, 1, dims)
    return FormField(shape, data)
