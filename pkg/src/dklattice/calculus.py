"""Difference operators on discrete forms.

delta_mu is the forward difference along direction mu (periodic wrap).
d_c raises grade by one and delta_c lowers it by one; both are written
out literally, component display by component display, because a single
wrong sign in those tables is the main correctness risk.  The dirac
operator is the independent algebraic route sum_mu e_mu delta_mu and
must agree with d_c + delta_c on every form.
"""

from __future__ import annotations

import numpy as np

from . import forms
from .clifford import blade_mask
from .forms import FormField

# Blade masks by generator indices, named for the component tables below.
X = 0
E0, E1, E2, E3 = (blade_mask(m) for m in range(4))
E01, E02, E03 = blade_mask(0, 1), blade_mask(0, 2), blade_mask(0, 3)
E12, E13, E23 = blade_mask(1, 2), blade_mask(1, 3), blade_mask(2, 3)
E012, E013 = blade_mask(0, 1, 2), blade_mask(0, 1, 3)
E023, E123 = blade_mask(0, 2, 3), blade_mask(1, 2, 3)
E = blade_mask(0, 1, 2, 3)


def delta_mu(a: FormField, mu: int) -> FormField:
    """Forward difference: coefficient at site k becomes c(tau_mu k) - c(k)."""
    if mu not in range(4):
        raise ValueError(f"direction must be in 0..3, got {mu}")
    return FormField(a.shape, np.roll(a.data, -1, axis=mu) - a.data)


def _d(a: FormField, mu: int):
    # Difference of the full coefficient array; sliced per blade below.
    return np.roll(a.data, -1, axis=mu) - a.data


def d_c(a: FormField) -> FormField:
    """Discrete exterior derivative, grade r -> r+1, gradewise by linearity."""
    D = [_d(a, mu) for mu in range(4)]
    out = np.zeros_like(a.data)

    # grade 0 -> 1
    for mu, em in enumerate((E0, E1, E2, E3)):
        out[..., em] += D[mu][..., X]

    # grade 1 -> 2: coefficient of e_{mu nu} is D_mu w^nu - D_nu w^mu
    one = {0: E0, 1: E1, 2: E2, 3: E3}
    two = {(0, 1): E01, (0, 2): E02, (0, 3): E03,
           (1, 2): E12, (1, 3): E13, (2, 3): E23}
    for (mu, nu), emn in two.items():
        out[..., emn] += D[mu][..., one[nu]] - D[nu][..., one[mu]]

    # grade 2 -> 3
    out[..., E012] += D[0][..., E12] - D[1][..., E02] + D[2][..., E01]
    out[..., E013] += D[0][..., E13] - D[1][..., E03] + D[3][..., E01]
    out[..., E023] += D[0][..., E23] - D[2][..., E03] + D[3][..., E02]
    out[..., E123] += D[1][..., E23] - D[2][..., E13] + D[3][..., E12]

    # grade 3 -> 4
    out[..., E] += (D[0][..., E123] - D[1][..., E023]
                    + D[2][..., E013] - D[3][..., E012])

    # grade 4 -> nothing
    return FormField(a.shape, out)


def delta_c(a: FormField) -> FormField:
    """Discrete codifferential, grade r -> r-1, gradewise by linearity."""
    D = [_d(a, mu) for mu in range(4)]
    out = np.zeros_like(a.data)

    # grade 0 -> nothing

    # grade 1 -> 0
    out[..., X] += (D[0][..., E0] - D[1][..., E1]
                    - D[2][..., E2] - D[3][..., E3])

    # grade 2 -> 1
    out[..., E0] += D[1][..., E01] + D[2][..., E02] + D[3][..., E03]
    out[..., E1] += D[0][..., E01] + D[2][..., E12] + D[3][..., E13]
    out[..., E2] += D[0][..., E02] - D[1][..., E12] + D[3][..., E23]
    out[..., E3] += D[0][..., E03] - D[1][..., E13] - D[2][..., E23]

    # grade 3 -> 2
    out[..., E01] += -D[2][..., E012] - D[3][..., E013]
    out[..., E02] += D[1][..., E012] - D[3][..., E023]
    out[..., E03] += D[1][..., E013] + D[2][..., E023]
    out[..., E12] += D[0][..., E012] - D[3][..., E123]
    out[..., E13] += D[0][..., E013] + D[2][..., E123]
    out[..., E23] += D[0][..., E023] - D[1][..., E123]

    # grade 4 -> 3
    out[..., E012] += D[3][..., E]
    out[..., E013] += -D[2][..., E]
    out[..., E023] += D[1][..., E]
    out[..., E123] += D[0][..., E]

    return FormField(a.shape, out)


def dirac(a: FormField) -> FormField:
    """Algebraic route sum_mu e_mu delta_mu(a); equals d_c(a) + delta_c(a)."""
    out = forms.zero(a.shape)
    for mu in range(4):
        out = out + forms.clifford_mul(forms.basis_e(a.shape, mu), delta_mu(a, mu))
    return out
