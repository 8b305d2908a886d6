"""Residuals of the four discrete Dirac-type equations and the projector
algebra that moves solutions between them.

Every equation is exposed as residual(kind, omega, m) = LHS - RHS, so a
form solves the equation iff its residual vanishes.  The Hestenes and
Joyce systems additionally have literal componentwise implementations of
their eight difference equations, used as independent oracles against
the algebraic residuals.
"""

from __future__ import annotations

import warnings

import numpy as np

from . import calculus, forms
from .calculus import (E, E0, E01, E02, E03, E1, E12, E123, E13, E2, E23,
                       E3, E012, E013, E023, X, delta_mu, dirac)
from .forms import FormField, blade_form, clifford_mul, unit_x
from .lattice import LatticeShape

EQUATION_KINDS = ("dirac_kahler", "hestenes", "joyce", "volume")

PROJECTOR_KINDS = ("p0+", "p0-", "p12+", "p12-", "pe+", "pe-")

# Even blade b of a component equation (the one whose coefficient w^b
# carries the mass term) paired with the odd blade where the same
# equation sits inside the algebraic residual.
EVEN_ODD_PAIRS = ((X, E0), (E01, E1), (E02, E2), (E03, E3),
                  (E12, E012), (E13, E013), (E23, E023), (E, E123))


def _e0(shape):
    return blade_form(shape, E0)


def _e12(shape):
    return blade_form(shape, E12)


def _e(shape):
    return blade_form(shape, E)


def residual(kind: str, omega: FormField, m: complex) -> FormField:
    """LHS minus RHS of the named equation; zero iff omega solves it."""
    shape = omega.shape
    if kind == "dirac_kahler":
        return 1j * dirac(omega) - m * omega
    if kind == "hestenes":
        return -clifford_mul(dirac(omega), _e12(shape)) - m * clifford_mul(omega, _e0(shape))
    if kind == "joyce":
        return 1j * dirac(omega) - m * clifford_mul(omega, _e0(shape))
    if kind == "volume":
        return -dirac(omega) - m * clifford_mul(omega, _e(shape))
    raise ValueError(f"unknown equation kind {kind!r}")


def is_even(omega: FormField, tol: float = 0.0) -> bool:
    return forms.sup_norm(forms.odd_part(omega)) <= tol


def is_real(omega: FormField, tol: float = 0.0) -> bool:
    return forms.sup_norm(forms.imag_part(omega)) <= tol


def _warn_if_odd(omega: FormField, name: str):
    if not is_even(omega):
        warnings.warn(f"{name}: input has a nonzero odd part; it is ignored",
                      stacklevel=3)


def component_residual_hestenes(omega: FormField, m: complex) -> FormField:
    """The eight Hestenes difference equations evaluated literally.

    Equation residuals are packed on the even blade whose coefficient
    carries the mass term on the right-hand side.
    """
    _warn_if_odd(omega, "component_residual_hestenes")
    w = forms.even_part(omega).data
    D = [np.roll(w, -1, axis=mu) - w for mu in range(4)]
    out = np.zeros_like(w)
    out[..., X] = (D[0][..., E12] - D[1][..., E02] + D[2][..., E01]
                   + D[3][..., E]) - m * w[..., X]
    out[..., E01] = (D[2][..., X] + D[0][..., E02] - D[1][..., E12]
                     + D[3][..., E23]) - m * w[..., E01]
    out[..., E02] = (-D[1][..., X] - D[0][..., E01] - D[2][..., E12]
                     - D[3][..., E13]) - m * w[..., E02]
    out[..., E03] = (-D[1][..., E23] + D[2][..., E13] - D[3][..., E12]
                     - D[0][..., E]) - m * w[..., E03]
    out[..., E12] = (-D[0][..., X] - D[1][..., E01] - D[2][..., E02]
                     - D[3][..., E03]) - m * w[..., E12]
    out[..., E13] = (-D[0][..., E23] + D[2][..., E03] - D[3][..., E02]
                     - D[1][..., E]) - m * w[..., E13]
    out[..., E23] = (D[0][..., E13] - D[1][..., E03] + D[3][..., E01]
                     - D[2][..., E]) - m * w[..., E23]
    out[..., E] = (D[3][..., X] + D[0][..., E03] - D[1][..., E13]
                   - D[2][..., E23]) - m * w[..., E]
    return FormField(omega.shape, out)


def component_residual_joyce(omega: FormField, m: complex) -> FormField:
    """The eight Joyce difference equations evaluated literally.

    Same even-blade packing as the Hestenes oracle; the right-hand
    sides keep the signs of the displayed system (-m on e01, e02, e03
    and on the 4-form component).
    """
    _warn_if_odd(omega, "component_residual_joyce")
    w = forms.even_part(omega).data
    D = [np.roll(w, -1, axis=mu) - w for mu in range(4)]
    out = np.zeros_like(w)
    out[..., X] = 1j * (D[0][..., X] + D[1][..., E01] + D[2][..., E02]
                        + D[3][..., E03]) - m * w[..., X]
    out[..., E01] = 1j * (D[1][..., X] + D[0][..., E01] + D[2][..., E12]
                          + D[3][..., E13]) + m * w[..., E01]
    out[..., E02] = 1j * (D[2][..., X] + D[0][..., E02] - D[1][..., E12]
                          + D[3][..., E23]) + m * w[..., E02]
    out[..., E03] = 1j * (D[3][..., X] + D[0][..., E03] - D[1][..., E13]
                          - D[2][..., E23]) + m * w[..., E03]
    out[..., E12] = 1j * (D[0][..., E12] - D[1][..., E02] + D[2][..., E01]
                          + D[3][..., E]) - m * w[..., E12]
    out[..., E13] = 1j * (D[0][..., E13] - D[1][..., E03] + D[3][..., E01]
                          - D[2][..., E]) - m * w[..., E13]
    out[..., E23] = 1j * (D[0][..., E23] - D[2][..., E03] + D[3][..., E02]
                          + D[1][..., E]) - m * w[..., E23]
    out[..., E] = 1j * (D[1][..., E23] - D[2][..., E13] + D[3][..., E12]
                        + D[0][..., E]) + m * w[..., E]
    return FormField(omega.shape, out)


def projector(kind: str, shape: LatticeShape) -> FormField:
    """One of the six idempotent constant forms (x +/- e0)/2, (x +/- i e1e2)/2,
    (x +/- i e)/2."""
    sign = {"+": 1.0, "-": -1.0}.get(kind[-1])
    if sign is None or kind not in PROJECTOR_KINDS:
        raise ValueError(f"unknown projector kind {kind!r}")
    half_x = 0.5 * unit_x(shape)
    if kind.startswith("p0"):
        return half_x + sign * 0.5 * blade_form(shape, E0)
    if kind.startswith("p12"):
        return half_x + sign * 0.5j * blade_form(shape, E12)
    return half_x + sign * 0.5j * blade_form(shape, E)


# Sanctioned projector families, each listed in the order its parts
# appear in the corresponding decomposition.
_FAMILIES = {
    ("p0+", "p0-"): [("p0+",), ("p0-",)],
    ("p12+", "p12-"): [("p12+",), ("p12-",)],
    ("pe-", "pe+"): [("pe-",), ("pe+",)],
    ("p0+", "p0-", "p12+", "p12-"): [
        ("p0+", "p12+"), ("p0+", "p12-"), ("p0-", "p12+"), ("p0-", "p12-")],
    ("pe-", "pe+", "p0+", "p0-", "p12+", "p12-"): [
        ("pe-", "p0+", "p12+"), ("pe+", "p0+", "p12+"),
        ("pe-", "p0-", "p12+"), ("pe+", "p0-", "p12+"),
        ("pe-", "p0+", "p12-"), ("pe+", "p0+", "p12-"),
        ("pe-", "p0-", "p12-"), ("pe+", "p0-", "p12-")],
}


def decompose(omega: FormField, kinds) -> list[FormField]:
    """Right-multiplied projector parts of omega; the parts sum to omega.

    kinds must be a sanctioned family: a +/- pair, the fourfold
    {0} x {12} family, or the eightfold {e} x {0} x {12} family.
    """
    key = tuple(kinds)
    if key not in _FAMILIES:
        raise ValueError(f"unsupported projector family {key!r}")
    parts = []
    for combo in _FAMILIES[key]:
        part = omega
        for kind in combo:
            part = clifford_mul(part, projector(kind, omega.shape))
        parts.append(part)
    return parts


def mass_flip_hestenes(omega: FormField) -> FormField:
    """Right multiplication by e2 e3; swaps the +m and -m Hestenes sectors."""
    return clifford_mul(omega, blade_form(omega.shape, E23))


def mass_flip_volume(omega: FormField) -> FormField:
    """Right multiplication by e1 e2 e3; swaps the +m and -m sectors of the
    volume-form equation (and of the Dirac-Kahler projector parts)."""
    return clifford_mul(omega, blade_form(omega.shape, E123))


def _real_pair(omega: FormField, carrier_mask: int) -> tuple[FormField, FormField]:
    re2 = omega + forms.conjugate(omega)          # 2 Re(omega)
    im2 = omega - forms.conjugate(omega)          # 2i Im(omega)
    tail = clifford_mul(0.5j * im2, blade_form(omega.shape, carrier_mask))
    return 0.5 * re2 + tail, 0.5 * re2 - tail


def real_pair_hestenes(omega: FormField) -> tuple[FormField, FormField]:
    """(omega_plus, omega_minus) with carrier e1 e2; both are real-valued
    and omega = (1/2)(o+ + o-) + (i/2)(o+ - o-) e1 e2 reconstructs."""
    return _real_pair(omega, E12)


def real_pair_volume(omega: FormField) -> tuple[FormField, FormField]:
    """(omega_plus, omega_minus) with carrier e; both are real-valued and
    omega = (1/2)(o+ + o-) + (i/2)(o+ - o-) e reconstructs."""
    return _real_pair(omega, E)


def reconstruct_hestenes(plus: FormField, minus: FormField) -> FormField:
    return 0.5 * (plus + minus) + clifford_mul(
        0.5j * (plus - minus), blade_form(plus.shape, E12))


def reconstruct_volume(plus: FormField, minus: FormField) -> FormField:
    return 0.5 * (plus + minus) + clifford_mul(
        0.5j * (plus - minus), blade_form(plus.shape, E))
