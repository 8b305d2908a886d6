"""Plane-wave eigenmodes of the discrete equations.

On the periodic lattice each equation block-diagonalizes over discrete
momenta: the forward difference acting on exp(2 pi i n.k / N) multiplies
by the symbol lambda_mu = exp(2 pi i n_mu / N_mu) - 1, so each momentum
reduces the equation to a dense 16x16 generalized eigenproblem
L psi = m R psi in the blade basis.  The resulting modes are the ground
truth for every solution-dependent decomposition test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import NBLADES, PRODUCT_MASK, PRODUCT_SIGN, blade_mask
from .calculus import E, E0, E12
from .forms import FormField
from .lattice import LatticeShape

_EIG_TOL = 1e-8


class EigenSolveError(RuntimeError):
    pass


def left_mul_matrix(mask: int) -> np.ndarray:
    """Matrix of psi -> blade * psi in the blade basis."""
    out = np.zeros((NBLADES, NBLADES))
    for j in range(NBLADES):
        out[PRODUCT_MASK[mask, j], j] = PRODUCT_SIGN[mask, j]
    return out


def right_mul_matrix(mask: int) -> np.ndarray:
    """Matrix of psi -> psi * blade in the blade basis."""
    out = np.zeros((NBLADES, NBLADES))
    for j in range(NBLADES):
        out[PRODUCT_MASK[j, mask], j] = PRODUCT_SIGN[j, mask]
    return out


def momentum_symbols(n, shape: LatticeShape) -> tuple[complex, complex, complex, complex]:
    """Forward-difference symbols lambda_mu = exp(2 pi i n_mu / N_mu) - 1."""
    return tuple(np.exp(2j * np.pi * n[mu] / shape.extents[mu]) - 1.0
                 for mu in range(4))


def symbol_matrix(kind: str, lam) -> tuple[np.ndarray, np.ndarray]:
    """(L, R) of the momentum-space equation L psi = m R psi.

    L applies the equation's left-hand operator (left multiplication by
    sum_mu lambda_mu e_mu with the equation's prefactor, then a right
    e1 e2 factor for the Hestenes form); R is right multiplication by
    the mass carrier.
    """
    grad = sum(lam[mu] * left_mul_matrix(blade_mask(mu)) for mu in range(4))
    grad = grad.astype(complex)
    if kind == "dirac_kahler":
        return 1j * grad, np.eye(NBLADES, dtype=complex)
    if kind == "hestenes":
        return -right_mul_matrix(E12) @ grad, right_mul_matrix(E0).astype(complex)
    if kind == "joyce":
        return 1j * grad, right_mul_matrix(E0).astype(complex)
    if kind == "volume":
        return -grad, right_mul_matrix(E).astype(complex)
    raise ValueError(f"unknown equation kind {kind!r}")


@dataclass(frozen=True)
class MomentumMode:
    n: tuple[int, int, int, int]
    lam: tuple[complex, complex, complex, complex]
    mass: complex
    amplitude: np.ndarray  # 16 complex blade components, unit norm


def _canonical_vector(v: np.ndarray) -> np.ndarray:
    # Fix the overall phase: first component over 1e-8 in modulus made
    # real and positive.
    for c in v:
        if abs(c) > 1e-8:
            return v * (np.conj(c) / abs(c))
    return v


def _eigenspace(A: np.ndarray, m: complex) -> list[np.ndarray]:
    # Orthonormal nullspace basis of (A - m I) via SVD; empty if m is not
    # an eigenvalue.
    _, s, vh = np.linalg.svd(A - m * np.eye(NBLADES))
    scale = max(1.0, float(s[0]))
    null = [np.conj(vh[i]) for i in range(NBLADES) if s[i] <= _EIG_TOL * scale]
    vecs = sorted((_canonical_vector(v) for v in null),
                  key=lambda v: tuple(np.round(np.concatenate([v.real, v.imag]), 9)))
    return vecs


def eigenmodes(kind: str, shape: LatticeShape, n) -> list[MomentumMode]:
    """Eigenmodes at momentum n, deterministically ordered by mass.

    The operator R^-1 L squares to a scalar matrix (the Clifford square
    of the gradient symbol), so the eigenvalues are the two square roots
    of that scalar and each eigenspace is an SVD nullspace.  At momenta
    where the scalar vanishes but the operator does not, the operator is
    nilpotent and only the genuine (mass zero) eigenvectors are
    returned.
    """
    n = tuple(int(v) for v in n)
    if len(n) != 4 or any(not 0 <= n[mu] < shape.extents[mu] for mu in range(4)):
        raise ValueError(f"momentum {n} invalid for shape {shape.extents}")
    lam = momentum_symbols(n, shape)
    L, R = symbol_matrix(kind, lam)
    A = np.linalg.solve(R, L)

    sq = A @ A
    scalar = complex(np.trace(sq)) / NBLADES
    if np.max(np.abs(sq - scalar * np.eye(NBLADES))) > 1e-10:
        raise EigenSolveError(
            f"operator square is not scalar for kind={kind} n={n}")

    if abs(scalar) <= _EIG_TOL:
        masses = [0j]
    else:
        root = complex(np.sqrt(scalar))
        masses = sorted((root, -root),
                        key=lambda z: (round(z.real, 9), round(z.imag, 9)))

    modes = []
    for m in masses:
        vecs = _eigenspace(A, m)
        if not vecs:
            raise EigenSolveError(
                f"no eigenvectors for kind={kind} n={n} mass={m}")
        for v in vecs:
            modes.append(MomentumMode(n=n, lam=lam, mass=m, amplitude=v))
    return modes


def plane_wave(mode: MomentumMode, shape: LatticeShape) -> FormField:
    """Lattice form with coefficients amplitude_b exp(2 pi i n.k / N)."""
    if any(not 0 <= mode.n[mu] < shape.extents[mu] for mu in range(4)):
        raise ValueError(f"momentum {mode.n} invalid for shape {shape.extents}")
    phase = np.zeros(shape.extents, dtype=complex)
    grids = np.meshgrid(*(np.arange(nmu) for nmu in shape.extents), indexing="ij")
    expo = sum(mode.n[mu] * grids[mu] / shape.extents[mu] for mu in range(4))
    phase = np.exp(2j * np.pi * expo)
    return FormField(shape, phase[..., None] * mode.amplitude)
