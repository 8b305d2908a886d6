"""Acceptance gate: one test per release criterion, each printing a
pass/fail line with the max observed residual at its pinned tolerance."""

import subprocess
import sys

import numpy as np
import pytest

from dklattice import calculus, equations, forms, solver
from dklattice.calculus import E12, E123, E23, d_c, delta_c, dirac
from dklattice.clifford import (MASK_E, METRIC, NBLADES, PRODUCT_MASK,
                                PRODUCT_SIGN, blade_mask, blade_product)
from dklattice.equations import (EVEN_ODD_PAIRS, component_residual_hestenes,
                                 component_residual_joyce, decompose,
                                 mass_flip_hestenes, mass_flip_volume,
                                 projector, real_pair_hestenes,
                                 real_pair_volume, reconstruct_hestenes,
                                 reconstruct_volume, residual)
from dklattice.forms import (blade_form, clifford_mul, even_part, imag_part,
                             random_form, sup_norm, unit_e, unit_x, zero)
from dklattice.formfile import read_form, write_form
from dklattice.lattice import LatticeShape
from dklattice.verify import _derive_scalar_factor, oracle_blade_product

S2 = LatticeShape((2, 2, 2, 2))
S3 = LatticeShape((3, 3, 3, 3))
S4 = LatticeShape((4, 4, 4, 4))


def _report(num, label, max_residual, tol):
    ok = max_residual <= tol
    print(f"ACCEPT {num} {label}: max_residual={max_residual:.3e} "
          f"tol={tol:.0e} {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) residual {max_residual} > {tol}"


def _rand_mass(rng):
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def test_criterion_1_clifford_table():
    err = 0.0
    for a in range(NBLADES):
        for b in range(NBLADES):
            s, m = oracle_blade_product(a, b)
            err = max(err, abs(PRODUCT_SIGN[a, b] - s), abs(PRODUCT_MASK[a, b] - m))
    for mu in range(4):
        for nu in range(4):
            s1, m1 = blade_product(blade_mask(mu), blade_mask(nu))
            s2, m2 = blade_product(blade_mask(nu), blade_mask(mu))
            expect = 2 * METRIC[mu] if mu == nu else 0
            err = max(err, abs(m1 - m2), abs(s1 + s2 - expect) if m1 == m2 else 1)
    err = max(err, 0 if blade_product(MASK_E, MASK_E) == (-1, 0) else 1)
    _report(1, "clifford-table", err, 0.0)


def test_criterion_2_dual_route():
    rng = np.random.default_rng(100)
    err = 0.0
    for _ in range(1000):
        om = random_form(S3, rng)
        err = max(err, sup_norm(d_c(om) + delta_c(om) - dirac(om)))
    _report(2, "dual-route-3.9", err, 1e-12)


def test_criterion_3_component_oracles():
    rng = np.random.default_rng(101)
    e0 = forms.basis_e(S3, 0)
    err = 0.0
    for _ in range(1000):
        om = even_part(random_form(S3, rng))
        m = _rand_mass(rng)
        comp_h = component_residual_hestenes(om, m)
        err = max(err, sup_norm(clifford_mul(comp_h, e0)
                                - residual("hestenes", om, m)))
        comp_j = component_residual_joyce(om, m)
        alg_j = residual("joyce", om, m)
        for even_b, odd_b in EVEN_ODD_PAIRS:
            err = max(err, float(np.max(np.abs(
                comp_j.data[..., even_b] - alg_j.data[..., odd_b]))))
    _report(3, "component-oracles", err, 1e-12)


def test_criterion_4_projector_algebra():
    P = {k: projector(k, S2) for k in equations.PROJECTOR_KINDS}
    e0 = forms.basis_e(S2, 0)
    e12 = blade_form(S2, E12)
    ev = unit_e(S2)
    err = 0.0
    for k in P:
        err = max(err, sup_norm(clifford_mul(P[k], P[k]) - P[k]))
    for a in ("p0+", "p0-", "pe+", "pe-"):
        for b in ("p12+", "p12-"):
            err = max(err, sup_norm(clifford_mul(P[a], P[b])
                                    - clifford_mul(P[b], P[a])))
    for k, c, f in (("p0+", e0, 1), ("p0-", e0, -1), ("p12+", e12, 1j),
                    ("p12-", e12, -1j), ("pe+", ev, 1j), ("pe-", ev, -1j)):
        err = max(err, sup_norm(clifford_mul(c, P[k]) - clifford_mul(P[k], c)))
        err = max(err, sup_norm(P[k] - f * clifford_mul(P[k], c)))
    _report(4, "projector-algebra", err, 0.0)


def test_criterion_5_nilpotency():
    rng = np.random.default_rng(102)
    err = 0.0
    for _ in range(100):
        om = random_form(S3, rng)
        err = max(err, sup_norm(d_c(d_c(om))), sup_norm(delta_c(delta_c(om))))
    _report(5, "nilpotency", err, 1e-13)


def test_criterion_6_decomposition_propositions():
    err = sum_err = 0.0

    joyce_modes = [md for md in solver.eigenmodes("joyce", S3, (1, 0, 0, 0))
                   if abs(md.mass) > 1e-8][:4]
    assert joyce_modes
    for mode in joyce_modes:
        om = solver.plane_wave(mode, S3)
        m = mode.mass
        p0 = decompose(om, ("p0+", "p0-"))
        err = max(err, sup_norm(residual("dirac_kahler", p0[0], m)),
                  sup_norm(residual("dirac_kahler", p0[1], -m)))
        p12 = decompose(om, ("p12+", "p12-"))
        err = max(err, sup_norm(residual("hestenes", p12[0], m)),
                  sup_norm(residual("hestenes", p12[1], -m)))
        quad = decompose(om, ("p0+", "p0-", "p12+", "p12-"))
        total = zero(S3)
        for part, (s0, s12) in zip(quad, ((1, 1), (1, -1), (-1, 1), (-1, -1))):
            err = max(err, sup_norm(residual("dirac_kahler", part, s0 * m)),
                      sup_norm(residual("hestenes", part, s12 * m)))
            total = total + part
        sum_err = max(sum_err, sup_norm(total - om))

    signs = {(-1, 1, 1): 1, (1, 1, 1): -1, (-1, -1, 1): -1, (1, -1, 1): 1,
             (-1, 1, -1): -1, (1, 1, -1): 1, (-1, -1, -1): 1, (1, -1, -1): -1}
    combos = [(-1, 1, 1), (1, 1, 1), (-1, -1, 1), (1, -1, 1),
              (-1, 1, -1), (1, 1, -1), (-1, -1, -1), (1, -1, -1)]
    volume_modes = [md for md in solver.eigenmodes("volume", S3, (0, 1, 0, 0))
                    if abs(md.mass) > 1e-8][:4]
    assert volume_modes
    for mode in volume_modes:
        om = solver.plane_wave(mode, S3)
        m = mode.mass
        pe = decompose(om, ("pe-", "pe+"))
        err = max(err, sup_norm(residual("dirac_kahler", pe[0], m)),
                  sup_norm(residual("dirac_kahler", pe[1], -m)))
        octo = decompose(om, ("pe-", "pe+", "p0+", "p0-", "p12+", "p12-"))
        total = zero(S3)
        for part, combo in zip(octo, combos):
            err = max(err, sup_norm(residual("hestenes", part, signs[combo] * m)))
            total = total + part
        sum_err = max(sum_err, sup_norm(total - om))

    _report(6, "decomposition-residuals", err, 1e-10)
    _report(6, "decomposition-part-sums", sum_err, 1e-13)


def test_criterion_7_sign_flip_maps():
    x = unit_x(S2)
    m0 = 0.7 + 0.3j
    e23 = blade_form(S2, E23)
    e123 = blade_form(S2, E123)
    # signs bootstrapped on the unit form, then checked on random data
    s_h = _derive_scalar_factor(
        residual("hestenes", clifford_mul(x, e23), -m0),
        clifford_mul(residual("hestenes", x, m0), e23))
    s_v = _derive_scalar_factor(
        residual("volume", clifford_mul(x, e123), -m0),
        clifford_mul(residual("volume", x, m0), e123))
    err = max(abs(s_h - (-1)), abs(s_v - 1))
    rng = np.random.default_rng(103)
    for _ in range(100):
        om = random_form(S2, rng)
        m = _rand_mass(rng)
        err = max(err, sup_norm(
            residual("hestenes", mass_flip_hestenes(om), -m)
            + clifford_mul(residual("hestenes", om, m), e23)))
        err = max(err, sup_norm(
            residual("volume", mass_flip_volume(om), -m)
            - clifford_mul(residual("volume", om, m), e123)))
    _report(7, "sign-flip-maps", err, 1e-12)


def test_criterion_8_reconstructions():
    rng = np.random.default_rng(104)
    err_rec = err_imag = 0.0
    for _ in range(100):
        om = even_part(random_form(S2, rng))
        plus, minus = real_pair_hestenes(om)
        err_imag = max(err_imag, sup_norm(imag_part(plus)),
                       sup_norm(imag_part(minus)))
        err_rec = max(err_rec, sup_norm(reconstruct_hestenes(plus, minus) - om))
        om = random_form(S2, rng)
        plus, minus = real_pair_volume(om)
        err_imag = max(err_imag, sup_norm(imag_part(plus)),
                       sup_norm(imag_part(minus)))
        err_rec = max(err_rec, sup_norm(reconstruct_volume(plus, minus) - om))
    _report(8, "reconstructions", err_rec, 1e-13)
    _report(8, "real-pair-imag-parts", err_imag, 1e-14)

    # real-mass mode on 4x4x4x4 at momentum (0,2,0,0): masses +/-2
    modes = [md for md in solver.eigenmodes("dirac_kahler", S4, (0, 2, 0, 0))
             if abs(md.mass.imag) < 1e-10 and abs(md.mass) > 1e-8]
    assert {round(md.mass.real, 9) for md in modes} == {2, -2}
    err = 0.0
    ev = unit_e(S4)
    for mode in modes[:4]:
        om = solver.plane_wave(mode, S4)
        m = mode.mass
        plus, minus = real_pair_volume(om)
        err = max(err,
                  sup_norm(residual("volume", 0.5 * minus, m)),
                  sup_norm(residual("volume", 0.5 * clifford_mul(minus, ev), m)),
                  sup_norm(residual("volume", 0.5 * plus, -m)),
                  sup_norm(residual("volume", 0.5 * clifford_mul(plus, ev), -m)))
    _report(8, "real-mass-volume-solutions", err, 1e-10)


def test_criterion_9_solver_soundness():
    err = 0.0
    for kind in equations.EQUATION_KINDS:
        for n in ((0, 0, 0, 0), (1, 0, 0, 0), (1, 2, 0, 1)):
            for mode in solver.eigenmodes(kind, S3, n):
                om = solver.plane_wave(mode, S3)
                err = max(err, sup_norm(residual(kind, om, mode.mass)))
    _report(9, "eigenmode-residuals", err, 1e-10)

    # Clifford square law pins every Dirac-Kahler eigen-mass
    err = 0.0
    for n in ((1, 0, 0, 0), (1, 2, 0, 1), (2, 1, 1, 0)):
        lam = solver.momentum_symbols(n, S3)
        # left operator is i * gradient symbol, so masses square to
        # (i)^2 times the Clifford square of the symbol
        m_sq = (1j) ** 2 * (lam[0] ** 2 - lam[1] ** 2 - lam[2] ** 2 - lam[3] ** 2)
        for mode in solver.eigenmodes("dirac_kahler", S3, n):
            err = max(err, abs(mode.mass ** 2 - m_sq))
    _report(9, "mass-square-law", err, 1e-12)


def test_criterion_10_determinism(tmp_path):
    cmd = [sys.executable, "-m", "dklattice.cli", "verify",
           "--shape", "2x2x2x2", "--seed", "11", "--suite", "projectors"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    byte_identical = a.stdout == b.stdout and len(a.stdout) > 0

    field = random_form(S2, np.random.default_rng(12))
    path = tmp_path / "f.json"
    write_form(path, field)
    exact = np.array_equal(read_form(path).data, field.data)
    _report(10, "determinism-and-round-trip",
            0.0 if (byte_identical and exact) else 1.0, 0.0)
