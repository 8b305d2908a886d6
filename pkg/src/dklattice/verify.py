"""Verification suites behind `dklattice verify`.

Each suite returns report rows (check id, max observed residual,
tolerance).  Wherever a proposition's proof only uses constant-form
commutation, the check runs on arbitrary random forms (the strongest
formulation); solution-dependent claims use solver-built plane-wave
eigenmodes.  Sign factors that the algebra fixes but that are easy to
get wrong are first derived on the unit form and then asserted on
random data.
"""

from __future__ import annotations

import numpy as np

from . import calculus, equations, forms, solver
from .calculus import E12, E123, E23
from .clifford import METRIC, NBLADES, PRODUCT_MASK, PRODUCT_SIGN, grade
from .equations import EVEN_ODD_PAIRS, decompose, projector, residual
from .forms import FormField, blade_form, clifford_mul, random_form, sup_norm, unit_x
from .lattice import LatticeShape

DEFAULT_TOL = 1e-10

Row = tuple[str, float, float]


def oracle_blade_product(a: int, b: int) -> tuple[int, int]:
    """Brute-force blade product on explicit generator strings.

    Sorts the concatenated generator list by adjacent transpositions
    (each swap flips the sign) and contracts adjacent repeats with the
    metric factor.  Independent of the bitmask implementation.
    """
    gens = [i for i in range(4) if a & (1 << i)] + \
           [i for i in range(4) if b & (1 << i)]
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(gens) - 1):
            if gens[i] > gens[i + 1]:
                gens[i], gens[i + 1] = gens[i + 1], gens[i]
                sign = -sign
                changed = True
            elif gens[i] == gens[i + 1]:
                sign *= METRIC[gens[i]]
                del gens[i:i + 2]
                changed = True
                break
    mask = 0
    for g in gens:
        mask |= 1 << g
    return sign, mask


def _single_site_random(rng) -> np.ndarray:
    return rng.uniform(-1, 1, NBLADES) + 1j * rng.uniform(-1, 1, NBLADES)


def suite_clifford(shape: LatticeShape, rng, count: int) -> list[Row]:
    rows: list[Row] = []

    err = 0.0
    for a in range(NBLADES):
        for b in range(NBLADES):
            s, m = oracle_blade_product(a, b)
            err = max(err, abs(PRODUCT_SIGN[a, b] - s),
                      abs(PRODUCT_MASK[a, b] - m))
    rows.append(("product-table-vs-string-oracle", err, 0.0))

    # e_mu e_nu + e_nu e_mu = 2 g_munu x over all 16 ordered pairs
    err = 0.0
    x = unit_x(shape)
    e = [forms.basis_e(shape, mu) for mu in range(4)]
    for mu in range(4):
        for nu in range(4):
            g = METRIC[mu] if mu == nu else 0
            anti = clifford_mul(e[mu], e[nu]) + clifford_mul(e[nu], e[mu])
            err = max(err, sup_norm(anti - 2 * g * x))
    rows.append(("3.2-anticommutation", err, 0.0))

    ee = clifford_mul(forms.unit_e(shape), forms.unit_e(shape))
    rows.append(("3.4-volume-square", sup_norm(ee + x), 0.0))

    vol = x
    for mu in range(4):
        vol = clifford_mul(vol, e[mu])
    rows.append(("3.4-volume-factorization", sup_norm(vol - forms.unit_e(shape)), 0.0))

    err = 0.0
    for a in range(NBLADES):
        for b in range(NBLADES):
            sab, mab = PRODUCT_SIGN[a, b], PRODUCT_MASK[a, b]
            for c in range(NBLADES):
                sbc, mbc = PRODUCT_SIGN[b, c], PRODUCT_MASK[b, c]
                left = (sab * PRODUCT_SIGN[mab, c], PRODUCT_MASK[mab, c])
                right = (sbc * PRODUCT_SIGN[a, mbc], PRODUCT_MASK[a, mbc])
                err = max(err, abs(left[0] - right[0]), abs(left[1] - right[1]))
    rows.append(("associativity-16^3", err, 0.0))

    err = 0.0
    for _ in range(count):
        om = random_form(shape, rng)
        err = max(err, sup_norm(clifford_mul(x, om) - om),
                  sup_norm(clifford_mul(om, x) - om))
    rows.append(("unit-element", err, 0.0))
    return rows


def suite_calculus(shape: LatticeShape, rng, count: int) -> list[Row]:
    rows: list[Row] = []

    err_dual = err_dd = err_deldel = 0.0
    for _ in range(count):
        om = random_form(shape, rng)
        two_route = calculus.d_c(om) + calculus.delta_c(om) - calculus.dirac(om)
        err_dual = max(err_dual, sup_norm(two_route))
        err_dd = max(err_dd, sup_norm(calculus.d_c(calculus.d_c(om))))
        err_deldel = max(err_deldel, sup_norm(calculus.delta_c(calculus.delta_c(om))))
    rows.append(("3.9-dual-route", err_dual, 1e-12))
    rows.append(("dc-nilpotent", err_dd, 1e-13))
    rows.append(("deltac-nilpotent", err_deldel, 1e-13))

    # difference operators commute
    err = 0.0
    om = random_form(shape, rng)
    for mu in range(4):
        for nu in range(4):
            a = calculus.delta_mu(calculus.delta_mu(om, mu), nu)
            b = calculus.delta_mu(calculus.delta_mu(om, nu), mu)
            err = max(err, sup_norm(a - b))
    rows.append(("delta-commute", err, 1e-13))

    # dirac commutes with right multiplication by any constant form
    err = 0.0
    for _ in range(min(count, 50)):
        om = random_form(shape, rng)
        p = forms.constant(shape, _single_site_random(rng))
        lhs = calculus.dirac(clifford_mul(om, p))
        rhs = clifford_mul(calculus.dirac(om), p)
        err = max(err, sup_norm(lhs - rhs))
    rows.append(("dirac-right-constant-commute", err, 1e-12))

    # component oracles vs algebraic residuals, paired blade by blade
    err_h = err_j = 0.0
    e0 = blade_form(shape, calculus.E0)
    for _ in range(count):
        om = forms.even_part(random_form(shape, rng))
        m = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        comp_h = equations.component_residual_hestenes(om, m)
        err_h = max(err_h, sup_norm(clifford_mul(comp_h, e0)
                                    - residual("hestenes", om, m)))
        comp_j = equations.component_residual_joyce(om, m)
        alg_j = residual("joyce", om, m)
        for even_b, odd_b in EVEN_ODD_PAIRS:
            err_j = max(err_j, float(np.max(np.abs(
                comp_j.data[..., even_b] - alg_j.data[..., odd_b]))))
    rows.append(("hestenes-component-oracle", err_h, 1e-12))
    rows.append(("joyce-component-oracle", err_j, 1e-12))
    return rows


def suite_projectors(shape: LatticeShape, rng, count: int) -> list[Row]:
    rows: list[Row] = []
    x = unit_x(shape)
    e0 = blade_form(shape, calculus.E0)
    e12 = blade_form(shape, E12)
    ev = forms.unit_e(shape)
    P = {k: projector(k, shape) for k in equations.PROJECTOR_KINDS}

    err = max(sup_norm(clifford_mul(P[k], P[k]) - P[k])
              for k in equations.PROJECTOR_KINDS)
    rows.append(("3.5-idempotence", err, 0.0))

    err = max(sup_norm(P["p0+"] + P["p0-"] - x),
              sup_norm(P["p12+"] + P["p12-"] - x),
              sup_norm(P["pe+"] + P["pe-"] - x))
    rows.append(("3.5-partition-of-unity", err, 0.0))

    err = 0.0
    for a in ("p0+", "p0-"):
        for b in ("p12+", "p12-"):
            err = max(err, sup_norm(clifford_mul(P[a], P[b])
                                    - clifford_mul(P[b], P[a])))
    for a in ("pe+", "pe-"):
        for b in ("p12+", "p12-"):
            err = max(err, sup_norm(clifford_mul(P[a], P[b])
                                    - clifford_mul(P[b], P[a])))
    rows.append(("3.6-commutation", err, 0.0))

    err = 0.0
    for k, c in (("p0+", e0), ("p0-", e0), ("p12+", e12), ("p12-", e12),
                 ("pe+", ev), ("pe-", ev)):
        err = max(err, sup_norm(clifford_mul(c, P[k]) - clifford_mul(P[k], c)))
    rows.append(("3.7-carrier-commutation", err, 0.0))

    err = 0.0
    for k, c, f in (("p0+", e0, 1), ("p0-", e0, -1),
                    ("p12+", e12, 1j), ("p12-", e12, -1j),
                    ("pe+", ev, 1j), ("pe-", ev, -1j)):
        err = max(err, sup_norm(P[k] - f * clifford_mul(P[k], c)))
    rows.append(("3.8-absorption", err, 0.0))
    return rows


def _derive_scalar_factor(lhs: FormField, rhs: FormField) -> complex:
    """Scalar c with lhs = c * rhs, read off the largest rhs component."""
    idx = np.unravel_index(np.argmax(np.abs(rhs.data)), rhs.data.shape)
    denom = rhs.data[idx]
    if abs(denom) < 1e-12:
        raise ValueError("reference side is zero; cannot derive factor")
    return complex(lhs.data[idx] / denom)


def _solution_modes(kind: str, shape: LatticeShape, n, limit: int = 4):
    all_modes = solver.eigenmodes(kind, shape, n)
    nonzero = [md for md in all_modes if abs(md.mass) > 1e-8]
    return (nonzero or all_modes)[:limit]


def suite_decompositions(shape: LatticeShape, rng, count: int) -> list[Row]:
    rows: list[Row] = []
    x = unit_x(shape)
    P = {k: projector(k, shape) for k in equations.PROJECTOR_KINDS}
    m0 = 0.7 + 0.3j  # any nonzero mass works for factor bootstraps

    # part sums of every sanctioned family reconstruct omega
    err = 0.0
    for family in (("p0+", "p0-"), ("p12+", "p12-"), ("pe-", "pe+"),
                   ("p0+", "p0-", "p12+", "p12-"),
                   ("pe-", "pe+", "p0+", "p0-", "p12+", "p12-")):
        for _ in range(min(count, 20)):
            om = random_form(shape, rng)
            total = forms.zero(shape)
            for part in decompose(om, family):
                total = total + part
            err = max(err, sup_norm(total - om))
    rows.append(("3.12-3.14-3.18-part-sums", err, 1e-13))

    # operator-level intertwinings, valid for every form
    err = 0.0
    for _ in range(min(count, 50)):
        om = random_form(shape, rng)
        m = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        jres = residual("joyce", om, m)
        for k, s in (("p0+", 1), ("p0-", -1)):
            err = max(err, sup_norm(residual("dirac_kahler", clifford_mul(om, P[k]), s * m)
                                    - clifford_mul(jres, P[k])))
    rows.append(("3.4-intertwining", err, 1e-12))

    err = 0.0
    for k, s in (("p12+", 1), ("p12-", -1)):
        lhs0 = residual("hestenes", clifford_mul(x, P[k]), s * m0)
        rhs0 = clifford_mul(residual("joyce", x, m0), P[k])
        c = _derive_scalar_factor(lhs0, rhs0)
        for _ in range(min(count, 50)):
            om = random_form(shape, rng)
            m = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            lhs = residual("hestenes", clifford_mul(om, P[k]), s * m)
            rhs = clifford_mul(residual("joyce", om, m), P[k])
            err = max(err, sup_norm(lhs - c * rhs))
    rows.append(("3.5-intertwining", err, 1e-12))

    err = 0.0
    for k, s in (("pe-", 1), ("pe+", -1)):
        lhs0 = residual("dirac_kahler", clifford_mul(x, P[k]), s * m0)
        rhs0 = clifford_mul(residual("volume", x, m0), P[k])
        c = _derive_scalar_factor(lhs0, rhs0)
        for _ in range(min(count, 50)):
            om = random_form(shape, rng)
            m = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            lhs = residual("dirac_kahler", clifford_mul(om, P[k]), s * m)
            rhs = clifford_mul(residual("volume", om, m), P[k])
            err = max(err, sup_norm(lhs - c * rhs))
    rows.append(("3.8-intertwining", err, 1e-12))

    # mass-sign maps, signs bootstrapped on the unit form
    e23 = blade_form(shape, E23)
    e123 = blade_form(shape, E123)
    s_h = _derive_scalar_factor(
        residual("hestenes", clifford_mul(x, e23), -m0),
        clifford_mul(residual("hestenes", x, m0), e23))
    s_v = _derive_scalar_factor(
        residual("volume", clifford_mul(x, e123), -m0),
        clifford_mul(residual("volume", x, m0), e123))
    err = max(abs(s_h - (-1)), abs(s_v - 1))
    for _ in range(min(count, 50)):
        om = random_form(shape, rng)
        m = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        err = max(err, sup_norm(
            residual("hestenes", equations.mass_flip_hestenes(om), -m)
            - s_h * clifford_mul(residual("hestenes", om, m), e23)))
        err = max(err, sup_norm(
            residual("volume", equations.mass_flip_volume(om), -m)
            - s_v * clifford_mul(residual("volume", om, m), e123)))
    rows.append(("mass-sign-maps", err, 1e-12))

    err = max(sup_norm(clifford_mul(P["p12+"], e23) - clifford_mul(e23, P["p12-"])),
              sup_norm(clifford_mul(P["p12-"], e23) - clifford_mul(e23, P["p12+"])),
              sup_norm(clifford_mul(P["pe+"], e123) - clifford_mul(e123, P["pe-"])),
              sup_norm(clifford_mul(P["pe-"], e123) - clifford_mul(e123, P["pe+"])))
    rows.append(("mass-map-projector-swap", err, 0.0))

    # real pairs: reality, projector agreement, reconstruction
    err_real = err_agree = err_rec = 0.0
    e12 = blade_form(shape, E12)
    ev = forms.unit_e(shape)
    for _ in range(min(count, 50)):
        om = forms.even_part(random_form(shape, rng))
        plus, minus = equations.real_pair_hestenes(om)
        err_real = max(err_real, sup_norm(forms.imag_part(plus)),
                       sup_norm(forms.imag_part(minus)))
        err_agree = max(err_agree,
                        sup_norm(clifford_mul(om, P["p12+"]) - clifford_mul(plus, P["p12+"])),
                        sup_norm(clifford_mul(om, P["p12-"]) - clifford_mul(minus, P["p12-"])))
        err_rec = max(err_rec, sup_norm(equations.reconstruct_hestenes(plus, minus) - om))

        om = random_form(shape, rng)
        plus, minus = equations.real_pair_volume(om)
        err_real = max(err_real, sup_norm(forms.imag_part(plus)),
                       sup_norm(forms.imag_part(minus)))
        err_agree = max(err_agree,
                        sup_norm(clifford_mul(om, P["pe+"]) - clifford_mul(plus, P["pe+"])),
                        sup_norm(clifford_mul(om, P["pe-"]) - clifford_mul(minus, P["pe-"])))
        err_rec = max(err_rec, sup_norm(equations.reconstruct_volume(plus, minus) - om))
    rows.append(("3.15-3.19-real-valued", err_real, 1e-14))
    rows.append(("3.15-3.19-projector-agreement", err_agree, 1e-13))
    rows.append(("3.16-3.20-reconstruction", err_rec, 1e-13))

    # solution-dependent claims, on solver-built plane waves
    n = tuple(1 if shape.extents[mu] > 2 else 0 for mu in range(4))
    if all(v == 0 for v in n):
        n = (1, 0, 0, 0)

    err = 0.0
    for mode in _solution_modes("joyce", shape, n):
        om = solver.plane_wave(mode, shape)
        m = mode.mass
        parts0 = decompose(om, ("p0+", "p0-"))
        err = max(err, sup_norm(residual("dirac_kahler", parts0[0], m)),
                  sup_norm(residual("dirac_kahler", parts0[1], -m)))
        parts12 = decompose(om, ("p12+", "p12-"))
        err = max(err, sup_norm(residual("hestenes", parts12[0], m)),
                  sup_norm(residual("hestenes", parts12[1], -m)))
        quad = decompose(om, ("p0+", "p0-", "p12+", "p12-"))
        for part, (s0, s12) in zip(quad, ((1, 1), (1, -1), (-1, 1), (-1, -1))):
            err = max(err, sup_norm(residual("dirac_kahler", part, s0 * m)),
                      sup_norm(residual("hestenes", part, s12 * m)))
    rows.append(("3.4-3.5-3.14-on-solutions", err, DEFAULT_TOL))

    err = 0.0
    hestenes_sign = {  # Prop 3.9 sign assignment per (e, 0, 12) projector signs
        (-1, 1, 1): 1, (1, 1, 1): -1, (-1, -1, 1): -1, (1, -1, 1): 1,
        (-1, 1, -1): -1, (1, 1, -1): 1, (-1, -1, -1): 1, (1, -1, -1): -1,
    }
    octo_combos = [(-1, 1, 1), (1, 1, 1), (-1, -1, 1), (1, -1, 1),
                   (-1, 1, -1), (1, 1, -1), (-1, -1, -1), (1, -1, -1)]
    for mode in _solution_modes("volume", shape, n):
        om = solver.plane_wave(mode, shape)
        m = mode.mass
        parts_e = decompose(om, ("pe-", "pe+"))
        err = max(err, sup_norm(residual("dirac_kahler", parts_e[0], m)),
                  sup_norm(residual("dirac_kahler", parts_e[1], -m)))
        octo = decompose(om, ("pe-", "pe+", "p0+", "p0-", "p12+", "p12-"))
        for part, combo in zip(octo, octo_combos):
            err = max(err, sup_norm(residual("hestenes", part, hestenes_sign[combo] * m)))
    rows.append(("3.8-3.9-on-solutions", err, DEFAULT_TOL))

    # Prop 3.10 needs a real-mass mode; half-period momentum on even extents
    real_shape = LatticeShape((4, 4, 4, 4))
    err = 0.0
    found_real = False
    for mode in solver.eigenmodes("dirac_kahler", real_shape, (0, 2, 0, 0)):
        if abs(mode.mass.imag) > 1e-10 or abs(mode.mass) < 1e-8:
            continue
        found_real = True
        om = solver.plane_wave(mode, real_shape)
        m = mode.mass
        plus, minus = equations.real_pair_volume(om)
        ev4 = forms.unit_e(real_shape)
        err = max(err,
                  sup_norm(residual("volume", 0.5 * minus, m)),
                  sup_norm(residual("volume", 0.5 * clifford_mul(minus, ev4), m)),
                  sup_norm(residual("volume", 0.5 * plus, -m)),
                  sup_norm(residual("volume", 0.5 * clifford_mul(plus, ev4), -m)))
    if not found_real:
        err = float("inf")
    rows.append(("3.10-real-mass-solutions", err, DEFAULT_TOL))
    return rows


def suite_solver(shape: LatticeShape, rng, count: int) -> list[Row]:
    rows: list[Row] = []

    # Clifford square law for the symbol
    err = 0.0
    for _ in range(min(count, 20)):
        lam = tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(4))
        grad = sum(lam[mu] * solver.left_mul_matrix(1 << mu) for mu in range(4))
        sq = (lam[0] ** 2 - lam[1] ** 2 - lam[2] ** 2 - lam[3] ** 2) * np.eye(NBLADES)
        err = max(err, float(np.max(np.abs(grad @ grad - sq))))
    rows.append(("symbol-square-law", err, 1e-12))

    # every returned eigenmode solves its equation on the full lattice
    err = 0.0
    momenta = [(0, 0, 0, 0),
               tuple(1 if shape.extents[mu] > 2 else 0 for mu in range(4)),
               (1, 0, 1, 0)]
    for kind in equations.EQUATION_KINDS:
        for n in momenta:
            for mode in solver.eigenmodes(kind, shape, n):
                om = solver.plane_wave(mode, shape)
                err = max(err, sup_norm(residual(kind, om, mode.mass)))
    rows.append(("eigenmode-residuals", err, DEFAULT_TOL))

    # plane-wave symbol: delta_mu acts as multiplication by lambda_mu
    err = 0.0
    for mode in solver.eigenmodes("dirac_kahler", shape, momenta[1])[:4]:
        om = solver.plane_wave(mode, shape)
        for mu in range(4):
            err = max(err, sup_norm(calculus.delta_mu(om, mu) - mode.lam[mu] * om))
    rows.append(("plane-wave-symbol", err, 1e-12))

    # Dirac-Kahler spectrum comes in +/- pairs
    err = 0.0
    for n in momenta[1:]:
        masses = sorted((md.mass for md in solver.eigenmodes("dirac_kahler", shape, n)),
                        key=lambda z: (round(z.real, 9), round(z.imag, 9)))
        paired = sorted((-z for z in masses),
                        key=lambda z: (round(z.real, 9), round(z.imag, 9)))
        err = max(err, max(abs(a - b) for a, b in zip(masses, paired)))
    rows.append(("spectrum-pairing", err, 1e-9))

    # half-period momentum gives the real masses +/-2 on even extents
    real_shape = LatticeShape((4, 4, 4, 4))
    masses = {round(md.mass.real, 9) + 1j * round(md.mass.imag, 9)
              for md in solver.eigenmodes("dirac_kahler", real_shape, (0, 2, 0, 0))}
    err = 0.0 if masses == {2 + 0j, -2 + 0j} else float("inf")
    rows.append(("half-period-real-masses", err, 0.0))
    return rows


SUITES = {
    "clifford": suite_clifford,
    "calculus": suite_calculus,
    "projectors": suite_projectors,
    "decompositions": suite_decompositions,
    "solver": suite_solver,
}


def run_suites(names, shape: LatticeShape, seed: int, count: int = 100) -> list[Row]:
    rng = np.random.default_rng(seed)
    rows: list[Row] = []
    for name in names:
        rows.extend(SUITES[name](shape, rng, count))
    return rows
