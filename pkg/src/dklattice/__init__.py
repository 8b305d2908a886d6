"""Clifford algebra of discrete forms on a periodic 4-D lattice.

Discrete inhomogeneous forms carry 16 complex blade coefficients per
site; the forward-difference exterior derivative and codifferential
combine into a lattice Dirac operator, and projector algebra moves
solutions between the Dirac-Kahler, Hestenes, Joyce, and volume-form
equations.  Plane-wave eigenmodes supply exact solutions for testing.
"""

from .lattice import LatticeShape, shift, sites
from .clifford import blade_mask, blade_name, blade_product, grade
from .forms import (FormField, basis_e, clifford_mul, conjugate, even_part,
                    grade_project, imag_part, odd_part, random_form,
                    real_part, sup_norm, unit_e, unit_x, zero)
from .calculus import d_c, delta_c, delta_mu, dirac
from .equations import (component_residual_hestenes, component_residual_joyce,
                        decompose, mass_flip_hestenes, mass_flip_volume,
                        projector, real_pair_hestenes, real_pair_volume,
                        residual)
from .solver import MomentumMode, eigenmodes, plane_wave, symbol_matrix

__all__ = [
    "LatticeShape", "shift", "sites",
    "blade_mask", "blade_name", "blade_product", "grade",
    "FormField", "basis_e", "clifford_mul", "conjugate", "even_part",
    "grade_project", "imag_part", "odd_part", "random_form", "real_part",
    "sup_norm", "unit_e", "unit_x", "zero",
    "d_c", "delta_c", "delta_mu", "dirac",
    "component_residual_hestenes", "component_residual_joyce", "decompose",
    "mass_flip_hestenes", "mass_flip_volume", "projector",
    "real_pair_hestenes", "real_pair_volume", "residual",
    "MomentumMode", "eigenmodes", "plane_wave", "symbol_matrix",
]
