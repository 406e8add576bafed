"""Second-order free cumulants of ab + ba, ab - ba and ab for free a, b."""

from .annular import (PartitionedPermutation, annular_kreweras, enumerate_psnc, enumerate_snc,
                      enumerate_snc_prime, is_snc)
from .formula_engine import (anti_commutator, centered_product, commutator, commutator_coefficient,
                             formula, product, semicircle_closed_form, support_of)
from .index_sets import family, j_family, k_family, spoke_family, x_family, xe_family
from .nc_disk import BoundError, enumerate_nc, kreweras
from .oracle import extract_cumulants
from .perm_core import Permutation, SetPartition, gamma
from .pi_graph import PiGraph, ipi_factorize
from .sym_poly import CumulantPolynomial, CumulantSpec

__all__ = [
    "BoundError", "CumulantPolynomial", "CumulantSpec", "PartitionedPermutation", "Permutation",
    "PiGraph", "SetPartition", "annular_kreweras", "anti_commutator", "centered_product", "commutator",
    "commutator_coefficient", "enumerate_nc", "enumerate_psnc", "enumerate_snc", "enumerate_snc_prime",
    "extract_cumulants", "family", "formula", "gamma", "ipi_factorize", "is_snc", "j_family", "k_family",
    "kreweras", "product", "semicircle_closed_form", "spoke_family", "support_of", "x_family", "xe_family",
]
