"""Exact lattice-point counting for the simplex sum a_k x_k <= t, Fourier-Dedekind sums
and the Frobenius problem."""

from .cyclotomic import CycloElem, cyclotomic_poly
from .ehrhart import (
    ResiduePolynomial,
    brute_force_closed,
    brute_force_facet,
    brute_force_interior,
    count_closed,
    count_interior,
    count_partitions,
    count_restricted_partitions,
    residue_R,
    residue_Rprime,
)
from .exact_arith import Instance, format_rational, gcd_ext, mod_inverse, sawtooth, sawtooth_classical
from .fourier_dedekind import (
    FDSumSpec,
    dedekind_sum,
    rademacher_lower_bound,
    sigma_closed_n1,
    sigma_closed_n2,
    sigma_exact,
    sigma_numeric,
)
from .frobenius import (
    FrobeniusReport,
    bound_erdos_graham,
    bound_estimate,
    bound_selmer,
    bound_vitek,
    frobenius_f,
    frobenius_g,
    frobenius_report,
    johnson_reduce,
    reduce_to_three,
)
from .identities import (
    verify_ehrhart_macdonald,
    verify_gessel_2d,
    verify_gessel_general,
    verify_zagier,
)
from .polynomial import PolyQ

__version__ = "0.1.0"
