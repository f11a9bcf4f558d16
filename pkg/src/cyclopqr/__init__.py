"""Exact coefficients and heights of ternary cyclotomic polynomials."""

from .binary import SparseBinarySupport, binary_coefficient, binary_dense, lam_leung_support
from .bounds import BoundsReport, BzdegaParams, bounds_report, bzdega_bound, bzdega_params
from .chi import ChiContext, chi, chi_windows
from .errors import ConsistencyError, CycloError, InvalidArgument, NoInverseError, ResourceLimitError
from .oracle import ReductionPlan, cyclotomic_oracle, height_oracle, reduce_to_kernel
from .poly import DensePoly
from .residue import bar, euler_phi, mobius, mod_inverse_in_range, primes_up_to
from .ternary import (
    ClassPartition,
    HeightReport,
    TernaryTriple,
    classify_classes,
    height,
    max_partial_sum,
    ternary_all_coefficients,
    ternary_coefficient,
    zero_sum_residual,
)

__version__ = "0.1.0"
