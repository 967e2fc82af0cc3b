"""Exact (l,r)-Stirling numbers of both kinds and the identities around them."""

__version__ = "0.1.0"

from .core import (
    StirlingKind,
    StirlingParams,
    StirlingTriangle,
    first_kind,
    second_kind,
    special_first_diagonal,
    special_second_diagonal,
    check_cross_r_first,
    check_cross_r_second,
    check_orthogonality,
)
from .oracle import (
    CycleDecomposition,
    SetPartition,
    block_leaders,
    cycle_leaders,
    histogram,
    oracle_count,
)
from .symfun import (
    PolySeries,
    check_convolution,
    elementary,
    first_kind_via_e,
    gf_first_row,
    gf_second_column,
    homogeneous,
    second_kind_via_h,
)
from .bernoulli import BernoulliPolynomial, bernoulli_poly, check_stirling_bernoulli, faulhaber
from .mzv import MzvEstimate, closed_form, mzv_estimate, nested_sum
