"""Exact arithmetic for generalized bihyperbolic third-order Jacobsthal polynomials."""

from .bihyperbolic import J1, J2, J3, Bihyperbolic, bh_add, bh_mul, bh_scale
from .eisenstein import OMEGA, OMEGA1, OMEGA2, EisensteinRational, omega_pow
from .genfunc import PowerSeries, check_genfunc, genfunc_components, series_expand
from .identities import (
    check_binet,
    check_cassini,
    check_catalan,
    check_docagne,
    check_lemma1,
    check_partial_sum,
    check_partial_sum_scalar,
    check_recurrence,
    check_triple_sum,
    check_vajda,
)
from .matrixgen import Mat3, charpoly, check_column_relation, check_matrix_identity, mat_pow, qj_matrix
from .polyring import DomainError, Polynomial, RationalFunction, poly_eval
from .report import IdentityReport
from .sequences import (
    InconsistencyError,
    SeqParams,
    bj,
    bj_binet,
    bj_rec,
    cal_A,
    cal_B,
    cal_T,
    jacobsthal_ext,
    jacobsthal_poly,
    z_seq,
)
from .suite import SuiteGrid, run_suite, summarize

__version__ = "0.1.0"
