"""Exact maximum likelihood degrees of Fermat hypersurfaces."""
from .counting import (
    BetaRecord,
    BetaResolver,
    ExponentMultiset,
    PrimePowerForm,
    alpha_direct,
    alpha_from_beta,
    alpha_prime_power,
    beta_bruteforce,
    beta_closed_small,
    beta_prime_power,
    beta_symmetric,
    iter_multisets,
    lam_leung_nonvanishing,
)
from .cyclotomic import (
    CyclotomicOrder,
    IntegerPolynomial,
    cyclotomic_polynomial,
    poly_divexact,
    poly_mul,
    vanishing_sum_test,
)
from .errors import (
    BudgetExceeded,
    DegreeOneUnsupported,
    MethodNotApplicable,
    NonExactDivision,
    NonMonicDivisor,
    NonzeroRemainder,
    NotPrimePower,
)
from .mldegree import (
    FermatQuery,
    MLDegreeReport,
    euler_complement_identity,
    euler_smooth_hypersurface,
    milnor_span_check,
    ml_degree_fermat,
    ml_degree_fermat_prime_power,
    ml_degree_fermat_quadric,
    ml_degree_fermat_surface,
    ml_degree_general,
    singular_point_count,
)

__version__ = "0.1.0"
