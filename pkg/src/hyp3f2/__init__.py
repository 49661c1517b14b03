"""Three-term relations for the unit-argument 3F2 series with arbitrary integer shifts.

Exact coefficients live in Q(a0, a1, a2, b1, b2) and come from products of
contiguous matrices; a floating-point series oracle checks them on all six
companion functions, and an order-72 affine group moves relations around.
"""
from .connection import (
    ShiftVector,
    ThreeTermRelation,
    connection_det_formula,
    connection_matrix,
    lattice_path,
    path_product,
    relation_determinant,
    saalschutz_index,
    three_term_coefficients,
)
from .contiguous import (
    check_compatibility,
    check_inverse,
    contiguous_det,
    contiguous_matrix,
    params,
    phi,
    psi,
    saalschutz,
)
from .errors import (
    ClosureOverflow,
    CoefficientPole,
    ConvergenceMargin,
    DegenerateShifts,
    DenominatorVanishes,
    GenericnessViolation,
    Hyp3F2Error,
    PoleOfGamma,
    SingularSpecialization,
    SlowConvergence,
    TrigPole,
)
from .matrix import Matrix2
from .numeric import (
    ParameterPoint,
    companion,
    complex_gamma,
    hgf_series,
    hgf_unit,
    verify_thomae,
    verify_three_term,
    verify_trig_relation,
)
from .polyrat import Polynomial, RationalFunction, gens, poly_arith, rf_equal
from .principal import (
    hat_principal,
    hat_principal_product,
    principal_matrix,
    principal_product,
    verify_laurent_limit,
)
from .symmetry import (
    AffineTransform,
    GroupElement,
    enumerate_group,
    generators,
    group_report,
    orbit_relations,
    reduce_to_fundamental_domain,
    verify_covariance,
)

__version__ = "0.1.0"
