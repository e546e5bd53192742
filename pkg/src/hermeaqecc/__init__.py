"""Parameters of entanglement-assisted quantum codes from one-point
Hermitian codes, with an exact polynomial-reduction fast path and a
linear-algebra oracle."""

from .curve import (
    CurveCtx,
    Monomial,
    affine_points,
    ell,
    m_perp,
    make_curve,
    monomial_basis,
    monomial_of_order,
    nu,
)
from .delta import (
    DeltaResult,
    PhiBasis,
    delta,
    phi_basis_baseline,
    phi_basis_optimized,
    residue_class_census,
)
from .fields import FieldCtx, PrimePower, arith, frobenius, make_field
from .params import (
    EaqeccParams,
    GvQuery,
    classical_dims,
    eaqecc_params,
    exceeds_gv,
    gv_holds,
    gv_scan,
    singleton_defect,
)
from .reduction import (
    ReducedPoly,
    UstDecomposition,
    binom_mod_p,
    format_poly,
    m_hat,
    normalize,
    p_illumination,
    qth_order,
    qth_power_reduced,
    reduce_poly,
    ust_decompose,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
