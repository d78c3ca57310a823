"""Exact y-genera of moduli spaces of PGL_n-Higgs bundles on a curve, and
the chain stability combinatorics behind them."""

from .errors import DomainError, InvariantViolation
from .exactalg import (
    BivarPoly,
    GroupAlgElem,
    LaurentPoly,
    TruncSeries,
    Y,
    divisors,
    moebius,
    ramanujan_sum,
)
from .curve import CurveContext, e_zeta_coeff, hy_sym_cxp, hy_zeta_series
from .stability import (
    ChainDatum,
    ConditionReport,
    WallReport,
    enumerate_admissible_degrees,
    equal_slope_decompositions,
    find_walls,
    goodalpha_family,
    higgs_alpha,
    higgs_index_set,
    necessary_conditions,
    satisfies_star,
    slope,
)
from .genus import (
    PglInput,
    euler_pgl,
    noncompact_ygenus,
    pchain_hy,
    pgl_hy,
    pm_gl_hy,
)

__version__ = "0.1.0"
