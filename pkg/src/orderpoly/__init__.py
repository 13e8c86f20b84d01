"""Ehrhart polynomials and series of order polytopes of finite posets."""

from .config import DEFAULT_CAPS, Caps, load_config
from .dsl import DslError, evaluate, parse, to_text
from .engine import (
    count_order_maps,
    crosscheck,
    ehr_polynomial,
    ehr_series,
    extension_stats,
)
from .exact import (
    EhrSeries,
    Polynomial,
    int_matrix_det,
    poly_interpolate,
    riordan_triangle,
    series_coefficient,
    series_hadamard,
    series_mul,
)
from .poset import (
    CapExceeded,
    InvalidPoset,
    Partition,
    Poset,
    PreconditionError,
    antichain,
    bar_kk,
    boolean,
    chain,
    diamond,
    direct_product,
    direct_sum,
    dual,
    ferrers,
    glue,
    is_isomorphic,
    ordinal_product,
    ordinal_sum,
    pow_glue,
    pow_oplus,
    v_poset,
)

__version__ = "0.1.0"
