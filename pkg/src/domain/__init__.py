"""Domain layer - set-valued functions and harmonic m-convexity.

This package contains:
- Deterministic sampling
- Interval-valued functions and their algebra
- Convexity certifiers and set checks
- Adaptive quadrature
- Aumann means and Hermite-Hadamard checks
"""

from src.domain.sampling import HarmonicParams, sample_triples, t_grid, uniform_grid
from src.domain.reports import (
    Counterexample,
    ConvexityReport,
    EndpointReport,
    HHVerdict,
    MarginTracker,
    Verdict,
)
from src.domain.setvalued import (
    BoxFn,
    IntervalFn,
    TabulatedEndpoint,
    cartesian,
    constant_fn,
    eval_fn,
    from_endpoints,
    from_scaled_set,
    linear_combo,
    product_fn,
    product_lemma_margin,
    union_fn,
)
from src.domain.convexity import (
    check_endpoint_criterion,
    check_scalar,
    check_svf,
    check_svf_setwise,
    harmonic_combination,
    image_hull,
    is_harmonic_m_convex_set,
    is_m_convex_set,
    is_starshaped,
    scalar_margin,
    svf_margin,
)
from src.domain.quadrature import QuadResult, adaptive_simpson, integrate_weighted
from src.domain.aumann import (
    AumannResult,
    HHReport,
    ScalarHHResult,
    aumann_mean,
    aumann_mean_detailed,
    check_hh_scalar,
    check_hh_setvalued,
    substitution_mean,
)

__all__ = [
    # Sampling
    'HarmonicParams',
    'sample_triples',
    't_grid',
    'uniform_grid',

    # Reports
    'Counterexample',
    'ConvexityReport',
    'EndpointReport',
    'HHVerdict',
    'MarginTracker',
    'Verdict',

    # Interval-valued functions
    'BoxFn',
    'IntervalFn',
    'TabulatedEndpoint',
    'cartesian',
    'constant_fn',
    'eval_fn',
    'from_endpoints',
    'from_scaled_set',
    'linear_combo',
    'product_fn',
    'product_lemma_margin',
    'union_fn',

    # Convexity
    'check_endpoint_criterion',
    'check_scalar',
    'check_svf',
    'check_svf_setwise',
    'harmonic_combination',
    'image_hull',
    'is_harmonic_m_convex_set',
    'is_m_convex_set',
    'is_starshaped',
    'scalar_margin',
    'svf_margin',

    # Integration
    'QuadResult',
    'adaptive_simpson',
    'integrate_weighted',
    'AumannResult',
    'HHReport',
    'ScalarHHResult',
    'aumann_mean',
    'aumann_mean_detailed',
    'check_hh_scalar',
    'check_hh_setvalued',
    'substitution_mean',
]
