"""Frechet distance toolkit.

Exact reference algorithms for the discrete and continuous Frechet
distances, a preprocess-once 1D discrete-distance oracle with a factor-2
guarantee, a (3+eps)-approximation for curves in any dimension under
L1/L2/Linf, and a generator of certified hard instance pairs from
orthogonal-vectors inputs.
"""

from .approx import (
    Decision3,
    MatchMode,
    SimplifyOutcome,
    approx_value,
    approx_value_detailed,
    decide_3approx,
    simplify_against_query,
)
from .common import ApproxInterval
from .curveio import read_curve, write_curve
from .geometry import (
    Norm,
    PolyCurve,
    as_norm,
    ball_segment_params,
    bbox_diagonal,
    concat,
    curve,
    curve_eval,
    norm_dist,
    repeat,
    subcurve,
)
from .hardgen import (
    DEFAULT_GADGETS,
    GadgetSet1D,
    OVInstance,
    build_hard_pair_1d,
    certify_gadgets,
    hard_pair_sizes,
    ov_brute,
)
from .oracle1d import (
    CompressedSimplification,
    OracleHandle,
    SimplificationResult,
    build_compressed,
    decide_compressed,
    deserialize,
    expand_compressed,
    preprocess,
    query,
    select_delta_m,
    serialize,
    simplify_delta,
)
from .reference import (
    brute_force_discrete,
    continuous_frechet_decide,
    continuous_frechet_value_ref,
    discrete_frechet_decide,
    discrete_frechet_exact,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxInterval",
    "CompressedSimplification",
    "DEFAULT_GADGETS",
    "Decision3",
    "GadgetSet1D",
    "MatchMode",
    "Norm",
    "OVInstance",
    "OracleHandle",
    "PolyCurve",
    "SimplificationResult",
    "SimplifyOutcome",
    "approx_value",
    "approx_value_detailed",
    "as_norm",
    "ball_segment_params",
    "bbox_diagonal",
    "brute_force_discrete",
    "build_compressed",
    "build_hard_pair_1d",
    "certify_gadgets",
    "concat",
    "continuous_frechet_decide",
    "continuous_frechet_value_ref",
    "curve",
    "curve_eval",
    "decide_3approx",
    "decide_compressed",
    "deserialize",
    "discrete_frechet_decide",
    "discrete_frechet_exact",
    "expand_compressed",
    "hard_pair_sizes",
    "norm_dist",
    "ov_brute",
    "preprocess",
    "query",
    "read_curve",
    "repeat",
    "select_delta_m",
    "serialize",
    "simplify_against_query",
    "simplify_delta",
    "subcurve",
    "write_curve",
]
