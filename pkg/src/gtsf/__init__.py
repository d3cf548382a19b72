"""球状 T-球面模糊 (G-TSF) 演算。"""

from src.gtsf.aggregate import WeightVector, gtsfwaa, gtsfwga
from src.gtsf.construct import centroid, make_gtsfs, make_gtsfv, radius
from src.gtsf.core import (
    GTSFSet,
    GTSFValue,
    Params,
    TSFValue,
    is_valid_gtsfv,
    is_valid_tsfv,
    power_sum,
    validate_gtsfv,
    validate_tsfv,
)
from src.gtsf.mcgdm import (
    DecisionProblem,
    GTSFDecisionMatrix,
    RankingReport,
    build_gtsf_matrix,
    ideal_alternative,
    rank,
    solve,
)
from src.gtsf.metrics import (
    cosine_sm,
    euclidean,
    euclidean_element,
    hamming,
    hamming_element,
    ideal_similarity,
)
from src.gtsf.operators import (
    RadiusRule,
    add,
    complement,
    equal,
    intersection,
    mul,
    scalar_mul,
    scalar_pow,
    subset,
    union,
)
from src.gtsf.ranking import DecidedBy, Ordering, Relation, accuracy, compare, rank_values, score

__all__ = [
    "DecidedBy",
    "DecisionProblem",
    "GTSFDecisionMatrix",
    "GTSFSet",
    "GTSFValue",
    "Ordering",
    "Params",
    "RadiusRule",
    "RankingReport",
    "Relation",
    "TSFValue",
    "WeightVector",
    "accuracy",
    "add",
    "build_gtsf_matrix",
    "centroid",
    "compare",
    "complement",
    "cosine_sm",
    "equal",
    "euclidean",
    "euclidean_element",
    "gtsfwaa",
    "gtsfwga",
    "hamming",
    "hamming_element",
    "ideal_alternative",
    "ideal_similarity",
    "intersection",
    "is_valid_gtsfv",
    "is_valid_tsfv",
    "make_gtsfs",
    "make_gtsfv",
    "mul",
    "power_sum",
    "radius",
    "rank",
    "rank_values",
    "scalar_mul",
    "scalar_pow",
    "score",
    "solve",
    "subset",
    "union",
    "validate_gtsfv",
    "validate_tsfv",
]
