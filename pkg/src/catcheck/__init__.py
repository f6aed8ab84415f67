"""Concrete finite categories and a property checker for coproduct/pullback conditions."""
from catcheck.kernel import (
    Category,
    CategoryError,
    FactorPair,
    Morphism,
    Obj,
    PullbackResult,
    Square,
    comparison_into_pullback,
    compose,
    coproduct,
    coproduct_of_squares,
    coequalizer,
    identity,
    image_factorization,
    is_epi,
    is_feeble_pullback,
    is_iso,
    is_jointly_monic,
    is_mono,
    is_pullback,
    is_regular_epi,
    kernel_pair,
    pullback,
)
from catcheck.instances import FinSet, FinVect, PointedFinSet, get_instance

__version__ = "0.1.0"

__all__ = [
    "Category",
    "CategoryError",
    "coequalizer",
    "comparison_into_pullback",
    "compose",
    "coproduct",
    "coproduct_of_squares",
    "FactorPair",
    "FinSet",
    "FinVect",
    "get_instance",
    "identity",
    "image_factorization",
    "is_epi",
    "is_feeble_pullback",
    "is_iso",
    "is_jointly_monic",
    "is_mono",
    "is_pullback",
    "is_regular_epi",
    "kernel_pair",
    "Morphism",
    "Obj",
    "PointedFinSet",
    "pullback",
    "PullbackResult",
    "Square",
]
