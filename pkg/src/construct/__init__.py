"""Construction package initialization."""

from construct.minimal import (
    MinimalStageInput,
    ConstructionResult,
    construct_minimal,
    family_322,
    weight_map,
)
from construct.iterated import ParallelIteratedSpec, v_transform_basic, parallel_iterated
from construct.io import MinimalStageDocument, parse_minimal_input

__all__ = [
    "MinimalStageInput",
    "ConstructionResult",
    "construct_minimal",
    "family_322",
    "weight_map",
    "ParallelIteratedSpec",
    "v_transform_basic",
    "parallel_iterated",
    "MinimalStageDocument",
    "parse_minimal_input",
]
