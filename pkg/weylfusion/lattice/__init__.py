"""Réseaux des poids et des racines, partitions"""

from .weights import (
    DominantWeight,
    RootVector,
    WeightVector,
    dominates,
    iter_dominant,
    root_to_weight,
    simple_reflection,
    weight_to_root,
)
from .partition import Partition, lift_to_size, partition_to_weight, partitions, transpose, weight_to_partition
from .parsing import parse_partition, parse_weight

__all__ = [
    "DominantWeight",
    "WeightVector",
    "RootVector",
    "Partition",
    "root_to_weight",
    "weight_to_root",
    "dominates",
    "simple_reflection",
    "iter_dominant",
    "transpose",
    "weight_to_partition",
    "partition_to_weight",
    "lift_to_size",
    "partitions",
    "parse_weight",
    "parse_partition",
]
