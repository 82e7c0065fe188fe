"""Stallings graphs for subgroups of free groups, a small permutation-group
engine, and the finite constructions used to probe supersolvability."""

from ._kernels import BACKEND
from .errors import InputError, ResourceError, SchreierKitError, UnsupportedInput
from .permgrp import Perm, PermGroup
from .stallings import (
    INFINITE,
    SubgroupGraph,
    Word,
    contains,
    enumerate_subgroups,
    from_generators,
    index,
    rank,
    schreier_generators,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INFINITE",
    "InputError",
    "Perm",
    "PermGroup",
    "ResourceError",
    "SchreierKitError",
    "SubgroupGraph",
    "UnsupportedInput",
    "Word",
    "contains",
    "enumerate_subgroups",
    "from_generators",
    "index",
    "rank",
    "schreier_generators",
]
