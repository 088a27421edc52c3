"""Exact-arithmetic toolkit for rank-6 algebras of flat S3-covers.

Everything is computed over exact rationals: the S3 group ring and its
idempotents, the rank-6 representation, the eight-parameter family of
cover algebras with its compatibility constraints, the building-data
round trip, parameter covariance under basis changes, and the 15x5
ramification matrix with its 5x5 minors.
"""

from .algebra import (
    CoverParams,
    MultiplicationTable,
    PreAssocParams,
    build_cover,
    build_pre_associative,
    check_constraints,
    extract_params,
    multiply,
    verify,
)
from .building_data import (
    BuildingData,
    from_building_data,
    pipeline_check,
    to_building_data,
)
from .basis_change import BasisChange, induced_module_map, transform
from .elements import BASIS, AlgebraElement
from .ramification import all_minors, build_matrix, minor
from .search import enumerate_integer, sample

__all__ = [
    "AlgebraElement",
    "BASIS",
    "BasisChange",
    "BuildingData",
    "CoverParams",
    "MultiplicationTable",
    "PreAssocParams",
    "all_minors",
    "build_cover",
    "build_matrix",
    "build_pre_associative",
    "check_constraints",
    "enumerate_integer",
    "extract_params",
    "from_building_data",
    "induced_module_map",
    "minor",
    "multiply",
    "pipeline_check",
    "sample",
    "to_building_data",
    "transform",
    "verify",
]

__version__ = "0.1.0"
