# ldikit/schemas/__init__.py
"""
Pydantic value types shared by services and the CLI.
"""
from .pauli import (
    GeneratorMatrix,
    Integers,
    LocalDimension,
    Modulo,
    PauliVector,
    Prime,
    Reals,
    RealsModulo,
    Syndrome,
    local_dimension_for,
)
from .linalg import CanonicalForm, ElementaryOp, RankReport, SmithDecomposition
from .ldi import LdiReport, LdiVariant
from .distance import DistanceResult, ErrorVerdict, PhaseSpaceDistance, Verdict
from .bounds import BoundReport, DistancePromise
from .cv import Nullifier
from .catalog import CatalogEntry, CodeParameters
from .state import DenseState

__all__ = [
    "GeneratorMatrix",
    "Integers",
    "LocalDimension",
    "Modulo",
    "PauliVector",
    "Prime",
    "Reals",
    "RealsModulo",
    "Syndrome",
    "local_dimension_for",
    "CanonicalForm",
    "ElementaryOp",
    "RankReport",
    "SmithDecomposition",
    "LdiReport",
    "LdiVariant",
    "DistanceResult",
    "ErrorVerdict",
    "PhaseSpaceDistance",
    "Verdict",
    "BoundReport",
    "DistancePromise",
    "Nullifier",
    "CatalogEntry",
    "CodeParameters",
    "DenseState",
]
