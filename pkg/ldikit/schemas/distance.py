# ldikit/schemas/distance.py
"""
Error classification and distance search results.
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict

from .pauli import PauliVector, Syndrome


class Verdict(str, Enum):
    IN_GROUP = "InGroup"
    DETECTABLE = "Detectable"
    UNAVOIDABLE = "Unavoidable"
    ARTIFACT = "Artifact"


class ErrorVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: Verdict
    witness_syndrome: Syndrome  # integer syndrome, never reduced
    modulus: int


class DistanceResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: Optional[int] = None
    searched_weight: int
    witness: Optional[PauliVector] = None
    modulus: Optional[int] = None  # None for d* over the integers
    logical_count: int = 0  # k; when 0 the distance is the least group weight
    candidates: int = 0  # vectors or support sets examined

    @property
    def found(self) -> bool:
        return self.d is not None


class PhaseSpaceDistance(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Optional[float] = None  # sqrt(norm_squared)
    norm_squared: Optional[int] = None
    witness: Optional[PauliVector] = None
    coeff_bound: int
    w_max: int
    box_certified: bool = True  # minimal within the search box only
