# ldikit/schemas/catalog.py
"""
Catalog entry schemas.
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict

from .pauli import GeneratorMatrix, LocalDimension


class CodeParameters(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    d: Optional[int] = None
    dim: LocalDimension  # q for [[n,k,d]]_q, Z for integer codes


class CatalogEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    matrix: GeneratorMatrix
    declared: CodeParameters
    notes: str = ""
    is_ldi: bool = True
