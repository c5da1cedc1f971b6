# ldikit/schemas/ldi.py
"""
LDI verification report.
"""
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .pauli import GeneratorMatrix


LdiVariant = Literal["lower_triangular", "css"]


class LdiReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    matrix: GeneratorMatrix
    is_ldi: bool
    violations: Tuple[Tuple[int, int, int], ...] = ()  # (i, j, product), i < j
    B: int  # largest absolute entry

    @model_validator(mode="after")
    def check_consistency(self) -> "LdiReport":
        if self.is_ldi != (len(self.violations) == 0):
            raise ValueError("is_ldi must match an empty violation list")
        return self
