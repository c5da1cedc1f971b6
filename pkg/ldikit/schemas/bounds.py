# ldikit/schemas/bounds.py
"""
Cutoff bounds and distance promises.
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict

from .pauli import LocalDimension


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    B: int
    q: int
    d: int
    p_star_hadamard: int
    p_star_alternative: int
    p_star_css: Optional[int] = None  # only for CSS codes
    rotor_ok: bool

    @property
    def min_p_star(self) -> int:
        values = [self.p_star_hadamard, self.p_star_alternative]
        if self.p_star_css is not None:
            values.append(self.p_star_css)
        return min(values)


class DistancePromise(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: LocalDimension
    promised: bool  # distance d carries over to the target
    rank_preserved: bool
    p_star: int
    reason: str
