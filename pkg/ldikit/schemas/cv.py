# ldikit/schemas/cv.py
"""
Additive (quadrature) form of Pauli vectors.
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


def _term(coeff: int, symbol: str, first: bool) -> str:
    if coeff == 1:
        text = symbol
    elif coeff == -1:
        text = "-" + symbol
    else:
        text = f"{coeff}{symbol}"
    if not first and coeff > 0:
        text = "+" + text
    return text


class Nullifier(BaseModel):
    model_config = ConfigDict(frozen=True)

    x_coeffs: Tuple[int, ...]  # coefficients of x1..xn
    p_coeffs: Tuple[int, ...]  # coefficients of p1..pn

    @field_validator("x_coeffs", "p_coeffs", mode="before")
    @classmethod
    def coerce(cls, v):
        return tuple(int(c) for c in v)

    @model_validator(mode="after")
    def check_lengths(self) -> "Nullifier":
        if len(self.x_coeffs) != len(self.p_coeffs):
            raise ValueError("x and p coefficient lists differ in length")
        return self

    @property
    def n(self) -> int:
        return len(self.x_coeffs)

    def render(self) -> str:
        """Terms by register, x before p, e.g. 'p3-2p6+p7'; '0' when empty."""
        parts: List[str] = []
        for i in range(self.n):
            for coeff, name in ((self.x_coeffs[i], "x"), (self.p_coeffs[i], "p")):
                if coeff:
                    parts.append(_term(coeff, f"{name}{i + 1}", not parts))
        return "".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()
