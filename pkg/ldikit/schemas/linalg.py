# ldikit/schemas/linalg.py
"""
Schemas for exact linear algebra results.
"""
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from .pauli import GeneratorMatrix


OpKind = Literal[
    "row_add",  # row[target] += coeff * row[source]
    "row_swap",  # swap rows target and source
    "row_scale",  # row[target] *= coeff
    "register_swap",  # swap registers target and source (X and Z columns)
    "dft",  # register target: (a, b) -> (-b, a)
    "drop_rows",  # delete the listed rows (all zero mod q)
]


class ElementaryOp(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: OpKind
    target: int = 0
    source: int = 0
    coeff: int = 1
    rows: Tuple[int, ...] = ()

    @property
    def is_column_op(self) -> bool:
        return self.kind in ("register_swap", "dft")


class CanonicalForm(BaseModel):
    model_config = ConfigDict(frozen=True)

    matrix: GeneratorMatrix  # entries reduced into [0, q)
    q: int
    rank: int
    pivot_cols: Tuple[int, ...]
    register_order: Tuple[int, ...]  # register_order[i] = original register now at i
    ops_log: Tuple[ElementaryOp, ...] = ()

    @property
    def column_ops(self) -> List[ElementaryOp]:
        return [op for op in self.ops_log if op.is_column_op]


class SmithDecomposition(BaseModel):
    """U·A·V = D with U, V unimodular and D diagonal."""
    model_config = ConfigDict(frozen=True)

    D: Tuple[int, ...]  # diagonal, length min(rows, cols)
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]
    shape: Tuple[int, int]

    @field_validator("U", "V", mode="before")
    @classmethod
    def coerce_matrix(cls, v):
        return tuple(tuple(int(x) for x in row) for row in v)

    @field_validator("D", mode="before")
    @classmethod
    def coerce_diagonal(cls, v):
        return tuple(int(x) for x in v)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.D if d != 0)

    def invariant_factors(self) -> List[int]:
        return [d for d in self.D if d != 0]


class RankReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    integer_rank: int
    by_modulus: Tuple[Tuple[int, int], ...]  # (m, rank over Z_m)
    invariant_factors: Tuple[int, ...]

    @property
    def preserved(self) -> bool:
        return all(rank == self.integer_rank for _, rank in self.by_modulus)

    def rank_for(self, m: int) -> Optional[int]:
        for modulus, rank in self.by_modulus:
            if modulus == m:
                return rank
        return None
