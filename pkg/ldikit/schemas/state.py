# ldikit/schemas/state.py
"""
Dense qudit state vector.
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class DenseState(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    q: int
    n: int
    amplitudes: np.ndarray  # q**n complex amplitudes, register 0 most significant

    @field_validator("amplitudes", mode="before")
    @classmethod
    def coerce_amplitudes(cls, v):
        return np.asarray(v, dtype=np.complex128).reshape(-1)

    @model_validator(mode="after")
    def check_state(self) -> "DenseState":
        if self.amplitudes.shape[0] != self.q ** self.n:
            raise ValueError(f"expected {self.q ** self.n} amplitudes")
        norm = float(np.linalg.norm(self.amplitudes))
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"state is not normalized (norm {norm})")
        return self

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((self.q,) * self.n)

    @classmethod
    def basis(cls, q: int, digits) -> "DenseState":
        """Computational basis ket |digits>."""
        digits = list(digits)
        amps = np.zeros(q ** len(digits), dtype=np.complex128)
        index = 0
        for d in digits:
            index = index * q + (d % q)
        amps[index] = 1.0
        return cls(q=q, n=len(digits), amplitudes=amps)

    def overlap(self, other: "DenseState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))
