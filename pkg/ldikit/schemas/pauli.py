# ldikit/schemas/pauli.py
"""
Pauli vectors, generator matrices, syndromes and local dimensions.

A PauliVector is the image of an n-register operator X^a Z^b as the integer
vector (a | b). Entries are exact Python integers; reduction modulo a local
dimension happens only where a caller asks for it.
"""
from typing import Annotated, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime



def _as_int_tuple(value) -> Tuple[int, ...]:
    return tuple(int(x) for x in value)


class Prime(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["prime"] = "prime"
    q: int

    @field_validator("q")
    @classmethod
    def check_prime(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"{v} is not prime")
        return v

    @property
    def modulus(self) -> Optional[int]:
        return self.q

    @property
    def label(self) -> str:
        return str(self.q)


class Modulo(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["modulo"] = "modulo"
    m: int

    @field_validator("m")
    @classmethod
    def check_modulus(cls, v: int) -> int:
        if v < 2:
            raise ValueError("modulus must be at least 2")
        return v

    @property
    def modulus(self) -> Optional[int]:
        return self.m

    @property
    def label(self) -> str:
        return str(self.m)


class Integers(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["integers"] = "integers"

    @property
    def modulus(self) -> Optional[int]:
        return None

    @property
    def label(self) -> str:
        return "Z"


class RealsModulo(BaseModel):
    """Rotor-like registers: real positions wrapping at p."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["reals_modulo"] = "reals_modulo"
    p: float = Field(gt=0)

    @property
    def modulus(self) -> Optional[int]:
        return None

    @property
    def label(self) -> str:
        return f"R{self.p!r}"


class Reals(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["reals"] = "reals"

    @property
    def modulus(self) -> Optional[int]:
        return None

    @property
    def label(self) -> str:
        return "R"


LocalDimension = Annotated[
    Union[Prime, Modulo, Integers, RealsModulo, Reals],
    Field(discriminator="kind"),
]


def local_dimension_for(modulus: Optional[int]) -> Union[Prime, Modulo, Integers]:
    """Prime(q) for primes, Modulo(m) for other moduli, Integers for None."""
    if modulus is None:
        return Integers()
    if isprime(modulus):
        return Prime(q=modulus)
    return Modulo(m=modulus)


class PauliVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)  # register count
    entries: Tuple[int, ...]  # X-powers then Z-powers

    @field_validator("entries", mode="before")
    @classmethod
    def coerce_entries(cls, v):
        return _as_int_tuple(v)

    @model_validator(mode="after")
    def check_length(self) -> "PauliVector":
        if len(self.entries) != 2 * self.n:
            raise ValueError(
                f"expected {2 * self.n} entries for n={self.n}, got {len(self.entries)}"
            )
        return self

    @classmethod
    def from_parts(cls, x: Sequence[int], z: Sequence[int]) -> "PauliVector":
        if len(x) != len(z):
            raise ValueError("X and Z parts differ in length")
        return cls(n=len(x), entries=list(x) + list(z))

    @classmethod
    def zero(cls, n: int) -> "PauliVector":
        return cls(n=n, entries=[0] * (2 * n))

    @property
    def x(self) -> Tuple[int, ...]:
        return self.entries[: self.n]

    @property
    def z(self) -> Tuple[int, ...]:
        return self.entries[self.n :]

    def site(self, i: int) -> Tuple[int, int]:
        return self.entries[i], self.entries[self.n + i]

    @property
    def support(self) -> List[int]:
        return [i for i in range(self.n) if self.site(i) != (0, 0)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def reduced(self, q: int) -> "PauliVector":
        return PauliVector(n=self.n, entries=[e % q for e in self.entries])

    def __add__(self, other: "PauliVector") -> "PauliVector":
        if other.n != self.n:
            raise ValueError("register counts differ")
        return PauliVector(
            n=self.n, entries=[a + b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "PauliVector":
        return PauliVector(n=self.n, entries=[-a for a in self.entries])

    def __sub__(self, other: "PauliVector") -> "PauliVector":
        return self + (-other)

    def scaled(self, c: int) -> "PauliVector":
        return PauliVector(n=self.n, entries=[c * a for a in self.entries])


class GeneratorMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    rows: Tuple[PauliVector, ...] = ()
    dim: LocalDimension = Field(default_factory=Integers)  # source local dimension

    @model_validator(mode="after")
    def check_rows(self) -> "GeneratorMatrix":
        for i, row in enumerate(self.rows):
            if row.n != self.n:
                raise ValueError(f"row {i} has n={row.n}, matrix has n={self.n}")
        return self

    @classmethod
    def from_rows(
        cls,
        n: int,
        rows: Sequence[Sequence[int]],
        dim: Optional[Union[Prime, Modulo, Integers, RealsModulo, Reals]] = None,
    ) -> "GeneratorMatrix":
        vectors = tuple(PauliVector(n=n, entries=r) for r in rows)
        if dim is None:
            return cls(n=n, rows=vectors)
        return cls(n=n, rows=vectors, dim=dim)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def to_lists(self) -> List[List[int]]:
        return [list(r.entries) for r in self.rows]

    def to_array(self, dtype=object) -> np.ndarray:
        """Rows as an (r, 2n) array; object dtype keeps exact integers."""
        arr = np.empty((self.num_rows, 2 * self.n), dtype=dtype)
        for i, row in enumerate(self.rows):
            arr[i, :] = row.entries
        return arr

    @property
    def max_entry(self) -> int:
        return max((abs(e) for r in self.rows for e in r.entries), default=0)

    def reduced(self, q: int) -> "GeneratorMatrix":
        return self.model_copy(update={"rows": tuple(r.reduced(q) for r in self.rows)})

    def with_rows(self, rows: Sequence[PauliVector]) -> "GeneratorMatrix":
        return self.model_copy(update={"rows": tuple(rows)})

    def is_css(self, q: Optional[int] = None) -> bool:
        """Every row is pure-X or pure-Z (after reduction mod q when given)."""
        for row in self.rows:
            x, z = row.x, row.z
            if q is not None:
                x = [e % q for e in x]
                z = [e % q for e in z]
            if any(x) and any(z):
                return False
        return True


class Syndrome(BaseModel):
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]
    modulus: Optional[int] = None  # None means raw integer syndrome

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v):
        return _as_int_tuple(v)

    def is_zero(self) -> bool:
        return not any(self.values)
