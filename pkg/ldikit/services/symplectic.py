# ldikit/services/symplectic.py
"""
Symplectic representation of qudit Paulis.

Operators X^a Z^b on n registers map to integer vectors (a | b). Products of
operators become entry-wise sums; two operators commute over local dimension q
iff their symplectic product vanishes mod q.
"""
import logging
import re
from typing import List, Optional

import numpy as np

from ldikit.exceptions import CommutationError, DimensionMismatch, ParseError
from ldikit.schemas import (
    GeneratorMatrix,
    Integers,
    PauliVector,
    Reals,
    RealsModulo,
    Syndrome,
    local_dimension_for,
)

logger = logging.getLogger(__name__)

_EXP = r"(?:\^\{?(-?\d+)\}?)?"
_TOKEN = re.compile(r"^(X" + _EXP + r")?(Z" + _EXP + r")?$")
_COMPACT = re.compile(r"^[IXZ]+$")


def _parse_token(token: str) -> tuple:
    if token == "I":
        return 0, 0
    match = _TOKEN.match(token)
    if not match or not (match.group(1) or match.group(3)):
        raise ParseError(f"malformed Pauli token {token!r}")
    a = b = 0
    if match.group(1):
        a = int(match.group(2)) if match.group(2) is not None else 1
    if match.group(3):
        b = int(match.group(4)) if match.group(4) is not None else 1
    return a, b


def phi_encode(pauli_text: str, n: Optional[int] = None) -> PauliVector:
    """
    Encode per-register tokens such as "X X^-1" or "X^1Z^-1 Z^3".

    Args:
        pauli_text: whitespace-separated site tokens I, X[^a], Z[^b], X^aZ^b.
            When n > 1 is given, a single run of I/X/Z letters ("XXXXIII")
            is read one site per letter.
        n: expected register count; inferred from the token count when omitted

    Returns:
        The vector (a_1..a_n | b_1..b_n)
    """
    tokens = pauli_text.split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and _COMPACT.match(tokens[0]):
        if n == len(tokens[0]):
            tokens = list(tokens[0])
    if n is None:
        n = len(tokens)
    if len(tokens) != n:
        raise ParseError(f"expected {n} site tokens, got {len(tokens)}")
    sites = [_parse_token(t) for t in tokens]
    return PauliVector.from_parts([a for a, _ in sites], [b for _, b in sites])


def _render_power(letter: str, power: int) -> str:
    return letter if power == 1 else f"{letter}^{power}"


def phi_decode(v: PauliVector) -> str:
    """Inverse of phi_encode; phases are never emitted."""
    tokens: List[str] = []
    for i in range(v.n):
        a, b = v.site(i)
        token = ""
        if a:
            token += _render_power("X", a)
        if b:
            token += _render_power("Z", b)
        tokens.append(token or "I")
    return " ".join(tokens)


def symplectic_product(u: PauliVector, v: PauliVector) -> int:
    """Exact integer product sum_k u_x[k]*v_z[k] - u_z[k]*v_x[k]."""
    if u.n != v.n:
        raise DimensionMismatch(f"register counts differ: {u.n} vs {v.n}")
    return sum(a * d - b * c for a, b, c, d in zip(u.x, u.z, v.x, v.z))


def pauli_weight(v: PauliVector) -> int:
    return len(v.support)


def product_matrix(m: GeneratorMatrix) -> np.ndarray:
    """All pairwise integer products of the rows as an (r, r) object array."""
    arr = m.to_array()
    x, z = arr[:, : m.n], arr[:, m.n :]
    if m.num_rows == 0 or m.n == 0:
        return np.zeros((m.num_rows, m.num_rows), dtype=object)
    return x.dot(z.T) - z.dot(x.T)


def syndrome_of(
    m: GeneratorMatrix, e: PauliVector, modulus: Optional[int] = None
) -> Syndrome:
    """
    Symplectic product of every generator with the error.

    Args:
        m: generator matrix
        e: error vector on the same registers
        modulus: reduce the values into [0, modulus) when given

    Returns:
        One value per generator row
    """
    if e.n != m.n:
        raise DimensionMismatch(f"error has n={e.n}, code has n={m.n}")
    if modulus is not None and modulus < 2:
        raise ValueError("modulus must be at least 2")
    values = [symplectic_product(row, e) for row in m.rows]
    if modulus is not None:
        values = [s % modulus for s in values]
    return Syndrome(values=values, modulus=modulus)


def commutes_mod(u: PauliVector, v: PauliVector, q: int) -> bool:
    return symplectic_product(u, v) % q == 0


def require_commuting(m: GeneratorMatrix, q: int) -> None:
    """Raise CommutationError for the first pair of rows that fails mod q."""
    products = product_matrix(m)
    for i in range(m.num_rows):
        for j in range(i + 1, m.num_rows):
            if products[i, j] % q:
                logger.debug("[SYMPLECTIC] rows %d,%d fail mod %d", i, j, q)
                raise CommutationError(i, j, int(products[i, j]), q)


def parse_local_dimension(text: str):
    """
    Parse a local dimension tag.

    "7" -> Prime, "6" -> Modulo, "Z" -> Integers, "R" -> Reals and
    "R6.283" -> RealsModulo.
    """
    tag = text.strip()
    if tag.upper() == "Z":
        return Integers()
    if tag.upper() == "R":
        return Reals()
    try:
        if tag[:1].upper() == "R":
            return RealsModulo(p=float(tag[1:]))
        value = int(tag)
    except ValueError as exc:
        raise ParseError(f"unknown local dimension {text!r}") from exc
    if value < 2:
        raise ParseError(f"local dimension must be at least 2, got {value}")
    return local_dimension_for(value)
