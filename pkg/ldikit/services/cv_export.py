# ldikit/services/cv_export.py
"""
Quadrature (nullifier) form of LDI codes.

A row X^a Z^b becomes the operator a·x + b·p. Because the rows of an LDI
matrix commute over the integers, the resulting nullifiers commute as
continuous-variable operators.
"""
import logging
from typing import List

from ldikit.exceptions import DimensionMismatch, NotLdiError
from ldikit.schemas import GeneratorMatrix, Nullifier, PauliVector
from ldikit.services.distance import logical_operators
from ldikit.services.ldi import verify_ldi

logger = logging.getLogger(__name__)


def nullifier_of(v: PauliVector) -> Nullifier:
    return Nullifier(x_coeffs=v.x, p_coeffs=v.z)


def to_nullifiers(m: GeneratorMatrix) -> List[Nullifier]:
    """Row-for-row additive form; non-LDI input is rejected."""
    report = verify_ldi(m)
    if not report.is_ldi:
        i, j, product = report.violations[0]
        raise NotLdiError(
            f"nullifiers {i} and {j} would have commutator {product}; make the code LDI first"
        )
    return [nullifier_of(row) for row in m.rows]


def additive_commutator(u: Nullifier, v: Nullifier) -> int:
    """[A(u), A(v)] coefficient: a_u·b_v - a_v·b_u."""
    if u.n != v.n:
        raise DimensionMismatch(f"nullifiers act on {u.n} and {v.n} modes")
    return sum(a * d - c * b for a, b, c, d in zip(u.x_coeffs, u.p_coeffs, v.x_coeffs, v.p_coeffs))


def logical_quadratures(m: GeneratorMatrix, p: int) -> List[Nullifier]:
    """Additive form of the logical operators found over GF(p)."""
    logicals = logical_operators(m, p)
    logger.debug("[CV] %d logical quadratures", len(logicals))
    return [nullifier_of(v) for v in logicals]
