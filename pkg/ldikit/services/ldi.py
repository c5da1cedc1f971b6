# ldikit/services/ldi.py
"""
Local-dimension-invariant (LDI) forms.

A generator set is LDI when every pair of rows has symplectic product exactly
zero over the integers, so the rows commute for every local dimension. Two
constructions are offered:

- lower_triangular: canonicalize over GF(q), then add the lower triangular
  correction L (L_ij = s_i ⊙ s_j for i > j) to the Z1 block.
- css: row-reduce the X-rows and Z-rows separately and lift every Z-row to an
  integer vector orthogonal to all X-rows.
"""
import logging
from typing import List, Optional

import numpy as np

from ldikit.config import get_settings
from ldikit.exceptions import NotCssError
from ldikit.schemas import GeneratorMatrix, LdiReport, LdiVariant, PauliVector, Prime
from ldikit.services.linalg import (
    canonical_form,
    rank_gf,
    rank_report,
    require_prime,
    restore_frame,
    rref_mod,
)
from ldikit.services.symplectic import product_matrix, require_commuting, symplectic_product

logger = logging.getLogger(__name__)


def verify_ldi(m: GeneratorMatrix) -> LdiReport:
    """
    Check that all generators commute over the integers.

    Returns:
        LdiReport listing every pair (i, j), i < j, with a nonzero product
    """
    products = product_matrix(m)
    violations = [
        (i, j, int(products[i, j]))
        for i in range(m.num_rows)
        for j in range(i + 1, m.num_rows)
        if products[i, j] != 0
    ]
    return LdiReport(
        matrix=m,
        is_ldi=not violations,
        violations=tuple(violations),
        B=m.max_entry,
    )


def b_entry_bound(q: int, k: int) -> int:
    """Upper bound (2 + k(q-1))(q-1) on LDI entries produced from GF(q)."""
    if q < 2 or k < 0:
        raise ValueError("need q >= 2 and k >= 0")
    return (2 + k * (q - 1)) * (q - 1)


def _sign_patterns(count: int) -> np.ndarray:
    """All 0/1 patterns of the given length, most significant position first."""
    codes = np.arange(1 << count, dtype=np.int64)
    return (codes[:, None] >> np.arange(count - 1, -1, -1)) & 1


def sign_lift(
    v: PauliVector,
    rows: GeneratorMatrix,
    q: int,
    limit: Optional[int] = None,
) -> Optional[PauliVector]:
    """
    Integer representative of v mod q with zero product against every row.

    Each nonzero residue r may be replaced by r - q. Candidates are tried in
    a fixed order: the residues unchanged, then the alternating pattern
    (r, r-q, r, r-q, ... along the support), then patterns by increasing
    number of flips away from the alternating one.

    Args:
        v: vector to lift; reduced mod q first
        rows: generators the lift must commute with over the integers
        q: modulus
        limit: largest number of patterns to enumerate

    Returns:
        The lifted vector, or None when no pattern within the limit works
    """
    limit = limit or get_settings().sign_search_limit
    base = np.array([e % q for e in v.entries], dtype=np.int64)
    if not rows.rows:
        return PauliVector(n=v.n, entries=base.tolist())
    R = rows.to_array().astype(np.int64)
    n = v.n
    rx, rz = R[:, :n], R[:, n:]

    def zero_syndrome(V: np.ndarray) -> np.ndarray:
        S = V[:, n:] @ rx.T - V[:, :n] @ rz.T
        return ~np.any(S != 0, axis=1)

    positions = np.flatnonzero(base)
    s = len(positions)
    alternating = (np.arange(s) % 2).astype(np.int64)

    def build(patterns: np.ndarray) -> np.ndarray:
        V = np.tile(base, (patterns.shape[0], 1))
        V[:, positions] -= q * patterns
        return V

    first = build(np.vstack([np.zeros(s, dtype=np.int64), alternating]))
    hits = np.flatnonzero(zero_syndrome(first))
    if hits.size:
        return PauliVector(n=n, entries=first[hits[0]].tolist())
    if (1 << s) > limit:
        logger.debug("[LDI] sign search over %d sites exceeds limit %d", s, limit)
        return None

    flips = _sign_patterns(s)
    order = np.argsort(flips.sum(axis=1), kind="stable")
    candidates = build(flips[order] ^ alternating)
    hits = np.flatnonzero(zero_syndrome(candidates))
    if hits.size:
        return PauliVector(n=n, entries=candidates[hits[0]].tolist())
    return None


def _pivot_correct(z: List[int], x_rows: np.ndarray) -> List[int]:
    """Cancel each X-row product at that row's exclusive pivot column."""
    z = list(z)
    for row in x_rows:
        pivot = int(np.flatnonzero(row)[0])
        c = sum(int(a) * b for a, b in zip(row, z))
        z[pivot] -= c
    return z


def _css_ldi(m: GeneratorMatrix, q: int) -> GeneratorMatrix:
    n = m.n
    if not m.is_css(q):
        raise NotCssError("css variant needs every row pure-X or pure-Z mod q")
    reduced = m.reduced(q)
    x_rows = [r.x for r in reduced.rows if any(r.x)]
    z_rows = [r.z for r in reduced.rows if any(r.z)]
    X = rref_mod(np.array(x_rows, dtype=object).reshape(-1, n), q)
    Z = rref_mod(np.array(z_rows, dtype=object).reshape(-1, n), q)

    x_vectors = [PauliVector.from_parts(row.tolist(), [0] * n) for row in X]
    x_matrix = GeneratorMatrix(n=n, rows=tuple(x_vectors))
    z_vectors = []
    for row in Z:
        residue = PauliVector.from_parts([0] * n, row.tolist())
        lifted = sign_lift(residue, x_matrix, q)
        if lifted is None:
            logger.info("[LDI] falling back to pivot correction for a Z-row")
            lifted = PauliVector.from_parts([0] * n, _pivot_correct(row.tolist(), X))
        z_vectors.append(lifted)
    return GeneratorMatrix(n=n, rows=tuple(x_vectors + z_vectors), dim=Prime(q=q))


def _lower_triangular_ldi(m: GeneratorMatrix, q: int, restore: bool) -> GeneratorMatrix:
    n = m.n
    cf = canonical_form(m, q)
    rows = cf.matrix.rows
    M = cf.matrix.to_array()
    for i in range(cf.rank):
        for j in range(i):
            M[i, n + j] += symplectic_product(rows[i], rows[j])
    if restore:
        M = restore_frame(M, cf.ops_log, n)
    return GeneratorMatrix.from_rows(n, M.tolist(), dim=Prime(q=q))


def _unimodular_ldi(m: GeneratorMatrix, q: int) -> bool:
    """LDI, independent mod q, and every Smith invariant equal to 1."""
    if not verify_ldi(m).is_ldi or rank_gf(m, q) != m.num_rows:
        return False
    report = rank_report(m, ())
    return report.integer_rank == m.num_rows and all(f == 1 for f in report.invariant_factors)


def make_ldi(
    m: GeneratorMatrix,
    q: int,
    variant: LdiVariant = "lower_triangular",
    restore: bool = True,
) -> GeneratorMatrix:
    """
    Build an LDI generator matrix equal to m modulo q.

    Args:
        m: generators commuting mod q
        q: prime local dimension of the source code
        variant: "lower_triangular" or "css"
        restore: for lower_triangular, undo the canonical register swaps and
            DFTs so the result acts on m's registers. With restore=False the
            result is exactly [I X2 | Z1+L Z2] in the canonical frame.

    Returns:
        GeneratorMatrix with pairwise products zero over the integers
    """
    require_prime(q)
    require_commuting(m, q)
    if variant not in ("lower_triangular", "css"):
        raise ValueError(f"unknown variant {variant!r}")

    if restore and (variant != "css" or m.is_css()) and _unimodular_ldi(m, q):
        logger.info("[LDI] input is already LDI with unit invariant factors")
        return m

    if variant == "css":
        result = _css_ldi(m, q)
    else:
        result = _lower_triangular_ldi(m, q, restore)
    logger.info("[LDI] %s form: %d rows, B=%d", variant, result.num_rows, result.max_entry)
    return result

