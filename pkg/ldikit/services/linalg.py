# ldikit/services/linalg.py
"""
Exact linear algebra over prime fields, the integers and Z_m.

Integer work uses numpy object arrays so entries stay arbitrary-precision
Python ints. Prime-field row reduction, ranks and null spaces go through
galois. Canonical forms are computed by hand because every elementary
operation has to be logged for replay.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import galois
import numpy as np
from sympy import isprime

from ldikit.exceptions import DimensionMismatch, NotPrimeError
from ldikit.schemas import (
    CanonicalForm,
    ElementaryOp,
    GeneratorMatrix,
    Prime,
    RankReport,
    SmithDecomposition,
)
from ldikit.services.symplectic import require_commuting

logger = logging.getLogger(__name__)


def as_matrix(A, cols: Optional[int] = None) -> np.ndarray:
    """Copy A into a 2-D object array of Python ints."""
    if isinstance(A, GeneratorMatrix):
        return A.to_array()
    if isinstance(A, np.ndarray):
        if A.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D matrix, got shape {A.shape}")
        shape = A.shape
        data = A.tolist()
    else:
        data = [list(row) for row in A]
        width = len(data[0]) if data else (cols or 0)
        if any(len(row) != width for row in data):
            raise DimensionMismatch("rows have different lengths")
        shape = (len(data), width)
    out = np.empty(shape, dtype=object)
    for i, row in enumerate(data):
        out[i, :] = [int(x) for x in row]
    return out


def identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def require_prime(q: int) -> None:
    if not isprime(q):
        raise NotPrimeError(f"{q} is not prime")


# --------------------------------------------------------------------------
# Smith normal form
# --------------------------------------------------------------------------

def _swap_rows(M: np.ndarray, i: int, j: int) -> None:
    if i != j:
        M[[i, j], :] = M[[j, i], :]


def _swap_cols(M: np.ndarray, i: int, j: int) -> None:
    if i != j:
        M[:, [i, j]] = M[:, [j, i]]


def smith_normal_form(A) -> SmithDecomposition:
    """
    Smith normal form with transforms.

    Args:
        A: integer matrix (nested sequences, ndarray or GeneratorMatrix)

    Returns:
        SmithDecomposition with U·A·V = D, D a non-negative divisibility chain
    """
    D = as_matrix(A)
    rows, cols = D.shape
    U, V = identity(rows), identity(cols)

    for t in range(min(rows, cols)):
        nonzero = [
            (abs(D[i, j]), i, j)
            for i in range(t, rows)
            for j in range(t, cols)
            if D[i, j] != 0
        ]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        while True:
            pivot = D[t, t]
            for i in range(t + 1, rows):
                if D[i, t] != 0:
                    f = D[i, t] // pivot
                    D[i, :] = D[i, :] - f * D[t, :]
                    U[i, :] = U[i, :] - f * U[t, :]
            for j in range(t + 1, cols):
                if D[t, j] != 0:
                    f = D[t, j] // pivot
                    D[:, j] = D[:, j] - f * D[:, t]
                    V[:, j] = V[:, j] - f * V[:, t]

            leftovers = [(abs(D[i, t]), i, t) for i in range(t + 1, rows) if D[i, t] != 0]
            leftovers += [(abs(D[t, j]), t, j) for j in range(t + 1, cols) if D[t, j] != 0]
            if leftovers:
                _, i, j = min(leftovers)
                if j == t:
                    _swap_rows(D, t, i)
                    _swap_rows(U, t, i)
                else:
                    _swap_cols(D, t, j)
                    _swap_cols(V, t, j)
                continue

            bad = next(
                (
                    i
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if D[i, j] % pivot != 0
                ),
                None,
            )
            if bad is None:
                break
            # pull an indivisible row into the pivot row; its remainder shrinks the pivot
            D[t, :] = D[t, :] + D[bad, :]
            U[t, :] = U[t, :] + U[bad, :]

        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]

    diagonal = [D[i, i] for i in range(min(rows, cols))]
    return SmithDecomposition(D=diagonal, U=U.tolist(), V=V.tolist(), shape=(rows, cols))


def integer_rank(A) -> int:
    return smith_normal_form(A).rank


def rank_mod(A, m: int) -> int:
    """Number of Smith invariants not divisible by m."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return sum(1 for d in smith_normal_form(A).D if d % m != 0)


def integer_kernel(A) -> List[Tuple[int, ...]]:
    """
    Lattice basis of {x : A·x = 0} over the integers.

    The trailing columns of V past the rank span the kernel because V is
    unimodular.
    """
    snf = smith_normal_form(A)
    V = np.array(snf.V, dtype=object).reshape(snf.shape[1], snf.shape[1])
    return [tuple(int(x) for x in V[:, j]) for j in range(snf.rank, snf.shape[1])]


def _solve_with(snf: SmithDecomposition, c: Sequence[int]) -> Optional[List[int]]:
    rows, cols = snf.shape
    if len(c) != rows:
        raise DimensionMismatch(f"right-hand side has {len(c)} entries, expected {rows}")
    w = [sum(u * x for u, x in zip(row, c)) for row in snf.U]
    y = [0] * cols
    for i in range(rows):
        d = snf.D[i] if i < len(snf.D) else 0
        if d == 0:
            if w[i] != 0:
                return None
        elif w[i] % d != 0:
            return None
        else:
            y[i] = w[i] // d
    return [sum(v * yj for v, yj in zip(row, y)) for row in snf.V]


def solve_integer(A, c: Sequence[int]) -> Optional[List[int]]:
    """An integer x with A·x = c, or None when no integer solution exists."""
    return _solve_with(smith_normal_form(A), [int(x) for x in c])


def rank_report(m: GeneratorMatrix, moduli: Iterable[int]) -> RankReport:
    snf = smith_normal_form(m)
    by_modulus = tuple((mod, sum(1 for d in snf.D if d % mod != 0)) for mod in moduli)
    return RankReport(
        integer_rank=snf.rank,
        by_modulus=by_modulus,
        invariant_factors=tuple(snf.invariant_factors()),
    )


# --------------------------------------------------------------------------
# Prime fields (galois)
# --------------------------------------------------------------------------

def _to_field(M: np.ndarray, p: int):
    field = galois.GF(p)
    arr = np.array(np.mod(M, p).tolist(), dtype=np.int64).reshape(M.shape)
    return arr.view(field)


def rank_gf(A, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    require_prime(p)
    M = as_matrix(A)
    if M.size == 0:
        return 0
    return int(np.linalg.matrix_rank(_to_field(M, p)))


def rref_mod(A, p: int) -> np.ndarray:
    """Reduced row echelon form over GF(p) with zero rows removed."""
    require_prime(p)
    M = as_matrix(A)
    if M.size == 0:
        return np.zeros((0, M.shape[1]), dtype=np.int64)
    reduced = _to_field(M, p).row_reduce().view(np.ndarray).astype(np.int64)
    return reduced[reduced.any(axis=1)]


def nullspace_mod(A, p: int) -> np.ndarray:
    """Rows spanning {x : A·x = 0 mod p}."""
    require_prime(p)
    M = as_matrix(A)
    rows, cols = M.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0 or not M.any():
        return np.eye(cols, dtype=np.int64)
    basis = _to_field(M, p).null_space().view(np.ndarray).astype(np.int64)
    return basis.reshape(-1, cols)


def _dot_mod(E: np.ndarray, K: np.ndarray, p: int) -> np.ndarray:
    if p < (1 << 20):
        return (np.asarray(E, dtype=np.int64) % p) @ K.T.astype(np.int64) % p
    return (np.asarray(E, dtype=object) % p).dot(K.T.astype(object)) % p


class ModularSpan:
    """Membership in the row span of a matrix over GF(p)."""

    def __init__(self, rows, p: int):
        self.p = p
        self.annihilator = nullspace_mod(rows, p)

    def contains_many(self, E: np.ndarray) -> np.ndarray:
        E = np.atleast_2d(E)
        if self.annihilator.shape[0] == 0:
            return np.ones(E.shape[0], dtype=bool)
        residue = _dot_mod(E, self.annihilator, self.p)
        return ~np.any(residue != 0, axis=1)

    def contains(self, v: Sequence[int]) -> bool:
        return bool(self.contains_many(np.array([list(v)], dtype=object))[0])


class IntegerLattice:
    """Membership in the integer row lattice of a matrix."""

    def __init__(self, rows):
        M = as_matrix(rows)
        snf = smith_normal_form(M.T)
        self.rank = snf.rank
        self.width = M.shape[1]
        self.U = np.array(snf.U, dtype=object).reshape(self.width, self.width)
        self.D = np.array(snf.D[: self.rank], dtype=object)

    def contains_many(self, E: np.ndarray) -> np.ndarray:
        E = np.atleast_2d(np.asarray(E, dtype=object))
        if E.shape[0] == 0:
            return np.zeros(0, dtype=bool)
        W = E.dot(self.U.T)
        head = W[:, : self.rank]
        ok = np.ones(E.shape[0], dtype=bool)
        if self.rank:
            ok &= ((head % self.D) == 0).astype(bool).all(axis=1)
        if self.rank < self.width:
            ok &= (W[:, self.rank :] == 0).astype(bool).all(axis=1)
        return ok

    def contains(self, v: Sequence[int]) -> bool:
        return bool(self.contains_many(np.array([list(v)], dtype=object))[0])


# --------------------------------------------------------------------------
# Canonical form
# --------------------------------------------------------------------------

def _apply_op(M: np.ndarray, op: ElementaryOp, n: int, q: Optional[int]) -> np.ndarray:
    kind = op.kind
    if kind == "row_add":
        M[op.target, :] = M[op.target, :] + op.coeff * M[op.source, :]
    elif kind == "row_swap":
        _swap_rows(M, op.target, op.source)
    elif kind == "row_scale":
        M[op.target, :] = op.coeff * M[op.target, :]
    elif kind == "register_swap":
        _swap_cols(M, op.target, op.source)
        _swap_cols(M, n + op.target, n + op.source)
    elif kind == "dft":
        i = op.target
        x = M[:, i].copy()
        M[:, i] = -M[:, n + i]
        M[:, n + i] = x
    elif kind == "drop_rows":
        M = np.delete(M, list(op.rows), axis=0)
    if q is not None:
        M = M % q
    return M


def _undo_column_op(M: np.ndarray, op: ElementaryOp, n: int) -> None:
    if op.kind == "register_swap":
        _swap_cols(M, op.target, op.source)
        _swap_cols(M, n + op.target, n + op.source)
    elif op.kind == "dft":
        i = op.target
        z = M[:, n + i].copy()
        M[:, n + i] = -M[:, i]
        M[:, i] = z


def _find_pivot(M: np.ndarray, t: int, n: int) -> Optional[Tuple[int, int, bool]]:
    rows = M.shape[0]
    for offset, via_z in ((0, False), (n, True)):
        for reg in range(t, n):
            for row in range(t, rows):
                if M[row, offset + reg] != 0:
                    return row, reg, via_z
    return None


def canonical_form(m: GeneratorMatrix, q: int) -> CanonicalForm:
    """
    Row-reduce a commuting generator set to [I X2 | Z1 Z2] over GF(q).

    Pivots are taken in the X block first (smallest register, then smallest
    row); when the remaining X block is zero a register's X and Z columns are
    exchanged by a DFT before pivoting. Rows that vanish mod q are dropped.

    Args:
        m: generators; rows must commute mod q
        q: prime local dimension

    Returns:
        CanonicalForm whose ops_log replays the reduction on m
    """
    require_prime(q)
    require_commuting(m, q)
    n = m.n
    M = m.to_array() % q
    rows = M.shape[0]
    ops: List[ElementaryOp] = []
    order = list(range(n))

    def do(op: ElementaryOp) -> None:
        nonlocal M
        M = _apply_op(M, op, n, q)
        ops.append(op)

    t = 0
    while t < min(rows, n):
        found = _find_pivot(M, t, n)
        if found is None:
            break
        row, reg, via_z = found
        if via_z:
            do(ElementaryOp(kind="dft", target=reg))
        if reg != t:
            do(ElementaryOp(kind="register_swap", target=t, source=reg))
            order[t], order[reg] = order[reg], order[t]
        if row != t:
            do(ElementaryOp(kind="row_swap", target=t, source=row))
        inverse = pow(int(M[t, t]), -1, q)
        if inverse != 1:
            do(ElementaryOp(kind="row_scale", target=t, coeff=inverse))
        for i in range(rows):
            if i != t and M[i, t] != 0:
                do(ElementaryOp(kind="row_add", target=i, source=t, coeff=(-M[i, t]) % q))
        t += 1

    zero_rows = tuple(i for i in range(rows) if not M[i, :].any())
    if zero_rows:
        do(ElementaryOp(kind="drop_rows", rows=zero_rows))

    logger.debug("[CANON] q=%d rank=%d ops=%d", q, t, len(ops))
    matrix = GeneratorMatrix.from_rows(n, M.tolist(), dim=Prime(q=q))
    return CanonicalForm(
        matrix=matrix,
        q=q,
        rank=t,
        pivot_cols=tuple(range(t)),
        register_order=tuple(order),
        ops_log=tuple(ops),
    )


def replay_ops(m: GeneratorMatrix, ops: Sequence[ElementaryOp], q: int) -> GeneratorMatrix:
    """Apply a recorded operation log to m mod q."""
    M = m.to_array() % q
    for op in ops:
        M = _apply_op(M, op, m.n, q)
    return GeneratorMatrix.from_rows(m.n, M.tolist(), dim=Prime(q=q))


def restore_frame(M: np.ndarray, ops: Sequence[ElementaryOp], n: int) -> np.ndarray:
    """Undo the register swaps and DFTs of an operation log over the integers."""
    M = M.copy()
    for op in reversed([op for op in ops if op.is_column_op]):
        _undo_column_op(M, op, n)
    return M
