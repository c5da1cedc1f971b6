# ldikit/services/statecheck.py
"""
Dense state-vector check that decoded generators stabilize a codeword.

Register operators act as X|j> = |j+1 mod q> and Z|j> = w^j |j> with
w = exp(2 pi i / q); a vector (a | b) acts as Z^b X^a on every register.
"""
import cmath
import logging
from typing import Optional

import numpy as np

from ldikit.config import get_settings
from ldikit.exceptions import BudgetExceeded, DimensionMismatch, InconsistentCodeError
from ldikit.schemas import DenseState, GeneratorMatrix, PauliVector
from ldikit.services.linalg import require_prime
from ldikit.services.symplectic import require_commuting

logger = logging.getLogger(__name__)

STABILIZE_TOLERANCE = 1e-8


def omega(q: int) -> complex:
    return cmath.exp(2j * cmath.pi / q)


def _apply(tensor: np.ndarray, v: PauliVector, q: int) -> np.ndarray:
    phases = omega(q) ** np.arange(q)
    out = tensor
    for i in range(v.n):
        a, b = v.site(i)
        a, b = a % q, b % q
        if a:
            out = np.roll(out, a, axis=i)
        if b:
            shape = [1] * v.n
            shape[i] = q
            out = out * (phases**b).reshape(shape)
    return out


def apply_pauli(state: DenseState, v: PauliVector) -> DenseState:
    """Apply Z^b X^a site by site; the global phase carries no meaning."""
    if v.n != state.n:
        raise DimensionMismatch(f"operator has n={v.n}, state has n={state.n}")
    out = _apply(state.tensor(), v, state.q)
    return DenseState(q=state.q, n=state.n, amplitudes=out.reshape(-1))


def expectation(state: DenseState, v: PauliVector) -> complex:
    return state.overlap(apply_pauli(state, v))


def stabilizes(state: DenseState, v: PauliVector, tol: float = STABILIZE_TOLERANCE) -> bool:
    """True when v fixes the state up to a global phase."""
    return abs(expectation(state, v)) >= 1 - tol


def _eigen_scale(v: PauliVector, q: int) -> complex:
    """Scalar mu with (A/mu)^q = I; only qubit operators with odd a·b need mu = i."""
    if q == 2 and sum(a * b for a, b in zip(v.x, v.z)) % 2:
        return 1j
    return 1.0


def stabilized_state(
    m: GeneratorMatrix,
    q: int,
    state_budget: Optional[int] = None,
) -> DenseState:
    """
    Joint eigenvector of every generator, starting from |0...0>.

    Each generator's eigenprojector (1/q) sum_k (w^-t A / mu)^k is applied in
    turn, taking the first eigenvalue index t that leaves a nonzero vector.
    The projectors commute because the rows commute mod q.

    Raises:
        BudgetExceeded: q**n is above the state budget
        InconsistentCodeError: some generator fails to fix the result
    """
    require_prime(q)
    require_commuting(m, q)
    budget = state_budget or get_settings().state_budget
    size = q**m.n
    if size > budget:
        raise BudgetExceeded(f"dense state on {m.n} registers of dimension {q}", size, budget)

    psi = np.zeros((q,) * m.n, dtype=np.complex128)
    psi[(0,) * m.n] = 1.0
    w = omega(q)
    for index, row in enumerate(m.rows):
        mu = _eigen_scale(row, q)
        powers = [psi]
        for _ in range(q - 1):
            powers.append(_apply(powers[-1], row, q) / mu)
        for t in range(q):
            projected = sum(w ** (-t * k) * powers[k] for k in range(q)) / q
            norm = float(np.linalg.norm(projected))
            if norm > 1e-9:
                psi = projected / norm
                break
        else:
            raise InconsistentCodeError(f"projector of row {index} annihilates the state")
        logger.debug("[STATE] row %d eigenvalue index %d", index, t)

    state = DenseState(q=q, n=m.n, amplitudes=psi.reshape(-1))
    for index, row in enumerate(m.rows):
        if not stabilizes(state, row):
            raise InconsistentCodeError(f"row {index} does not fix the projected state")
    logger.info("[STATE] stabilized state on %d registers, q=%d", m.n, q)
    return state
