# ldikit/services/catalog.py
"""
Built-in example codes and families.

Entries are constructed on demand; LDI-flagged entries are checked with
verify_ldi before they are returned.
"""
import logging
from typing import Callable, Dict, List, Optional

import numpy as np

from ldikit.exceptions import InconsistentCodeError, ParseError
from ldikit.schemas import (
    CatalogEntry,
    CodeParameters,
    GeneratorMatrix,
    Prime,
    local_dimension_for,
)
from ldikit.services.ldi import make_ldi, verify_ldi
from ldikit.services.linalg import integer_rank, rank_gf, rank_mod, require_prime

logger = logging.getLogger(__name__)

STEANE_X = [
    [1, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 0, 1, 1],
]
# the commonly printed second Z-row (0, 1, -1, 0, 1, -1, 0) has product -2
# with the third X-row; registers 5 and 6 carry flipped powers here, which
# is the same code mod 2
STEANE_Z = [
    [1, -1, 1, -1, 0, 0, 0],
    [0, 1, -1, 0, -1, 1, 0],
    [0, 0, 1, -1, 0, -1, 1],
]


def _checked(entry: CatalogEntry) -> CatalogEntry:
    if entry.is_ldi and not verify_ldi(entry.matrix).is_ldi:
        raise InconsistentCodeError(f"catalog entry {entry.name} is not LDI")
    logger.debug("[CATALOG] built %s (n=%d)", entry.name, entry.matrix.n)
    return entry


def _css_rows(x_rows: List[List[int]], z_rows: List[List[int]], n: int) -> List[List[int]]:
    return [row + [0] * n for row in x_rows] + [[0] * n + row for row in z_rows]


def hamming_checks(N: int) -> List[List[int]]:
    """Parity checks of the [2^N-1, 2^N-1-N] Hamming code; column c is c in binary, row 0 the top bit."""
    n = 2**N - 1
    return [[(c >> (N - 1 - i)) & 1 for c in range(1, n + 1)] for i in range(N)]


def two_register_example(q_display: int = 3) -> CatalogEntry:
    """The [[2,0]] pair <X X^-1, Z Z>."""
    matrix = GeneratorMatrix.from_rows(2, [[1, -1, 0, 0], [0, 0, 1, 1]])
    return _checked(
        CatalogEntry(
            name="two_register",
            matrix=matrix,
            declared=CodeParameters(n=2, k=0, d=2, dim=local_dimension_for(q_display)),
            notes="stabilizes (1/sqrt q) sum_j |j, q-j mod q> for every q",
        )
    )


def steane_ldi() -> CatalogEntry:
    matrix = GeneratorMatrix.from_rows(7, _css_rows(STEANE_X, STEANE_Z, 7), dim=Prime(q=2))
    return _checked(
        CatalogEntry(
            name="steane_ldi",
            matrix=matrix,
            declared=CodeParameters(n=7, k=1, d=3, dim=Prime(q=2)),
            notes="LDI form of the Steane code with alternating Z powers",
        )
    )


def steane_standard() -> CatalogEntry:
    """Qubit Steane code from the Hamming checks; commutes only mod 2."""
    H = hamming_checks(3)
    matrix = GeneratorMatrix.from_rows(7, _css_rows(H, H, 7), dim=Prime(q=2))
    return CatalogEntry(
        name="steane_standard",
        matrix=matrix,
        declared=CodeParameters(n=7, k=1, d=3, dim=Prime(q=2)),
        notes="binary column order; input for make_ldi",
        is_ldi=False,
    )


def hamming_family(N: int) -> CatalogEntry:
    """[[2^N-1, 2^N-1-2N, 3]] CSS code in css-variant LDI form."""
    if N < 3:
        raise ValueError(f"hamming family needs N >= 3, got {N}")
    n = 2**N - 1
    H = hamming_checks(N)
    source = GeneratorMatrix.from_rows(n, _css_rows(H, H, n), dim=Prime(q=2))
    matrix = make_ldi(source, 2, variant="css")
    return _checked(
        CatalogEntry(
            name=f"hamming:{N}",
            matrix=matrix,
            declared=CodeParameters(n=n, k=n - 2 * N, d=3, dim=Prime(q=2)),
            notes="Hamming parity checks as X and Z rows, css lift",
        )
    )


def toric_code(N: int) -> CatalogEntry:
    """
    Toric code on an N x N torus with signed powers.

    Edge h(r, c) = r*N + c runs east from vertex (r, c); edge v(r, c) =
    N^2 + r*N + c runs south from it. Plaquette (r, c) puts +1 on h(r, c)
    and v(r, c) and -1 on h(r+1, c) and v(r, c+1); vertex (r, c) puts +1 on
    h(r, c) and v(r-1, c) and -1 on h(r, c-1) and v(r, c). The last
    plaquette and the last vertex are dependent and omitted.
    """
    if N < 2:
        raise ValueError(f"toric code needs N >= 2, got {N}")
    n = 2 * N * N

    def h(r: int, c: int) -> int:
        return (r % N) * N + (c % N)

    def v(r: int, c: int) -> int:
        return N * N + (r % N) * N + (c % N)

    rows: List[List[int]] = []
    cells = [(r, c) for r in range(N) for c in range(N)][:-1]
    for r, c in cells:
        row = [0] * (2 * n)
        for edge, power in ((h(r, c), 1), (v(r, c), 1), (h(r + 1, c), -1), (v(r, c + 1), -1)):
            row[edge] = power
        rows.append(row)
    for r, c in cells:
        row = [0] * (2 * n)
        for edge, power in ((h(r, c), 1), (v(r - 1, c), 1), (h(r, c - 1), -1), (v(r, c), -1)):
            row[n + edge] = power
        rows.append(row)

    matrix = GeneratorMatrix.from_rows(n, rows, dim=Prime(q=2))
    return _checked(
        CatalogEntry(
            name=f"toric:{N}",
            matrix=matrix,
            declared=CodeParameters(n=n, k=2, d=N, dim=Prime(q=2)),
            notes="opposing edge pairs carry opposite powers",
        )
    )


def random_commuting_code(
    n: int,
    r: int,
    q: int,
    seed: Optional[int] = None,
    steps: Optional[int] = None,
) -> GeneratorMatrix:
    """
    Random stabilizer code over Z_q with r independent generators.

    Starts from <Z_1, ..., Z_r>, applies random symplectic register
    operations (CNOT, phase, DFT, swap), mixes rows by a random invertible
    matrix and reduces mod q. The result commutes mod q and is usually not
    LDI.
    """
    require_prime(q)
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    rng = np.random.default_rng(seed)
    S = np.zeros((r, 2 * n), dtype=np.int64)
    for i in range(r):
        S[i, n + i] = 1

    for _ in range(steps if steps is not None else 4 * n):
        kind = int(rng.integers(4))
        i = int(rng.integers(n))
        c = int(rng.integers(1, q)) if q > 1 else 1
        if kind == 0 and n > 1:
            j = int((i + rng.integers(1, n)) % n)
            S[:, j] += c * S[:, i]
            S[:, n + i] -= c * S[:, n + j]
        elif kind == 1:
            S[:, n + i] += c * S[:, i]
        elif kind == 2:
            a, b = S[:, i].copy(), S[:, n + i].copy()
            S[:, i], S[:, n + i] = -b, a
        elif n > 1:
            j = int(rng.integers(n))
            S[:, [i, j]] = S[:, [j, i]]
            S[:, [n + i, n + j]] = S[:, [n + j, n + i]]
        S %= q

    if r:
        while True:
            G = rng.integers(0, q, size=(r, r))
            if rank_gf(G, q) == r:
                break
        S = (G @ S) % q
    return GeneratorMatrix.from_rows(n, S.tolist(), dim=Prime(q=q))


_FAMILIES: Dict[str, Callable[[int], CatalogEntry]] = {
    "hamming": hamming_family,
    "toric": toric_code,
}
_FIXED: Dict[str, Callable[[], CatalogEntry]] = {
    "steane_ldi": steane_ldi,
    "steane_standard": steane_standard,
    "two_register": two_register_example,
}


def catalog_names() -> List[str]:
    return sorted(_FIXED) + [f"{name}:N" for name in sorted(_FAMILIES)]


def lookup(ref: str) -> CatalogEntry:
    """Resolve 'steane_ldi', 'two_register', 'hamming:4', 'toric:3' and so on."""
    name, _, arg = ref.strip().partition(":")
    if name in _FIXED and not arg:
        return _FIXED[name]()
    if name in _FAMILIES and arg:
        try:
            size = int(arg)
        except ValueError as exc:
            raise ParseError(f"family size must be an integer in {ref!r}") from exc
        return _FAMILIES[name](size)
    raise ParseError(f"unknown catalog entry {ref!r}; known: {', '.join(catalog_names())}")


def declared_k(entry: CatalogEntry) -> int:
    """k re-derived from the matrix over the declared modulus."""
    modulus = entry.declared.dim.modulus
    if modulus is None:
        return entry.matrix.n - integer_rank(entry.matrix)
    return entry.matrix.n - rank_mod(entry.matrix, modulus)
