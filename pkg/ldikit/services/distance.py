# ldikit/services/distance.py
"""
Distance oracles, error classification and logical operators.

distance_mod enumerates error vectors over Z_p; d_star scans support sets and
asks whether the integer kernel of the restricted generator block realizes
the full support. Both treat k = 0 codes (stabilizer states) by returning
the least weight of a non-identity group element.
"""
import itertools
import logging
import math
from math import comb
from typing import Iterator, List, Optional, Sequence

import numpy as np
from sympy import isprime

from ldikit.config import get_settings
from ldikit.exceptions import BudgetExceeded, InconsistentCodeError, NotLdiError
from ldikit.schemas import (
    DistanceResult,
    ErrorVerdict,
    GeneratorMatrix,
    PauliVector,
    PhaseSpaceDistance,
    Verdict,
)
from ldikit.services.ldi import sign_lift, verify_ldi
from ldikit.services.linalg import (
    IntegerLattice,
    ModularSpan,
    identity,
    integer_kernel,
    integer_rank,
    nullspace_mod,
    rank_gf,
    rank_mod,
    require_prime,
    solve_integer,
)
from ldikit.services.symplectic import require_commuting, syndrome_of
from ldikit.utils.enumeration import ScanJob, run_level, site_tables, site_values

logger = logging.getLogger(__name__)

# Largest coefficient radius tried when realizing a kernel witness.
KERNEL_RADIUS = 4


def _check_weight(w_max: int) -> None:
    if w_max < 1:
        raise ValueError("w_max must be at least 1")


def _span_mod(M: np.ndarray, p: int):
    """Row span over Z_p; composite moduli go through the lattice rows + pZ^N."""
    if isprime(p):
        return ModularSpan(M, p)
    width = M.shape[1]
    return IntegerLattice(np.vstack([M.reshape(-1, width), p * identity(width)]))


def _jobs(
    tables: np.ndarray,
    values: np.ndarray,
    n: int,
    w: int,
    modulus: Optional[int],
    exclusion,
    objective: str,
    block_limit: int,
) -> Iterator[ScanJob]:
    for support in itertools.combinations(range(n), w):
        yield ScanJob(
            support=support,
            tables=tables[list(support)],
            values=values,
            n=n,
            modulus=modulus,
            block_limit=block_limit,
            exclusion=exclusion,
            objective=objective,
        )


def _budget_check(what: str, needed: int, budget: int) -> None:
    if needed > budget:
        logger.warning("[DISTANCE] %s needs %d, budget %d", what, needed, budget)
        raise BudgetExceeded(what, needed, budget)


def distance_mod(
    m: GeneratorMatrix,
    p: int,
    w_max: int,
    budget: Optional[int] = None,
    threads: Optional[int] = None,
) -> DistanceResult:
    """
    Least weight of an undetectable error over Z_p.

    Args:
        m: generators commuting mod p
        p: local dimension, at least 2
        w_max: largest weight searched
        budget: cap on the number of candidate vectors over all levels
        threads: worker processes; results do not depend on this

    Returns:
        DistanceResult with the first witness in enumeration order
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    _check_weight(w_max)
    require_commuting(m, p)
    settings = get_settings()
    budget = budget or settings.search_budget
    threads = threads or settings.threads

    n = m.n
    M = np.array((m.to_array() % p).tolist(), dtype=np.int64).reshape(-1, 2 * n)
    k = n - rank_mod(M, p) if m.num_rows else n
    exclusion = _span_mod(M, p) if k > 0 else None
    values = site_values(modulus=p)
    tables = site_tables(M, n, values)

    top = min(w_max, n)
    total = 0
    for w in range(1, top + 1):
        total += comb(n, w) * len(values) ** w
        _budget_check(f"mod-{p} search to weight {w}", total, budget)
        jobs = _jobs(tables, values, n, w, p, exclusion, "first", settings.block_limit)
        hit = run_level(jobs, threads)
        if hit is not None:
            witness = PauliVector(n=n, entries=hit[1].tolist())
            logger.info("[DISTANCE] p=%d d=%d witness=%s", p, w, witness.entries)
            return DistanceResult(
                d=w,
                searched_weight=w,
                witness=witness,
                modulus=p,
                logical_count=k,
                candidates=total,
            )
    return DistanceResult(searched_weight=top, modulus=p, logical_count=k, candidates=total)


def _canonical_sign(e: List[int]) -> List[int]:
    for value in e:
        if value:
            return e if value > 0 else [-x for x in e]
    return e


def _kernel_witness(
    basis: Sequence[Sequence[int]],
    support: Sequence[int],
    n: int,
    lattice: Optional[IntegerLattice],
) -> Optional[List[int]]:
    """
    Kernel vector nonzero on every support site and outside the lattice.

    Returns None when the kernel cannot realize the support (some site is
    zero on every basis vector, or every basis vector lies in the lattice).
    """
    w = len(support)
    if not basis:
        return None
    B = np.array([list(b) for b in basis], dtype=object).reshape(-1, 2 * w)
    for i in range(w):
        if not any(B[j, i] != 0 or B[j, w + i] != 0 for j in range(B.shape[0])):
            return None

    def embed(v) -> List[int]:
        e = [0] * (2 * n)
        for i, site in enumerate(support):
            e[site] = int(v[i])
            e[n + site] = int(v[w + i])
        return e

    if lattice is not None and all(lattice.contains(embed(b)) for b in B):
        return None

    kappa = B.shape[0]
    for radius in range(1, KERNEL_RADIUS + 1):
        for coeffs in itertools.product(range(-radius, radius + 1), repeat=kappa):
            if max(abs(c) for c in coeffs) != radius:
                continue
            v = np.array(coeffs, dtype=object).dot(B)
            if any(v[i] == 0 and v[w + i] == 0 for i in range(w)):
                continue
            e = embed(v)
            if lattice is None or not lattice.contains(e):
                return _canonical_sign(e)
    raise InconsistentCodeError(
        f"kernel on support {tuple(support)} realizes it but no witness "
        f"within coefficient radius {KERNEL_RADIUS}"
    )


def _require_ldi(m: GeneratorMatrix) -> None:
    report = verify_ldi(m)
    if not report.is_ldi:
        i, j, product = report.violations[0]
        raise NotLdiError(f"rows {i} and {j} have integer product {product}")


def d_star(
    m: GeneratorMatrix,
    w_max: int,
    budget: Optional[int] = None,
) -> DistanceResult:
    """
    Least weight of an unavoidable error (zero syndrome over the integers).

    For each support S the generator block [-Z_S | X_S] is restricted to S;
    an unavoidable error on S exists iff the block's integer kernel contains
    a vector nonzero on every site of S that is not a stabilizer.
    """
    _check_weight(w_max)
    _require_ldi(m)
    budget = budget or get_settings().support_budget

    n = m.n
    M = m.to_array()
    k = n - integer_rank(M) if m.num_rows else n
    lattice = IntegerLattice(M) if k > 0 else None
    X, Z = M[:, :n], M[:, n:]

    top = min(w_max, n)
    scanned = 0
    for w in range(1, top + 1):
        scanned += comb(n, w)
        _budget_check(f"d* support scan to weight {w}", scanned, budget)
        for support in itertools.combinations(range(n), w):
            cols = list(support)
            block = np.hstack([-Z[:, cols], X[:, cols]]).reshape(M.shape[0], 2 * w)
            basis = integer_kernel(block) if M.shape[0] else [
                tuple(int(x) for x in row) for row in identity(2 * w)
            ]
            e = _kernel_witness(basis, support, n, lattice)
            if e is not None:
                witness = PauliVector(n=n, entries=e)
                logger.info("[DSTAR] d*=%d on support %s", w, support)
                return DistanceResult(
                    d=w, searched_weight=w, witness=witness, logical_count=k, candidates=scanned
                )
    return DistanceResult(searched_weight=top, logical_count=k, candidates=scanned)


def d_star_enumerated(
    m: GeneratorMatrix,
    w_max: int,
    coeff_bound: int = 3,
    budget: Optional[int] = None,
) -> DistanceResult:
    """Reference d* by enumerating integer errors with entries in [-coeff_bound, coeff_bound]."""
    _check_weight(w_max)
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    _require_ldi(m)
    settings = get_settings()
    budget = budget or settings.search_budget

    n = m.n
    M = m.to_array()
    k = n - integer_rank(M) if m.num_rows else n
    lattice = IntegerLattice(M) if k > 0 else None
    values = site_values(bound=coeff_bound)
    tables = site_tables(M, n, values)

    top = min(w_max, n)
    total = 0
    for w in range(1, top + 1):
        total += comb(n, w) * len(values) ** w
        _budget_check(f"integer enumeration to weight {w}", total, budget)
        hit = run_level(
            _jobs(tables, values, n, w, None, lattice, "first", settings.block_limit)
        )
        if hit is not None:
            witness = PauliVector(n=n, entries=hit[1].tolist())
            return DistanceResult(
                d=w, searched_weight=w, witness=witness, logical_count=k, candidates=total
            )
    return DistanceResult(searched_weight=top, logical_count=k, candidates=total)


def classify_error(m: GeneratorMatrix, e: PauliVector, p: int) -> ErrorVerdict:
    """Detectable, InGroup, Unavoidable or Artifact relative to Z_p."""
    if p < 2:
        raise ValueError("p must be at least 2")
    exact = syndrome_of(m, e)
    if any(v % p for v in exact.values):
        tag = Verdict.DETECTABLE
    else:
        in_group = False
        if m.num_rows:
            M = np.array((m.to_array() % p).tolist(), dtype=np.int64).reshape(-1, 2 * m.n)
            in_group = _span_mod(M, p).contains([x % p for x in e.entries])
        if in_group or e.reduced(p).is_zero():
            tag = Verdict.IN_GROUP
        elif exact.is_zero():
            tag = Verdict.UNAVOIDABLE
        else:
            tag = Verdict.ARTIFACT
    return ErrorVerdict(tag=tag, witness_syndrome=exact, modulus=p)


# --------------------------------------------------------------------------
# Logical operators
# --------------------------------------------------------------------------

def _sp(u: np.ndarray, v: np.ndarray, n: int) -> int:
    return int(np.dot(u[:n], v[n:]) - np.dot(u[n:], v[:n]))


def _integer_lift(v: np.ndarray, m: GeneratorMatrix, p: int) -> Optional[List[int]]:
    """v + p*delta with zero integer syndrome, via the integer solver."""
    n = m.n
    M = m.to_array()
    block = np.hstack([-M[:, n:], M[:, :n]])
    e = PauliVector(n=n, entries=v.tolist())
    syndrome = syndrome_of(m, e).values
    delta = solve_integer(block, [-(s // p) for s in syndrome])
    if delta is None:
        return None
    return [int(x) + p * int(d) for x, d in zip(v.tolist(), delta)]


def logical_operators(m: GeneratorMatrix, p: int, lift: bool = True) -> List[PauliVector]:
    """
    Symplectic basis of the logical space N(S)/S over GF(p).

    Candidates are the transversal operators X^1...X^1 and Z^1...Z^1 first,
    then the normalizer basis. Pairs come out as [X1, Z1, X2, Z2, ...] with
    X_i ⊙ Z_i = 1 mod p and all other products zero. For LDI codes each
    vector is lifted to an integer vector with zero integer syndrome.

    Raises:
        InconsistentCodeError: when the complement size differs from 2k or a
            vector has no symplectic partner
    """
    require_prime(p)
    require_commuting(m, p)
    n = m.n
    M = np.array((m.to_array() % p).tolist(), dtype=np.int64).reshape(-1, 2 * n)
    r = rank_gf(M, p) if m.num_rows else 0
    k = n - r
    if k == 0:
        return []

    check = np.hstack([-M[:, n:], M[:, :n]]) % p
    normalizer = nullspace_mod(check, p) if m.num_rows else identity(2 * n).astype(np.int64)
    seeds = [
        np.array([1] * n + [0] * n, dtype=np.int64),
        np.array([0] * n + [1] * n, dtype=np.int64),
    ]
    candidates = seeds + [np.asarray(row, dtype=np.int64) for row in normalizer]

    chosen: List[np.ndarray] = []
    current = M.copy()
    rank = r
    for c in candidates:
        if len(chosen) == 2 * k:
            break
        if m.num_rows and np.any((check @ c) % p != 0):
            continue
        stacked = np.vstack([current, c[None, :]])
        new_rank = rank_gf(stacked, p)
        if new_rank > rank:
            chosen.append(c % p)
            current, rank = stacked, new_rank
    if len(chosen) != 2 * k:
        raise InconsistentCodeError(f"found {len(chosen)} logical vectors, expected {2 * k}")

    pool = list(chosen)
    ordered: List[np.ndarray] = []
    while pool:
        u = pool.pop(0)
        partner = next((j for j, w in enumerate(pool) if _sp(u, w, n) % p), None)
        if partner is None:
            raise InconsistentCodeError("logical vector without a symplectic partner")
        v = pool.pop(partner)
        v = v * pow(_sp(u, v, n) % p, -1, p) % p
        pool = [(w - _sp(w, v, n) * u + _sp(w, u, n) * v) % p for w in pool]
        ordered += [u, v]

    result = []
    is_ldi = lift and verify_ldi(m).is_ldi
    for vec in ordered:
        pv = PauliVector(n=n, entries=vec.tolist())
        if is_ldi:
            lifted = sign_lift(pv, m, p)
            if lifted is None:
                entries = _integer_lift(vec, m, p)
                if entries is None:
                    logger.warning("[DISTANCE] logical %s kept as residue", pv.entries)
                else:
                    lifted = PauliVector(n=n, entries=entries)
            pv = lifted or pv
        result.append(pv)
    logger.info("[DISTANCE] %d logical pairs mod %d", k, p)
    return result


# --------------------------------------------------------------------------
# Phase-space distance
# --------------------------------------------------------------------------

def phase_space_norm(v: PauliVector) -> float:
    """Euclidean length sqrt(|a|^2 + |b|^2)."""
    return math.sqrt(sum(x * x for x in v.entries))


def phase_space_distance(
    m: GeneratorMatrix,
    coeff_bound: int,
    w_max: int,
    budget: Optional[int] = None,
    threads: Optional[int] = None,
) -> PhaseSpaceDistance:
    """
    Shortest logical integer vector within the box |entry| <= coeff_bound,
    weight <= w_max. Any vector of weight w has squared norm at least w, so
    the scan stops once w reaches the best squared norm found.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    _check_weight(w_max)
    _require_ldi(m)
    settings = get_settings()
    budget = budget or settings.search_budget
    threads = threads or settings.threads

    n = m.n
    M = m.to_array()
    lattice = IntegerLattice(M)
    values = site_values(bound=coeff_bound)
    tables = site_tables(M, n, values)

    best = None
    total = 0
    for w in range(1, min(w_max, n) + 1):
        if best is not None and best[0][0] <= w:
            break
        total += comb(n, w) * len(values) ** w
        _budget_check(f"phase-space search to weight {w}", total, budget)
        hit = run_level(
            _jobs(tables, values, n, w, None, lattice, "norm", settings.block_limit), threads
        )
        if hit is not None and (best is None or hit[0] < best[0]):
            best = hit

    if best is None:
        return PhaseSpaceDistance(coeff_bound=coeff_bound, w_max=w_max)
    witness = PauliVector(n=n, entries=best[1].tolist())
    norm2 = int(best[0][0])
    logger.info("[DISTANCE] d_ps^2=%d within box %d, w<=%d", norm2, coeff_bound, w_max)
    return PhaseSpaceDistance(
        value=math.sqrt(norm2),
        norm_squared=norm2,
        witness=witness,
        coeff_bound=coeff_bound,
        w_max=w_max,
    )
