# ldikit/utils/enumeration.py
"""
Vectorized enumeration of fixed-support error vectors.

For a support set S of size w every site takes one of K nonzero (a, b)
values, giving K**w candidates. Each site contributes a fixed (K, r) table
of syndrome terms, so the syndromes of a whole block of candidates are sums
of broadcast tables. Blocks are capped at block_limit rows; the leading
sites of a large support are looped over in Python instead.

Candidates are visited in lexicographic order of their per-site value
indices, which makes "first hit" results independent of how supports are
distributed over worker processes.
"""
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Literal, Optional, Tuple

import numpy as np

Objective = Literal["first", "norm"]
Hit = Tuple[tuple, np.ndarray]  # (ordering key, error vector)


def site_values(modulus: Optional[int] = None, bound: Optional[int] = None) -> np.ndarray:
    """Nonzero (a, b) pairs from Z_modulus^2 or from [-bound, bound]^2."""
    if modulus is not None:
        span = range(modulus)
    elif bound is not None:
        span = range(-bound, bound + 1)
    else:
        raise ValueError("need a modulus or a coefficient bound")
    pairs = [(a, b) for a in span for b in span if (a, b) != (0, 0)]
    return np.array(pairs, dtype=np.int64).reshape(-1, 2)


def site_tables(M: np.ndarray, n: int, values: np.ndarray) -> np.ndarray:
    """
    Per-site syndrome contributions.

    Returns:
        (n, K, r) array; entry [i, k] is the syndrome of value k on site i,
        i.e. row_x[i] * b - row_z[i] * a for every row
    """
    M = np.asarray(M, dtype=np.int64).reshape(-1, 2 * n)
    X, Z = M[:, :n], M[:, n:]
    a = values[:, 0][:, None]
    b = values[:, 1][:, None]
    return np.stack([b * X[:, i][None, :] - a * Z[:, i][None, :] for i in range(n)])


@dataclass(frozen=True)
class ScanJob:
    support: Tuple[int, ...]
    tables: np.ndarray  # (w, K, r) rows for the support sites
    values: np.ndarray  # (K, 2)
    n: int
    modulus: Optional[int]  # None compares syndromes over the integers
    block_limit: int
    exclusion: object = None  # anything with contains_many(E) -> bool array
    objective: Objective = "first"


def _vectors(job: ScanJob, choices: np.ndarray) -> np.ndarray:
    E = np.zeros((choices.shape[0], 2 * job.n), dtype=np.int64)
    sites = np.array(job.support, dtype=np.int64)
    E[:, sites] = job.values[choices, 0]
    E[:, job.n + sites] = job.values[choices, 1]
    return E


def scan_support(job: ScanJob) -> Optional[Hit]:
    """
    Best admissible candidate on one support.

    "first" returns the earliest candidate in enumeration order with zero
    syndrome that the exclusion does not contain; "norm" returns the one of
    least squared Euclidean norm (earliest on ties).
    """
    w = len(job.support)
    K = len(job.values)
    r = job.tables.shape[-1]
    inner = w
    while inner > 1 and K ** inner > job.block_limit:
        inner -= 1
    outer = w - inner

    acc = job.tables[outer]
    for table in job.tables[outer + 1 :]:
        acc = (acc[:, None, :] + table[None, :, :]).reshape(-1, r)

    best: Optional[Hit] = None
    for outer_choice in itertools.product(range(K), repeat=outer):
        synd = acc
        for site, c in enumerate(outer_choice):
            synd = synd + job.tables[site][c]
        if job.modulus is not None:
            synd = synd % job.modulus
        hit_idx = np.flatnonzero(~np.any(synd != 0, axis=1))
        if not hit_idx.size:
            continue
        inner_choices = np.stack(np.unravel_index(hit_idx, (K,) * inner), axis=1)
        prefix = np.tile(np.array(outer_choice, dtype=np.int64), (hit_idx.size, 1))
        choices = np.hstack([prefix, inner_choices]).astype(np.int64)
        E = _vectors(job, choices)
        if job.exclusion is not None:
            keep = ~job.exclusion.contains_many(E)
            E, choices = E[keep], choices[keep]
            if not E.shape[0]:
                continue
        if job.objective == "first":
            return (job.support, tuple(choices[0].tolist())), E[0]
        norms = (E * E).sum(axis=1)
        j = int(np.argmin(norms))
        key = (int(norms[j]), job.support, tuple(choices[j].tolist()))
        if best is None or key < best[0]:
            best = key, E[j]
    return best


def run_level(jobs: Iterable[ScanJob], threads: int = 1) -> Optional[Hit]:
    """
    Minimum over supports with a deterministic tie-break.

    Sequential runs stop at the first hit for the "first" objective because
    supports arrive in lexicographic order.
    """
    if threads <= 1:
        best: Optional[Hit] = None
        for job in jobs:
            found = scan_support(job)
            if found is None:
                continue
            if job.objective == "first":
                return found
            if best is None or found[0] < best[0]:
                best = found
        return best

    job_list: List[ScanJob] = list(jobs)
    if not job_list:
        return None
    chunk = max(1, len(job_list) // (threads * 4))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = [res for res in pool.map(scan_support, job_list, chunksize=chunk) if res]
    if not results:
        return None
    return min(results, key=lambda res: res[0])
