# ldikit/services/bounds.py
"""
Cutoff local dimensions p* above which an LDI code keeps its distance.

All values are exact Python integers. Half-integer powers are rounded up, so
every result stays an over-bound.
"""
import logging
from typing import Literal, Optional

from sympy import integer_nthroot

from ldikit.exceptions import NotLdiError
from ldikit.schemas import (
    BoundReport,
    DistancePromise,
    GeneratorMatrix,
    Integers,
    LocalDimension,
    Modulo,
    Prime,
    Reals,
    RealsModulo,
)
from ldikit.services.ldi import verify_ldi
from ldikit.services.linalg import rank_report

logger = logging.getLogger(__name__)

PowerMethod = Literal["binary", "repeated"]

# Largest integer below 2*pi.
ROTOR_LIMIT = 6


def int_power(base: int, exp: int, method: PowerMethod = "binary") -> int:
    """base**exp with 0**0 == 1, by square-and-multiply or by repeated products."""
    if exp < 0:
        raise ValueError("negative exponent")
    if method == "repeated":
        result = 1
        for _ in range(exp):
            result *= base
        return result
    result, square = 1, base
    while exp:
        if exp & 1:
            result *= square
        square *= square
        exp >>= 1
    return result


def ceil_half_power(base: int, numerator: int, method: PowerMethod = "binary") -> int:
    """Smallest integer >= base ** (numerator / 2)."""
    if numerator % 2 == 0:
        return int_power(base, numerator // 2, method)
    root, exact = integer_nthroot(int_power(base, numerator, method), 2)
    return int(root) if exact else int(root) + 1


def _check(B: int, d: int, q: Optional[int] = None) -> None:
    if B < 1:
        raise ValueError(f"B must be at least 1, got {B}")
    if d < 2:
        raise ValueError(f"bound undefined for d={d}; need d >= 2")
    if q is not None and q < 2:
        raise ValueError(f"q must be at least 2, got {q}")


def pstar_hadamard(B: int, d: int, method: PowerMethod = "binary") -> int:
    """B^(2(d-1)) * (2(d-1))^(d-1)."""
    _check(B, d)
    e = d - 1
    return int_power(B, 2 * e, method) * int_power(2 * e, e, method)


def pstar_alternative(B: int, q: int, d: int, method: PowerMethod = "binary") -> int:
    """(B(q-1)(d-1)(1 + (d-1)^2 (q-1)^(d-1) ceil((d-2)^((d-2)/2))))^(d-1)."""
    _check(B, d, q)
    e = d - 1
    inner = 1 + e * e * int_power(q - 1, e, method) * ceil_half_power(d - 2, d - 2, method)
    return int_power(B * (q - 1) * e * inner, e, method)


def pstar_css(B: int, d: int, method: PowerMethod = "binary") -> int:
    """B^(d-1) * ceil((d-1)^((d-1)/2))."""
    _check(B, d)
    e = d - 1
    return int_power(B, e, method) * ceil_half_power(e, e, method)


def report_for(m: GeneratorMatrix, q: int, d: int) -> BoundReport:
    """
    Evaluate every applicable cutoff for an LDI matrix.

    Args:
        m: LDI generators; B is their largest absolute entry
        q: local dimension of the source code
        d: distance of the source code

    Returns:
        BoundReport; the CSS bound is present only for CSS matrices
    """
    ldi = verify_ldi(m)
    if not ldi.is_ldi:
        raise NotLdiError(f"{len(ldi.violations)} pairs of rows fail over the integers")
    B = max(ldi.B, 1)
    hadamard = pstar_hadamard(B, d)
    alternative = pstar_alternative(B, q, d)
    css = pstar_css(B, d) if m.is_css() else None
    smallest = min(v for v in (hadamard, alternative, css) if v is not None)
    logger.debug("[BOUNDS] B=%d q=%d d=%d min p*=%d", B, q, d, smallest)
    return BoundReport(
        B=B,
        q=q,
        d=d,
        p_star_hadamard=hadamard,
        p_star_alternative=alternative,
        p_star_css=css,
        rotor_ok=smallest <= ROTOR_LIMIT,
    )


def distance_promise(
    report: BoundReport,
    target: LocalDimension,
    m: Optional[GeneratorMatrix] = None,
) -> DistancePromise:
    """
    Whether the source distance carries over to the target local dimension.

    Prime and wrapped-real targets need p > min p*. The integers and the
    reals always keep rank and have distance d* >= d. For Z_m only rank
    preservation is reported; it is checked from the Smith invariants when
    the matrix is supplied.
    """
    p_star = report.min_p_star
    if isinstance(target, (Prime, RealsModulo)):
        p = target.q if isinstance(target, Prime) else target.p
        promised = p > p_star
        reason = (
            f"{target.label} exceeds p*={p_star}" if promised
            else f"{target.label} does not exceed p*={p_star}"
        )
        return DistancePromise(
            target=target, promised=promised, rank_preserved=True, p_star=p_star, reason=reason
        )
    if isinstance(target, (Integers, Reals)):
        return DistancePromise(
            target=target,
            promised=True,
            rank_preserved=True,
            p_star=p_star,
            reason="infinite local dimension: distance becomes d* >= d",
        )
    if isinstance(target, Modulo):
        preserved = True
        if m is not None:
            ranks = rank_report(m, [target.m])
            preserved = ranks.rank_for(target.m) == ranks.integer_rank
        return DistancePromise(
            target=target,
            promised=False,
            rank_preserved=preserved,
            p_star=p_star,
            reason="composite modulus: rank only, distance not promised",
        )
    raise TypeError(f"unsupported local dimension {target!r}")
