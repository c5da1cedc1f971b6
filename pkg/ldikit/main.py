# ldikit/main.py
"""
Command line entry point.

CODE arguments accept a QEC1 file path or a catalog reference such as
steane_ldi, two_register, hamming:4 or toric:3. Domain errors exit with 1,
exhausted search budgets with 2.
"""
import csv
import logging
import sys
from typing import List, Optional, Sequence

import click
from pydantic import ValidationError

from ldikit.config import get_settings
from ldikit.exceptions import BudgetExceeded, LdiError, NotPrimeError
from ldikit.schemas import GeneratorMatrix
from ldikit.services import (
    canonical_form,
    classify_error,
    d_star,
    distance_mod,
    distance_promise,
    logical_operators,
    lookup,
    make_ldi,
    parse_local_dimension,
    phase_space_distance,
    phi_decode,
    phi_encode,
    pstar_alternative,
    pstar_css,
    pstar_hadamard,
    rank_report,
    report_for,
    stabilized_state,
    to_nullifiers,
    verify_ldi,
)
from ldikit.services.bounds import ROTOR_LIMIT
from ldikit.services.catalog import catalog_names
from ldikit.utils.codefile import load_code, render_code_file

logger = logging.getLogger(__name__)


def _flag(value: bool) -> str:
    return "true" if value else "false"


class LdiGroup(click.Group):
    """Maps domain exceptions to exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except BudgetExceeded as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)
        except (LdiError, ValidationError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(1)


def _code(ref: str) -> GeneratorMatrix:
    return load_code(ref)


def _source_q(m: GeneratorMatrix, q: Optional[int]) -> int:
    if q is not None:
        return q
    if m.dim.modulus is None:
        raise NotPrimeError(f"code has local dimension {m.dim.label}, not a prime; pass --q")
    return m.dim.modulus


@click.group(cls=LdiGroup)
@click.option("--csv", "as_csv", is_flag=True, help="Machine-readable CSV output.")
@click.option("--budget", type=int, default=None, help="Enumeration cap for searches.")
@click.option("--threads", type=int, default=None, help="Worker processes for searches.")
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
@click.pass_context
def cli(ctx: click.Context, as_csv: bool, budget: Optional[int], threads: Optional[int], verbose: bool):
    """Local-dimension-invariant stabilizer code toolkit."""
    settings = get_settings()
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s %(message)s", stream=sys.stderr)
    ctx.obj = {"csv": as_csv, "budget": budget, "threads": threads}


@cli.command()
@click.argument("code")
@click.option("--q", type=int, default=None, help="Prime modulus; defaults to the file's dim.")
def canon(code: str, q: Optional[int]):
    """Canonical form [I X2 | Z1 Z2] over GF(q)."""
    m = _code(code)
    cf = canonical_form(m, _source_q(m, q))
    click.echo(f"# rank={cf.rank} ops={len(cf.ops_log)} registers={list(cf.register_order)}")
    click.echo(render_code_file(cf.matrix), nl=False)


@cli.command()
@click.argument("code")
@click.option("--q", type=int, default=None, help="Prime modulus; defaults to the file's dim.")
@click.option(
    "--variant",
    type=click.Choice(["lower_triangular", "css"]),
    default="lower_triangular",
    show_default=True,
)
@click.option("--no-restore", is_flag=True, help="Keep the canonical register frame.")
def ldi(code: str, q: Optional[int], variant: str, no_restore: bool):
    """Convert a code to LDI form."""
    m = _code(code)
    result = make_ldi(m, _source_q(m, q), variant=variant, restore=not no_restore)
    click.echo(render_code_file(result), nl=False)


@cli.command()
@click.argument("code")
def verify(code: str):
    """Check that every pair of rows commutes over the integers."""
    report = verify_ldi(_code(code))
    click.echo(f"is_ldi={_flag(report.is_ldi)} B={report.B}")
    for i, j, product in report.violations:
        click.echo(f"violation {i} {j} {product}")


@cli.command()
@click.argument("code")
@click.option("--p", "primes", type=int, multiple=True, required=True, help="Local dimension; repeatable.")
@click.option("--w-max", type=int, required=True)
@click.pass_obj
def distance(obj: dict, code: str, primes: Sequence[int], w_max: int):
    """Brute-force distance over Z_p."""
    m = _code(code)
    results = [
        (p, distance_mod(m, p, w_max, budget=obj["budget"], threads=obj["threads"]))
        for p in primes
    ]
    if obj["csv"]:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["code", "p", "w_max", "d", "witness"])
        for p, res in results:
            witness = phi_decode(res.witness) if res.witness else ""
            writer.writerow([code, p, w_max, res.d if res.found else "", witness])
        return
    for p, res in results:
        if res.found:
            click.echo(f"p={p} d={res.d} witness={phi_decode(res.witness)}")
        else:
            click.echo(f"p={p} d>{res.searched_weight}")


@cli.command()
@click.argument("code")
@click.option("--w-max", type=int, required=True)
@click.pass_obj
def dstar(obj: dict, code: str, w_max: int):
    """Least weight of an unavoidable error."""
    res = d_star(_code(code), w_max, budget=obj["budget"])
    if res.found:
        click.echo(f"d*={res.d} witness={phi_decode(res.witness)}")
    else:
        click.echo(f"d*>{res.searched_weight}")


@cli.command()
@click.argument("code")
@click.argument("error")
@click.option("--p", type=int, required=True)
def classify(code: str, error: str, p: int):
    """Classify ERROR (Pauli text such as "X X^-1 I") against CODE mod p."""
    m = _code(code)
    verdict = classify_error(m, phi_encode(error, m.n), p)
    values = ",".join(str(v) for v in verdict.witness_syndrome.values)
    click.echo(f"tag={verdict.tag.value} syndrome=({values})")


@cli.command()
@click.argument("code")
@click.option("--p", type=int, default=None, help="Prime; defaults to the file's dim.")
def logicals(code: str, p: Optional[int]):
    """Symplectic pairs of logical operators."""
    m = _code(code)
    for v in logical_operators(m, _source_q(m, p)):
        click.echo(phi_decode(v))


@cli.command()
@click.option("--B", "B", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--css", is_flag=True, help="Include the CSS bound.")
def bounds(B: int, q: int, d: int, css: bool):
    """Cutoff local dimensions p* for given B, q and d."""
    values = [pstar_hadamard(B, d), pstar_alternative(B, q, d)]
    line = f"hadamard={values[0]} alternative={values[1]}"
    if css:
        values.append(pstar_css(B, d))
        line += f" css={values[2]}"
    click.echo(f"{line} rotor_ok={_flag(min(values) <= ROTOR_LIMIT)}")


@cli.command()
@click.argument("code")
def nullifiers(code: str):
    """Quadrature nullifiers of an LDI code."""
    for nullifier in to_nullifiers(_code(code)):
        click.echo(nullifier.render())


@cli.command()
@click.argument("code")
@click.option("--coeff-bound", type=int, default=2, show_default=True)
@click.option("--w-max", type=int, default=4, show_default=True)
@click.pass_obj
def dps(obj: dict, code: str, coeff_bound: int, w_max: int):
    """Phase-space distance within a coefficient box."""
    res = phase_space_distance(
        _code(code), coeff_bound, w_max, budget=obj["budget"], threads=obj["threads"]
    )
    if res.value is None:
        click.echo(f"d_ps none box={coeff_bound} w_max={w_max}")
        return
    click.echo(
        f"d_ps={res.value:.12f} norm2={res.norm_squared} box={coeff_bound} "
        f"w_max={w_max} witness={phi_decode(res.witness)}"
    )


@cli.command(name="catalog")
@click.argument("name", required=False)
def catalog_cmd(name: Optional[str]):
    """List catalog entries, or print one as a QEC1 file."""
    if not name:
        for entry_name in catalog_names():
            click.echo(entry_name)
        return
    entry = lookup(name)
    declared = entry.declared
    d = declared.d if declared.d is not None else "?"
    click.echo(f"# {entry.name} [[{declared.n},{declared.k},{d}]]_{declared.dim.label}")
    click.echo(render_code_file(entry.matrix), nl=False)


@cli.command()
@click.argument("code")
@click.option("--m", "moduli", type=int, multiple=True, help="Modulus; repeatable.")
def rank(code: str, moduli: Sequence[int]):
    """Rank over the integers and over each Z_m."""
    report = rank_report(_code(code), list(moduli) or [2, 3, 4, 5, 6])
    factors = ",".join(str(f) for f in report.invariant_factors)
    click.echo(f"Z: {report.integer_rank} invariants=({factors})")
    for m, r in report.by_modulus:
        click.echo(f"{m}: {r}")
    click.echo(f"preserved={_flag(report.preserved)}")


@cli.command()
@click.argument("code")
@click.option("--q", type=int, default=None, help="Prime; defaults to the file's dim.")
def stabilize(code: str, q: Optional[int]):
    """Dense joint eigenvector of all generators."""
    m = _code(code)
    q = _source_q(m, q)
    state = stabilized_state(m, q)
    for index, amp in enumerate(state.amplitudes):
        if abs(amp) < 1e-12:
            continue
        digits: List[int] = []
        for _ in range(m.n):
            index, digit = divmod(index, q)
            digits.append(digit)
        ket = ",".join(str(x) for x in reversed(digits))
        click.echo(f"|{ket}> {amp.real:+.6f}{amp.imag:+.6f}j")


@cli.command()
@click.argument("code")
@click.option("--q", type=int, default=None, help="Source prime; defaults to the file's dim.")
@click.option("--d", type=int, required=True, help="Distance of the source code.")
@click.option("--target", "targets", multiple=True, required=True, help="7, 6, Z, R or R6.28.")
def promise(code: str, q: Optional[int], d: int, targets: Sequence[str]):
    """Whether the distance carries over to each target local dimension."""
    m = _code(code)
    report = report_for(m, _source_q(m, q), d)
    for tag in targets:
        result = distance_promise(report, parse_local_dimension(tag), m)
        click.echo(
            f"target={result.target.label} promised={_flag(result.promised)} "
            f"rank_preserved={_flag(result.rank_preserved)} p*={result.p_star}"
        )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="ldikit",
            standalone_mode=False,
        )
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
