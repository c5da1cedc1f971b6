# ldikit/utils/codefile.py
"""
QEC1 code files.

    QEC1 n=7 rows=6 dim=2
    # comment lines start with '#'
    1 1 1 1 0 0 0 | 0 0 0 0 0 0 0

The '|' between the X and Z halves is optional on input and always written
on output.
"""
import logging
import re
from pathlib import Path
from typing import Union

from ldikit.exceptions import ParseError
from ldikit.schemas import GeneratorMatrix
from ldikit.services.catalog import lookup
from ldikit.services.symplectic import parse_local_dimension

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^QEC1\s+n=(\d+)\s+rows=(\d+)\s+dim=(\S+)\s*$")


def parse_code_file(text: str) -> GeneratorMatrix:
    """
    Parse QEC1 text into a GeneratorMatrix.

    Raises:
        ParseError: bad header, non-integer token, wrong row width or a row
            count that disagrees with the header
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError("empty code file")
    match = _HEADER.match(lines[0])
    if not match:
        raise ParseError(f"bad header line {lines[0]!r}")
    n, declared_rows = int(match.group(1)), int(match.group(2))
    dim = parse_local_dimension(match.group(3))

    rows = []
    for number, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if tokens.count("|") > 1:
            raise ParseError(f"row {number}: more than one '|'")
        if "|" in tokens and tokens.index("|") != n:
            raise ParseError(f"row {number}: '|' must follow the {n} X entries")
        tokens = [t for t in tokens if t != "|"]
        if len(tokens) != 2 * n:
            raise ParseError(f"row {number}: expected {2 * n} integers, got {len(tokens)}")
        try:
            rows.append([int(t) for t in tokens])
        except ValueError as exc:
            raise ParseError(f"row {number}: {exc}") from exc

    if len(rows) != declared_rows:
        raise ParseError(f"header declares {declared_rows} rows, body has {len(rows)}")
    return GeneratorMatrix.from_rows(n, rows, dim=dim)


def render_code_file(m: GeneratorMatrix) -> str:
    """Canonical QEC1 text, one row per line, ending in a newline."""
    lines = [f"QEC1 n={m.n} rows={m.num_rows} dim={m.dim.label}"]
    for row in m.rows:
        x = " ".join(str(e) for e in row.x)
        z = " ".join(str(e) for e in row.z)
        lines.append(" ".join(part for part in (x, "|", z) if part))
    return "\n".join(lines) + "\n"


def load_code(ref: Union[str, Path]) -> GeneratorMatrix:
    """Read a QEC1 file, or resolve a catalog name such as 'hamming:4'."""
    path = Path(ref)
    if path.is_file():
        logger.debug("[CLI] reading code file %s", path)
        return parse_code_file(path.read_text())
    return lookup(str(ref)).matrix
