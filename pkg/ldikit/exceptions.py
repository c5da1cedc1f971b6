# ldikit/exceptions.py
"""
Error hierarchy shared by services and the command line.

Every domain failure raises a subclass of LdiError. The CLI turns
BudgetExceeded into exit code 2 and anything else from here into exit code 1.
"""


class LdiError(Exception):
    """Base class for domain errors."""


class ParseError(LdiError, ValueError):
    """Malformed Pauli text, local dimension or code file."""


class DimensionMismatch(LdiError, ValueError):
    """Register counts or row widths disagree."""


class NotPrimeError(LdiError, ValueError):
    """An operation that needs a prime local dimension got something else."""


class CommutationError(LdiError):
    """Generators fail to commute modulo the requested base."""

    def __init__(self, i: int, j: int, product: int, modulus: int):
        self.i = i
        self.j = j
        self.product = product
        self.modulus = modulus
        super().__init__(
            f"rows {i} and {j} have symplectic product {product}, "
            f"not 0 mod {modulus}"
        )


class NotCssError(LdiError):
    """Row is neither pure-X nor pure-Z."""


class NotLdiError(LdiError):
    """Generators do not commute over the integers."""


class InconsistentCodeError(LdiError):
    """Rank, logical count or projector is inconsistent with the generators."""


class BudgetExceeded(LdiError):
    """A search or state would exceed the configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed} but budget is {budget}")
