"""Run configuration and logging setup for the command-line front end."""

import argparse
import logging
from dataclasses import dataclass
from typing import Literal

from sympy import isprime

from .matrix_oracle import RATIONAL, ExactField


DEFAULT_WINDOW = 15
DEFAULT_PRIME = 1009
CROSS_CHECK_PRIMES = (1009, 65521)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Config:
    """
    Settings shared by every CLI verb.

    The defaults reproduce the golden reports byte for byte, so changing any of
    them is a user-visible change.
    """

    window: int = DEFAULT_WINDOW
    field: Literal["gfp", "rational"] = "gfp"
    primes: tuple[int, ...] = (DEFAULT_PRIME,)
    seed: int = 0
    format: Literal["tsv", "json", "dot"] = "tsv"
    order: Literal["random", "sorted"] = "random"

    def __post_init__(self) -> None:
        if self.window < 3:
            raise ValueError(f"window must be at least 3, got {self.window}")
        if not self.primes:
            raise ValueError("at least one prime is required")
        for p in self.primes:
            if not isprime(p):
                raise ValueError(f"{p} is not a prime")
            if p > 65521:
                raise ValueError(f"prime {p} is too large for int64 elimination")

    def exact_field(self) -> ExactField:
        """Return the field used for oracle computations."""
        if self.field == "rational":
            return RATIONAL
        return ExactField.gf(self.primes[0])

    def cross_check_fields(self) -> tuple[ExactField, ...]:
        """Fields compared by the cross-prime suite."""
        primes = self.primes if len(self.primes) >= 2 else CROSS_CHECK_PRIMES
        return tuple(ExactField.gf(p) for p in primes)

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "Config":
        """Build a Config from parsed command-line flags, falling back to defaults."""
        primes = tuple(namespace.prime) if getattr(namespace, "prime", None) else (DEFAULT_PRIME,)
        return cls(
            window=getattr(namespace, "window", DEFAULT_WINDOW),
            field=getattr(namespace, "field", "gfp"),
            primes=primes,
            seed=getattr(namespace, "seed", 0),
            format=getattr(namespace, "format", "tsv"),
            order=getattr(namespace, "order", "random"),
        )


def configure_logging(verbosity: int = 0) -> None:
    """Send log records to stderr; ``-v`` selects INFO and ``-vv`` DEBUG."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
