"""Resource guards. Override by passing a modified ``Limits`` instance."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # canonical forms enumerate up to n! relabelings
    max_canonical_order: int = 10
    max_generate_order: int = 5
    max_catalog_size: int = 10**7


DEFAULT_LIMITS = Limits()
