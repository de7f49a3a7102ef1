"""Enumeration size bounds.

Exhaustive searches refuse (raise BoundExceeded) rather than silently
truncate when an input is larger than the relevant bound.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # largest group order for subgroup-lattice enumeration
    max_group_order: int = 24
    # largest universe for exhaustive series / interposition search
    max_exhaustive_universe: int = 12
    # cap on candidate subsets examined by the generating-set search
    max_generator_candidates: int = 200_000


DEFAULT_LIMITS = Limits()
