"""Binomials, colex subset iteration and the subset budget guard."""

from __future__ import annotations

import math
import os
from collections.abc import Iterator

from .errors import CapacityError

DEFAULT_MAX_SUBSETS = 10**7


def binom(n: int, k: int) -> int:
    """C(n, k) with C(n, 0) = 1 and C(n, k) = 0 whenever n < k or k < 0."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def max_subsets() -> int:
    """Subset budget, overridable through ``STEINER_MAX_SUBSETS``."""
    raw = os.environ.get("STEINER_MAX_SUBSETS")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_SUBSETS
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError(f"STEINER_MAX_SUBSETS is not an integer: {raw!r}") from None
    if value < 1:
        raise CapacityError("STEINER_MAX_SUBSETS must be positive")
    return value


def guard_subsets(count: int, what: str) -> None:
    budget = max_subsets()
    if count > budget:
        raise CapacityError(f"{what}: {count} subsets exceed the budget of {budget}")


def k_subsets_colex(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield the k-subsets of range(n) in colexicographic order.

    Colex order is increasing order of the bitmask, so Gosper's hack walks it.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield ()
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask_members(mask)
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def mask_members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def members_mask(members) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask
