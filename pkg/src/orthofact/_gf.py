"""Prime-field arithmetic by lookup table (desk-scale fields only)."""

from functools import lru_cache

import numpy as np

from .errors import LimitExceeded

MAX_PRIME = 7


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


@lru_cache(maxsize=None)
def gf_tables(q: int) -> tuple[np.ndarray, np.ndarray]:
    """Return read-only ``(add, mul)`` tables of GF(q) for a prime ``q <= 7``."""
    if not _is_prime(q):
        raise ValueError(f"GF({q}) is not a prime field")
    if q > MAX_PRIME:
        raise LimitExceeded(f"GF({q}) exceeds the table limit q <= {MAX_PRIME}")
    r = np.arange(q)
    add = (r[:, None] + r[None, :]) % q
    mul = (r[:, None] * r[None, :]) % q
    add.flags.writeable = False
    mul.flags.writeable = False
    return add, mul
