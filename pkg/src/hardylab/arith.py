"""Exact divisor-function tables d_k(n) via iterated Dirichlet convolution.

d_1 = 1 and d_{j+1} = d_j * 1; counts are exact 64-bit integers (d_8(n)
stays far below 2^63 at any table size this package will build).  Finished
tables are immutable and freely shareable.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .config import DEFAULTS
from .errors import CapacityError, DomainError

_MAGIC = b"dktable\x00"


@dataclass(frozen=True)
class DivisorTable:
    k: int
    limit: int
    counts: np.ndarray = field(repr=False)  # counts[n] for n in 1..limit; index 0 unused

    def __post_init__(self):
        self.counts.setflags(write=False)

    def count(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise DomainError(f"n={n} outside table range 1..{self.limit}")
        return int(self.counts[n])


def divisor_sieve(k: int, limit: int, budget: int | None = None) -> DivisorTable:
    """Sieve exact d_k(n) for all n <= limit."""
    if k < 1 or limit < 1:
        raise DomainError("divisor_sieve requires k >= 1 and limit >= 1")
    budget = DEFAULTS.divisor_budget if budget is None else budget
    if limit > budget:
        raise CapacityError(
            f"divisor table of size {limit} exceeds budget {budget}")
    counts = np.ones(limit + 1, dtype=np.int64)
    counts[0] = 0
    for _ in range(k - 1):
        nxt = np.zeros(limit + 1, dtype=np.int64)
        for d in range(1, limit + 1):
            nxt[d::d] += counts[1:limit // d + 1]
        counts = nxt
    return DivisorTable(k=k, limit=limit, counts=counts)


_brute_memo: dict[tuple[int, int], int] = {}


def divisor_brute(k: int, n: int) -> int:
    """Count ordered k-tuples with product n by explicit divisor recursion
    (the sieve's oracle; shares no code with it).  Results are memoized so
    full-range cross-checks stay cheap."""
    if k < 1 or n < 1:
        raise DomainError("divisor_brute requires k >= 1 and n >= 1")
    if k > 4 or n > 100_000:
        raise CapacityError("divisor_brute guarded to k <= 4, n <= 1e5")
    if k == 1:
        return 1
    key = (k, n)
    hit = _brute_memo.get(key)
    if hit is not None:
        return hit
    total = 0
    root = int(math.isqrt(n))
    for d in range(1, root + 1):
        if n % d == 0:
            total += divisor_brute(k - 1, n // d)
            if d != n // d:
                total += divisor_brute(k - 1, d)
    _brute_memo[key] = total
    return total


def dump_table(table: DivisorTable, path: str | Path) -> None:
    """Binary cache: 16-byte header (magic, k, limit as little-endian u32)
    followed by limit little-endian int64 counts for n = 1..limit."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<II", table.k, table.limit))
        fh.write(table.counts[1:].astype("<i8").tobytes())


def load_table(path: str | Path) -> DivisorTable:
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != _MAGIC:
            raise DomainError(f"not a divisor table: {path}")
        k, limit = struct.unpack("<II", fh.read(8))
        data = np.frombuffer(fh.read(8 * limit), dtype="<i8")
        if len(data) != limit:
            raise DomainError(f"truncated divisor table: {path}")
    counts = np.zeros(limit + 1, dtype=np.int64)
    counts[1:] = data
    return DivisorTable(k=k, limit=limit, counts=counts)


def cached_table(k: int, limit: int, cache_dir: str | Path | None = None) -> DivisorTable:
    """Sieve with optional on-disk reuse (CLI cache)."""
    if cache_dir is None:
        return divisor_sieve(k, limit)
    path = Path(cache_dir) / f"d{k}.bin"
    if path.exists():
        table = load_table(path)
        if table.k == k and table.limit >= limit:
            return table
    table = divisor_sieve(k, limit)
    dump_table(table, path)
    return table
