"""Exact integer partition counts.

The workhorse is Euler's pentagonal-number recurrence

    p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - w1(k)) + p(n - w2(k)) ]

with w1(k) = (3k^2-k)/2, w2(k) = (3k^2+k)/2 and p(m) = 0 for m < 0, which
needs only O(sqrt(n)) previous values per step.  A bounded-parts dynamic
program over the generating product serves as an independent, slower
cross-check at oracle scale.

Values are plain Python ints (arbitrary precision); caches are contiguous
tables p(0..max_n) with a line-per-value text serialization.
"""

from __future__ import annotations

from typing import NamedTuple

# the quadratic-time DP oracle is only meant for cross-checking
ORACLE_LIMIT = 5000


class PentagonalPair(NamedTuple):
    k: int
    omega1: int
    omega2: int


def pentagonal(k: int) -> PentagonalPair:
    """The pentagonal pair (w1(k), w2(k)) = ((3k^2-k)/2, (3k^2+k)/2)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    w1 = (3 * k * k - k) // 2
    return PentagonalPair(k, w1, w1 + k)


class CacheFormatError(ValueError):
    """A partition cache file is malformed (bad integer, gap, wrong order)."""


class PartitionCache:
    """Contiguous table of p(0..max_n), grown on demand.

    The recurrence needs every predecessor, so the table never has holes.
    Single writer; reads are safe once a value exists.
    """

    def __init__(self, values=None, source_path=None):
        vals = [1] if values is None else [int(v) for v in values]
        if not vals or vals[0] != 1:
            raise ValueError("cache must start with p(0) = 1")
        if any(v < 1 for v in vals):
            raise ValueError("partition values are positive")
        self._values = vals
        self.source_path = source_path

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> int:
        return self._values[n]

    def __eq__(self, other):
        if not isinstance(other, PartitionCache):
            return NotImplemented
        return self._values == other._values

    def __repr__(self):
        return f"PartitionCache(max_n={self.max_n})"

    def extend_to(self, n: int) -> None:
        """Run the pentagonal recurrence until p(n) is in the table."""
        vals = self._values
        if n <= len(vals) - 1:
            return
        pairs = []
        k = 1
        while True:
            w1 = (3 * k * k - k) // 2
            if w1 > n:
                break
            pairs.append((w1, w1 + k, k & 1))
            k += 1
        for m in range(len(vals), n + 1):
            total = 0
            for w1, w2, odd in pairs:
                if w1 > m:
                    break
                t = vals[m - w1]
                if w2 <= m:
                    t += vals[m - w2]
                if odd:
                    total += t
                else:
                    total -= t
            vals.append(total)


def p_exact(n: int, cache: PartitionCache | None = None) -> int:
    """p(n) by the pentagonal recurrence, extending ``cache`` through n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cache is None:
        cache = PartitionCache()
    cache.extend_to(n)
    return cache[n]


def partition_table_dp(n_max: int) -> list[int]:
    """p(0..n_max) by counting bounded-part partitions (coin-style DP).

    One pass per part size m expands the factor 1/(1-x^m) of the generating
    product; O(n^2) big-integer additions overall.  Independent of the
    recurrence path on purpose.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > ORACLE_LIMIT:
        raise ValueError(f"DP oracle is limited to n <= {ORACLE_LIMIT}")
    table = [0] * (n_max + 1)
    table[0] = 1
    for part in range(1, n_max + 1):
        for m in range(part, n_max + 1):
            table[m] += table[m - part]
    return table


def p_oracle_dp(n: int) -> int:
    return partition_table_dp(n)[n]


def cache_save(cache: PartitionCache, path) -> None:
    """Write ``n,p(n)`` lines, ascending n, UTF-8 with LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for n, v in enumerate(cache._values):
            fh.write(f"{n},{v}\n")


def cache_load(path) -> PartitionCache:
    """Read a cache file, validating order, contiguity and integer syntax."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.count(",") != 1:
                raise CacheFormatError(f"{path}: line {lineno}: expected 'n,p(n)'")
            left, right = line.split(",")
            try:
                n, v = int(left), int(right)
            except ValueError:
                raise CacheFormatError(
                    f"{path}: line {lineno}: malformed integer"
                ) from None
            expected = lineno - 1
            if n > expected:
                raise CacheFormatError(
                    f"{path}: line {lineno}: gap in n (expected {expected}, found {n})"
                )
            if n < expected:
                raise CacheFormatError(
                    f"{path}: line {lineno}: n out of order (expected {expected}, found {n})"
                )
            if v < 1:
                raise CacheFormatError(f"{path}: line {lineno}: p(n) must be positive")
            values.append(v)
    if not values:
        raise CacheFormatError(f"{path}: empty cache file")
    if values[0] != 1:
        raise CacheFormatError(f"{path}: line 1: p(0) must be 1")
    return PartitionCache(values, source_path=str(path))
