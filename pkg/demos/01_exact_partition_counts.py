"""How many ways can n be written as a sum of positive integers?

Exact answers via the pentagonal-number recurrence, cross-checked by a
direct dynamic program, and persisted to a plain-text cache.
"""

import tempfile
import time
from pathlib import Path

from partitions import (
    PartitionCache,
    cache_load,
    cache_save,
    p_exact,
    p_oracle_dp,
    pentagonal,
)

print("The pentagonal numbers drive the recurrence: each p(n) needs only")
print("the previous values at offsets w1(k), w2(k):")
for k in range(1, 6):
    pair = pentagonal(k)
    print(f"  k={k}: w1={pair.omega1:3d}  w2={pair.omega2:3d}")
print()

print("p(7) counts the 15 ways to write 7 as an unordered sum:")
print(f"  p(7) = {p_exact(7)}")
print()

cache = PartitionCache()
t0 = time.time()
p_exact(15000, cache)
t1 = time.time()
print(f"Extending the table to n = 15000 takes {t1 - t0:.2f}s:")
for n in (10, 100, 1000, 10000, 15000):
    s = str(cache[n])
    shown = s if len(s) <= 40 else f"{s[:18]}...{s[-18:]} ({len(s)} digits)"
    print(f"  p({n}) = {shown}")
print()

print("The bounded-parts DP expands the generating product directly and")
print("agrees with the recurrence (here on 0..500):")
mismatches = sum(p_oracle_dp(n) != cache[n] for n in range(0, 501, 50))
print(f"  mismatches on the sampled range: {mismatches}")
print()

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "p.csv"
    small = PartitionCache()
    p_exact(20, small)
    cache_save(small, path)
    print(f"Caches serialize as 'n,p(n)' lines; the first three of {path.name}:")
    for line in path.read_text().splitlines()[:3]:
        print(f"  {line}")
    print(f"  round-trip equal: {cache_load(path) == small}")
