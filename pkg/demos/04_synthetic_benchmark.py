"""
Synthetic benchmark: timing a grid of runs from one script
==========================================================

The bench harness runs each cell in a fresh process, so peak memory is
honest and a runaway cell can be killed by a time budget instead of
taking the session with it. Here we sweep k over a ten-thousand-basket
store twice: once as generated, once with the baskets re-dealt into a
single period, which removes the per-period slicing advantage.
"""

import sys
import tempfile
from pathlib import Path

from topshelf import GeneratorParams, generate
from topshelf.bench import run_bench, write_records

params = GeneratorParams(
    transactions=10_000, items=200, periods=4, avg_len=5, seed=11
)

with tempfile.TemporaryDirectory() as scratch:
    path = Path(scratch) / "store.db"
    path.write_text(generate(params), encoding="utf-8")

    records, timed_out = run_bench(str(path), k_list=[10, 100, 1000], repeat=1)
    flat, _ = run_bench(str(path), k_list=[100], reperiod=1)
    records.extend(flat)

# CSV on stdout; redirect it to a file to keep it.
write_records(records, sys.stdout)

if timed_out:
    print("some cells hit the time budget", file=sys.stderr)

by_k = {r.k: r.candidates for r in records if r.periods == 4}
assert list(by_k) == sorted(by_k) and sorted(by_k.values()) == list(by_k.values())
print("\ncandidate count grows with k, as the threshold stays lower longer",
      file=sys.stderr)
