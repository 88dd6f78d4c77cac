"""The depth-first top-k search.

Positive items are explored first (only they can head a worthwhile prefix),
and each positive prefix additionally sprouts a chain of negative-item
extensions. The collector's threshold only ever rises, and it can never
exceed the true k-th best ratio, so bound-based pruning (see bounds.py)
never discards a member of the true top-k: the result is exactly what brute
force would return.
"""

from __future__ import annotations

import sys
import threading
from bisect import bisect_right, insort
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from time import perf_counter

from .bounds import (
    BoundArray,
    fill_negative_subtree,
    fill_subtree_and_local,
    select_negative_candidates,
    select_primary_secondary,
)
from .dataset import OnShelfDatabase
from .domain import Pattern
from .errors import InvalidK, TooManyItems
from .prepare import (
    build_item_order,
    build_working_database,
    compute_period_twu,
    initial_secondary,
    negative_keep,
    singleton_threshold,
)
from .projection import merge_projected, project, root_projection

MAX_DISTINCT_ITEMS = 2**16


@dataclass
class SearchStats:
    """Counters for one mining run. candidates counts ratio evaluations,
    projections counts database narrowings, merges counts rows or views
    eliminated by fusion (root build included), max_depth is the longest
    prefix reached. patterns is the final result size."""

    k: int = 0
    patterns: int = 0
    candidates: int = 0
    projections: int = 0
    merges: int = 0
    max_depth: int = 0
    elapsed_ms: float = 0.0
    threshold_num: int = 0
    threshold_den: int = 1

    def absorb(self, other: "SearchStats") -> None:
        self.candidates += other.candidates
        self.projections += other.projections
        self.merges += other.merges
        self.max_depth = max(self.max_depth, other.max_depth)


def stats_json(stats: SearchStats) -> dict:
    """The stats payload the CLI writes with --stats."""
    return {
        "k": stats.k,
        "patterns": stats.patterns,
        "interutil_num": stats.threshold_num,
        "interutil_den": stats.threshold_den,
        "candidates": stats.candidates,
        "projections": stats.projections,
        "merges": stats.merges,
        "max_depth": stats.max_depth,
        "elapsed_ms": stats.elapsed_ms,
    }


class TopKCollector:
    """Keeps the best k patterns seen so far under the ranking order and
    exposes the current admission threshold.

    The threshold starts at the initial value (never negative), becomes the
    k-th best ratio once k patterns are held, and is monotonically
    non-decreasing. It is stored as an immutable (num, den) tuple so readers
    need no lock; mutation happens under one. Ties at the threshold are
    resolved by the full ranking key against the current worst entry.
    """

    __slots__ = ("k", "threshold", "_entries", "_lock")

    def __init__(self, k: int, initial: Fraction):
        if k < 1:
            raise InvalidK(k)
        self.k = k
        self.threshold = (initial.numerator, initial.denominator)
        self._entries: list[tuple[tuple, Pattern]] = []
        self._lock = threading.Lock()

    def clears_threshold(self, utility: int, period_total: int) -> bool:
        num, den = self.threshold
        return utility * den >= num * period_total

    def offer(self, pattern: Pattern) -> bool:
        """Admit the pattern if it ranks among the best k; report acceptance."""
        with self._lock:
            num, den = self.threshold
            ru = pattern.relative_utility
            if ru.numerator * den < num * ru.denominator:
                return False
            entry = (pattern.sort_key(), pattern)
            entries = self._entries
            if len(entries) >= self.k:
                if entry[0] >= entries[-1][0]:
                    return False
                insort(entries, entry)
                entries.pop()
            else:
                insort(entries, entry)
            if len(entries) >= self.k:
                kth = entries[-1][1].relative_utility
                self.threshold = (kth.numerator, kth.denominator)
            return True

    def result(self) -> list[Pattern]:
        return [p for _, p in self._entries]


class _Miner:
    """Shared read-only search state plus the recursion."""

    def __init__(self, working, collector, *, merge, su_prune, lu_prune):
        self.collector = collector
        self.merge = merge
        self.su_prune = su_prune
        self.lu_prune = lu_prune
        self.boundary = working.order.boundary
        self.n_items = len(working.order)
        self.n_periods = len(working.period_labels)
        self.period_totals = working.period_totals
        self.period_labels = working.period_labels
        self.ext_id = working.order.sequence

    def scratch(self) -> tuple[BoundArray, BoundArray]:
        return (
            BoundArray(self.n_periods, self.n_items),
            BoundArray(self.n_periods, self.n_items),
        )

    def _scaled_totals(self) -> tuple[list[int], int]:
        num, den = self.collector.threshold
        return [num * total for total in self.period_totals], den

    def _emit(self, pd, prefix_ext, depth, stats) -> None:
        """Score the prefix over its projection and offer it."""
        occupied = pd.occupied_periods
        utility = sum(pd.utility_by_period[p] for p in occupied)
        period_total = sum(self.period_totals[p] for p in occupied)
        stats.candidates += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        collector = self.collector
        if collector.clears_threshold(utility, period_total):
            collector.offer(
                Pattern(
                    items=tuple(sorted(prefix_ext)),
                    utility=utility,
                    periods=frozenset(self.period_labels[p] for p in occupied),
                    period_total=period_total,
                    relative_utility=Fraction(utility, period_total),
                )
            )

    def expand(self, pd, prefix_ext, z, secondary, depth, scratch, stats):
        """Grow the prefix by positive item z: score it, chase its negative
        extensions, then recurse into surviving positive candidates."""
        stats.projections += 1
        child = project(pd, z)
        if self.merge:
            stats.merges += merge_projected(child)
        ext2 = prefix_ext + (self.ext_id[z],)
        self._emit(child, ext2, depth + 1, stats)

        su, lu = scratch
        su.reset()
        fill_negative_subtree(child.views, su, self.boundary)
        scaled, t_den = self._scaled_totals()
        negatives = select_negative_candidates(
            su, range(self.boundary, self.n_items), scaled, t_den, self.su_prune
        )
        if negatives:
            self._negative_search(child, ext2, negatives, depth + 1, scratch, stats)

        after = bisect_right(secondary, z)
        candidates = secondary[after:]
        if not candidates:
            return
        su.reset()
        lu.reset()
        fill_subtree_and_local(child.views, su, lu, self.boundary)
        scaled, t_den = self._scaled_totals()
        primary2, secondary2 = select_primary_secondary(
            su, lu, candidates, scaled, t_den, self.su_prune, self.lu_prune
        )
        for nxt in primary2:
            self.expand(child, ext2, nxt, secondary2, depth + 1, scratch, stats)

    def _negative_search(self, pd, prefix_ext, candidates, depth, scratch, stats):
        su = scratch[0]
        for idx, z in enumerate(candidates):
            stats.projections += 1
            child = project(pd, z)
            if self.merge:
                stats.merges += merge_projected(child)
            ext2 = prefix_ext + (self.ext_id[z],)
            self._emit(child, ext2, depth + 1, stats)
            rest = candidates[idx + 1 :]
            if not rest:
                continue
            su.reset()
            fill_negative_subtree(child.views, su, self.boundary)
            scaled, t_den = self._scaled_totals()
            deeper = select_negative_candidates(su, rest, scaled, t_den, self.su_prune)
            if deeper:
                self._negative_search(child, ext2, deeper, depth + 1, scratch, stats)


def _raise_recursion_headroom(working) -> None:
    # Depth is bounded by the longest transaction (every prefix needs a
    # containing row), not by the item count.
    longest = 0
    for block in working.blocks:
        for row in block:
            if len(row[0]) > longest:
                longest = len(row[0])
    needed = longest * 2 + 500
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def mine_top_k(
    db: OnShelfDatabase,
    k: int,
    *,
    merge: bool = True,
    su_prune: bool = True,
    lu_prune: bool = True,
    parallel: bool = False,
    max_workers: int | None = None,
) -> tuple[list[Pattern], SearchStats]:
    """Mine the k highest relative-utility itemsets.

    Returns the ranked pattern list and the run's counters. The debug knobs
    (merge, su_prune, lu_prune, parallel) change work done, never results.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidK(k)
    if len(db.item_signs) > MAX_DISTINCT_ITEMS:
        raise TooManyItems(len(db.item_signs), MAX_DISTINCT_ITEMS)

    start = perf_counter()
    stats = SearchStats(k=k)
    collector = TopKCollector(k, singleton_threshold(db, k))

    twu = compute_period_twu(db)
    t_num, t_den = collector.threshold
    if lu_prune:
        secondary0 = initial_secondary(db, twu, t_num, t_den)
    else:
        secondary0 = {i for i, s in db.item_signs.items() if s > 0 and i in twu}
    kept_negative = negative_keep(db, secondary0)
    order = build_item_order(twu, db.item_signs, secondary0, kept_negative)
    working, root_merges = build_working_database(db, order, merge=merge)
    stats.merges += root_merges
    _raise_recursion_headroom(working)

    miner = _Miner(
        working, collector, merge=merge, su_prune=su_prune, lu_prune=lu_prune
    )
    root = root_projection(working)
    scratch = miner.scratch()
    su, lu = scratch
    fill_subtree_and_local(root.views, su, lu, miner.boundary)
    scaled = [t_num * total for total in working.period_totals]
    # Root secondary came from the TWU test already; the root pass only
    # filters primary, so the local-bound test is off here.
    primary0, secondary0_dense = select_primary_secondary(
        su, lu, range(miner.boundary), scaled, t_den, su_prune, False
    )

    if parallel and len(primary0) > 1:
        def run_root(z: int) -> SearchStats:
            local = SearchStats()
            miner.expand(root, (), z, secondary0_dense, 0, miner.scratch(), local)
            return local

        workers = max_workers or min(8, len(primary0))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for local in pool.map(run_root, primary0):
                stats.absorb(local)
    else:
        for z in primary0:
            miner.expand(root, (), z, secondary0_dense, 0, scratch, stats)

    patterns = collector.result()
    stats.patterns = len(patterns)
    stats.threshold_num, stats.threshold_den = collector.threshold
    stats.elapsed_ms = (perf_counter() - start) * 1000.0
    return patterns, stats
