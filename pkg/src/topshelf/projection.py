"""Pseudo-projection of the working database onto successive prefix items.

A view is a tuple (items, utilities, offset, prefix_utility, weight): a
window into a stored transaction starting just past the projected item,
plus the prefix's accumulated utility inside that transaction. Projection
never copies transaction content; only merging materializes a fused buffer,
and from then on the buffer plays the role of the transaction.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .prepare import WorkingDatabase

# View tuple layout, by index: 0 items, 1 utilities, 2 offset, 3 prefix
# utility, 4 weight.


@dataclass(slots=True)
class ProjectedDatabase:
    """Views per dense period index, with per-period prefix utility sums."""

    views: list[list[tuple]]
    utility_by_period: list[int]

    @property
    def occupied_periods(self) -> list[int]:
        return [p for p, v in enumerate(self.views) if v]

    def view_count(self) -> int:
        return sum(len(v) for v in self.views)


def root_projection(working: WorkingDatabase) -> ProjectedDatabase:
    """The empty-prefix projection: every row, offset 0, prefix utility 0."""
    views = [
        [(row[0], row[1], 0, 0, row[2]) for row in block]
        for block in working.blocks
    ]
    return ProjectedDatabase(views=views, utility_by_period=[0] * len(views))


def project(parent: ProjectedDatabase, z: int) -> ProjectedDatabase:
    """Narrow the parent's views to transactions containing dense item z.

    Each surviving view starts just past z and adds u(z, T) to its prefix
    utility. Per-period utility sums and occupancy fall out of the same
    walk. View order is inherited from the parent, so suffix-identical
    views stay adjacent.
    """
    out_views = []
    out_u = []
    for plist in parent.views:
        rows = []
        total = 0
        for view in plist:
            items = view[0]
            j = bisect_left(items, z, view[2])
            if j < len(items) and items[j] == z:
                prefix = view[3] + view[1][j]
                rows.append((items, view[1], j + 1, prefix, view[4]))
                total += prefix
        out_views.append(rows)
        out_u.append(total)
    return ProjectedDatabase(views=out_views, utility_by_period=out_u)


def merge_projected(pd: ProjectedDatabase) -> int:
    """Fuse adjacent views whose remaining item sequences are identical.

    Fused views get element-wise summed utilities, summed prefix utilities
    and summed weights, in a fresh buffer with offset 0. Only item indices
    decide identity; utilities may differ. Returns the number of views
    eliminated. Mining results are invariant under this operation.
    """
    dropped = 0
    for p, plist in enumerate(pd.views):
        if len(plist) < 2:
            continue
        out = []
        dropped_here = 0
        idx = 0
        n = len(plist)
        while idx < n:
            view = plist[idx]
            items, utils, off = view[0], view[1], view[2]
            rem = len(items) - off
            run_end = idx + 1
            while run_end < n:
                nxt = plist[run_end]
                if len(nxt[0]) - nxt[2] != rem or nxt[0][nxt[2]:] != items[off:]:
                    break
                run_end += 1
            if run_end == idx + 1:
                out.append(view)
            else:
                fused_items = items[off:]
                fused_utils = utils[off:]
                prefix = view[3]
                weight = view[4]
                for j in range(idx + 1, run_end):
                    other = plist[j]
                    ou, oo = other[1], other[2]
                    fused_utils = [
                        a + ou[oo + e] for e, a in enumerate(fused_utils)
                    ]
                    prefix += other[3]
                    weight += other[4]
                out.append((fused_items, fused_utils, 0, prefix, weight))
                dropped_here += run_end - idx - 1
            idx = run_end
        if dropped_here:
            pd.views[p] = out
            dropped += dropped_here
    return dropped
