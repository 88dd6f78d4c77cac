"""
Quick tour: from raw transactions to a ranked shelf report
==========================================================

A small store logs eight purchases across three shelf periods. Item 2
and item 3 are discounted below cost, so their utilities are negative,
yet they keep showing up next to profitable items. Which bundles earn
the most relative to the revenue of the periods they were on sale in?
"""

from io import StringIO

from topshelf import mine_top_k, parse_database, stats_json, write_patterns

# Each line is items : transaction utility : per-item utilities : period.
RAW = """\
1 2 4 5:21:5 -6 12 10:1
2 3 4:29:-3 -4 36:0
1 4:45:15 30:1
1 5:15:5 10:2
2 3 4 5:39:-3 -4 36 10:2
2 3 5:15:-3 -2 20:2
1:10:10:0
2 3 4:19:-3 -2 24:1
"""

db = parse_database(RAW)
print(f"{len(db.transactions)} transactions, {len(db.item_signs)} items")
print(f"period totals: {dict(sorted(db.period_totals.items()))}")

# The ranking key is utility divided by the total utility of the periods
# the itemset appeared in, so a bundle sold only in a quiet period can
# outrank a bigger earner from a busy one.
patterns, stats = mine_top_k(db, 5)
for p in patterns:
    shelf = ",".join(str(h) for h in sorted(p.periods))
    print(
        f"items {p.items}  utility {p.utility:>3}  periods {{{shelf}}}"
        f"  ratio {p.relative_utility}"
    )

# The same report in the flat file format the command line tool writes.
sink = StringIO()
write_patterns(patterns, sink)
print()
print(sink.getvalue(), end="")

# How much work it took.
print()
print(stats_json(stats))
