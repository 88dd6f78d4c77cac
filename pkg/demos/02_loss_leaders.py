"""
Loss leaders: why negative-profit items cannot simply be dropped
================================================================

A bakery sells coffee below cost to move pastry. Filtering out the
money-losing item before mining would hide the very bundle the discount
exists to create. This script builds that situation from quantities and
unit profits, then shows the miner keeping the right supersets.
"""

from topshelf import database_from_quantities, mine_top_k
from topshelf.oracle import relative_utility

CROISSANT, COFFEE, JUICE = 1, 2, 3

profits = {CROISSANT: 10, COFFEE: -5, JUICE: -1}

# (period, [(item, quantity), ...]) per basket
baskets = [
    (0, [(CROISSANT, 1), (COFFEE, 4)]),
    (0, [(CROISSANT, 1), (COFFEE, 1), (JUICE, 1)]),
    (0, [(CROISSANT, 2)]),
]

db = database_from_quantities(profits, baskets)
patterns, _ = mine_top_k(db, 10)

print("mined, best first:")
for p in patterns:
    print(f"  {p.items}  utility {p.utility:>3}  ratio {p.relative_utility}")

# The pair (croissant, coffee) loses money overall, so it is absent.
mined_sets = {p.items for p in patterns}
assert (CROISSANT, COFFEE) not in mined_sets
print()
print(
    "pair ratio",
    relative_utility(db, (CROISSANT, COFFEE)),
    "-> excluded: it loses money",
)

# Yet the triple that contains the same pair clears zero, because the
# ratio is not monotone: adding juice adds a basket where coffee was
# bought in moderation. Dropping losing items early would miss this.
assert (CROISSANT, COFFEE, JUICE) in mined_sets
print(
    "triple ratio",
    relative_utility(db, (CROISSANT, COFFEE, JUICE)),
    "-> kept, despite the losing subset",
)

# Nothing made purely of losing items can ever appear.
assert all(any(profits[i] > 0 for i in p.items) for p in patterns)
print()
print("every mined bundle contains at least one profitable item")
