"""Core value types and the exact arithmetic they rely on.

Money is a plain Python int (arbitrary precision, so sums never overflow)
and every utility in the system is Money. Ratios of Money values are kept
exact as fractions.Fraction; nothing is converted to float before display.

INVARIANTS
    - item profits are nonzero; quantities are >= 1
    - a transaction never lists the same item twice
    - transaction weight is >= 1 (merge multiplicity; 1 before merging)
    - Rational denominators are positive
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Money = int
Rational = Fraction


def ratio(numerator: int, denominator: int) -> Fraction:
    """Exact rational with a validated positive denominator."""
    if denominator <= 0:
        raise ValueError(f"denominator must be positive, got {denominator}")
    return Fraction(numerator, denominator)


def compare_rational(a: Fraction, b: Fraction) -> int:
    """Three-way compare by cross multiplication: -1, 0, or 1.

    Denominators are positive after Fraction normalization, so the
    cross products order the same way the rationals do. Exact for any
    operand size; this is the comparison the mining loops inline.
    """
    left = a.numerator * b.denominator
    right = b.numerator * a.denominator
    return (left > right) - (left < right)


@dataclass(frozen=True, slots=True)
class Item:
    """One sellable item: external id, signed unit profit, position in the
    mining order (dense_index is assigned during preprocessing)."""

    external_id: int
    profit: Money
    dense_index: int | None = None

    def __post_init__(self):
        if self.external_id <= 0:
            raise ValueError(f"item ids must be positive, got {self.external_id}")
        if self.profit == 0:
            raise ValueError(f"item {self.external_id} has zero profit")


@dataclass(frozen=True, slots=True)
class Transaction:
    """One purchase: parallel tuples of item ids and their signed utilities.

    Utilities are per-occurrence totals u(i, T) = profit * quantity, which is
    what the file format carries; unit profit and quantity are not stored
    separately. Items keep their input order.
    """

    tid: int
    period: int
    items: tuple[int, ...]
    utilities: tuple[Money, ...]
    weight: int = 1


@dataclass(frozen=True, slots=True)
class Pattern:
    """A mined itemset with its exact utility breakdown.

    relative_utility == Fraction(utility, period_total) always; both integer
    fields are kept so output can print the unreduced utility/period_total
    form.
    """

    items: tuple[int, ...]
    utility: Money
    periods: frozenset[int]
    period_total: Money
    relative_utility: Fraction

    def sort_key(self):
        """Ranking order: higher relative utility first, then fewer items,
        then lexicographically smaller item tuple. Totally orders patterns."""
        return (-self.relative_utility, len(self.items), self.items)


def item_utility(item: Item, quantity: int) -> Money:
    """u(i, T): unit profit times purchase quantity."""
    if quantity < 1:
        raise ValueError(f"quantity must be >= 1, got {quantity}")
    return item.profit * quantity


def transaction_utility(t: Transaction) -> Money:
    """TU(T): sum of all item utilities, times merge weight.

    Only meaningful for unmerged rows (weight 1); merged rows already carry
    element-wise summed utilities.
    """
    return t.weight * sum(t.utilities)


def positive_transaction_utility(t: Transaction) -> Money:
    """PTU(T): like transaction_utility but only positive-profit items count.

    Quantities are positive, so an entry's utility sign equals its profit
    sign. PTU is always >= 0 and >= TU.
    """
    return t.weight * sum(u for u in t.utilities if u > 0)


def itemset_utility_in(t: Transaction, itemset) -> Money | None:
    """u(X, T): summed utilities of X's items in T, or None if X is not
    contained in T."""
    lookup = dict(zip(t.items, t.utilities))
    total = 0
    for item in itemset:
        u = lookup.get(item)
        if u is None:
            return None
        total += u
    return total * t.weight


# Names the rest of the package imports from here.
__all__ = [
    "Money",
    "Rational",
    "ratio",
    "compare_rational",
    "Item",
    "Transaction",
    "Pattern",
    "item_utility",
    "transaction_utility",
    "positive_transaction_utility",
    "itemset_utility_in",
]
