"""Synthetic shelf-database generator.

Deterministic for a given seed: the same parameters always produce the same
bytes, so generated fixtures can be referenced by seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dataset import parse_database
from .errors import InfeasibleParams

# How many fresh period columns to try before declaring the draw infeasible.
_PERIOD_ATTEMPTS = 1000


@dataclass(frozen=True, slots=True)
class GeneratorParams:
    transactions: int = 1000
    items: int = 100
    periods: int = 3
    avg_len: int = 6
    neg_frac: float = 0.2
    max_qty: int = 5
    max_profit: int = 10
    seed: int = 1

    def validate(self) -> None:
        if self.transactions < 1:
            raise InfeasibleParams("need at least one transaction")
        if self.items < 1:
            raise InfeasibleParams("need at least one item")
        if self.periods < 1:
            raise InfeasibleParams("need at least one period")
        if self.periods > self.transactions:
            raise InfeasibleParams(
                "more periods than transactions: some period must stay empty"
            )
        if self.avg_len < 1 or self.avg_len > self.items:
            raise InfeasibleParams("average length outside [1, items]")
        if not 0.0 <= self.neg_frac < 1.0:
            raise InfeasibleParams("negative fraction outside [0, 1)")
        if self.max_qty < 1 or self.max_profit < 1:
            raise InfeasibleParams("quantities and profits must be positive")


def generate(params: GeneratorParams) -> str:
    """Database text for the given parameters.

    Items are 1..items; a neg_frac share (rounded down) sells at a loss.
    Transaction lengths vary within 2 of avg_len. The period column is drawn
    last and redrawn wholesale until every period occurs and has positive
    total utility, so the item/quantity draw is stable across redraws.
    """
    params.validate()
    rng = random.Random(params.seed)

    negative_count = int(params.items * params.neg_frac)
    negative = set(rng.sample(range(1, params.items + 1), negative_count))
    profit = {
        i: -rng.randint(1, params.max_profit)
        if i in negative
        else rng.randint(1, params.max_profit)
        for i in range(1, params.items + 1)
    }

    lo = max(1, params.avg_len - 2)
    hi = min(params.items, params.avg_len + 2)
    rows: list[tuple[list[int], list[int], int]] = []
    for _ in range(params.transactions):
        length = rng.randint(lo, hi)
        chosen = sorted(rng.sample(range(1, params.items + 1), length))
        utils = [profit[i] * rng.randint(1, params.max_qty) for i in chosen]
        rows.append((chosen, utils, sum(utils)))

    for _ in range(_PERIOD_ATTEMPTS):
        column = [rng.randrange(params.periods) for _ in rows]
        totals = [0] * params.periods
        for (_, _, tu), h in zip(rows, column):
            totals[h] += tu
        if len(set(column)) == params.periods and all(t > 0 for t in totals):
            break
    else:
        raise InfeasibleParams(
            "could not place transactions so every period has positive total"
        )

    lines = []
    for (chosen, utils, tu), h in zip(rows, column):
        lines.append(
            "%s:%d:%s:%d"
            % (" ".join(map(str, chosen)), tu, " ".join(map(str, utils)), h)
        )
    text = "\n".join(lines) + "\n"
    parse_database(text)  # cheap self-check: emitted text must load cleanly
    return text
