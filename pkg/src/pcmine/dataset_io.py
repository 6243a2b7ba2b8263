"""Transaction-file loading, seeded synthetic databases, stats CSV output.

The on-disk transaction format is one transaction per line: whitespace
separated non-negative integer item ids. The synthetic generator runs on
SplitMix64 so a spec reproduces the same database on any platform; the README
documents the exact algorithm.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from typing import Iterable

from .baselines import TransactionDB
from .prime_codec import as_itemset

STATS_HEADER = ("dataset", "algo", "min_sup", "num_frequent", "num_candidates", "runtime_ms")

_MASK64 = (1 << 64) - 1


class TransactionParseError(ValueError):
    """A transaction file line held something other than item ids."""


def load_transactions(path) -> TransactionDB:
    """Read a whitespace-separated transaction file.

    Duplicate ids within a line are collapsed, blank lines are skipped and
    reported in one aggregate warning, and transaction ids run 1..n in file
    order over the lines that were kept.
    """
    rows = []
    skipped = 0
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            items = []
            for token in line.split():
                if not (token.isascii() and token.isdigit()):
                    raise TransactionParseError(f"{path}:{line_no}: bad item id {token!r}")
                items.append(int(token))
            itemset = as_itemset(items)
            if not itemset:
                skipped += 1
                continue
            rows.append(itemset)
    if skipped:
        warnings.warn(f"{path}: skipped {skipped} empty transaction line(s)", stacklevel=2)
    return TransactionDB.from_itemsets(rows)


@dataclass(frozen=True)
class SyntheticSpec:
    """Parameters of one reproducible random database.

    density is the independent per-item inclusion probability, so
    density * num_items is the expected transaction length and must be at
    least 1 to keep the empty-transaction redraw loop sane.
    """

    num_transactions: int
    num_items: int
    density: float
    seed: int

    def __post_init__(self):
        if self.num_transactions < 1:
            raise ValueError("need at least one transaction")
        if self.num_items < 1:
            raise ValueError("need at least one item")
        if not 0.0 < self.density <= 1.0:
            raise ValueError(f"density must be in (0, 1], got {self.density}")
        if self.density * self.num_items < 1.0:
            raise ValueError("density * num_items must be at least 1")

    @property
    def name(self) -> str:
        return f"synthetic-{self.num_transactions}x{self.num_items}-d{self.density}-s{self.seed}"


class _SplitMix64:
    """Tiny portable PRNG; the exact stream is part of the generator contract."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def generate_synthetic(spec: SyntheticSpec) -> TransactionDB:
    """Bernoulli transactions: each item joins independently with p = density.

    One 64-bit draw per item in ascending id order; a draw below
    density * 2**64 includes the item. An empty result is discarded and drawn
    again, so every transaction is non-empty and the output is still a pure
    function of the spec.
    """
    rng = _SplitMix64(spec.seed)
    threshold = int(spec.density * 2.0**64)
    rows = []
    while len(rows) < spec.num_transactions:
        items = tuple(i for i in range(spec.num_items) if rng.next_u64() < threshold)
        if items:
            rows.append(items)
    return TransactionDB.from_itemsets(rows, universe=range(spec.num_items))


@dataclass(frozen=True)
class StatsRow:
    """One mining run, as a row of the stats CSV."""

    dataset: str
    algorithm: str
    sigma: int
    num_frequent: int
    num_candidates: int
    runtime_ms: float


def write_stats(rows: Iterable[StatsRow], path) -> None:
    """Write one CSV line per run under the fixed header."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(STATS_HEADER)
        for row in rows:
            writer.writerow([row.dataset, row.algorithm, row.sigma,
                             row.num_frequent, row.num_candidates, row.runtime_ms])
