"""Fusion detection on exact character tables.

A partition of the non-identity basis elements names a candidate fusion.
The Bannai-Muzychuk criterion decides it: sum the character-table columns
over each block (the identity column stays alone) and count distinct rows
of the result; the partition gives a fusion exactly when that count equals
the number of classes, blocks plus one.

The check is purely value-based, so the same routine serves numeric tables
(Fraction / quadratic-irrational entries), fully symbolic tables whose
entries are polynomials, and fused tables being re-fused.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import SetPartition, all_default_partitions
from .scheme import CharTable


class IndexMismatch(ValueError):
    """Partition ground set does not match the table's non-identity columns."""


class NotAFusion(ValueError):
    """A fused table was requested for a partition that fails the criterion."""


@dataclass(frozen=True)
class FusionVerdict:
    partition: SetPartition
    is_fusion: bool
    distinct_row_count: int
    fused_rank: int | None

    def __post_init__(self):
        expected = self.partition.num_blocks + 1
        if self.is_fusion and self.distinct_row_count != expected:
            raise ValueError("verdict inconsistent with distinct row count")


def _block_columns(table: CharTable, p: SetPartition) -> list[tuple[int, ...]]:
    ncols = len(table.col_labels)
    if p.ground != frozenset(range(2, ncols + 1)):
        raise IndexMismatch(
            f"partition ground {sorted(p.ground)} vs columns 2..{ncols}"
        )
    # identity column (position 0) is its own class
    return [(0,)] + [tuple(x - 1 for x in block) for block in p.blocks]


def summed_rows(table: CharTable, p: SetPartition) -> list[tuple]:
    """Rows of the table with columns summed per class (identity first)."""
    cols = _block_columns(table, p)
    out = []
    for row in table.rows:
        out.append(tuple(sum_of(row, idxs) for idxs in cols))
    return out


def sum_of(row: tuple, idxs: tuple[int, ...]):
    total = row[idxs[0]]
    for i in idxs[1:]:
        total = total + row[i]
    return total


def bm_check(table: CharTable, p: SetPartition) -> FusionVerdict:
    """Apply the Bannai-Muzychuk criterion to one partition."""
    rows = summed_rows(table, p)
    distinct = len(set(rows))
    is_fusion = distinct == p.num_blocks + 1
    return FusionVerdict(p, is_fusion, distinct, p.rank if is_fusion else None)


def fused_table(table: CharTable, p: SetPartition) -> CharTable:
    """Character table of the fusion named by p.

    Distinct summed rows with merged multiplicities; the valency row comes
    first, remaining rows sorted by first differing entry, descending.
    Raises NotAFusion when the criterion fails.
    """
    rows = summed_rows(table, p)
    merged: dict[tuple, object] = {}
    for row, mult in zip(rows, table.mults):
        merged[row] = merged.get(row, 0) + mult
    if len(merged) != p.num_blocks + 1:
        raise NotAFusion(f"{p} yields {len(merged)} distinct rows")
    valency = rows[0]
    rest = sorted((row for row in merged if row != valency), reverse=True)
    ordered = [valency] + rest
    col_labels = ["identity"] + [
        "+".join(table.col_labels[x - 1] for x in block) for block in p.blocks
    ]
    return CharTable(
        row_labels=tuple(f"row_{i}" for i in range(len(ordered))),
        col_labels=tuple(col_labels),
        rows=tuple(ordered),
        mults=tuple(merged[row] for row in ordered),
    )


def scan_all(
    table: CharTable,
    partitions=None,
    include_trivial: bool = False,
) -> list[FusionVerdict]:
    """All positive verdicts over the candidate partitions, canonical order.

    By default the two trivial positives are suppressed: the discrete
    partition (the scheme itself) and the single-block partition (the
    rank-2 fusion every table algebra has).  Both pass the criterion for
    every table, so reported counts follow the convention that only
    nontrivial fusions are listed.
    """
    if partitions is None:
        partitions = all_default_partitions()
    out = []
    for p in partitions:
        if not include_trivial and (p.is_discrete() or p.is_single_block()):
            continue
        verdict = bm_check(table, p)
        if verdict.is_fusion:
            out.append(verdict)
    return out
