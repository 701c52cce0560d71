"""Count tables: ad-nilpotent and abelian ideal counts per parabolic.

One pass over all filters bins them by compatibility mask; a superset-sum
transform then yields, for every subset I of the simple roots, the number
of filters whose mask contains I -- that is, the ideal counts of the
corresponding parabolic.  Rows are ordered by ascending mask.

The pass may be sharded over workers by the starting index of the
antichain walk; per-worker counter arrays merge by addition, so results
do not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import golden
from .ideals import Classifier, is_filter_for, root_pair_sums
from .oracle import iter_subset_scan_filters
from .poset import Poset, build_poset, enumerate_filters
from .rootsys import RootSystem, SimpleType


@dataclass(frozen=True)
class TableRow:
    """Counts for one parabolic: its mask, all ideals, abelian ideals."""

    mask: int
    n_count: int
    ab_count: int


@dataclass(frozen=True)
class GoldenTable:
    simple_type: SimpleType
    rows: tuple[TableRow, ...]


@dataclass(frozen=True)
class RowMismatch:
    mask: int
    expected: tuple[int, int]
    got: tuple[int, int]


class TypeMismatch(ValueError):
    """Golden table and root system disagree on the simple type."""


class MissingGolden(LookupError):
    """No reference table ships for the requested type."""


def golden_table(t: SimpleType) -> GoldenTable:
    """The bundled reference table for an exceptional type."""
    try:
        raw = golden.TABLES[str(t)]
    except KeyError:
        raise MissingGolden(f"no reference table for type {t}") from None
    return GoldenTable(
        simple_type=t,
        rows=tuple(TableRow(mask=m, n_count=n, ab_count=ab) for m, n, ab in raw),
    )


def _superset_sums(counts: list[int], l: int) -> list[int]:
    """For each mask, the sum of counts over all of its supersets."""
    out = list(counts)
    for z in range(l):
        bit = 1 << z
        for m in range(1 << l):
            if not m & bit:
                out[m] += out[m | bit]
    return out


def _branch_counts(
    p: Poset, cls: Classifier, starts: list[int], width: int
) -> tuple[list[int], list[int]]:
    n_by = [0] * width
    ab_by = [0] * width
    for _, closure in enumerate_filters(p, starts=starts):
        compat, abelian = cls.classify(closure)
        n_by[compat] += 1
        if abelian:
            ab_by[compat] += 1
    return n_by, ab_by


def tabulate(rs: RootSystem, threads: int = 1) -> list[TableRow]:
    """Ideal counts for every parabolic of ``rs``, rows ascending by mask."""
    p = build_poset(rs)
    cls = Classifier(rs)
    width = 1 << rs.rank
    starts = list(range(p.n))
    if threads <= 1:
        n_by, ab_by = _branch_counts(p, cls, starts, width)
    else:
        n_by = [0] * width
        ab_by = [0] * width
        chunks = [starts[k::threads] for k in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part_n, part_ab in pool.map(
                lambda ch: _branch_counts(p, cls, ch, width), chunks
            ):
                for m in range(width):
                    n_by[m] += part_n[m]
                    ab_by[m] += part_ab[m]
    full = width - 1
    n_by[full] += 1  # the empty filter, compatible with everything
    ab_by[full] += 1
    n_sum = _superset_sums(n_by, rs.rank)
    ab_sum = _superset_sums(ab_by, rs.rank)
    return [
        TableRow(mask=m, n_count=n_sum[m], ab_count=ab_sum[m])
        for m in range(width)
    ]


def verify_against_golden(
    rs: RootSystem, g: GoldenTable, threads: int = 1
) -> list[RowMismatch]:
    """Recompute the table and diff it row by row against ``g``.

    Empty result means every row matches exactly.
    """
    if g.simple_type != rs.simple_type:
        raise TypeMismatch(f"golden table is {g.simple_type}, system is {rs.simple_type}")
    computed = tabulate(rs, threads=threads)
    out = []
    for row, ref in zip(computed, g.rows):
        assert row.mask == ref.mask
        if (row.n_count, row.ab_count) != (ref.n_count, ref.ab_count):
            out.append(
                RowMismatch(
                    mask=row.mask,
                    expected=(ref.n_count, ref.ab_count),
                    got=(row.n_count, row.ab_count),
                )
            )
    return out


def brute_force_tabulate(rs: RootSystem) -> list[TableRow]:
    """Oracle tabulation for small systems.

    Filters come from the exhaustive subset scan; each is then tested
    against every parabolic with the literal by-definition check, and for
    abelianness by the full pair scan.  Raises TooLarge beyond the scan
    bound.
    """
    p = build_poset(rs)
    filters = list(iter_subset_scan_filters(p))
    abelian = {f: root_pair_sums(rs, f) == 0 for f in filters}
    rows = []
    for mask in range(1 << rs.rank):
        n_count = ab_count = 0
        for f in filters:
            if is_filter_for(rs, f, mask):
                n_count += 1
                if abelian[f]:
                    ab_count += 1
        rows.append(TableRow(mask=mask, n_count=n_count, ab_count=ab_count))
    return rows
