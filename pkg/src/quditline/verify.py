"""Exhaustive cross-validation of every closed-form count against enumeration.

Each counting statement in the package exists twice: as a formula (degree
arithmetic, products over prime-power components) and as a brute-force
enumeration (the kernels).  ``verify_modulus`` runs both routes for every
vector over one modulus and tallies disagreements per statement;
``verify_range`` folds that over a range of moduli.  A tally with zero
failures means the formula and the enumeration are interchangeable on the
swept range.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from . import kernels
from .line import (
    POINT_ENUMERATION_CAP,
    count_points_through,
    enumerate_points,
    line_cardinality,
    union_equals_perp,
    union_size,
)
from .matrices import OracleReport, verify_identities
from .pauli import PauliOp, commuting_count, layer_table
from .ring import factorize
from .symplectic import Vec2, degree, perp_cardinality

CHECK_NAMES = (
    "line-cardinality",
    "points-through-count",
    "perp-cardinality",
    "commuting-count",
    "union-size",
    "union-subset-of-perp",
    "union-equals-perp",
    "union-generates-perp",
    "layer-census",
)


@dataclass
class Tally:
    """Pass/fail counters for one counting statement."""

    name: str
    checked: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail

    def merge(self, other: "Tally") -> None:
        self.checked += other.checked
        self.failures += other.failures
        if self.first_failure is None:
            self.first_failure = other.first_failure


@dataclass
class ModulusReport:
    d: int
    tallies: dict[str, Tally]
    elapsed: float
    matrix: OracleReport | None = None

    @property
    def ok(self) -> bool:
        if any(t.failures for t in self.tallies.values()):
            return False
        return self.matrix is None or self.matrix.ok


@dataclass
class SweepSummary:
    lo: int
    hi: int
    reports: list[ModulusReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def totals(self) -> dict[str, Tally]:
        out = {name: Tally(name) for name in CHECK_NAMES}
        for report in self.reports:
            for name, tally in report.tallies.items():
                out[name].merge(tally)
        return out


def verify_modulus(
    d: int,
    include_matrix: bool = False,
    point_budget: int = POINT_ENUMERATION_CAP,
) -> ModulusReport:
    """Run every formula-vs-enumeration comparison for one modulus."""
    start = time.perf_counter()
    m = factorize(d)
    tallies = {name: Tally(name) for name in CHECK_NAMES}

    catalog = enumerate_points(m, point_budget)
    gens = catalog.generators()

    # The catalog (closed-form generators) must reproduce the orbit masks
    # found by plain deduplicating enumeration, and both must match the
    # closed-form point count.
    dedup = sorted(kernels.dedup_points(d))
    orbit_masks = [kernels.orbit_mask(d, gb, gc) for gb, gc in gens]
    expected = line_cardinality(m)
    tallies["line-cardinality"].record(
        len(catalog) == expected
        and len(dedup) == expected
        and sorted(orbit_masks) == dedup,
        f"d={d}: catalog {len(catalog)}, dedup {len(dedup)}, formula {expected}",
    )

    perp_masks = kernels.perp_masks(d)
    counts, unions = kernels.union_sweep(d, gens)
    orbit_bits = [kernels.mask_bits(mk) for mk in orbit_masks]

    layer_census: Counter[tuple[int, ...]] = Counter()
    for b in range(d):
        for c in range(d):
            i = b * d + c
            v = Vec2(b, c, m)
            layer_census[degree(v).deltas] += 1

            perp_bits = kernels.mask_bits(perp_masks[i])
            union_bits = kernels.mask_bits(unions[i])
            perp_n = perp_bits.bit_count()

            tallies["points-through-count"].record(
                count_points_through(v) == counts[i],
                f"d={d} v={v}: formula {count_points_through(v)}, census {counts[i]}",
            )
            tallies["perp-cardinality"].record(
                perp_cardinality(v) == perp_n,
                f"d={d} v={v}: formula {perp_cardinality(v)}, census {perp_n}",
            )
            tallies["commuting-count"].record(
                commuting_count(PauliOp(0, b, c, m)) == d * perp_n,
                f"d={d} v={v}: centralizer formula vs {d * perp_n}",
            )
            if not v.is_zero:
                tallies["union-size"].record(
                    union_size(v) == union_bits.bit_count(),
                    f"d={d} v={v}: formula {union_size(v)}, census {union_bits.bit_count()}",
                )
            tallies["union-subset-of-perp"].record(
                union_bits & ~perp_bits == 0,
                f"d={d} v={v}: union escapes the perp set",
            )
            tallies["union-equals-perp"].record(
                union_equals_perp(v) == (union_bits == perp_bits),
                f"d={d} v={v}: predicate {union_equals_perp(v)}, "
                f"census sizes {union_bits.bit_count()}/{perp_n}",
            )
            probe = 1 << i
            span = kernels.span_mask(
                d, [g for g, ob in zip(gens, orbit_bits) if ob & probe], perp_n
            )
            tallies["union-generates-perp"].record(
                span == perp_masks[i],
                f"d={d} v={v}: span of points through v is not the full perp",
            )

    table = layer_table(m)
    census_ok = all(
        layer_census.get(row.degree.deltas, 0) == row.vector_count for row in table
    ) and sum(layer_census.values()) == table.total_vectors
    tallies["layer-census"].record(
        census_ok, f"d={d}: layer counts {dict(layer_census)!r} do not match the table"
    )

    matrix = verify_identities(d) if include_matrix else None
    return ModulusReport(d, tallies, time.perf_counter() - start, matrix)


def verify_range(
    lo: int,
    hi: int,
    include_matrix: bool = False,
    matrix_cap: int = 16,
) -> SweepSummary:
    """verify_modulus over lo..hi inclusive; matrices only where affordable."""
    if lo < 2 or hi < lo:
        raise ValueError(f"range must satisfy 2 <= lo <= hi, got {lo}..{hi}")
    summary = SweepSummary(lo, hi)
    for d in range(lo, hi + 1):
        summary.reports.append(
            verify_modulus(d, include_matrix=include_matrix and d <= matrix_cap)
        )
    return summary
