"""Scaling-study harness: runtime and peak tree size versus variable count.

Records are bit-reproducible given (family, params, seed).  To keep that
true, per-instance time is *deterministic effort time*: the solver's pointer
visit count divided by a fixed conversion rate, and the timeout budget is
enforced in the same units.  Wall-clock noise therefore never reaches the
CSV; wall time for a whole run is reported separately on the error stream.
"""

from __future__ import annotations

import csv
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import variables_of
from .instances import complete_minus_one, pigeonhole, random_3sat
from .solver import RESOURCE_EXCEEDED, SolveConfig, check_sat

# fixed effort-to-time conversion: pointer visits per virtual millisecond.
# Calibrated once to the rough throughput of the pure-Python tree walk so
# virtual milliseconds land near wall milliseconds on commodity hardware;
# never recalibrated at runtime, because determinism matters more than
# clock fidelity here.
WORK_PER_MS = 2000

FAMILIES = ("random3sat", "pigeonhole", "complete-minus-one")

CSV_COLUMNS = (
    "family",
    "n",
    "clause_count",
    "seed",
    "verdict",
    "elapsed_ms",
    "peak_nodes",
    "eliminations",
    "timed_out",
)


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    clause_count: int
    seed: int
    verdict: str
    elapsed_ms: float
    peak_nodes: int
    eliminations: int
    timed_out: bool

    def to_row(self) -> list[str]:
        return [
            self.family,
            str(self.n),
            str(self.clause_count),
            str(self.seed),
            self.verdict,
            f"{self.elapsed_ms:.3f}",
            str(self.peak_nodes),
            str(self.eliminations),
            "true" if self.timed_out else "false",
        ]

    @staticmethod
    def from_row(row: Sequence[str]) -> "BenchRecord":
        return BenchRecord(
            family=row[0],
            n=int(row[1]),
            clause_count=int(row[2]),
            seed=int(row[3]),
            verdict=row[4],
            elapsed_ms=float(row[5]),
            peak_nodes=int(row[6]),
            eliminations=int(row[7]),
            timed_out=row[8] == "true",
        )


def _build_instance(family: str, param: int, seed: int, ratio: float):
    import random

    if family == "random3sat":
        return random_3sat(param, round(ratio * param), random.Random(seed))
    if family == "pigeonhole":
        return pigeonhole(param)
    if family == "complete-minus-one":
        return complete_minus_one(param)
    raise ValueError(f"unknown family {family!r}")


def _run_task(task) -> BenchRecord:
    family, param, seed, ratio, timeout_ms, node_budget = task
    formula = _build_instance(family, param, seed, ratio)
    cfg = SolveConfig(
        node_budget=node_budget,
        work_budget=int(timeout_ms * WORK_PER_MS),
    )
    result = check_sat(formula, cfg)
    return BenchRecord(
        family=family,
        n=len(variables_of(formula)),
        clause_count=len(formula.clauses),
        seed=seed,
        verdict=result.verdict,
        elapsed_ms=round(result.stats.work / WORK_PER_MS, 3),
        peak_nodes=result.stats.peak_nodes,
        eliminations=result.stats.eliminations,
        timed_out=result.stats.exceeded == "work",
    )


def run_family(
    family: str,
    n_values: Iterable[int],
    seed: int = 0,
    seeds_per_n: int = 1,
    ratio: float = 4.3,
    timeout_ms: float = 10_000.0,
    node_budget: int = 1 << 24,
    workers: int = 1,
    on_record: Callable[[BenchRecord], None] | None = None,
) -> list[BenchRecord]:
    """Run one instance family across ``n_values``.

    ``n_values`` are the family parameter: variable count for random3sat and
    complete-minus-one, hole count k for pigeonhole (the record's ``n`` is
    always the true variable count).  Instance seeds derive deterministically
    from (seed, parameter, repetition).  Records stream to ``on_record`` in
    a deterministic order as soon as they finish, so partial runs are
    usable.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    tasks = []
    for param in n_values:
        reps = seeds_per_n if family == "random3sat" else 1
        for rep in range(reps):
            instance_seed = seed * 1_000_003 + param * 1_009 + rep
            tasks.append((family, param, instance_seed, ratio, timeout_ms, node_budget))

    records: list[BenchRecord] = []

    def consume(produced):
        for record in produced:
            records.append(record)
            if on_record is not None:
                on_record(record)

    if workers <= 1:
        consume(map(_run_task, tasks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            consume(executor.map(_run_task, tasks))
    return records


def write_csv_header(fh) -> None:
    csv.writer(fh).writerow(CSV_COLUMNS)
    fh.flush()


def append_csv_record(fh, record: BenchRecord) -> None:
    csv.writer(fh).writerow(record.to_row())
    fh.flush()


def read_csv(fh) -> list[BenchRecord]:
    reader = csv.reader(fh)
    header = next(reader)
    if list(header) != list(CSV_COLUMNS):
        raise ValueError(f"unexpected CSV header: {header}")
    return [BenchRecord.from_row(row) for row in reader]


class InsufficientDataError(ValueError):
    pass


POLYNOMIAL = "polynomial-consistent"
EXPONENTIAL = "exponential-consistent"

# geometric midpoint between per-variable growth factors 1 (polynomial,
# ratios sink toward 1) and 2 (full doubling per variable)
RATIO_THRESHOLD = math.sqrt(2.0)


@dataclass(frozen=True)
class GrowthReport:
    n_values: tuple[int, ...]
    median_peak_nodes: tuple[float, ...]
    median_elapsed_ms: tuple[float, ...]
    step_ratios: tuple[float, ...]
    ratio_tail_median: float
    slope_peak_nodes: float
    slope_elapsed_ms: float
    label: str

    def lines(self) -> list[str]:
        out = [
            f"n_values={','.join(str(n) for n in self.n_values)}",
            f"median_peak_nodes={','.join(f'{p:g}' for p in self.median_peak_nodes)}",
            f"median_elapsed_ms={','.join(f'{e:.3f}' for e in self.median_elapsed_ms)}",
            f"per_variable_growth_ratios={','.join(f'{r:.4f}' for r in self.step_ratios)}",
            f"ratio_tail_median={self.ratio_tail_median:.4f}",
            f"loglog_slope_peak_nodes={self.slope_peak_nodes:.3f}",
            f"loglog_slope_elapsed_ms={self.slope_elapsed_ms:.3f}",
            f"growth_label={self.label}",
        ]
        return out


def _loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    lx = [math.log(x) for x in xs]
    ly = [math.log(max(y, 1e-9)) for y in ys]
    mx = statistics.fmean(lx)
    my = statistics.fmean(ly)
    denom = sum((x - mx) ** 2 for x in lx)
    if denom == 0:
        return 0.0
    return sum((x - mx) * (y - my) for x, y in zip(lx, ly)) / denom


def fit_growth(records: Sequence[BenchRecord]) -> GrowthReport:
    """Classify measured growth of peak tree size against variable count.

    Only finished runs count: timed-out and budget-tripped records carry a
    censored peak and would bias the fit.  The per-variable growth ratio for
    a step n1 -> n2 is (p2/p1)^(1/(n2-n1)); a sequence hovering near 2 means
    each added variable doubles the tree, near 1 means subexponential.  The
    label comes from the median of the later half of that sequence, where
    small-n transients have died down.
    """
    usable = [r for r in records if not r.timed_out and r.verdict != RESOURCE_EXCEEDED]
    by_n: dict[int, list[BenchRecord]] = {}
    for r in usable:
        by_n.setdefault(r.n, []).append(r)
    if len(by_n) < 4:
        raise InsufficientDataError(
            f"need records for >= 4 distinct n values, have {len(by_n)}"
        )
    ns = sorted(by_n)
    peaks = [statistics.median(r.peak_nodes for r in by_n[n]) for n in ns]
    elapsed = [statistics.median(r.elapsed_ms for r in by_n[n]) for n in ns]

    ratios = []
    for (n1, p1), (n2, p2) in zip(zip(ns, peaks), zip(ns[1:], peaks[1:])):
        ratios.append((max(p2, 1.0) / max(p1, 1.0)) ** (1.0 / (n2 - n1)))
    tail = ratios[len(ratios) // 2 :]
    tail_median = statistics.median(tail)
    label = EXPONENTIAL if tail_median > RATIO_THRESHOLD else POLYNOMIAL

    return GrowthReport(
        n_values=tuple(ns),
        median_peak_nodes=tuple(peaks),
        median_elapsed_ms=tuple(elapsed),
        step_ratios=tuple(ratios),
        ratio_tail_median=tail_median,
        slope_peak_nodes=_loglog_slope(ns, peaks),
        slope_elapsed_ms=_loglog_slope(ns, elapsed),
        label=label,
    )
