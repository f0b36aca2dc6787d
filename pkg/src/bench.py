"""
Benchmark: Buchberger vs F5 on random instances

Runs both algorithms on a seeded stream of random problems, checks each
result against the linear-algebra oracle and reports pair and
zero-reduction counts side by side.
"""

import csv
import logging
import pathlib
import random
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

from .buchberger import buchberger_stdbasis
from .f5 import f5_certificate, f5_stdbasis
from .loewy import loewy_dims, minimal_generators
from .oracle import (loewy_dims_from_filtration, minimal_lm_set, radical_filtration,
                     verify_standard_basis)
from .instances import random_problem

logger = logging.getLogger(__name__)


@dataclass
class BenchRow:
    index: int
    p: int
    dim_algebra: int
    rank: int
    generators: int
    dim_module: int
    buchberger_topplings: int
    buchberger_zero_reductions: int
    f5_pairs_processed: int
    f5_zero_reductions: int
    f5_skipped_by_l: int
    f5_skipped_by_rewritten: int
    buchberger_seconds: float
    f5_seconds: float
    oracle_ok: bool
    problems: List[str] = field(default_factory=list)


@dataclass
class BenchReport:
    seed: int
    rows: List[BenchRow]
    threshold: float

    @property
    def f5_not_worse_share(self) -> float:
        if not self.rows:
            return 1.0
        hits = sum(1 for r in self.rows if r.f5_zero_reductions <= r.buchberger_zero_reductions)
        return hits / len(self.rows)

    @property
    def failures(self) -> List[BenchRow]:
        return [r for r in self.rows if not r.oracle_ok]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "count": len(self.rows),
            "oracle_failures": len(self.failures),
            "f5_not_worse_share": round(self.f5_not_worse_share, 4),
            "totals": {
                "buchberger_zero_reductions": sum(r.buchberger_zero_reductions for r in self.rows),
                "f5_zero_reductions": sum(r.f5_zero_reductions for r in self.rows),
                "buchberger_topplings": sum(r.buchberger_topplings for r in self.rows),
                "f5_pairs_processed": sum(r.f5_pairs_processed for r in self.rows),
            },
            # timings go to the CSV only
            "instances": [{k: v for k, v in asdict(r).items() if not k.endswith("_seconds")}
                          for r in self.rows],
        }

    def format_table(self) -> str:
        header = f"{'#':>4} {'p':>2} {'dimA':>4} {'r':>2} {'dimM':>4} | {'BB topp':>7} {'BB zero':>7} | " \
                 f"{'F5 pairs':>8} {'F5 zero':>7} {'by L':>5} {'rewr':>5} | oracle"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(f"{r.index:>4} {r.p:>2} {r.dim_algebra:>4} {r.rank:>2} {r.dim_module:>4} | "
                         f"{r.buchberger_topplings:>7} {r.buchberger_zero_reductions:>7} | "
                         f"{r.f5_pairs_processed:>8} {r.f5_zero_reductions:>7} {r.f5_skipped_by_l:>5} "
                         f"{r.f5_skipped_by_rewritten:>5} | {'ok' if r.oracle_ok else 'FAIL'}")
        lines.append("")
        lines.append(f"F5 zero reductions <= Buchberger on {self.f5_not_worse_share:.1%} of {len(self.rows)} instances")
        if self.failures:
            lines.append(f"❌ {len(self.failures)} instances disagree with the oracle")
        return "\n".join(lines)

    def write_csv(self, path):
        path = pathlib.Path(path)
        names = [n for n in BenchRow.__dataclass_fields__ if n != "problems"]
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(names)
            for r in self.rows:
                writer.writerow([getattr(r, n) for n in names])
        logger.info(f"✅ Wrote {len(self.rows)} rows to {path}")


def check_instance(problem, bb_basis, f5_result, max_dim: int) -> Tuple[int, List[str]]:
    """
    Oracle comparison for one instance

    Returns:
        (dim M, the list of disagreements)
    """
    module, gens = problem.module, problem.generators
    problems = []
    if not verify_standard_basis(module, gens, bb_basis, max_dim):
        problems.append("Buchberger output is not a standard basis")
    if not verify_standard_basis(module, gens, f5_result.polys, max_dim):
        problems.append("F5 output is not a standard basis")
    if minimal_lm_set(g.lm for g in bb_basis) != minimal_lm_set(g.lm for g in f5_result.polys):
        problems.append("minimal leading monomial sets differ")
    if f5_certificate(f5_result):
        problems.append("F5 criterion certificate fails")
    dims = radical_filtration(module, gens, max_dim)
    if module.algebra.order.is_negative:
        if loewy_dims(f5_result) != loewy_dims_from_filtration(dims):
            problems.append("Loewy dimensions differ from the radical filtration")
        head = dims[0] - (dims[1] if len(dims) > 1 else 0)
        if len(minimal_generators(f5_result)) != head:
            problems.append("minimal generator count differs from dim M - dim Rad(M)")
    return dims[0], problems


def run_bench(count: int = 200, seed: int = 0, threshold: float = 0.8, max_dim: int = 512,
              csv_path: Optional[str] = None) -> BenchReport:
    """
    Run count random instances starting from seed

    Returns:
        The report; a share of F5-not-worse instances below threshold is
        only logged
    """
    rng = random.Random(seed)
    rows: List[BenchRow] = []
    for index in range(count):
        problem = random_problem(rng)

        t0 = time.perf_counter()
        bb_basis, bb_stats = buchberger_stdbasis(problem.generators)
        t1 = time.perf_counter()
        result = f5_stdbasis(problem.generators, sig_vertices=problem.sig_vertices)
        t2 = time.perf_counter()

        dim_module, issues = check_instance(problem, bb_basis, result, max_dim)
        for issue in issues:
            logger.error(f"❌ instance {index}: {issue}")
        rows.append(BenchRow(
            index=index,
            p=problem.algebra.field.p,
            dim_algebra=problem.algebra.dim,
            rank=problem.rank,
            generators=len(problem.generators),
            dim_module=dim_module,
            buchberger_topplings=bb_stats.topplings_processed,
            buchberger_zero_reductions=bb_stats.zero_reductions,
            f5_pairs_processed=result.stats.pairs_processed,
            f5_zero_reductions=result.stats.zero_reductions,
            f5_skipped_by_l=result.stats.skipped_by_l,
            f5_skipped_by_rewritten=result.stats.skipped_by_rewritten,
            buchberger_seconds=round(t1 - t0, 6),
            f5_seconds=round(t2 - t1, 6),
            oracle_ok=not issues,
            problems=issues,
        ))

    report = BenchReport(seed, rows, threshold)
    if report.f5_not_worse_share < threshold:
        logger.warning(f"F5 had no more zero reductions than Buchberger on only "
                       f"{report.f5_not_worse_share:.1%} of instances (threshold {threshold:.0%})")
    if csv_path:
        report.write_csv(csv_path)
    logger.info(f"✅ Bench finished: {count} instances, {len(report.failures)} oracle failures")
    return report
