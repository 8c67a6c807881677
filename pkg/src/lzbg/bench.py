"""Benchmark harness: manifest-driven runs with per-phase timing, space
accounting, and the array-count column.

Manifest format: one "name<TAB>path" line per input. Timing starts after
the input bytes are memory-resident. Report rows are TSV with the columns
name, algo, n, factors, t_sa_ms, t_phi_ms, t_nsv_ms, t_parse_ms,
t_total_ms, peak_aux_words, array_count.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

from .corpus import CORPUS_URLS
from .lz_parse import VARIANTS, RunStats, factorize
from .text_core import SpaceAccountant

REPORT_COLUMNS = (
    "name",
    "algo",
    "n",
    "factors",
    "t_sa_ms",
    "t_phi_ms",
    "t_nsv_ms",
    "t_parse_ms",
    "t_total_ms",
    "peak_aux_words",
    "array_count",
)


@dataclass
class BenchRow:
    name: str
    algo: str
    failed: bool = False
    stats: RunStats | None = None

    def tsv(self) -> str:
        if self.failed or self.stats is None:
            return "\t".join([self.name, self.algo] + ["failed"] * 9)
        s = self.stats
        return "\t".join(
            [
                self.name,
                self.algo,
                str(s.n),
                str(s.factor_count),
                f"{s.t_sa_ms:.3f}",
                f"{s.t_phi_ms:.3f}",
                f"{s.t_nsv_ms:.3f}",
                f"{s.t_parse_ms:.3f}",
                f"{s.t_total_ms:.3f}",
                str(s.peak_aux_words),
                str(s.array_count),
            ]
        )


def parse_manifest(path: str | Path) -> list[tuple[str, Path]]:
    entries = []
    for line in Path(path).read_text().splitlines():
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        name, _, file_path = line.partition("\t")
        if not file_path:
            raise ValueError(f"manifest line without a tab: {line!r}")
        entries.append((name, Path(file_path)))
    return entries


def run_one(name: str, data: bytes, algo: str) -> BenchRow:
    acct = SpaceAccountant()
    stats = RunStats(variant=algo, n=len(data))
    factorize(data, algo, acct, stats)
    return BenchRow(name=name, algo=algo, stats=stats)


def run_benchmark(
    manifest: str | Path,
    algos: tuple[str, ...] = VARIANTS,
    out=None,
    warmup: bool = True,
) -> list[BenchRow]:
    """One row per (input, variant); missing files are marked failed and
    the run continues."""
    if out is None:
        out = sys.stdout
    entries = parse_manifest(manifest)
    if warmup:
        for algo in algos:
            factorize(b"warmup" * 64, algo)
    rows: list[BenchRow] = []
    out.write("\t".join(REPORT_COLUMNS) + "\n")
    for name, path in entries:
        try:
            data = path.read_bytes()
        except OSError:
            for algo in algos:
                row = BenchRow(name=name, algo=algo, failed=True)
                rows.append(row)
                out.write(row.tsv() + "\n")
            continue
        for algo in algos:
            row = run_one(name, data, algo)
            rows.append(row)
            out.write(row.tsv() + "\n")
    return rows


def corpus_url_lines() -> list[str]:
    return [f"{u}" for u in CORPUS_URLS]
