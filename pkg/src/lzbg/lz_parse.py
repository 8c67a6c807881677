"""Greedy parsing from sequential (PSV, NSV) pairs and the end-to-end
factorization drivers.

Variants (all produce identical factor sequences):
  bgone_t   text -> chain -> NSV -> chain+parse, one workspace
  bgone_sa  text -> SA -> chain (in-place) -> NSV -> chain+parse, one workspace
  bgtwo     text -> SA (workspace 1) -> chain by one scan (workspace 2) -> parse
  kkp3_ref  text -> SA -> PSV/NSV arrays -> parse (reference, three arrays)
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels as K
from .conversions import phi_to_nsv_inplace, sa_to_psv_nsv
from .phi_builder import ListRegisters, build_phi_from_text, sa_to_phi_inplace
from .sa_induce import SortTables, build_suffix_array
from .text_core import (
    Factor,
    SpaceAccountant,
    StateError,
    StructureError,
    Text,
    Workspace,
    WorkspaceState,
)

VARIANTS = ("bgone_t", "bgone_sa", "bgtwo", "kkp3_ref")

ARRAY_COUNT = {"bgone_t": 1, "bgone_sa": 1, "bgtwo": 2, "kkp3_ref": 3}

_CHUNK = 1 << 20


@dataclass
class Factorization:
    """Ordered factor sequence covering a text of length n."""

    lengths: np.ndarray
    payloads: np.ndarray
    n: int

    @property
    def count(self) -> int:
        return int(self.lengths.shape[0])

    def factors(self) -> list[Factor]:
        return [
            Factor(int(l), int(p))
            for l, p in zip(self.lengths, self.payloads)
        ]

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(l), int(p)) for l, p in zip(self.lengths, self.payloads)]

    def starts(self) -> list[int]:
        out = []
        pos = 1
        for l in self.lengths:
            out.append(pos)
            pos += max(1, int(l))
        return out


@dataclass
class RunStats:
    """Per-phase wall times (ms) and space accounting for one run."""

    variant: str
    n: int
    factor_count: int = 0
    t_sa_ms: float = 0.0
    t_phi_ms: float = 0.0
    t_nsv_ms: float = 0.0
    t_parse_ms: float = 0.0
    peak_aux_words: int = 0
    array_count: int = 0

    @property
    def t_total_ms(self) -> float:
        return self.t_sa_ms + self.t_phi_ms + self.t_nsv_ms + self.t_parse_ms


def lcp_from(text: Text, i: int, j: int) -> int:
    """Longest common prefix of suffixes i and j; 0 when j is 0."""
    if not 1 <= i <= text.n:
        raise IndexError(f"position {i} out of range")
    if not 0 <= j <= text.n:
        raise IndexError(f"source {j} out of range")
    return int(K._lcp(text.as_array(), i, j))


def parse_with_pairs(
    text: Text, pairs: Iterator[tuple[int, int]], cost: list[int] | None = None
) -> Factorization:
    """Greedy parse over a per-position (psv, nsv) stream.

    Only factor-start positions are interrogated; pairs for covered
    positions are drained. Single-symbol copies are normalized to the
    byte's first occurrence so the source choice is deterministic.
    `cost` (optional, one-element list) accumulates the number of symbol
    comparisons spent in lcp calls.
    """
    n = text.n
    data = text.data
    first_occ = [0] * 256
    lens: list[int] = []
    pays: list[int] = []
    i = 1
    pos = 0
    for psv, nsv in pairs:
        pos += 1
        if pos > n:
            break
        if pos >= i:
            b = data[pos - 1]
            lnsv = _lcp_py(data, pos, nsv)
            lpsv = _lcp_py(data, pos, psv)
            if cost is not None:
                cost[0] += lnsv + 1 + lpsv + 1
            if lnsv > 0 and lnsv >= lpsv:
                lens.append(lnsv)
                pays.append(first_occ[b] if lnsv == 1 else nsv)
                i = pos + lnsv
            elif lpsv > 0:
                lens.append(lpsv)
                pays.append(first_occ[b] if lpsv == 1 else psv)
                i = pos + lpsv
            else:
                lens.append(0)
                pays.append(b)
                i = pos + 1
        if first_occ[data[pos - 1]] == 0:
            first_occ[data[pos - 1]] = pos
    if pos < n:
        raise StructureError("pair source exhausted before position n")
    return Factorization(
        lengths=np.asarray(lens, dtype=np.int64),
        payloads=np.asarray(pays, dtype=np.int64),
        n=n,
    )


def _lcp_py(data: bytes, i: int, j: int) -> int:
    if j == 0:
        return 0
    ell = 0
    n = len(data)
    while i + ell <= n and j + ell <= n and data[i + ell - 1] == data[j + ell - 1]:
        ell += 1
    return ell


def _drain_chain_parse(
    text: Text, ws: Workspace, acct: SpaceAccountant
) -> Factorization:
    """NSV state -> PHI state while parsing, via the resumable kernel."""
    ws.require(WorkspaceState.NSV)
    tb = text.as_array()
    n = text.n
    ws.cells[0] = 0
    first_occ = acct.alloc(256)
    K._first_occurrence(tb, first_occ)
    chunks_l: list[np.ndarray] = []
    chunks_p: list[np.ndarray] = []
    i, fstart = 1, 1
    while i <= n:
        lens = acct.alloc(_CHUNK, output=True)
        pays = acct.alloc(_CHUNK, output=True)
        i, fstart, cnt, status = K._nsv_to_phi_parse_chunk(
            tb, ws.cells, i, fstart, lens, pays, _CHUNK, first_occ
        )
        if status != K.OK:
            raise StateError("cell contents are not an NSV array")
        chunks_l.append(lens[:cnt])
        chunks_p.append(pays[:cnt])
    acct.free(first_occ)
    ws.transition(WorkspaceState.PHI)
    ws.transition(WorkspaceState.PARSED)
    return _gather(chunks_l, chunks_p, n)


def _parse_from_arrays(
    text: Text, psv: np.ndarray, nsv: np.ndarray, acct: SpaceAccountant
) -> Factorization:
    tb = text.as_array()
    n = text.n
    first_occ = acct.alloc(256)
    K._first_occurrence(tb, first_occ)
    chunks_l: list[np.ndarray] = []
    chunks_p: list[np.ndarray] = []
    i = 1
    while i <= n:
        lens = acct.alloc(_CHUNK, output=True)
        pays = acct.alloc(_CHUNK, output=True)
        i, cnt = K._parse_arrays_chunk(tb, psv, nsv, i, lens, pays, _CHUNK,
                                       first_occ)
        chunks_l.append(lens[:cnt])
        chunks_p.append(pays[:cnt])
    acct.free(first_occ)
    return _gather(chunks_l, chunks_p, n)


def _gather(chunks_l: list[np.ndarray], chunks_p: list[np.ndarray], n: int):
    if chunks_l:
        lengths = np.concatenate(chunks_l)
        payloads = np.concatenate(chunks_p)
    else:
        lengths = np.empty(0, dtype=np.int64)
        payloads = np.empty(0, dtype=np.int64)
    return Factorization(lengths=lengths, payloads=payloads, n=n)


def factorize(
    text: Text | bytes,
    variant: str = "bgone_t",
    acct: SpaceAccountant | None = None,
    stats: RunStats | None = None,
) -> Factorization:
    """Run one of the four pipelines end to end."""
    if isinstance(text, (bytes, bytearray)):
        text = Text(bytes(text))
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    acct = acct or SpaceAccountant()
    stats = stats or RunStats(variant=variant, n=text.n)
    stats.array_count = ARRAY_COUNT[variant]
    with acct.phase(f"{variant}_total") as total:
        if variant == "bgone_t":
            fac = _run_bgone_t(text, acct, stats)
        elif variant == "bgone_sa":
            fac = _run_bgone_sa(text, acct, stats)
        elif variant == "bgtwo":
            fac = _run_bgtwo(text, acct, stats)
        else:
            fac = _run_kkp3(text, acct, stats)
    stats.factor_count = fac.count
    stats.peak_aux_words = total.peak_aux_words
    return fac


def _run_bgone_t(text: Text, acct: SpaceAccountant, stats: RunStats):
    ws = Workspace(text.n, acct)
    tables = SortTables(acct)
    regs = ListRegisters(acct)
    t0 = time.perf_counter()
    with acct.phase("phi"):
        build_phi_from_text(text, ws, tables, regs)
    t1 = time.perf_counter()
    with acct.phase("nsv"):
        phi_to_nsv_inplace(ws)
    t2 = time.perf_counter()
    with acct.phase("parse"):
        fac = _drain_chain_parse(text, ws, acct)
    t3 = time.perf_counter()
    stats.t_phi_ms = (t1 - t0) * 1e3
    stats.t_nsv_ms = (t2 - t1) * 1e3
    stats.t_parse_ms = (t3 - t2) * 1e3
    return fac


def _run_bgone_sa(text: Text, acct: SpaceAccountant, stats: RunStats):
    ws = Workspace(text.n, acct)
    tables = SortTables(acct)
    regs = ListRegisters(acct)
    t0 = time.perf_counter()
    with acct.phase("sa"):
        build_suffix_array(text, ws, tables)
    t1 = time.perf_counter()
    with acct.phase("phi"):
        sa_to_phi_inplace(text, ws, tables, regs)
    t2 = time.perf_counter()
    with acct.phase("nsv"):
        phi_to_nsv_inplace(ws)
    t3 = time.perf_counter()
    with acct.phase("parse"):
        fac = _drain_chain_parse(text, ws, acct)
    t4 = time.perf_counter()
    stats.t_sa_ms = (t1 - t0) * 1e3
    stats.t_phi_ms = (t2 - t1) * 1e3
    stats.t_nsv_ms = (t3 - t2) * 1e3
    stats.t_parse_ms = (t4 - t3) * 1e3
    return fac


def _run_bgtwo(text: Text, acct: SpaceAccountant, stats: RunStats):
    ws1 = Workspace(text.n, acct)
    tables = SortTables(acct)
    t0 = time.perf_counter()
    with acct.phase("sa"):
        build_suffix_array(text, ws1, tables)
    t1 = time.perf_counter()
    with acct.phase("phi"):
        ws2 = Workspace(text.n, acct)  # second array: the point of bgtwo
        K._phi_from_sa_scan(ws1.cells, ws2.cells, text.n)
        ws2.state = WorkspaceState.PHI
        if text.n == 0:
            ws2.cells[0] = 0
    t2 = time.perf_counter()
    with acct.phase("nsv"):
        phi_to_nsv_inplace(ws2)
    t3 = time.perf_counter()
    with acct.phase("parse"):
        fac = _drain_chain_parse(text, ws2, acct)
    t4 = time.perf_counter()
    stats.t_sa_ms = (t1 - t0) * 1e3
    stats.t_phi_ms = (t2 - t1) * 1e3
    stats.t_nsv_ms = (t3 - t2) * 1e3
    stats.t_parse_ms = (t4 - t3) * 1e3
    return fac


def _run_kkp3(text: Text, acct: SpaceAccountant, stats: RunStats):
    ws = Workspace(text.n, acct)
    tables = SortTables(acct)
    t0 = time.perf_counter()
    with acct.phase("sa"):
        build_suffix_array(text, ws, tables)
    t1 = time.perf_counter()
    with acct.phase("nsv"):
        psv, nsv = sa_to_psv_nsv(ws, acct)
    t2 = time.perf_counter()
    with acct.phase("parse"):
        fac = _parse_from_arrays(text, psv, nsv, acct)
    t3 = time.perf_counter()
    stats.t_sa_ms = (t1 - t0) * 1e3
    stats.t_nsv_ms = (t2 - t1) * 1e3
    stats.t_parse_ms = (t3 - t2) * 1e3
    return fac
