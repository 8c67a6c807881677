"""Acceptance gate: every criterion at its stated size and tolerance, one
printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to watch the lines as
they complete. The timing criteria run first (before the differential
sweeps churn allocator state); they use min-of-2 process-CPU-time, which
is robust against scheduler preemption on shared machines. The whole gate
takes several minutes, dominated by the >= 8 MiB and 50 MiB inputs.
"""

import gc
import random
import sys
import time

import numpy as np
import pytest

from lzbg.codec import decode_stream, encode_stream
from lzbg.conversions import (
    nsv_to_phi_with_visitor,
    phi_to_nsv_inplace,
)
from lzbg.corpus import english_like, random_bytes, repetitive_text
from lzbg.lz_parse import VARIANTS, factorize
from lzbg.oracles import (
    naive_factorize,
    naive_phi,
    naive_psv_nsv,
    naive_suffix_array,
)
from lzbg.phi_builder import (
    ListRegisters,
    build_phi_from_text,
    phi_to_sa_inplace,
    sa_to_phi_inplace,
)
from lzbg.sa_induce import SortTables, build_suffix_array
from lzbg.text_core import SpaceAccountant, Text, Workspace

PAPER = b"abaabababaaaaabbabab"
PAPER_FACTORS = [
    (0, ord("a")),
    (0, ord("b")),
    (1, 1),
    (3, 1),
    (4, 5),
    (4, 10),
    (1, 2),
    (5, 5),
]

SIGMAS = (1, 2, 4, 26, 255)
TEXTS_PER_SIGMA = 1000
MAX_N = 2000


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num} {name}: {verdict}{suffix}", file=sys.stderr)
    assert ok, f"criterion {num} {name}{suffix}"


def _timed(data: bytes, variant: str, reps: int = 2) -> float:
    """Best-of-reps process CPU seconds for one end-to-end run."""
    best = float("inf")
    for _ in range(reps):
        gc.collect()
        c0 = time.process_time()
        factorize(data, variant)
        best = min(best, time.process_time() - c0)
    return best


def test_criterion_1_worked_example():
    ok = all(factorize(PAPER, v).pairs() == PAPER_FACTORS for v in VARIANTS)
    _report(1, "worked-example exactness", ok)


def test_criterion_6_linearity():
    n = 8 * 1024 * 1024
    inputs = {
        "random": (random_bytes(n, 255, 61), random_bytes(2 * n, 255, 61)),
        "repetitive": (repetitive_text(n, 62), repetitive_text(2 * n, 62)),
    }
    ratios = {}
    ok = True
    for kind, (small, big) in inputs.items():
        for variant in VARIANTS:
            ratio = _timed(big, variant) / _timed(small, variant)
            ratios[(kind, variant)] = ratio
            if not 1.6 <= ratio <= 3.0:
                ok = False
        del small, big
    inputs.clear()
    gc.collect()
    detail = ", ".join(f"{k}/{v}={r:.2f}" for (k, v), r in ratios.items())
    _report(6, "linearity 8MiB vs 16MiB", ok, detail)


def test_criterion_7_relative_speed():
    n = 50 * 1024 * 1024
    data = english_like(n, seed=77)
    t_bgtwo = _timed(data, "bgtwo")
    t_sa = _timed(data, "bgone_sa")
    t_t = _timed(data, "bgone_t")
    ok = t_sa <= 3.0 * t_bgtwo and t_sa <= 1.15 * t_t
    _report(
        7,
        "relative speed on 50MiB natural language",
        ok,
        f"bgone_sa={t_sa:.1f}s bgtwo={t_bgtwo:.1f}s bgone_t={t_t:.1f}s "
        f"sa/two={t_sa / t_bgtwo:.2f} sa/t={t_sa / t_t:.2f}",
    )


def _sigma_corpus(sigma: int, seed: int) -> list[bytes]:
    rng = random.Random(seed)
    texts = []
    for idx in range(TEXTS_PER_SIGMA):
        # mostly short texts with a long tail up to the cap
        n = rng.randint(0, 320) if idx % 5 else rng.randint(321, MAX_N)
        texts.append(bytes(rng.randrange(sigma) for _ in range(n)))
    return texts


@pytest.fixture(scope="module")
def differential_corpus() -> dict[int, list[bytes]]:
    return {sigma: _sigma_corpus(sigma, 1000 + sigma) for sigma in SIGMAS}


def test_criterion_2_differential(differential_corpus):
    t0 = time.perf_counter()
    checked = 0
    for sigma, texts in differential_corpus.items():
        for t in texts:
            want_lens = [l for l, _ in naive_factorize(t)]
            first = None
            for variant in VARIANTS:
                fac = factorize(t, variant)
                got = fac.pairs()
                assert [l for l, _ in got] == want_lens, (sigma, variant, t[:40])
                if first is None:
                    first = (got, fac)
                else:
                    assert got == first[0], (sigma, variant, t[:40])
            assert decode_stream(encode_stream(first[1])) == t
            checked += 1
    elapsed = time.perf_counter() - t0
    _report(
        2,
        "differential correctness",
        checked == TEXTS_PER_SIGMA * len(SIGMAS) and elapsed < 120.0,
        f"{checked} texts in {elapsed:.1f}s",
    )


def test_criterion_3_structure_oracles(differential_corpus):
    checked = 0
    for texts in differential_corpus.values():
        for t in texts:
            tx = Text(t)
            n = tx.n
            sa_want = naive_suffix_array(t)
            ws = Workspace(n)
            build_suffix_array(tx, ws)
            assert list(ws.cells[1:]) == sa_want, t[:40]

            phi_want = naive_phi(t)
            ws = Workspace(n)
            build_phi_from_text(tx, ws)
            assert list(ws.cells) == phi_want, t[:40]

            psv_want, nsv_want = naive_psv_nsv(t)
            phi_to_nsv_inplace(ws)
            assert list(ws.cells[1:]) == nsv_want[1:], t[:40]

            seen = []
            nsv_to_phi_with_visitor(ws, lambda i, p, s: seen.append((i, p, s)))
            assert seen == [
                (i, psv_want[i], nsv_want[i]) for i in range(1, n + 1)
            ], t[:40]
            checked += 1
    _report(3, "structure oracles", True, f"{checked} texts")


def test_criterion_4_round_trips():
    rng = random.Random(4040)
    for _ in range(1000):
        n = rng.randint(1, 512)
        sigma = rng.choice(SIGMAS)
        t = bytes(rng.randrange(sigma) for _ in range(n))
        tx = Text(t)
        ws = Workspace(n)
        build_phi_from_text(tx, ws)
        phi_image = ws.cells.copy()
        phi_to_nsv_inplace(ws)
        nsv_to_phi_with_visitor(ws)
        assert np.array_equal(ws.cells, phi_image), t[:40]

        ws2 = Workspace(n)
        build_suffix_array(tx, ws2)
        sa_image = ws2.cells.copy()
        sa_to_phi_inplace(tx, ws2)
        assert np.array_equal(ws2.cells, phi_image), t[:40]
        phi_to_sa_inplace(tx, ws2)
        assert np.array_equal(ws2.cells[1:], sa_image[1:]), t[:40]
    _report(4, "round-trip identities", True, "1000 texts")


def test_criterion_5_in_place_certification():
    # the four rewrites allocate nothing beyond preallocated registers
    t = random_bytes(100_000, 200, seed=55)
    tx = Text(t)
    acct = SpaceAccountant()
    ws = Workspace(tx.n, acct)
    tables = SortTables(acct)
    regs = ListRegisters(acct)
    build_suffix_array(tx, ws, tables)
    with acct.phase("sa_to_phi") as r_s2p:
        sa_to_phi_inplace(tx, ws, tables, regs)
    with acct.phase("phi_to_nsv") as r_nsv:
        phi_to_nsv_inplace(ws)
    with acct.phase("nsv_to_phi") as r_back:
        nsv_to_phi_with_visitor(ws)
    with acct.phase("phi_to_sa") as r_p2s:
        phi_to_sa_inplace(tx, ws, tables)
    per_op_zero = (
        r_s2p.peak_aux_words == 0
        and r_nsv.peak_aux_words == 0
        and r_back.peak_aux_words == 0
        and r_p2s.peak_aux_words == 0
    )

    # end-to-end peaks are the same constant at n = 1e5, 1e6, 1e7
    peaks = {"bgone_t": set(), "bgone_sa": set()}
    for n in (10**5, 10**6, 10**7):
        data = random_bytes(n, 251, seed=n % 97)
        for variant in peaks:
            acct = SpaceAccountant()
            factorize(data, variant, acct)
            peaks[variant].add(acct.peak(f"{variant}_total"))
        del data
        gc.collect()
    constant = all(len(v) == 1 for v in peaks.values())
    bound = all(v.pop() <= 16 * 256 for v in peaks.values())
    _report(
        5,
        "in-place certification",
        per_op_zero and constant and bound,
        "per-op aux = 0; end-to-end peak constant over n = 1e5..1e7",
    )


def test_criterion_8_degenerates():
    cases = [
        b"",
        b"x",
        b"a" * 10**6,
        bytes(range(1, 256)),  # strictly increasing over 255 symbols
    ]
    for t in cases:
        want_lens = [l for l, _ in naive_factorize(t)]
        first = None
        for variant in VARIANTS:
            fac = factorize(t, variant)
            assert [l for l, _ in fac.pairs()] == want_lens, (variant, len(t))
            if first is None:
                first = fac.pairs()
            else:
                assert fac.pairs() == first, (variant, len(t))
        assert decode_stream(encode_stream(factorize(t, "bgone_t"))) == t
        if len(t) <= 2000:
            sa = Workspace(len(t))
            build_suffix_array(Text(t), sa)
            assert list(sa.cells[1:]) == naive_suffix_array(t)
    _report(8, "degenerate inputs", True, "empty, n=1, 1e6 run, increasing")
