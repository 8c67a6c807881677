"""Space accounting: the single-array pipelines must stay within a fixed
per-byte-alphabet budget regardless of n, and the individual rewrites must
allocate nothing."""

import random

from lzbg.conversions import (
    nsv_to_phi_with_visitor,
    phi_to_nsv_inplace,
    sa_to_psv_nsv,
)
from lzbg.lz_parse import RunStats, factorize
from lzbg.phi_builder import build_phi_from_text, phi_to_sa_inplace, sa_to_phi_inplace
from lzbg.sa_induce import SortTables, build_suffix_array
from lzbg.text_core import SpaceAccountant, Text, Workspace


def _random(n, seed=0, sigma=200):
    rng = random.Random(seed)
    return bytes(rng.randrange(sigma) for _ in range(n))


def test_rewrites_allocate_zero_aux_words():
    t = _random(20000, 1)
    tx = Text(t)
    ws = Workspace(tx.n)
    acct = SpaceAccountant()
    build_phi_from_text(tx, ws)
    with acct.phase("phi_to_nsv") as r1:
        phi_to_nsv_inplace(ws)
    with acct.phase("nsv_to_phi") as r2:
        nsv_to_phi_with_visitor(ws)
    assert r1.peak_aux_words == 0
    assert r2.peak_aux_words == 0


def test_sa_phi_conversions_constant_aux():
    peaks_to_phi = set()
    peaks_to_sa = set()
    for n in (500, 20000, 80000):
        t = _random(n, n)
        tx = Text(t)
        acct = SpaceAccountant()
        ws = Workspace(n, acct)
        build_suffix_array(tx, ws, SortTables(acct))
        with acct.phase("to_phi") as r1:
            sa_to_phi_inplace(tx, ws)
        with acct.phase("to_sa") as r2:
            phi_to_sa_inplace(tx, ws)
        peaks_to_phi.add(r1.peak_aux_words)
        peaks_to_sa.add(r2.peak_aux_words)
    # per-byte tables only: identical at every n
    assert len(peaks_to_phi) == 1 and peaks_to_phi.pop() <= 16 * 256
    assert len(peaks_to_sa) == 1 and peaks_to_sa.pop() <= 16 * 256


def test_single_array_pipelines_constant_aux():
    for variant in ("bgone_t", "bgone_sa"):
        peaks = set()
        for n in (1000, 50000, 200000):
            acct = SpaceAccountant()
            factorize(_random(n, n + 7), variant, acct)
            peaks.add(acct.peak(f"{variant}_total"))
        assert len(peaks) == 1, variant
        assert peaks.pop() <= 16 * 256, variant


def test_bgtwo_allocates_exactly_one_extra_array():
    n = 30000
    acct = SpaceAccountant()
    factorize(_random(n, 3), "bgtwo", acct)
    peak = acct.peak("bgtwo_total")
    assert n + 1 <= peak <= n + 1 + 16 * 256


def test_kkp3_allocates_three_arrays_worth():
    n = 30000
    acct = SpaceAccountant()
    factorize(_random(n, 4), "kkp3_ref", acct)
    peak = acct.peak("kkp3_ref_total")
    assert 3 * n <= peak <= 3 * n + 16 * 256


def test_reference_scan_charges_its_buffers():
    n = 5000
    t = _random(n, 5)
    acct = SpaceAccountant()
    ws = Workspace(n, acct)
    build_suffix_array(Text(t), ws, SortTables(acct))
    with acct.phase("kkp_scan") as rec:
        sa_to_psv_nsv(ws, acct)
    # SA copy (freed) plus the two result arrays
    assert rec.peak_aux_words == (n + 2) + 2 * (n + 1)
