import random

import numpy as np
import pytest

from lzbg.conversions import (
    nsv_to_phi_with_visitor,
    phi_to_nsv_inplace,
    sa_to_psv_nsv,
)
from lzbg.oracles import lcp_bytes, naive_lpf_prevocc, naive_psv_nsv
from lzbg.phi_builder import build_phi_from_text
from lzbg.sa_induce import build_suffix_array
from lzbg.text_core import (
    SpaceAccountant,
    StateError,
    StructureError,
    Text,
    Workspace,
    WorkspaceState,
)

PAPER = b"abaabababaaaaabbabab"


def _phi_ws(t: bytes) -> Workspace:
    ws = Workspace(len(t))
    build_phi_from_text(Text(t), ws)
    return ws


def test_phi_to_nsv_examples():
    ws = _phi_ws(b"ab")
    phi_to_nsv_inplace(ws)
    assert list(ws.cells[1:]) == [0, 0]

    ws = _phi_ws(b"a")
    phi_to_nsv_inplace(ws)
    assert list(ws.cells[1:]) == [0]


def test_phi_to_nsv_differential(corpus):
    for t in corpus:
        ws = _phi_ws(t)
        phi_to_nsv_inplace(ws)
        assert ws.state is WorkspaceState.NSV
        _, nsv = naive_psv_nsv(t)
        assert list(ws.cells[1:]) == nsv[1:], t[:40]


def test_phi_to_nsv_rejects_malformed():
    ws = _phi_ws(b"banana")
    head = int(ws.cells[0])
    ws.cells[int(ws.cells[head])] = head
    with pytest.raises(StructureError):
        phi_to_nsv_inplace(ws)


def test_visitor_emits_psv_nsv_in_order(corpus):
    for t in corpus:
        ws = _phi_ws(t)
        phi_to_nsv_inplace(ws)
        psv, nsv = naive_psv_nsv(t)
        seen = []
        nsv_to_phi_with_visitor(ws, lambda i, p, s: seen.append((i, p, s)))
        assert seen == [(i, psv[i], nsv[i]) for i in range(1, len(t) + 1)]


def test_visitor_example_ab():
    ws = _phi_ws(b"ab")
    phi_to_nsv_inplace(ws)
    seen = []
    nsv_to_phi_with_visitor(ws, lambda i, p, s: seen.append((i, p, s)))
    assert seen == [(1, 0, 0), (2, 1, 0)]
    assert list(ws.cells) == [2, 0, 1]


def test_round_trip_restores_phi_bit_for_bit():
    rng = random.Random(21)
    for _ in range(250):
        n = rng.randint(1, 150)
        sigma = rng.choice([1, 2, 4, 26, 255])
        t = bytes(rng.randrange(sigma) for _ in range(n))
        ws = _phi_ws(t)
        image = ws.cells.copy()
        phi_to_nsv_inplace(ws)
        nsv_to_phi_with_visitor(ws)  # compiled path
        assert np.array_equal(ws.cells, image)
        phi_to_nsv_inplace(ws)
        nsv_to_phi_with_visitor(ws, lambda i, p, s: None)  # callback path
        assert np.array_equal(ws.cells, image)


def test_emitted_neighbors_bracket_suffix():
    rng = random.Random(22)
    for _ in range(40):
        n = rng.randint(1, 100)
        t = bytes(rng.randrange(3) + 97 for _ in range(n))
        ws = _phi_ws(t)
        phi_to_nsv_inplace(ws)
        rows = []
        nsv_to_phi_with_visitor(ws, lambda i, p, s: rows.append((i, p, s)))
        for i, p, s in rows:
            assert p < i and s < i
            if p:
                assert t[p - 1 :] < t[i - 1 :]
            if s:
                assert t[i - 1 :] < t[s - 1 :]


def test_lpf_reduction_holds_for_emitted_pairs():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 70)
        t = bytes(rng.randrange(3) + 97 for _ in range(n))
        lpf, _ = naive_lpf_prevocc(t)
        ws = _phi_ws(t)
        phi_to_nsv_inplace(ws)
        rows = []
        nsv_to_phi_with_visitor(ws, lambda i, p, s: rows.append((i, p, s)))
        for i, p, s in rows:
            best = 0
            if p:
                best = max(best, lcp_bytes(t[i - 1 :], t[p - 1 :]))
            if s:
                best = max(best, lcp_bytes(t[i - 1 :], t[s - 1 :]))
            assert best == lpf[i]


def test_visitor_requires_nsv_state():
    ws = _phi_ws(b"abc")
    with pytest.raises(StateError):
        nsv_to_phi_with_visitor(ws)


def test_sa_to_psv_nsv_examples():
    psv, nsv = _kkp(b"ab")
    assert list(psv[1:]) == [0, 1] and list(nsv[1:]) == [0, 0]
    psv, nsv = _kkp(b"abc")
    assert list(psv[1:]) == [0, 1, 2] and list(nsv[1:]) == [0, 0, 0]


def _kkp(t: bytes):
    ws = Workspace(len(t))
    build_suffix_array(Text(t), ws)
    return sa_to_psv_nsv(ws)


def test_sa_to_psv_nsv_differential(corpus):
    for t in corpus:
        psv, nsv = _kkp(t)
        want_psv, want_nsv = naive_psv_nsv(t)
        assert list(psv[1:]) == want_psv[1:], t[:40]
        assert list(nsv[1:]) == want_nsv[1:], t[:40]


def test_sa_to_psv_nsv_preserves_sa():
    t = PAPER
    ws = Workspace(len(t))
    build_suffix_array(Text(t), ws)
    image = ws.cells.copy()
    sa_to_psv_nsv(ws)
    assert np.array_equal(ws.cells, image)


def test_inplace_rewrites_allocate_nothing():
    t = PAPER * 50
    ws = Workspace(len(t))
    build_phi_from_text(Text(t), ws)
    acct = SpaceAccountant()
    with acct.phase("nsv") as rec_nsv:
        phi_to_nsv_inplace(ws)
    with acct.phase("back") as rec_back:
        nsv_to_phi_with_visitor(ws)
    assert rec_nsv.peak_aux_words == 0
    assert rec_back.peak_aux_words == 0
