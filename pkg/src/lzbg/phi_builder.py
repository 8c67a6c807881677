"""Predecessor-chain (Phi) construction and the in-place SA <-> Phi
conversions.

The chain is built by linked-list induced sorting: the sorted LMS list is
rewritten into successor links, L-suffixes are appended to per-byte lists
in one increasing traversal, the lists are reversed, and a decreasing
traversal inserts S-suffixes while stitching everything into one global
predecessor chain ending in the 0 terminator.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as K
from .sa_induce import LmsIndex, SortTables, sort_lms_suffixes, finish_suffix_array
from .text_core import (
    SIGMA,
    SpaceAccountant,
    StructureError,
    Text,
    Workspace,
    WorkspaceState,
)


class ListRegisters:
    """The four per-byte list head/tail register tables."""

    def __init__(self, acct: SpaceAccountant | None = None):
        acct = acct or SpaceAccountant()
        self.lbkts = acct.alloc(SIGMA)
        self.lbkte = acct.alloc(SIGMA)
        self.sbkts = acct.alloc(SIGMA)
        self.sbkte = acct.alloc(SIGMA)


def _check(status: int, kind=StructureError) -> None:
    if status != K.OK:
        raise kind(f"phi construction invariant violated (code {status})")


def rearrange_lms_to_links(ws: Workspace, k: int) -> int:
    """LMS_SA list -> successor links at the LMS cells themselves.

    Returns the lexicographically smallest LMS position (0 when k == 0);
    the workspace stays in LMS_SA state, now in linked form.
    """
    ws.require(WorkspaceState.LMS_SA)
    head, status = K._phi_links(ws.cells, k)
    _check(status)
    return int(head)


def _phi_steps_2_to_4(
    text: Text, ws: Workspace, k: int, regs: ListRegisters
) -> Workspace:
    head = rearrange_lms_to_links(ws, k)
    tb = text.as_array()
    _check(K._phi_step3(tb, ws.cells, head, k, regs.lbkts, regs.lbkte,
                        regs.sbkts, regs.sbkte))
    _check(K._phi_step4(tb, ws.cells, regs.lbkts, regs.lbkte,
                        regs.sbkts, regs.sbkte))
    ws.transition(WorkspaceState.PHI)
    return ws


def build_phi_from_text(
    text: Text,
    ws: Workspace,
    tables: SortTables | None = None,
    regs: ListRegisters | None = None,
) -> Workspace:
    """RAW -> PHI without materializing the suffix array."""
    ws.require(WorkspaceState.RAW)
    tables = tables or SortTables()
    regs = regs or ListRegisters()
    lms = sort_lms_suffixes(text, ws, tables)
    if text.n == 0:
        ws.transition(WorkspaceState.PHI)
        ws.cells[0] = 0
        return ws
    return _phi_steps_2_to_4(text, ws, lms.k, regs)


def sa_to_phi_inplace(
    text: Text,
    ws: Workspace,
    tables: SortTables | None = None,
    regs: ListRegisters | None = None,
) -> Workspace:
    """SA -> PHI by compacting the LMS entries out of the suffix array and
    rerunning the linked-list steps; no second array."""
    ws.require(WorkspaceState.SA)
    tables = tables or SortTables()
    regs = regs or ListRegisters()
    if text.n == 0:
        ws.transition(WorkspaceState.PHI)
        ws.cells[0] = 0
        return ws
    k = int(
        K._sa_extract_lms(
            text.as_array(), ws.cells, tables.l_start, tables.l_end,
            tables.s_start, tables.s_end,
        )
    )
    ws.transition(WorkspaceState.LMS_SA)
    return _phi_steps_2_to_4(text, ws, k, regs)


def phi_to_sa_inplace(
    text: Text, ws: Workspace, tables: SortTables | None = None
) -> Workspace:
    """PHI -> SA: walk the chain to rebuild the sorted LMS list, then the
    final induction passes."""
    ws.require(WorkspaceState.PHI)
    tables = tables or SortTables()
    tb = text.as_array()
    n = text.n
    if n == 0:
        ws.transition(WorkspaceState.SA)
        ws.cells[0] = K.EMPTY
        return ws
    K._bounds0(tb, tables.l_start, tables.l_end, tables.s_start, tables.s_end)
    k, head, status = K._phi_chain_to_lms(tb, ws.cells, tables.s_start,
                                          tables.s_end)
    _check(status)
    _check(K._phi_lms_rearrange(ws.cells, head, k, n))
    ws.transition(WorkspaceState.SA)  # LMS list in place; induction follows
    _check(
        K._sa_from_lms(
            tb, ws.cells, k, tables.l_start, tables.l_end, tables.s_start,
            tables.s_end, tables.cur,
        )
    )
    return ws


def phi_array(text: bytes, acct: SpaceAccountant | None = None) -> np.ndarray:
    """Convenience wrapper returning the full cell image [0..n]."""
    tx = Text(text)
    ws = Workspace(tx.n, acct)
    build_phi_from_text(tx, ws, SortTables(acct), ListRegisters(acct))
    return ws.cells.copy()
