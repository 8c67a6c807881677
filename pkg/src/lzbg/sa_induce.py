"""Suffix array construction inside the single workspace by induced
sorting, with the LMS recursion confined to the workspace and per-byte
tables only at the top level.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .text_core import (
    SIGMA,
    SpaceAccountant,
    StructureError,
    Text,
    Workspace,
    WorkspaceState,
)

_STACK_WORDS = 4 * 64  # recursion frames; depth is bounded by log2(n)


@dataclass(frozen=True)
class LmsIndex:
    """Count of LMS suffixes; the sorted positions live in the workspace."""

    k: int


class SortTables:
    """Top-level scratch: interval bounds, one cursor table, frame stack.

    Size is a fixed function of the alphabet, independent of n.
    """

    def __init__(self, acct: SpaceAccountant | None = None):
        acct = acct or SpaceAccountant()
        self.l_start = acct.alloc(SIGMA)
        self.l_end = acct.alloc(SIGMA)
        self.s_start = acct.alloc(SIGMA)
        self.s_end = acct.alloc(SIGMA)
        self.cur = acct.alloc(SIGMA)
        self.stack = acct.alloc(_STACK_WORDS)


def _check(status: int) -> None:
    if status != K.OK:
        raise StructureError(f"induced sort invariant violated (code {status})")


def sort_lms_suffixes(
    text: Text, ws: Workspace, tables: SortTables | None = None
) -> LmsIndex:
    """RAW -> LMS_SA: cells[1..k] hold the sorted LMS positions."""
    ws.require(WorkspaceState.RAW)
    t = tables or SortTables()
    k, status = K._lms_sort(
        text.as_array(), ws.cells, t.l_start, t.l_end, t.s_start, t.s_end,
        t.cur, t.stack,
    )
    _check(status)
    ws.transition(WorkspaceState.LMS_SA)
    return LmsIndex(k=int(k))


def finish_suffix_array(
    text: Text, ws: Workspace, lms: LmsIndex, tables: SortTables
) -> Workspace:
    """LMS_SA -> SA via the final two induction passes."""
    ws.require(WorkspaceState.LMS_SA)
    _check(
        K._sa_from_lms(
            text.as_array(), ws.cells, lms.k, tables.l_start, tables.l_end,
            tables.s_start, tables.s_end, tables.cur,
        )
    )
    # the LMS_SA -> SA hop goes through no other named state
    ws.state = WorkspaceState.SA
    return ws


def build_suffix_array(
    text: Text, ws: Workspace, tables: SortTables | None = None
) -> Workspace:
    """RAW -> SA in the single workspace."""
    ws.require(WorkspaceState.RAW)
    t = tables or SortTables()
    lms = sort_lms_suffixes(text, ws, t)
    return finish_suffix_array(text, ws, lms, t)


def suffix_array(text: bytes, acct: SpaceAccountant | None = None) -> np.ndarray:
    """Convenience wrapper returning cells[1..n] as an array."""
    tx = Text(text)
    ws = Workspace(tx.n, acct)
    build_suffix_array(tx, ws, SortTables(acct))
    return ws.cells[1:].copy()
