"""In-place rewrites between the predecessor chain and the NSV array, and
the reference SA -> PSV/NSV scan.

The chain walk visits suffix-array entries right to left, so each cell's
chain value can be replaced by that position's NSV as soon as the walk
passes it. The inverse rewrite inserts positions in text order into a
partial predecessor list held in the same cells, announcing each
position's (PSV, NSV) pair on the way.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from . import _kernels as K
from .text_core import (
    SpaceAccountant,
    StateError,
    StructureError,
    Text,
    Workspace,
    WorkspaceState,
)


def phi_to_nsv_inplace(ws: Workspace) -> Workspace:
    """PHI -> NSV by peak elimination along the chain; cell 0 is left
    unspecified."""
    ws.require(WorkspaceState.PHI)
    status = K._phi_to_nsv(ws.cells, ws.n)
    if status != K.OK:
        raise StructureError("malformed predecessor chain")
    ws.transition(WorkspaceState.NSV)
    return ws


def nsv_to_phi_with_visitor(
    ws: Workspace, visit: Callable[[int, int, int], None] | None = None
) -> Workspace:
    """NSV -> PHI, announcing (i, psv, nsv) for i = 1..n in order.

    With visit=None the rewrite runs compiled; the cell image is identical
    either way and restores the chain the NSV array came from.
    """
    ws.require(WorkspaceState.NSV)
    cells = ws.cells
    n = ws.n
    if visit is None:
        status = K._nsv_to_phi(cells, n)
        if status != K.OK:
            raise StateError("cell contents are not an NSV array")
    else:
        cells[0] = 0
        for i in range(1, n + 1):
            nsv = int(cells[i])
            if nsv < 0 or nsv >= i:
                raise StateError("cell contents are not an NSV array")
            psv = int(cells[nsv])
            visit(i, psv, nsv)
            cells[i] = psv
            cells[nsv] = i
    ws.transition(WorkspaceState.PHI)
    return ws


def sa_to_psv_nsv(
    ws_sa: Workspace, acct: SpaceAccountant | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Reference peak-elimination scan of SA into fresh PSV/NSV buffers.

    The scan embeds its stack in the scanned prefix, which rewrites the
    array, so the suffix array is copied first; the copy plus the two
    output buffers are charged to the accountant.
    """
    ws_sa.require(WorkspaceState.SA)
    acct = acct or SpaceAccountant()
    n = ws_sa.n
    sa_pad = acct.alloc(n + 2)
    sa_pad[1 : n + 1] = ws_sa.cells[1 : n + 1]
    psv = acct.alloc(n + 1)
    nsv = acct.alloc(n + 1)
    K._kkp_scan(sa_pad, psv, nsv, n)
    acct.free(sa_pad)
    return psv, nsv
