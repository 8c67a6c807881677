"""Compiled kernels for the in-place pipeline.

Every kernel operates on preallocated buffers passed in from the Python
layer: the text as a uint8 array, the workspace as an int64 array of n+1
cells, and the constant-size per-byte tables. Kernels never allocate, so
the space accountant at the Python layer sees every auxiliary word.

Conventions:
  - text positions are 1-based; byte of position p is tb[p-1];
  - workspace cells A[0..n]; EMPTY = -1;
  - status returns: 0 ok, negative = structural error.

Recursion levels of the suffix sort live entirely inside the workspace.
At depth >= 1 the reduced string's characters are renamed to
``2*boundary + sbit`` where boundary is the head (L) or tail (S) of the
character's bucket in the level's SA region, so bucket targets and suffix
types are readable straight off the character. Per-bucket fill state is
kept inside the bucket's boundary cell with tagged negative encodings:

  cell v >= 0      plain entry
  v == -1          EMPTY
  v <= -2          special: s = -v-2, tag = s >> 45, payload = s & MASK45
    tag 0 NEG      virgin bucket, payload = capacity
    tag 1 CUR_S    S-side cursor, payload = next free slot (fills upward)
    tag 2 CUR_L    L-side cursor, payload = next free slot (fills downward)
    tag 3 ELEM_S   seed element (consumed and cleared by the L-pass)
    tag 4 ELEM_F   block-extent marker element

Blocks fill away from their boundary cell in reversed order and are
reversed into place when the scan pointer reaches the boundary (or when
the block completes), after which a (bucket, slot) register pair serves
the remaining inserts of the bucket the pointer is inside.
"""

import numpy as np
from numba import njit

EMPTY = -1

OK = 0
ERR_STATE = -1
ERR_CHAIN = -2
ERR_PROTO = -3
ERR_FORMAT = -4

_M45 = (1 << 45) - 1
_TAG_NEG = 0
_TAG_CUR_S = 1
_TAG_CUR_L = 2
_TAG_ELEM_S = 3
_TAG_ELEM_F = 4


@njit(cache=True, inline="always")
def _enc(tag, pay):
    return -(2 + (tag << 45) + pay)


@njit(cache=True, inline="always")
def _tag_of(v):
    return (-v - 2) >> 45


@njit(cache=True, inline="always")
def _pay_of(v):
    return (-v - 2) & _M45


# ---------------------------------------------------------------------------
# level 0: classical induced sorting over the byte text with sigma-sized
# cursor tables; the virtual sentinel is handled by seeding suffix n.
# ---------------------------------------------------------------------------


@njit(cache=True)
def _bounds0(tb, l_start, l_end, s_start, s_end):
    """Per-byte L/S interval bounds from a right-to-left type scan."""
    n = tb.shape[0]
    for c in range(256):
        l_start[c] = 0
        s_start[c] = 0
    # counts: l_start <- #L per char, s_start <- #S per char
    if n > 0:
        t_next = 0  # type of position i+1; 0 = L, 1 = S
        for i in range(n, 0, -1):
            if i == n:
                t = 0
            else:
                a = tb[i - 1]
                b = tb[i]
                if a < b:
                    t = 1
                elif a > b:
                    t = 0
                else:
                    t = t_next
            if t == 0:
                l_start[tb[i - 1]] += 1
            else:
                s_start[tb[i - 1]] += 1
            t_next = t
    pos = 1
    for c in range(256):
        nl = l_start[c]
        ns = s_start[c]
        l_start[c] = pos
        l_end[c] = pos + nl - 1
        s_start[c] = pos + nl
        s_end[c] = pos + nl + ns - 1
        pos += nl + ns


@njit(cache=True)
def _place_lms_seeds0(tb, A, s_cur):
    """Unsorted LMS positions into S-interval tails; returns k."""
    n = tb.shape[0]
    k = 0
    t_next = 0
    for i in range(n, 0, -1):
        if i == n:
            t = 0
        else:
            a = tb[i - 1]
            b = tb[i]
            if a < b:
                t = 1
            elif a > b:
                t = 0
            else:
                t = t_next
        if t == 0 and t_next == 1 and i < n:
            p = i + 1  # p is LMS
            c = tb[p - 1]
            A[s_cur[c]] = p
            s_cur[c] -= 1
            k += 1
        t_next = t
    return k


@njit(cache=True)
def _induce_l0(tb, A, l_cur, l_end, s_end):
    """Left-to-right pass putting L-suffixes at L-interval heads.

    Assumes the sentinel-induced suffix n is already seeded. Suffix types
    are decided from byte compares with ties resolved by the region of the
    scanned cell.
    """
    n = tb.shape[0]
    c_i = 0  # char whose bucket contains cell i
    for i in range(1, n + 1):
        while i > s_end[c_i]:
            c_i += 1
        v = A[i]
        if v < 2:  # EMPTY or suffix 1: nothing to induce
            continue
        a = tb[v - 2]
        b = tb[v - 1]
        if a > b or (a == b and i <= l_end[c_i]):
            A[l_cur[a]] = v - 1
            l_cur[a] += 1


@njit(cache=True)
def _induce_s0(tb, A, s_cur, l_end, l_start):
    """Right-to-left pass putting S-suffixes at S-interval tails."""
    n = tb.shape[0]
    c_i = 255
    for i in range(n, 0, -1):
        while i < l_start[c_i]:
            c_i -= 1
        v = A[i]
        if v < 2:
            continue
        a = tb[v - 2]
        b = tb[v - 1]
        if a < b or (a == b and i > l_end[c_i]):
            A[s_cur[a]] = v - 1
            s_cur[a] -= 1


@njit(cache=True)
def _extract_lms0(tb, A, l_end, s_end):
    """Compact the LMS entries of a fully induced array into A[1..k]."""
    n = tb.shape[0]
    k = 0
    c_i = 0
    for i in range(1, n + 1):
        while i > s_end[c_i]:
            c_i += 1
        v = A[i]
        if v >= 2 and i > l_end[c_i] and tb[v - 2] > tb[v - 1]:
            k += 1
            A[k] = v
    for i in range(k + 1, n + 1):
        A[i] = EMPTY
    return k


@njit(cache=True)
def _next_lms0(tb, p):
    """Next LMS position after p, or n+1 when the suffix runs to the end."""
    n = tb.shape[0]
    q = p
    while q < n and tb[q] >= tb[q - 1]:
        q += 1
    if q == n:
        return n + 1
    cand = q + 1
    while True:
        r = cand
        while r < n and tb[r] == tb[r - 1]:
            r += 1
        if r == n:
            return n + 1
        if tb[r] > tb[r - 1]:
            return cand
        cand = r + 1


@njit(cache=True)
def _name_lms0(tb, A, k):
    """Name sorted LMS substrings in A[1..k]; names go to A[k + p//2]."""
    name = 0
    prev_p = A[1]
    prev_end = _next_lms0(tb, prev_p)
    A[k + (prev_p >> 1)] = 0
    n = tb.shape[0]
    for r in range(2, k + 1):
        p = A[r]
        end = _next_lms0(tb, p)
        same = False
        if prev_end <= n and end <= n and end - p == prev_end - prev_p:
            same = True
            for d in range(end - p + 1):
                if tb[p - 1 + d] != tb[prev_p - 1 + d]:
                    same = False
                    break
        if not same:
            name += 1
        A[k + (p >> 1)] = name
        prev_p = p
        prev_end = end
    return name + 1


@njit(cache=True)
def _compact_reduced(A, k, n):
    """Move names from the sparse slots into the tail region [n-k+1..n].

    Scans slots descending so writes never land on an unread slot.
    """
    w = n
    for x in range(k + (n >> 1), k, -1):
        if A[x] != EMPTY:
            v = A[x]
            A[x] = EMPTY
            A[w] = v
            w -= 1


@njit(cache=True)
def _prep_child(A, soc, mc):
    """Rename the reduced string (raw ranks) to tagged bucket pointers.

    Uses A[1..mc] as counting cells; leaves them EMPTY afterwards.
    """
    for x in range(1, mc + 1):
        A[x] = 0
    for i in range(1, mc + 1):
        A[A[soc + i] + 1] += 1
    run = 0
    for x in range(1, mc + 1):
        run += A[x]
        A[x] = run  # cumulative: A[r+1] = bucket end of rank r
    prev_raw = -1
    prev_t = 0
    for i in range(mc, 0, -1):
        raw = A[soc + i]
        if i == mc:
            t = 0
        elif raw < prev_raw:
            t = 1
        elif raw > prev_raw:
            t = 0
        else:
            t = prev_t
        if t == 0:
            bnd = 1 if raw == 0 else A[raw] + 1
        else:
            bnd = A[raw + 1]
        A[soc + i] = 2 * bnd + t
        prev_raw = raw
        prev_t = t
    for x in range(1, mc + 1):
        A[x] = EMPTY


# ---------------------------------------------------------------------------
# levels >= 1: induced sorting with the fill state held inside the
# workspace (no per-character tables).
# ---------------------------------------------------------------------------


@njit(cache=True)
def _hi_seed_insert(A, p, u):
    """Seed insert of LMS position p into the bucket tailed at u (phase 1).

    Seeds fill upward from the bucket floor in arrival order; all seed
    cells carry ELEM tags so the L-pass can consume and clear them.
    """
    v = A[u]
    if v <= -2:
        tag = _tag_of(v)
        if tag == _TAG_NEG:
            cap = _pay_of(v)
            if cap == 1:
                A[u] = _enc(_TAG_ELEM_S, p)
            else:
                f = u - cap + 1
                A[f] = _enc(_TAG_ELEM_F, p)
                A[u] = _enc(_TAG_CUR_S, f + 1)
            return OK
        if tag == _TAG_CUR_S:
            slot = _pay_of(v)
            if slot == u:
                A[u] = _enc(_TAG_ELEM_S, p)
            else:
                A[slot] = _enc(_TAG_ELEM_S, p)
                A[u] = _enc(_TAG_CUR_S, slot + 1)
            return OK
    return ERR_PROTO


@njit(cache=True)
def _hi_induce_l(A, so, m):
    """Level >= 1 L-pass. Consumes (and clears) tagged seeds, leaves its
    own placements plain and settled."""
    act_h = -1
    act_slot = 0
    i = 1
    while i <= m:
        v = A[i]
        if v == EMPTY:
            i += 1
            continue
        j = -1
        if v >= 0:
            j = v
        else:
            tag = _tag_of(v)
            if tag == _TAG_ELEM_S or tag == _TAG_ELEM_F:
                j = _pay_of(v)
                A[i] = EMPTY  # seed consumed; the S-pass recreates it
            elif tag == _TAG_CUR_L:
                # arrival settle: elements live reversed at [slot+1..g]
                slot = _pay_of(v)
                g = slot + 1
                while True:
                    w = A[g]
                    if w <= -2 and _tag_of(w) == _TAG_ELEM_F:
                        break
                    g += 1
                A[g] = _pay_of(A[g])
                lo = slot + 1
                hi = g
                while lo < hi:
                    tmp = A[lo]
                    A[lo] = A[hi]
                    A[hi] = tmp
                    lo += 1
                    hi -= 1
                t = g - slot
                for idx in range(t):
                    A[i + idx] = A[slot + 1 + idx]
                for x in range(i + t, g + 1):
                    A[x] = EMPTY
                act_h = i
                act_slot = i + t
                continue  # reprocess cell i, now a plain element
            else:
                # stale S-side bookkeeping (cursor or virgin capacity)
                A[i] = EMPTY
                i += 1
                continue
        # induce the L-type predecessor of j
        if j >= 2:
            cq = A[so + j - 1]
            if (cq & 1) == 0:  # predecessor is L-type (type is in the tag)
                h = cq >> 1
                if h == act_h:
                    A[act_slot] = j - 1
                    act_slot += 1
                else:
                    w = A[h]
                    if w > -2:
                        return ERR_PROTO
                    tagw = _tag_of(w)
                    if tagw == _TAG_NEG:
                        cap = _pay_of(w)
                        if cap == 1:
                            A[h] = j - 1
                        else:
                            g = h + cap - 1
                            A[g] = _enc(_TAG_ELEM_F, j - 1)
                            A[h] = _enc(_TAG_CUR_L, g - 1)
                    elif tagw == _TAG_CUR_L:
                        slot = _pay_of(w)
                        if slot == h:
                            # completion: reverse the full block into place
                            A[h] = j - 1
                            g = h + 1
                            while True:
                                w2 = A[g]
                                if w2 <= -2 and _tag_of(w2) == _TAG_ELEM_F:
                                    break
                                g += 1
                            A[g] = _pay_of(A[g])
                            lo = h
                            hi = g
                            while lo < hi:
                                tmp = A[lo]
                                A[lo] = A[hi]
                                A[hi] = tmp
                                lo += 1
                                hi -= 1
                        else:
                            A[slot] = j - 1
                            A[h] = _enc(_TAG_CUR_L, slot - 1)
                    else:
                        return ERR_PROTO
        i += 1
    return OK


@njit(cache=True)
def _hi_induce_s(A, so, m):
    """Level >= 1 S-pass; array is fully plain when it returns."""
    act_u = -1
    act_slot = 0
    i = m
    while i >= 1:
        v = A[i]
        if v == EMPTY:
            return ERR_PROTO
        if v <= -2:
            tag = _tag_of(v)
            if tag != _TAG_CUR_S:
                return ERR_PROTO
            # arrival settle: elements live reversed at [f..slot-1]
            slot = _pay_of(v)
            f = slot - 1
            while True:
                w = A[f]
                if w <= -2 and _tag_of(w) == _TAG_ELEM_F:
                    break
                f -= 1
            A[f] = _pay_of(A[f])
            lo = f
            hi = slot - 1
            while lo < hi:
                tmp = A[lo]
                A[lo] = A[hi]
                A[hi] = tmp
                lo += 1
                hi -= 1
            t = slot - f
            for idx in range(t - 1, -1, -1):
                A[i - t + 1 + idx] = A[f + idx]
            for x in range(f, i - t + 1):
                A[x] = EMPTY
            act_u = i
            act_slot = i - t
            continue  # reprocess cell i
        j = v
        if j >= 2:
            cq = A[so + j - 1]
            if (cq & 1) == 1:  # predecessor is S-type
                u = cq >> 1
                if u == act_u:
                    A[act_slot] = j - 1
                    act_slot -= 1
                else:
                    w = A[u]
                    if w > -2:
                        return ERR_PROTO
                    tagw = _tag_of(w)
                    if tagw == _TAG_NEG:
                        cap = _pay_of(w)
                        if cap == 1:
                            A[u] = j - 1
                        else:
                            f = u - cap + 1
                            A[f] = _enc(_TAG_ELEM_F, j - 1)
                            A[u] = _enc(_TAG_CUR_S, f + 1)
                    elif tagw == _TAG_CUR_S:
                        slot = _pay_of(w)
                        if slot == u:
                            # completion: reverse full block into place
                            A[u] = j - 1
                            f = u - 1
                            while True:
                                w2 = A[f]
                                if w2 <= -2 and _tag_of(w2) == _TAG_ELEM_F:
                                    break
                                f -= 1
                            A[f] = _pay_of(A[f])
                            lo = f
                            hi = u
                            while lo < hi:
                                tmp = A[lo]
                                A[lo] = A[hi]
                                A[hi] = tmp
                                lo += 1
                                hi -= 1
                        else:
                            A[slot] = j - 1
                            A[u] = _enc(_TAG_CUR_S, slot + 1)
                    else:
                        return ERR_PROTO
        i -= 1
    return OK


@njit(cache=True)
def _hi_capacity_l(A, so, m):
    for p in range(1, m + 1):
        c = A[so + p]
        if (c & 1) == 0:
            h = c >> 1
            w = A[h]
            if w == EMPTY:
                A[h] = _enc(_TAG_NEG, 1)
            else:
                A[h] = _enc(_TAG_NEG, _pay_of(w) + 1)


@njit(cache=True)
def _hi_capacity_s(A, so, m):
    for p in range(1, m + 1):
        c = A[so + p]
        if (c & 1) == 1:
            u = c >> 1
            w = A[u]
            if w == EMPTY:
                A[u] = _enc(_TAG_NEG, 1)
            else:
                A[u] = _enc(_TAG_NEG, _pay_of(w) + 1)


@njit(cache=True)
def _hi_phase1(A, so, m):
    """Sort by LMS substrings: seeds, sentinel seed, L-pass, S-pass."""
    _hi_capacity_l(A, so, m)
    _hi_capacity_s(A, so, m)
    for p in range(m, 1, -1):
        if (A[so + p] & 1) == 1 and (A[so + p - 1] & 1) == 0:
            st = _hi_seed_insert(A, p, A[so + p] >> 1)
            if st != OK:
                return st
    # sentinel-induced seed: the last suffix, always L-type
    cm = A[so + m]
    if (cm & 1) != 0:
        return ERR_PROTO
    h = cm >> 1
    w = A[h]
    if w <= -2 and _tag_of(w) == _TAG_NEG:
        cap = _pay_of(w)
        if cap == 1:
            A[h] = m
        else:
            g = h + cap - 1
            A[g] = _enc(_TAG_ELEM_F, m)
            A[h] = _enc(_TAG_CUR_L, g - 1)
    else:
        return ERR_PROTO
    st = _hi_induce_l(A, so, m)
    if st != OK:
        return st
    _hi_capacity_s(A, so, m)
    return _hi_induce_s(A, so, m)


@njit(cache=True)
def _hi_extract(A, so, m):
    k = 0
    for i in range(1, m + 1):
        j = A[i]
        if j >= 2 and (A[so + j] & 1) == 1 and (A[so + j - 1] & 1) == 0:
            k += 1
            A[k] = j
    for i in range(k + 1, m + 1):
        A[i] = EMPTY
    return k


@njit(cache=True)
def _hi_next_lms(A, so, m, p):
    q = p + 1
    while q <= m:
        if (A[so + q] & 1) == 1 and (A[so + q - 1] & 1) == 0:
            return q
        q += 1
    return m + 1


@njit(cache=True)
def _hi_name(A, so, m, k):
    name = 0
    prev_p = A[1]
    prev_end = _hi_next_lms(A, so, m, prev_p)
    A[k + (prev_p >> 1)] = 0
    for r in range(2, k + 1):
        p = A[r]
        end = _hi_next_lms(A, so, m, p)
        same = False
        if prev_end <= m and end <= m and end - p == prev_end - prev_p:
            same = True
            for d in range(end - p + 1):
                if A[so + p + d] != A[so + prev_p + d]:
                    same = False
                    break
        if not same:
            name += 1
        A[k + (p >> 1)] = name
        prev_p = p
        prev_end = end
    return name + 1


@njit(cache=True)
def _hi_phase2(A, so, m, k):
    """Final induction from the sorted LMS list in A[1..k]."""
    # place seeds at their final tail slots (sorted arrival => bucket runs)
    act_u = -1
    act_slot = 0
    for r in range(k, 0, -1):
        p = A[r]
        A[r] = EMPTY
        u = A[so + p] >> 1
        if u != act_u:
            act_u = u
            act_slot = u
        A[act_slot] = _enc(_TAG_ELEM_S, p)
        act_slot -= 1
    _hi_capacity_l(A, so, m)
    cm = A[so + m]
    if (cm & 1) != 0:
        return ERR_PROTO
    h = cm >> 1
    w = A[h]
    if w <= -2 and _tag_of(w) == _TAG_NEG:
        cap = _pay_of(w)
        if cap == 1:
            A[h] = m
        else:
            g = h + cap - 1
            A[g] = _enc(_TAG_ELEM_F, m)
            A[h] = _enc(_TAG_CUR_L, g - 1)
    else:
        return ERR_PROTO
    st = _hi_induce_l(A, so, m)
    if st != OK:
        return st
    _hi_capacity_s(A, so, m)
    return _hi_induce_s(A, so, m)


@njit(cache=True)
def _hi_rebuild_map(A, so, m, k):
    """Translate the child suffix array A[1..k] back to positions of this
    level's string, then clear the scratch区 above k."""
    w = m
    for p in range(m, 1, -1):
        if (A[so + p] & 1) == 1 and (A[so + p - 1] & 1) == 0:
            A[w] = p  # the dead child string region holds the position list
            w -= 1
    for i in range(1, k + 1):
        A[i] = A[(m - k) + A[i]]
    for x in range(k + 1, m + 1):
        A[x] = EMPTY


@njit(cache=True)
def _hi_sort(A, m0, so0, stk):
    """Iterative driver for all recursion levels >= 1.

    stk rows: (m, so, k, stage). Depth is bounded by log2(n).
    """
    sp = 0
    stk[0] = m0
    stk[1] = so0
    stk[2] = 0
    stk[3] = 0  # 0 = fresh, 1 = waiting on child
    sp = 1
    while sp > 0:
        base = 4 * (sp - 1)
        m = stk[base]
        so = stk[base + 1]
        if stk[base + 3] == 0:
            if m == 1:
                A[1] = 1
                sp -= 1
                continue
            st = _hi_phase1(A, so, m)
            if st != OK:
                return st
            k = _hi_extract(A, so, m)
            if k == 0:
                st = _hi_phase2(A, so, m, 0)
                if st != OK:
                    return st
                sp -= 1
                continue
            kn = _hi_name(A, so, m, k)
            if kn == k:
                for x in range(k + 1, m + 1):
                    A[x] = EMPTY
                st = _hi_phase2(A, so, m, k)
                if st != OK:
                    return st
                sp -= 1
                continue
            _compact_reduced(A, k, m)
            _prep_child(A, m - k, k)
            for x in range(k + 1, m - k):
                A[x] = EMPTY
            stk[base + 2] = k
            stk[base + 3] = 1
            nb = 4 * sp
            stk[nb] = k
            stk[nb + 1] = m - k
            stk[nb + 2] = 0
            stk[nb + 3] = 0
            sp += 1
        else:
            k = stk[base + 2]
            _hi_rebuild_map(A, so, m, k)
            st = _hi_phase2(A, so, m, k)
            if st != OK:
                return st
            sp -= 1
    return OK


# ---------------------------------------------------------------------------
# public-facing composites for the suffix array and LMS stages
# ---------------------------------------------------------------------------


@njit(cache=True)
def _lms_sort(tb, A, l_start, l_end, s_start, s_end, cur, stk):
    """Sorted LMS positions into A[1..k], rest EMPTY; returns (k, status)."""
    n = tb.shape[0]
    if n == 0:
        return 0, OK
    _bounds0(tb, l_start, l_end, s_start, s_end)
    for c in range(256):
        cur[c] = s_end[c]
    k = _place_lms_seeds0(tb, A, cur)
    if k == 0:
        for i in range(1, n + 1):
            A[i] = EMPTY
        return 0, OK
    # sentinel seed + substring-order induction
    for c in range(256):
        cur[c] = l_start[c]
    c0 = tb[n - 1]
    A[cur[c0]] = n
    cur[c0] += 1
    _induce_l0(tb, A, cur, l_end, s_end)
    for c in range(256):
        cur[c] = s_end[c]
    _induce_s0(tb, A, cur, l_end, l_start)
    k = _extract_lms0(tb, A, l_end, s_end)
    kn = _name_lms0(tb, A, k)
    if kn < k:
        _compact_reduced(A, k, n)
        _prep_child(A, n - k, k)
        for x in range(k + 1, n - k):
            A[x] = EMPTY
        st = _hi_sort(A, k, n - k, stk)
        if st != OK:
            return k, st
        # map child SA back to text positions
        w = n
        t_next = 0
        for i in range(n, 0, -1):
            if i == n:
                t = 0
            else:
                a = tb[i - 1]
                b = tb[i]
                if a < b:
                    t = 1
                elif a > b:
                    t = 0
                else:
                    t = t_next
            if t == 0 and t_next == 1 and i < n:
                A[w] = i + 1
                w -= 1
            t_next = t
        for i in range(1, k + 1):
            A[i] = A[n - k + A[i]]
        for x in range(k + 1, n + 1):
            A[x] = EMPTY
    else:
        for x in range(k + 1, n + 1):
            A[x] = EMPTY
    return k, OK


@njit(cache=True)
def _sa_from_lms(tb, A, k, l_start, l_end, s_start, s_end, cur):
    """Final induction: sorted LMS seeds -> full suffix array."""
    n = tb.shape[0]
    if n == 0:
        return OK
    for c in range(256):
        cur[c] = s_end[c]
    for r in range(k, 0, -1):
        p = A[r]
        A[r] = EMPTY
        c = tb[p - 1]
        A[cur[c]] = p
        cur[c] -= 1
    for c in range(256):
        cur[c] = l_start[c]
    c0 = tb[n - 1]
    A[cur[c0]] = n
    cur[c0] += 1
    _induce_l0(tb, A, cur, l_end, s_end)
    for c in range(256):
        cur[c] = s_end[c]
    _induce_s0(tb, A, cur, l_end, l_start)
    return OK


@njit(cache=True)
def _sa_build(tb, A, l_start, l_end, s_start, s_end, cur, stk):
    k, st = _lms_sort(tb, A, l_start, l_end, s_start, s_end, cur, stk)
    if st != OK:
        return st
    return _sa_from_lms(tb, A, k, l_start, l_end, s_start, s_end, cur)


@njit(cache=True)
def _sa_extract_lms(tb, A, l_start, l_end, s_start, s_end):
    """SA state -> compacted sorted LMS in A[1..k]; returns k."""
    n = tb.shape[0]
    if n == 0:
        return 0
    _bounds0(tb, l_start, l_end, s_start, s_end)
    return _extract_lms0(tb, A, l_end, s_end)


# ---------------------------------------------------------------------------
# direct Phi construction: steps 2-4 of the linked-list induced sorting
# ---------------------------------------------------------------------------


@njit(cache=True)
def _phi_links(A, k):
    """Sorted LMS list A[1..k] -> successor links A[p] = next LMS; returns
    (head, status) with head = lexicographically smallest LMS."""
    if k == 0:
        return 0, OK
    head = A[1]
    if k == 1:
        A[1] = EMPTY
        return head, OK
    for i in range(k, 0, -1):
        v = A[i]
        A[i] = EMPTY
        A[2 * i] = v
    for i in range(1, k):
        j1 = A[2 * i]
        j2 = A[2 * i + 2]
        if A[j1] == EMPTY:
            A[j1] = j2
        else:
            if A[j1 - 1] != EMPTY:
                return 0, ERR_PROTO
            A[j1 - 1] = j2
    for i in range(1, k + 1):
        A[2 * i] = EMPTY
    cur = head
    cnt = 1
    while cnt < k:
        v = A[cur]
        if v == EMPTY:
            v = A[cur - 1]
            if v == EMPTY:
                return 0, ERR_PROTO
            A[cur] = v
            A[cur - 1] = EMPTY
        cur = v
        cnt += 1
    return head, OK


@njit(cache=True)
def _phi_step3(tb, A, head, k, lbs, lbe, sbs, sbe):
    """Distribute LMS list into per-char S-lists, then grow all L-lists by
    one increasing traversal (char by char, L-list then S-list)."""
    n = tb.shape[0]
    for c in range(256):
        lbs[c] = EMPTY
        lbe[c] = EMPTY
        sbs[c] = EMPTY
        sbe[c] = EMPTY
    cur = head
    for cnt in range(k):
        nxt = A[cur]
        c = tb[cur - 1]
        if sbs[c] == EMPTY:
            sbs[c] = cur
            sbe[c] = cur
        else:
            A[sbe[c]] = cur
            sbe[c] = cur
        cur = nxt
    c0 = tb[n - 1]
    lbs[c0] = n
    lbe[c0] = n
    for c in range(256):
        p = lbs[c]
        if p != EMPTY:
            while True:
                if p >= 2:
                    cq = tb[p - 2]
                    if cq >= c:  # tie means same type as p, which is L here
                        if lbs[cq] == EMPTY:
                            lbs[cq] = p - 1
                            lbe[cq] = p - 1
                        else:
                            A[lbe[cq]] = p - 1
                            lbe[cq] = p - 1
                if p == lbe[c]:
                    break
                p = A[p]
        p = sbs[c]
        if p != EMPTY:
            while True:
                if p >= 2:
                    cq = tb[p - 2]
                    if cq > c:  # tie would be S like p: skipped in this pass
                        if lbs[cq] == EMPTY:
                            lbs[cq] = p - 1
                            lbe[cq] = p - 1
                        else:
                            A[lbe[cq]] = p - 1
                            lbe[cq] = p - 1
                if p == sbe[c]:
                    break
                p = A[p]
    return OK


@njit(cache=True)
def _phi_step4(tb, A, lbs, lbe, sbs, sbe):
    """Reverse L-lists, then one decreasing traversal inserting S-suffixes
    and stitching list boundaries into the final predecessor chain."""
    n = tb.shape[0]
    for c in range(256):
        if lbs[c] != EMPTY:
            prev = EMPTY
            cur = lbs[c]
            last = lbe[c]
            while True:
                nxt = A[cur]
                A[cur] = prev
                prev = cur
                if cur == last:
                    break
                cur = nxt
    for c in range(256):
        sbs[c] = EMPTY
        sbe[c] = EMPTY
    total = 0
    prev_node = -1  # -1: nothing visited yet; cell 0 is the chain head
    for c in range(255, -1, -1):
        # S-part: built while being traversed
        if sbe[c] != EMPTY:
            p = sbe[c]
            if prev_node < 0:
                A[0] = p
            else:
                A[prev_node] = p
            while True:
                if p >= 2:
                    cq = tb[p - 2]
                    if cq <= c:  # tie inherits S from p
                        if sbe[cq] == EMPTY:
                            sbe[cq] = p - 1
                            sbs[cq] = p - 1
                        else:
                            A[sbs[cq]] = p - 1
                            sbs[cq] = p - 1
                total += 1
                if p == sbs[c]:
                    break
                p = A[p]
            prev_node = p
        if lbe[c] != EMPTY:
            p = lbe[c]
            if prev_node < 0:
                A[0] = p
            else:
                A[prev_node] = p
            while True:
                if p >= 2:
                    cq = tb[p - 2]
                    if cq < c:  # tie inherits L from p: not an S-suffix
                        if sbe[cq] == EMPTY:
                            sbe[cq] = p - 1
                            sbs[cq] = p - 1
                        else:
                            A[sbs[cq]] = p - 1
                            sbs[cq] = p - 1
                total += 1
                if p == lbs[c]:
                    break
                p = A[p]
            prev_node = p
    if n > 0:
        if total != n or prev_node < 0:
            return ERR_PROTO
        A[prev_node] = 0
    return OK


# ---------------------------------------------------------------------------
# Phi -> SA (appendix construction): chain walk, LMS relocation, reinduce
# ---------------------------------------------------------------------------


@njit(cache=True)
def _phi_chain_to_lms(tb, A, s_start, s_end):
    """Walk the predecessor chain from A[0] in decreasing rank order,
    blanking cells and linking LMS positions into a decreasing list.

    Returns (k, head, status); head is the lexicographically largest LMS.
    """
    n = tb.shape[0]
    cur = A[0]
    A[0] = EMPTY
    prev_lms = 0
    head = 0
    k = 0
    r = n
    while cur != 0:
        if cur < 1 or cur > n or r < 1:
            return 0, 0, ERR_CHAIN
        nxt = A[cur]
        if nxt == EMPTY:
            return 0, 0, ERR_CHAIN
        A[cur] = EMPTY
        c = tb[cur - 1]
        if cur >= 2 and r >= s_start[c] and r <= s_end[c] and tb[cur - 2] > c:
            k += 1
            if prev_lms == 0:
                head = cur
            else:
                A[prev_lms] = cur
            prev_lms = cur
        cur = nxt
        r -= 1
    if r != 0:
        return 0, 0, ERR_CHAIN
    return k, head, OK


@njit(cache=True)
def _phi_lms_rearrange(A, head, k, n):
    """Decreasing LMS list -> sorted LMS at A[1..k] via the even-slot
    relocation with odd-cell borrowing."""
    if k == 0:
        return OK
    # place i-th largest at cell 2(k-i+1), borrowing 2i-1 when occupied
    cur = head
    for i in range(1, k + 1):
        tgt = 2 * (k - i + 1)
        nxt = A[cur]
        if A[tgt] == EMPTY:
            A[tgt] = cur
        else:
            if A[tgt - 1] != EMPTY:
                return ERR_PROTO
            A[tgt - 1] = cur
        cur = nxt
    # re-walk the preserved list blanking link cells (the last holds none)
    cur = head
    for i in range(1, k):
        nxt = A[cur]
        A[cur] = EMPTY
        cur = nxt
    # recover borrowed values, then compact the evens into A[1..k]
    for i in range(1, k + 1):
        if A[2 * i] == EMPTY:
            A[2 * i] = A[2 * i - 1]
            A[2 * i - 1] = EMPTY
    for i in range(1, k + 1):
        A[i] = A[2 * i]
    for x in range(k + 1, min(2 * k, n) + 1):
        A[x] = EMPTY
    return OK


# ---------------------------------------------------------------------------
# conversions: Phi <-> NSV, SA -> PSV/NSV (reference), SA -> Phi scan
# ---------------------------------------------------------------------------


@njit(cache=True)
def _phi_to_nsv(A, n):
    """Peak-elimination rewrite of the predecessor chain into NSV values."""
    cur = A[0]
    prev = 0
    cnt = 0
    while cur != 0:
        if cur < 1 or cur > n:
            return ERR_CHAIN
        cnt += 1
        if cnt > n:
            return ERR_CHAIN
        while cur < prev:
            prev = A[prev]
        nxt = A[cur]
        A[cur] = prev
        prev = cur
        cur = nxt
        if cur < 0:
            return ERR_CHAIN
    if cnt != n:
        return ERR_CHAIN
    return OK


@njit(cache=True)
def _nsv_to_phi(A, n):
    """Inverse rewrite: insert positions in text order into the partial
    lexicographic predecessor list held in the same cells."""
    A[0] = 0
    for i in range(1, n + 1):
        nsv = A[i]
        if nsv < 0 or nsv >= i:
            return ERR_STATE
        psv = A[nsv]
        A[i] = psv
        A[nsv] = i
    return OK


@njit(cache=True)
def _lcp(tb, i, j):
    """Direct suffix comparison; 0 when j is the zero sentinel."""
    if j == 0:
        return 0
    n = tb.shape[0]
    ell = 0
    while i + ell <= n and j + ell <= n and tb[i + ell - 1] == tb[j + ell - 1]:
        ell += 1
    return ell


@njit(cache=True)
def _first_occurrence(tb, table):
    """table[c] = first 1-based position of byte c, or 0."""
    for c in range(256):
        table[c] = 0
    for i in range(tb.shape[0], 0, -1):
        table[tb[i - 1]] = i


@njit(cache=True)
def _nsv_to_phi_parse_chunk(tb, A, i0, fstart0, lens, pays, cap, first_occ):
    """Resumable fused rewrite + greedy parse.

    Processes positions from i0 while emitting at most cap factors; the
    caller loops until the returned next position exceeds n. Single-symbol
    copies are normalized to the byte's first occurrence, which keeps the
    emitted source deterministic across pipelines.
    Returns (next_i, next_fstart, count, status).
    """
    n = tb.shape[0]
    i = i0
    fstart = fstart0
    cnt = 0
    while i <= n and cnt < cap:
        nsv = A[i]
        if nsv < 0 or nsv >= i:
            return i, fstart, cnt, ERR_STATE
        psv = A[nsv]
        A[i] = psv
        A[nsv] = i
        if i == fstart:
            lnsv = _lcp(tb, i, nsv)
            lpsv = _lcp(tb, i, psv)
            if lnsv > 0 and lnsv >= lpsv:
                lens[cnt] = lnsv
                pays[cnt] = first_occ[tb[i - 1]] if lnsv == 1 else nsv
                fstart += lnsv
            elif lpsv > 0:
                lens[cnt] = lpsv
                pays[cnt] = first_occ[tb[i - 1]] if lpsv == 1 else psv
                fstart += lpsv
            else:
                lens[cnt] = 0
                pays[cnt] = tb[i - 1]
                fstart += 1
            cnt += 1
        i += 1
    return i, fstart, cnt, OK


@njit(cache=True)
def _kkp_scan(sa_pad, psv, nsv, n):
    """Peak elimination over SA with the stack embedded in the scanned
    prefix; boundary entries sa_pad[0] = sa_pad[n+1] = 0."""
    sa_pad[0] = 0
    sa_pad[n + 1] = 0
    top = 0
    for i in range(1, n + 2):
        v = sa_pad[i]
        while sa_pad[top] > v:
            nsv[sa_pad[top]] = v
            psv[sa_pad[top]] = sa_pad[top - 1]
            top -= 1
        top += 1
        sa_pad[top] = v


@njit(cache=True)
def _parse_arrays_chunk(tb, psv, nsv, i0, lens, pays, cap, first_occ):
    """Greedy parse reading PSV/NSV arrays directly (reference path)."""
    n = tb.shape[0]
    i = i0
    cnt = 0
    while i <= n and cnt < cap:
        lnsv = _lcp(tb, i, nsv[i])
        lpsv = _lcp(tb, i, psv[i])
        if lnsv > 0 and lnsv >= lpsv:
            lens[cnt] = lnsv
            pays[cnt] = first_occ[tb[i - 1]] if lnsv == 1 else nsv[i]
            i += lnsv
        elif lpsv > 0:
            lens[cnt] = lpsv
            pays[cnt] = first_occ[tb[i - 1]] if lpsv == 1 else psv[i]
            i += lpsv
        else:
            lens[cnt] = 0
            pays[cnt] = tb[i - 1]
            i += 1
        cnt += 1
    return i, cnt


@njit(cache=True)
def _phi_from_sa_scan(Asa, Aphi, n):
    """Two-array derivation: Aphi[Asa[r]] = Asa[r-1], head and terminator."""
    if n == 0:
        return
    Aphi[0] = Asa[n]
    Aphi[Asa[1]] = 0
    for r in range(2, n + 1):
        Aphi[Asa[r]] = Asa[r - 1]


# ---------------------------------------------------------------------------
# codec body kernels (LEB128 factor records and overlap-safe expansion)
# ---------------------------------------------------------------------------


@njit(cache=True)
def _encode_body(lens, pays, out):
    """Factor records as unsigned LEB128; returns bytes written."""
    w = 0
    for idx in range(lens.shape[0]):
        v = lens[idx]
        while True:
            b = v & 0x7F
            v >>= 7
            if v != 0:
                out[w] = b | 0x80
            else:
                out[w] = b
            w += 1
            if v == 0:
                break
        p = pays[idx]
        if lens[idx] == 0:
            out[w] = p
            w += 1
        else:
            while True:
                b = p & 0x7F
                p >>= 7
                if p != 0:
                    out[w] = b | 0x80
                else:
                    out[w] = b
                w += 1
                if p == 0:
                    break
    return w


@njit(cache=True)
def _decode_body(data, off, count, lens, pays):
    """Parse count factor records starting at off; returns (status, end)."""
    size = data.shape[0]
    r = off
    for idx in range(count):
        v = 0
        shift = 0
        while True:
            if r >= size:
                return ERR_FORMAT, r
            b = data[r]
            r += 1
            v |= (b & 0x7F) << shift
            shift += 7
            if b < 0x80:
                break
            if shift > 63:
                return ERR_FORMAT, r
        lens[idx] = v
        if v == 0:
            if r >= size:
                return ERR_FORMAT, r
            pays[idx] = data[r]
            r += 1
        else:
            p = 0
            shift = 0
            while True:
                if r >= size:
                    return ERR_FORMAT, r
                b = data[r]
                r += 1
                p |= (b & 0x7F) << shift
                shift += 7
                if b < 0x80:
                    break
                if shift > 63:
                    return ERR_FORMAT, r
            pays[idx] = p
    return OK, r


@njit(cache=True)
def _expand(lens, pays, out):
    """Decode factors into out, copying forward so overlaps self-extend.

    Returns (status, produced).
    """
    n = out.shape[0]
    w = 0
    for idx in range(lens.shape[0]):
        ell = lens[idx]
        p = pays[idx]
        if ell == 0:
            if w >= n:
                return ERR_FORMAT, w
            out[w] = p
            w += 1
        else:
            if p < 1 or p > w:
                return ERR_FORMAT, w
            if w + ell > n:
                return ERR_FORMAT, w
            src = p - 1
            for d in range(ell):
                out[w + d] = out[src + d]
            w += ell
    return OK, w
