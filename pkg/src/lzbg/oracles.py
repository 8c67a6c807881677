"""Brute-force reference implementations used only for differential testing.

Everything here is computed straight from the definitions, with no induced
sorting, no in-place rewriting, and no code shared with the fast modules.
All positions are 1-based; 0 means "no such position".
"""

from __future__ import annotations

from dataclasses import dataclass


def _suffix(text: bytes, i: int) -> bytes:
    return text[i - 1 :]


def lcp_bytes(a: bytes, b: bytes) -> int:
    """Length of the longest common prefix of two byte strings.

    Block-compares via slicing so long matches stay cheap; still a direct
    character comparison in behaviour.
    """
    limit = min(len(a), len(b))
    if a[:limit] == b[:limit]:
        return limit
    length = 0
    block = 4096
    while length < limit:
        step = min(block, limit - length)
        if a[length : length + step] == b[length : length + step]:
            length += step
            continue
        for off in range(step):
            if a[length + off] != b[length + off]:
                return length + off
        return length + step
    return length


def naive_suffix_array(text: bytes) -> list[int]:
    """Positions 1..n sorted by suffix, via a plain comparison sort.

    The virtual sentinel at n+1 is smaller than every byte, so plain
    byte-string comparison (shorter prefix first) gives the right order.
    """
    n = len(text)
    return sorted(range(1, n + 1), key=lambda i: text[i - 1 :])


def naive_inverse(sa: list[int]) -> list[int]:
    isa = [0] * (len(sa) + 1)
    for rank, pos in enumerate(sa, start=1):
        isa[pos] = rank
    return isa


def naive_phi(text: bytes) -> list[int]:
    """Predecessor-chain cells [0..n]: cell 0 holds the largest suffix,
    cell j the lexicographic predecessor of suffix j, terminator 0."""
    n = len(text)
    cells = [0] * (n + 1)
    if n == 0:
        return cells
    sa = naive_suffix_array(text)
    cells[0] = sa[n - 1]
    cells[sa[0]] = 0
    for r in range(1, n):
        cells[sa[r]] = sa[r - 1]
    return cells


def psv_nsv_by_scan(text: bytes) -> tuple[list[int], list[int]]:
    """PSV/NSV by the most literal rank-set scans (quadratic)."""
    n = len(text)
    sa = naive_suffix_array(text)
    isa = naive_inverse(sa)
    psv = [0] * (n + 1)
    nsv = [0] * (n + 1)
    for i in range(1, n + 1):
        r = isa[i]
        for j in range(r - 1, 0, -1):
            if sa[j - 1] < i:
                psv[i] = sa[j - 1]
                break
        for j in range(r + 1, n + 1):
            if sa[j - 1] < i:
                nsv[i] = sa[j - 1]
                break
    return psv, nsv


def naive_psv_nsv(text: bytes) -> tuple[list[int], list[int]]:
    """PSV/NSV per the rank-set definitions.

    psv[i] / nsv[i] are the suffix-array neighbours of i restricted to
    positions smaller than i; entry 0 when the candidate set is empty.
    Evaluated by inserting positions in text order into a rank-sorted
    list and reading the neighbours at insertion time, which is the same
    definition without the quadratic rescans (psv_nsv_by_scan keeps the
    literal form for cross-checking). Index 0 of the lists is padding.
    """
    import bisect

    n = len(text)
    sa = naive_suffix_array(text)
    isa = naive_inverse(sa)
    psv = [0] * (n + 1)
    nsv = [0] * (n + 1)
    inserted: list[int] = []
    for i in range(1, n + 1):
        r = isa[i]
        pos = bisect.bisect_left(inserted, r)
        if pos > 0:
            psv[i] = sa[inserted[pos - 1] - 1]
        if pos < len(inserted):
            nsv[i] = sa[inserted[pos] - 1]
        inserted.insert(pos, r)
    return psv, nsv


def naive_lpf_prevocc(text: bytes) -> tuple[list[int], list[int]]:
    """Longest previous factor and one source achieving it, by double loop.

    prevocc[i] = -1 when lpf[i] = 0; ties broken toward the smallest j.
    Index 0 is padding.
    """
    n = len(text)
    lpf = [0] * (n + 1)
    prevocc = [-1] * (n + 1)
    for i in range(2, n + 1):
        best = 0
        best_j = -1
        for j in range(1, i):
            ell = lcp_bytes(_suffix(text, i), _suffix(text, j))
            if ell > best:
                best = ell
                best_j = j
        lpf[i] = best
        prevocc[i] = best_j
    return lpf, prevocc


def _lpf_at(text: bytes, i: int) -> tuple[int, int]:
    best = 0
    best_j = -1
    suf = _suffix(text, i)
    for j in range(1, i):
        ell = lcp_bytes(suf, _suffix(text, j))
        if ell > best:
            best = ell
            best_j = j
    return best, best_j


@dataclass(frozen=True)
class OracleTables:
    sa: list[int]
    isa: list[int]
    phi: list[int]
    psv: list[int]
    nsv: list[int]


def oracle_tables(text: bytes) -> OracleTables:
    sa = naive_suffix_array(text)
    psv, nsv = naive_psv_nsv(text)
    return OracleTables(
        sa=sa,
        isa=naive_inverse(sa),
        phi=naive_phi(text),
        psv=psv,
        nsv=nsv,
    )


def naive_factorize(text: bytes) -> list[tuple[int, int]]:
    """Greedy left-to-right parse: (0, byte) literals, else (length, source).

    The longest previous factor at each start is found by growing the
    prefix through repeated substring searches: a prefix of length l+1
    occurring before the start proves lpf > l. Plain text search, no
    indexing; lengths agree with the lpf double loop (cross-checked in
    tests), source positions are first occurrences of the growing prefix.
    """
    factors: list[tuple[int, int]] = []
    n = len(text)
    i = 1
    while i <= n:
        best = 0
        best_j = -1
        while i - 1 + best < n:
            pat = text[i - 1 : i + best]
            j = text.find(pat)
            if j >= i - 1:
                break
            ell = lcp_bytes(text[j:], text[i - 1 :])
            best = ell
            best_j = j + 1
        if best == 0:
            factors.append((0, text[i - 1]))
            i += 1
        else:
            factors.append((best, best_j))
            i += best
    return factors
