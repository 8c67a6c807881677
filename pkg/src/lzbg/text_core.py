"""Core domain types: text, the single integer workspace, factors, bucket
tables, and the allocation accounting used to certify in-place behaviour.

Conventions used throughout the package:
  - text positions are 1-based (position i reads byte ``data[i-1]``);
  - the virtual sentinel sits at position n+1 and is smaller than every byte;
  - the workspace has n+1 cells indexed 0..n; cell 0 is the chain head in
    PHI state and unused in SA state;
  - EMPTY is the all-ones word (-1 in two's complement), never a position.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

SIGMA = 256
EMPTY = -1

TYPE_L = 0
TYPE_S = 1


class WorkspaceState(enum.Enum):
    RAW = "raw"
    LMS_SA = "lms_sa"
    SA = "sa"
    PHI = "phi"
    NSV = "nsv"
    PARSED = "parsed"


class StateError(RuntimeError):
    """Operation invoked on a workspace in the wrong state."""


class StructureError(RuntimeError):
    """Workspace contents violate the invariants of the claimed state."""


@dataclass(frozen=True)
class Text:
    """Immutable byte sequence; the sentinel is virtual and never stored."""

    data: bytes

    @property
    def n(self) -> int:
        return len(self.data)

    def byte_at(self, i: int) -> int:
        """Byte value at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return self.data[i - 1]

    def as_array(self) -> np.ndarray:
        return np.frombuffer(self.data, dtype=np.uint8)


@dataclass(frozen=True)
class Factor:
    """One LZ phrase: a literal byte (length 0) or a (length, source) copy."""

    length: int
    payload: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("factor length must be non-negative")
        if self.length == 0 and not 0 <= self.payload <= 255:
            raise ValueError("literal payload must be a byte value")
        if self.length > 0 and self.payload < 1:
            raise ValueError("copy source must be a positive position")

    @property
    def is_literal(self) -> bool:
        return self.length == 0


class Workspace:
    """The single (n+1)-word integer buffer all in-place stages rewrite.

    Cells are 64-bit words; a state tag tracks which array the buffer
    currently encodes. State transitions are restricted to the pipeline
    edges; operations must call :meth:`require` / :meth:`transition`.
    """

    _EDGES = {
        (WorkspaceState.RAW, WorkspaceState.LMS_SA),
        (WorkspaceState.RAW, WorkspaceState.SA),
        (WorkspaceState.LMS_SA, WorkspaceState.PHI),
        (WorkspaceState.SA, WorkspaceState.LMS_SA),
        (WorkspaceState.SA, WorkspaceState.PHI),
        (WorkspaceState.PHI, WorkspaceState.NSV),
        (WorkspaceState.PHI, WorkspaceState.SA),
        (WorkspaceState.NSV, WorkspaceState.PHI),
        (WorkspaceState.PHI, WorkspaceState.PARSED),
    }

    def __init__(self, n: int, accountant: "SpaceAccountant | None" = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        self.cells = np.full(n + 1, EMPTY, dtype=np.int64)
        self.state = WorkspaceState.RAW
        if accountant is not None:
            accountant.note_workspace(n + 1)

    def require(self, *states: WorkspaceState) -> None:
        if self.state not in states:
            wanted = "/".join(s.value for s in states)
            raise StateError(f"workspace is {self.state.value}, expected {wanted}")

    def transition(self, new: WorkspaceState) -> None:
        if (self.state, new) not in self._EDGES:
            raise StateError(f"illegal transition {self.state.value} -> {new.value}")
        self.state = new

    def reset(self) -> None:
        self.cells.fill(EMPTY)
        self.state = WorkspaceState.RAW


@dataclass
class BucketTable:
    """Per-byte L/S interval bounds plus the four list head/tail registers."""

    l_start: np.ndarray
    l_end: np.ndarray
    s_start: np.ndarray
    s_end: np.ndarray
    lbkts: np.ndarray = field(default_factory=lambda: np.full(SIGMA, EMPTY, np.int64))
    lbkte: np.ndarray = field(default_factory=lambda: np.full(SIGMA, EMPTY, np.int64))
    sbkts: np.ndarray = field(default_factory=lambda: np.full(SIGMA, EMPTY, np.int64))
    sbkte: np.ndarray = field(default_factory=lambda: np.full(SIGMA, EMPTY, np.int64))

    WORDS = 8 * SIGMA


@dataclass
class PhaseRecord:
    name: str
    peak_aux_words: int = 0
    current_words: int = 0


class SpaceAccountant:
    """Observes auxiliary allocations per pipeline phase.

    Counts every heap-resident word a phase allocates beyond the input text
    and the single primary workspace. Extra workspaces (the two-array and
    reference pipelines) are counted. Factor output is reported separately:
    factors are emitted sequentially and are excluded from working space.
    """

    def __init__(self) -> None:
        self.phases: list[PhaseRecord] = []
        self._stack: list[PhaseRecord] = []
        self.workspace_words = 0
        self._workspaces_seen = 0
        self.output_words = 0

    def note_workspace(self, words: int) -> None:
        self._workspaces_seen += 1
        if self._workspaces_seen == 1:
            self.workspace_words = words
        else:
            # every workspace past the first is auxiliary
            self._add(words)

    def phase(self, name: str) -> "_PhaseScope":
        return _PhaseScope(self, name)

    def _add(self, words: int) -> None:
        for rec in self._stack:
            rec.current_words += words
            rec.peak_aux_words = max(rec.peak_aux_words, rec.current_words)

    def _sub(self, words: int) -> None:
        for rec in self._stack:
            rec.current_words -= words

    def alloc(self, count: int, dtype=np.int64, output: bool = False) -> np.ndarray:
        buf = np.zeros(count, dtype=dtype)
        words = _words_of(buf)
        if output:
            self.output_words += words
        else:
            self._add(words)
        return buf

    def free(self, buf: np.ndarray) -> None:
        self._sub(_words_of(buf))

    def peak(self, name: str) -> int:
        for rec in self.phases:
            if rec.name == name:
                return rec.peak_aux_words
        raise KeyError(name)

    def report(self) -> list[tuple[str, int]]:
        return [(rec.name, rec.peak_aux_words) for rec in self.phases]


def _words_of(buf: np.ndarray) -> int:
    return (buf.nbytes + 7) // 8


class _PhaseScope:
    def __init__(self, acct: SpaceAccountant, name: str):
        self.acct = acct
        self.rec = PhaseRecord(name)

    def __enter__(self) -> PhaseRecord:
        self.acct._stack.append(self.rec)
        return self.rec

    def __exit__(self, *exc) -> None:
        self.acct._stack.remove(self.rec)
        self.acct.phases.append(self.rec)


def classify_suffix_type(text: Text, i: int) -> str:
    """'S' or 'L' for suffix i, 1 <= i <= n+1; the sentinel suffix is S.

    Walks right until a strict byte comparison decides; equal-byte runs
    inherit the type from the run's end.
    """
    n = text.n
    if not 1 <= i <= n + 1:
        raise IndexError(f"position {i} out of range 1..{n + 1}")
    if i == n + 1:
        return "S"
    data = text.data
    j = i
    while j < n and data[j - 1] == data[j]:
        j += 1
    if j == n:
        return "L"  # sentinel at n+1 is smaller than any byte
    return "S" if data[j - 1] < data[j] else "L"


def suffix_types(text: Text) -> list[str]:
    """Right-to-left definitional scan over all positions 1..n+1."""
    n = text.n
    types = ["S"] * (n + 2)
    data = text.data
    if n >= 1:
        types[n] = "L"
    for i in range(n - 1, 0, -1):
        if data[i - 1] < data[i]:
            types[i] = "S"
        elif data[i - 1] > data[i]:
            types[i] = "L"
        else:
            types[i] = types[i + 1]
    return types


def lms_positions(text: Text) -> list[int]:
    types = suffix_types(text)
    return [
        i for i in range(2, text.n + 1) if types[i] == "S" and types[i - 1] == "L"
    ]


def compute_bucket_bounds(text: Text) -> BucketTable:
    """Interval bounds per byte from the L/S type counts; registers EMPTY."""
    counts_l = np.zeros(SIGMA, dtype=np.int64)
    counts_s = np.zeros(SIGMA, dtype=np.int64)
    types = suffix_types(text)
    data = text.data
    for i in range(1, text.n + 1):
        c = data[i - 1]
        if types[i] == "L":
            counts_l[c] += 1
        else:
            counts_s[c] += 1
    l_start = np.zeros(SIGMA, dtype=np.int64)
    l_end = np.zeros(SIGMA, dtype=np.int64)
    s_start = np.zeros(SIGMA, dtype=np.int64)
    s_end = np.zeros(SIGMA, dtype=np.int64)
    pos = 1
    for c in range(SIGMA):
        l_start[c] = pos
        pos += counts_l[c]
        l_end[c] = pos - 1
        s_start[c] = pos
        pos += counts_s[c]
        s_end[c] = pos - 1
    return BucketTable(l_start=l_start, l_end=l_end, s_start=s_start, s_end=s_end)
