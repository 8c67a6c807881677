"""Deterministic synthetic inputs for tests and benchmarks.

Real benchmark corpora are referenced by manifest and never bundled;
`corpus_urls` lists where the standard files live. The generators below
produce the three input classes the harness needs: uniform random bytes,
highly repetitive text, and natural-language-like text (Zipf-distributed
words over a fixed vocabulary).
"""

from __future__ import annotations

import numpy as np

CORPUS_URLS = (
    "http://pizzachili.dcc.uchile.cl/texts.html",
    "http://pizzachili.dcc.uchile.cl/repcorpus.html",
)


def random_bytes(n: int, sigma: int = 255, seed: int = 0) -> bytes:
    rng = np.random.default_rng(seed)
    return rng.integers(0, sigma, size=n, dtype=np.uint8).tobytes()


def repetitive_text(n: int, seed: int = 0, period: int = 512) -> bytes:
    """Copy-paste-with-mutations text, heavily compressible."""
    rng = np.random.default_rng(seed)
    base = rng.integers(97, 123, size=period, dtype=np.uint8)
    reps = n // period + 2
    arr = np.tile(base, reps)[: n + 1].copy()
    n_mut = max(1, n // 1000)
    idx = rng.integers(0, max(1, n), size=n_mut)
    arr[idx] = rng.integers(97, 123, size=n_mut, dtype=np.uint8)
    return arr[:n].tobytes()


_WORD_CHARS = np.frombuffer(b"abcdefghijklmnopqrstuvwxyz", dtype=np.uint8)


def english_like(n: int, seed: int = 0, vocab: int = 8192) -> bytes:
    """Zipf-weighted words separated by spaces, some ending sentences.

    Word lengths grow with rank, mimicking natural-language statistics at
    the level that matters for LZ parsing (many medium-range repeats).
    """
    rng = np.random.default_rng(seed)
    lengths = 2 + (rng.integers(0, 7, size=vocab) + rng.integers(0, 5, size=vocab))
    words = []
    for idx in range(vocab):
        w = _WORD_CHARS[rng.integers(0, 26, size=int(lengths[idx]))].tobytes()
        if idx % 11 == 3:  # a slice of the vocabulary closes a sentence
            w += b"."
        words.append(w)
    ranks = np.arange(1, vocab + 1, dtype=np.float64)
    weights = 1.0 / ranks
    weights /= weights.sum()
    avg = float(np.average(lengths, weights=weights)) + 1.0
    out = bytearray()
    while len(out) < n:
        need = max(4096, int((n - len(out)) / avg * 1.1))
        ids = rng.choice(vocab, size=need, p=weights)
        out += b" ".join([words[i] for i in ids])
        out += b" "
    return bytes(out[:n])


GENERATORS = {
    "random": random_bytes,
    "repetitive": repetitive_text,
    "english": english_like,
}
