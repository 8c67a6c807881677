import random

import pytest

from lzbg.lz_parse import factorize

SIGMAS = (1, 2, 4, 26, 255)


def random_text(rng: random.Random, n: int, sigma: int) -> bytes:
    return bytes(rng.randrange(sigma) for _ in range(n))


def small_corpus(seed: int = 0, cases: int = 60, max_n: int = 256) -> list[bytes]:
    """Mixed-alphabet corpus plus the structured edge cases."""
    rng = random.Random(seed)
    texts = [
        b"",
        b"a",
        b"ab",
        b"ba",
        b"aaa",
        b"aaaa",
        b"abc",
        b"abcabc",
        b"abaabababaaaaabbabab",
        b"ab" * 40,
        b"aab" * 25,
        bytes(range(256))[:200],
    ]
    for _ in range(cases):
        sigma = rng.choice(SIGMAS)
        n = rng.randint(0, max_n)
        texts.append(random_text(rng, n, sigma))
    return texts


@pytest.fixture(scope="session")
def corpus() -> list[bytes]:
    return small_corpus()


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # first factorize call per variant compiles the kernels (cached on disk)
    for v in ("bgone_t", "bgone_sa", "bgtwo", "kkp3_ref"):
        factorize(b"jit warmup text" * 8, v)
