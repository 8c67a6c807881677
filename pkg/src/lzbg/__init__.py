"""LZ77 factorization in linear time using a single auxiliary integer
array, with in-place rewrites between the suffix array, the predecessor
chain, and the NSV array."""

from .codec import decode_stream, encode_stream
from .lz_parse import Factorization, factorize, lcp_from, parse_with_pairs
from .text_core import Factor, SpaceAccountant, Text, Workspace

__all__ = [
    "Factor",
    "Factorization",
    "SpaceAccountant",
    "Text",
    "Workspace",
    "decode_stream",
    "encode_stream",
    "factorize",
    "lcp_from",
    "parse_with_pairs",
]

__version__ = "0.1.0"
