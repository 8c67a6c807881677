"""The LZBG1 container: header plus LEB128 factor records.

Layout (little-endian):
  magic   4 bytes  "LZBG"
  version 1 byte   0x01
  n       8 bytes  original length
  count   8 bytes  number of factors
  body    per factor: LEB128 length, then one literal byte if the length
          is 0, else the LEB128 source position (1-based)

Streams are byte-identical across platforms for the same factorization.
"""

from __future__ import annotations

import struct

import numpy as np

from . import _kernels as K
from .lz_parse import Factorization

MAGIC = b"LZBG"
VERSION = 1
_HEADER = struct.Struct("<4sBQQ")


class CodecError(ValueError):
    """Malformed or inconsistent LZBG1 stream."""


def encode_stream(fac: Factorization) -> bytes:
    out = np.empty(20 * max(1, fac.count), dtype=np.uint8)
    nbytes = int(K._encode_body(fac.lengths, fac.payloads, out))
    header = _HEADER.pack(MAGIC, VERSION, fac.n, fac.count)
    return header + out[:nbytes].tobytes()


def decode_factors(stream: bytes) -> Factorization:
    if len(stream) < _HEADER.size:
        raise CodecError("truncated header")
    magic, version, n, count = _HEADER.unpack_from(stream, 0)
    if magic != MAGIC:
        raise CodecError("bad magic")
    if version != VERSION:
        raise CodecError(f"unsupported version {version}")
    data = np.frombuffer(stream, dtype=np.uint8, offset=_HEADER.size)
    lens = np.empty(count, dtype=np.int64)
    pays = np.empty(count, dtype=np.int64)
    status, end = K._decode_body(data, 0, count, lens, pays)
    if status != K.OK:
        raise CodecError("truncated body")
    if end != data.shape[0]:
        raise CodecError("trailing bytes after the declared factor count")
    return Factorization(lengths=lens, payloads=pays, n=n)


def decode_stream(stream: bytes) -> bytes:
    """Decode back to the original text; overlapping copies self-extend."""
    fac = decode_factors(stream)
    out = np.empty(fac.n, dtype=np.uint8)
    status, produced = K._expand(fac.lengths, fac.payloads, out)
    if status != K.OK:
        raise CodecError("factor source or length out of range")
    if produced != fac.n:
        raise CodecError("declared length mismatch")
    return out.tobytes()
