"""Command-line surface.

Subcommands: factorize, decode, verify, dump, bench, corpus-urls.
Exit codes: 0 success, 1 verification failure, 2 I/O or format error,
3 invalid arguments.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import codec
from .bench import corpus_url_lines, run_benchmark
from .conversions import phi_to_nsv_inplace, sa_to_psv_nsv
from .lz_parse import VARIANTS, RunStats, factorize
from .oracles import naive_factorize
from .phi_builder import build_phi_from_text
from .sa_induce import build_suffix_array
from .text_core import SpaceAccountant, Text, Workspace

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_IO = 2
EXIT_ARGS = 3

_ALGO_FLAGS = {
    "bgone-t": "bgone_t",
    "bgone-sa": "bgone_sa",
    "bgtwo": "bgtwo",
    "kkp3-ref": "kkp3_ref",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lzbg")
    sub = parser.add_subparsers(dest="command", required=True)

    p_fac = sub.add_parser("factorize", help="compress a file to LZBG1")
    p_fac.add_argument("--algo", choices=sorted(_ALGO_FLAGS), default="bgone-t")
    p_fac.add_argument("--input", required=True)
    p_fac.add_argument("--output", required=True)
    p_fac.add_argument("--stats", action="store_true",
                       help="print a stats TSV line to stderr")

    p_dec = sub.add_parser("decode", help="decode an LZBG1 stream")
    p_dec.add_argument("--input", required=True)
    p_dec.add_argument("--output", required=True)

    p_ver = sub.add_parser("verify", help="cross-check all variants")
    p_ver.add_argument("--input", required=True)
    p_ver.add_argument("--oracle-limit", type=int, default=65536)

    p_dump = sub.add_parser("dump", help="print an internal array")
    p_dump.add_argument("--array", choices=("sa", "phi", "nsv", "lpf"),
                        required=True)
    p_dump.add_argument("--input", required=True)

    p_bench = sub.add_parser("bench", help="run the benchmark manifest")
    p_bench.add_argument("--manifest", required=True)
    p_bench.add_argument("--algos", default=",".join(sorted(_ALGO_FLAGS)))

    sub.add_parser("corpus-urls", help="print the public corpus URLs")
    return parser


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _cmd_factorize(args) -> int:
    data = _read(args.input)
    acct = SpaceAccountant()
    stats = RunStats(variant=_ALGO_FLAGS[args.algo], n=len(data))
    fac = factorize(data, _ALGO_FLAGS[args.algo], acct, stats)
    Path(args.output).write_bytes(codec.encode_stream(fac))
    if args.stats:
        line = "\t".join(
            [
                str(stats.n),
                str(stats.factor_count),
                f"{stats.t_sa_ms:.3f}",
                f"{stats.t_phi_ms:.3f}",
                f"{stats.t_nsv_ms:.3f}",
                f"{stats.t_parse_ms:.3f}",
                str(stats.peak_aux_words),
            ]
        )
        print(line, file=sys.stderr)
    return EXIT_OK


def _cmd_decode(args) -> int:
    stream = _read(args.input)
    Path(args.output).write_bytes(codec.decode_stream(stream))
    return EXIT_OK


def _cmd_verify(args) -> int:
    data = _read(args.input)
    pair_sets = []
    for variant in VARIANTS:
        fac = factorize(data, variant)
        if codec.decode_stream(codec.encode_stream(fac)) != data:
            print(f"verify: {variant} failed the decode round trip",
                  file=sys.stderr)
            return EXIT_VERIFY
        pair_sets.append(fac.pairs())
    if any(p != pair_sets[0] for p in pair_sets[1:]):
        print("verify: variants disagree", file=sys.stderr)
        return EXIT_VERIFY
    if len(data) <= args.oracle_limit:
        want = [l for l, _ in naive_factorize(data)]
        got = [l for l, _ in pair_sets[0]]
        if got != want:
            print("verify: factor lengths differ from the brute-force parse",
                  file=sys.stderr)
            return EXIT_VERIFY
    print(f"verify: ok ({len(pair_sets[0])} factors, n={len(data)})")
    return EXIT_OK


def _cmd_dump(args) -> int:
    data = _read(args.input)
    text = Text(data)
    n = text.n
    ws = Workspace(n)
    if args.array == "sa":
        build_suffix_array(text, ws)
        values = ws.cells[1:]
        start = 1
    elif args.array == "phi":
        build_phi_from_text(text, ws)
        values = ws.cells
        start = 0
    elif args.array == "nsv":
        build_phi_from_text(text, ws)
        phi_to_nsv_inplace(ws)
        values = ws.cells[1:]
        start = 1
    else:  # lpf via the reference PSV/NSV path
        build_suffix_array(text, ws)
        psv, nsv = sa_to_psv_nsv(ws)
        from . import _kernels as K

        tb = text.as_array()
        values = np.empty(n, dtype=np.int64)
        for i in range(1, n + 1):
            values[i - 1] = max(K._lcp(tb, i, int(psv[i])),
                                K._lcp(tb, i, int(nsv[i])))
        start = 1
    for idx, v in enumerate(values, start=start):
        print(f"{idx}\t{int(v)}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    algos = []
    for flag in args.algos.split(","):
        flag = flag.strip()
        if flag not in _ALGO_FLAGS:
            print(f"unknown algo {flag!r}", file=sys.stderr)
            return EXIT_ARGS
        algos.append(_ALGO_FLAGS[flag])
    run_benchmark(args.manifest, tuple(algos))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ARGS if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "factorize":
            return _cmd_factorize(args)
        if args.command == "decode":
            return _cmd_decode(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "dump":
            return _cmd_dump(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "corpus-urls":
            for line in corpus_url_lines():
                print(line)
            return EXIT_OK
    except (OSError, codec.CodecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_ARGS


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
