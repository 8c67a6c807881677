#!/usr/bin/env python3
"""Generate deterministic benchmark inputs and a manifest.

Usage: python scripts/make_corpus.py OUTDIR [--size BYTES]
"""

import argparse
from pathlib import Path

from lzbg.corpus import english_like, random_bytes, repetitive_text


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir")
    ap.add_argument("--size", type=int, default=8 * 1024 * 1024)
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    spec = {
        "random": random_bytes(args.size, 255, seed=1),
        "random2x": random_bytes(2 * args.size, 255, seed=1),
        "repetitive": repetitive_text(args.size, seed=2),
        "repetitive2x": repetitive_text(2 * args.size, seed=2),
        "english": english_like(args.size, seed=3),
    }
    lines = []
    for name, data in spec.items():
        path = outdir / f"{name}.bin"
        path.write_bytes(data)
        lines.append(f"{name}\t{path}")
    manifest = outdir / "manifest.tsv"
    manifest.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(spec)} inputs and {manifest}")


if __name__ == "__main__":
    main()
