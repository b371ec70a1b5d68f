#!/usr/bin/env python3
"""Convert a folder of downloaded test images (TIFF, PNG, ...) to 8-bit
binary PGM covers for the acceptance suite and `sadt bench`.

The USC-SIPI "Miscellaneous" volume is the usual source. Download the
archive by hand from the USC-SIPI image database website, unpack it, then:

    python3 tools/prepare_corpus.py ~/Downloads/misc corpus/
    SADT_CORPUS_DIR=corpus ./build/tests/acceptance_test

Colour images are converted to luma. Images that are not already 512x512
are resized with Lanczos unless --keep-size is given.
"""
import argparse
import pathlib
import sys

from PIL import Image

SUFFIXES = {".tif", ".tiff", ".png", ".bmp", ".jpg", ".jpeg", ".pgm", ".ppm"}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("src", type=pathlib.Path)
    ap.add_argument("dst", type=pathlib.Path)
    ap.add_argument("--size", type=int, default=512)
    ap.add_argument("--keep-size", action="store_true")
    args = ap.parse_args()

    files = sorted(p for p in args.src.iterdir() if p.suffix.lower() in SUFFIXES)
    if not files:
        print(f"no images in {args.src}", file=sys.stderr)
        return 2
    args.dst.mkdir(parents=True, exist_ok=True)
    for path in files:
        img = Image.open(path).convert("L")
        if not args.keep_size and img.size != (args.size, args.size):
            img = img.resize((args.size, args.size), Image.Resampling.LANCZOS)
        out = args.dst / (path.stem + ".pgm")
        img.save(out, format="PPM")
        print(f"{path.name} -> {out.name} {img.size[0]}x{img.size[1]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
