#!/usr/bin/env python3
"""Enumerate all models of the defining axioms up to a size bound (<= 4) and
write them, one JSON file per isomorphism class, plus a manifest.

Usage: python scripts/enumerate_models.py [--max-size 4] [--out DIR]
"""

import argparse
import json
import os

from unorthodox.structure import enumerate_runo1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--out", default="enumerated")
    args = ap.parse_args()

    models = enumerate_runo1(args.max_size)
    os.makedirs(args.out, exist_ok=True)
    manifest = []
    for k, m in enumerate(models):
        fname = f"model_{k:02d}_{m.name}.json"
        with open(os.path.join(args.out, fname), "w") as fh:
            fh.write(m.dumps() + "\n")
        manifest.append({"file": fname, "name": m.name, "size": m.size})
    with open(os.path.join(args.out, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"{len(models)} isomorphism classes written to {args.out}/")


if __name__ == "__main__":
    main()
