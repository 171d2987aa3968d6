#!/usr/bin/env python3
"""Run every verification the package provides and print a one-line summary
per check.  Exit status is nonzero if anything fails.

Usage: python scripts/verify_all.py [--out DIR]

With --out, also writes the machine-readable report files (same content as
`unorthodox report --out DIR`).
"""

import argparse
import sys
import time

from unorthodox.algebra import axiom_profile, builtins, height
from unorthodox.identities import verify_catalog
from unorthodox.structure import (
    automorphisms, binary_term_operation_count, discriminator_check,
    enumerate_runo1, is_primal, is_si, is_simple, sc_check, subalgebras,
)
from unorthodox.varieties import corollary_check, lattice_is_boolean, \
    verify_bases
from unorthodox import logic as lg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", help="also write report files to this directory")
    ap.add_argument("--skip-oracle", action="store_true",
                    help="skip the clone-closure primality oracle (~25 s)")
    args = ap.parse_args()

    failures = []

    def check(name, ok, detail=""):
        mark = "ok" if ok else "FAIL"
        print(f"{name:<28} {mark}  {detail}".rstrip())
        if not ok:
            failures.append(name)

    t0 = time.time()
    algs = builtins()
    check("axiom profiles", all(
        c.holds for a in algs for c in axiom_profile(a).values()))
    check("rigidity/minimality", all(
        len(subalgebras(a)) == 1 and len(automorphisms(a)) == 1 for a in algs))
    check("simplicity", all(
        is_simple(a) and is_si(a) and sc_check(a).ok for a in algs))
    check("heights", all(height(a) == 2 for a in algs))
    check("discriminator", all(discriminator_check(a).ok for a in algs))

    models = enumerate_runo1(4)
    check("enumeration", sorted(m.name for m in models)
          == ["A1", "A2", "A3", "A4", "A5"], f"{len(models)} models")

    if args.skip_oracle:
        check("primality", all(is_primal(a, oracle="never").primal for a in algs),
              "(criterion only, oracle skipped)")
    else:
        check("primality", all(is_primal(a, oracle="never").primal for a in algs))
        counts = {a.name: binary_term_operation_count(a)
                  for a in algs if a.size == 3}
        check("clone oracle", all(c == 19683 for c in counts.values()),
              str(counts))

    rep = verify_bases()
    check("subvariety bases", rep.ok,
          f"{sum(r.exact for r in rep.results)}/30 exact")
    check("lattice shape", lattice_is_boolean())
    check("closed-term corollary", corollary_check())

    cat = verify_catalog()
    check("identity catalog", cat.ok,
          f"{len(cat.results)} entries, {len(cat.errata)} errata")

    check("logic soundness", lg.soundness_report().ok)
    exts = lg.verify_extension_bases()
    check("extension bases", all(v.ok for v in exts), f"{len(exts)} bases")

    if args.out:
        from unorthodox.cli import main as cli_main
        cli_main(["report", "--out", args.out])

    print(f"\n{len(failures)} failure(s) in {time.time() - t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
