#!/usr/bin/env python3
"""Smoke test for the pfaffian_ext_py extension module.

Builds the cdylib with cargo, loads it, and checks the worked rank-4
example on 6x6 matrices end to end: partition arithmetic, the Ext tables,
the induced-map analysis, regularity, Hilbert functions, cohomology and the
vanishing verifier.

Usage: python3 python/smoke_test.py [--no-build] [--release]
"""

import argparse
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def build_extension(release: bool) -> Path:
    cmd = ["cargo", "build", "-p", "pfaffian-ext-py"]
    profile = "debug"
    if release:
        cmd.append("--release")
        profile = "release"
    subprocess.run(cmd, cwd=REPO_ROOT, check=True)
    lib = REPO_ROOT / "target" / profile / "libpfaffian_ext_py.so"
    if not lib.exists():  # e.g. macOS
        lib = REPO_ROOT / "target" / profile / "libpfaffian_ext_py.dylib"
    if not lib.exists():
        raise SystemExit(f"extension library not found under target/{profile}")
    return lib


def load_module(lib: Path):
    staging = Path(tempfile.mkdtemp(prefix="pfaffian_ext_py_"))
    shutil.copy2(lib, staging / "pfaffian_ext_py.so")
    sys.path.insert(0, str(staging))
    import pfaffian_ext_py

    return pfaffian_ext_py


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--no-build", action="store_true", help="reuse an existing build")
    parser.add_argument("--release", action="store_true", help="build in release mode")
    args = parser.parse_args()

    if args.no_build:
        profile = "release" if args.release else "debug"
        lib = REPO_ROOT / "target" / profile / "libpfaffian_ext_py.so"
    else:
        lib = build_extension(args.release)
    px = load_module(lib)

    checks = 0

    def ok(cond, what):
        nonlocal checks
        checks += 1
        if not cond:
            raise AssertionError(what)

    # Partition arithmetic.
    ok(px.conjugate([4, 3, 1]) == [3, 2, 2, 1], "conjugate")
    ok(px.double([2, 1]) == [2, 2, 1, 1], "double")
    ok(px.truncate_columns([4, 3, 1], 2) == [2, 2, 1], "truncate")
    ok(px.fits_in([1, 1], [2, 1, 1]) and not px.fits_in([2], [1, 1]), "containment")
    ok(px.weyl_dimension([1, 1, 0, 0, 0, 0]) == 15, "weyl dimension")
    ok(len(px.enumerate_partitions(3, 2, 2)) == 4, "enumeration")

    # Bott evaluation.
    ok(px.bott([-1, -1], [5, 5, 5, 5], 6) == (8, [3, 3, 3, 3, 3, 3]), "bott")
    ok(px.bott([0, 0], [1, 0], 4) is None, "bott vanishing")

    # The rank-4 square on 6x6 matrices.
    ok(px.generators(6, "pow:4:2") == [[2, 1, 1], [2, 2]], "generators")
    ok(px.z_set(6, "pow:4:2") == [([], 1), ([1, 1], 1), ([1, 1, 1], 0)], "labels")

    table = px.ext_table(6, "pow:4:2", -18, -6)
    ok(len(table) == 10, "ext table size")
    ok((15, [6, 6, 6, 6, 6, 6], -18, 1) in table, "top ext term")
    ok((6, [4, 4, 3, 3, -1, -1], -6, 1) in table, "negative tail term")

    maps = px.ext_maps(6, "gens:2,1", "pow:4:2", -18, -6)
    ok(maps["kernel"] == [(15, [6, 6, 6, 6, 5, 5], -17, 1)], "kernel")
    ok(all(t[0] == 6 for t in maps["cokernel"]), "cokernel index")

    ok(px.reg_quotient(6, "pow:4:2") == 4, "reg quotient")
    ok(px.reg_ideal(6, "pow:4:2") == 5, "reg ideal")
    ok(px.reg_subquotient(6, [1, 1], 1) == 4, "reg subquotient")
    ok(not px.has_linear_resolution_power(6, 4, 2), "no linear resolution")
    ok(px.has_linear_resolution_power(6, 4, 4), "linear resolution")
    ok(px.has_linear_resolution_basic(6, [3, 2, 2]), "linear basic")

    # Hilbert functions and the degree-2 split 120 = 15 + 105.
    ok(px.hilbert_dim(6, "pfaff:4", 2) == 15, "ideal dimension")
    ok(px.quotient_hilbert_dim(6, "pfaff:4", 2) == 105, "quotient dimension")
    ok(px.subquotient_dim(6, [], 1, 2) == 105, "subquotient dimension")

    # Cohomology of the embedded rank-4 locus.
    coh = dict(((q, t), d) for q, t, d in px.sheaf_cohomology(6, "pfaff:4", 0, 8, -6, 1))
    ok(coh[(0, 0)] == 1, "global sections")
    ok(coh[(0, 1)] == 15, "embedding bundle sections")
    ok(coh[(8, -6)] == 1, "canonical twist")
    ok(all(coh[(q, t)] == 0 for q in range(8) for t in range(-6, 0)), "vanishing range")
    ok(px.kodaira_passes(6, "pow:4:2"), "vanishing verifier")

    # Optimization oracle.
    ok(px.r_bruteforce(4, 3, 6, 2) == 5, "brute force value")
    ok(px.r_bruteforce(2, 3, 6, 2) is None, "empty feasible set")

    ok(px.selftest_quick(), "quick selftest")

    print(f"smoke test passed ({checks} checks), module version {px.__version__}")


if __name__ == "__main__":
    main()
