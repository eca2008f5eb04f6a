"""Benchmark the two GF(2) rank kernels (numba @njit vs pure numpy) on
random dense bit matrices, and time a full Hochster sweep under each.

The kernel is chosen at import time from VDW_NUMBA, so each variant runs
in a subprocess with the flag set accordingly.

Usage: python3 benchmarks/bench_gf2.py [--repeats N]
"""

import argparse
import json
import os
import subprocess
import sys
import textwrap

SIZES = [(64, 64), (256, 256), (512, 512), (1024, 1024)]

WORKER = textwrap.dedent("""
    import json, random, sys, time
    import numpy as np
    from vdwcomplex import _gf2
    from vdwcomplex.complex_core import VdwParams, make_vdw
    from vdwcomplex.homology import FieldSpec
    from vdwcomplex.resolution import hochster_betti

    sizes = json.loads(sys.argv[1])
    repeats = int(sys.argv[2])
    rng = random.Random(0)
    out = {"kernel": _gf2.KERNEL_NAME, "matrix": {}, "sweep": None}

    for rows, cols in sizes:
        masks = [rng.getrandbits(cols) for _ in range(rows)]
        packed = _gf2.pack_rows(masks, cols)
        _gf2.gf2_rank_packed(packed, cols)  # warm-up (jit compile)
        best = min(
            (lambda t0: (_gf2.gf2_rank_packed(packed, cols),
                         time.perf_counter() - t0)[1])(time.perf_counter())
            for _ in range(repeats))
        out["matrix"]["%dx%d" % (rows, cols)] = best

    t0 = time.perf_counter()
    for n in range(2, 12):
        for k in range(1, n):
            hochster_betti(make_vdw(VdwParams(n, k)), FieldSpec.prime(2))
    out["sweep"] = time.perf_counter() - t0
    print(json.dumps(out))
""")


def run_variant(flag, repeats):
    env = dict(os.environ, VDW_NUMBA=flag)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(SIZES), str(repeats)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    numba = run_variant("1", args.repeats)
    numpy_ = run_variant("0", args.repeats)
    print("kernels: %s vs %s" % (numba["kernel"], numpy_["kernel"]))
    print("%-12s %12s %12s %8s" % ("case", numba["kernel"], numpy_["kernel"],
                                   "speedup"))
    for case in numba["matrix"]:
        a, b = numba["matrix"][case], numpy_["matrix"][case]
        print("%-12s %10.4fs %10.4fs %7.1fx" % (case, a, b, b / a))
    a, b = numba["sweep"], numpy_["sweep"]
    print("%-12s %10.4fs %10.4fs %7.1fx" % ("gf2 sweep", a, b, b / a))


if __name__ == "__main__":
    main()
