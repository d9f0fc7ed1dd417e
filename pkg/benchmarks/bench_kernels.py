#!/usr/bin/env python3
"""Benchmark the equilibrium-search kernels: compiled (numba) vs pure numpy.

Runs the full mutual-best-response search at a fixed entanglement angle on
meshes of increasing size and reports wall times for both backends plus the
speedup. The compiled path is warmed up first so its timing excludes JIT
compilation. Results from the two backends are cross-checked before timing.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import time

import numpy as np

from qgame import DA_BROTHER, MeshSpec, mesh_angle_array
from qgame import _kernels

BETA = 0.8
MESHES = [MeshSpec(5, 9, 9), MeshSpec(9, 17, 17), MeshSpec(9, 33, 33)]


def time_call(fn, *args, repeat=3):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    u1 = DA_BROTHER.u1_array().reshape(4)
    u2 = DA_BROTHER.u2_array().reshape(4)

    if not _kernels.HAVE_NUMBA:
        print("numba backend unavailable (QGAME_NO_NUMBA set or import failed);")
        print("timing the numpy path only.")

    # warm up the compiled kernels so timings exclude JIT compilation
    if _kernels.HAVE_NUMBA:
        warm = mesh_angle_array(MeshSpec(3, 2, 2))
        _kernels.pure_ne_pairs_numba(warm, BETA, u1, u2, 1e-9)

    print(f"{'mesh':>14} {'N_S':>6} {'numpy [s]':>10} {'numba [s]':>10} {'speedup':>8}")
    for mesh in MESHES:
        angles = mesh_angle_array(mesh)
        t_np, ref = time_call(
            _kernels.pure_ne_pairs_numpy, angles, BETA, u1, u2, repeat=args.repeat
        )
        label = f"({mesh.n_theta},{mesh.n_phi},{mesh.n_alpha})"
        if _kernels.HAVE_NUMBA:
            t_nb, got = time_call(
                _kernels.pure_ne_pairs_numba, angles, BETA, u1, u2, 1e-9, repeat=args.repeat
            )
            if got[0] != ref[0]:
                raise AssertionError(f"backend mismatch on mesh {label}")
            print(f"{label:>14} {mesh.n_strategies:>6} {t_np:>10.3f} {t_nb:>10.3f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{label:>14} {mesh.n_strategies:>6} {t_np:>10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
