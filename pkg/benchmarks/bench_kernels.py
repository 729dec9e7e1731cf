"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--n 65536] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from helicity_clifford import _fallback
from helicity_clifford.bilinears import _operators
from helicity_clifford.spinors import random_spinors
from helicity_clifford.theorem import phi_grid, theta_grid

try:
    from helicity_clifford import _kernels
except ImportError:
    _kernels = None


def workloads(n):
    psi = random_spinors(n, seed=0)
    ops = _operators()
    K, J = _fallback.slash_batch(psi, *ops)
    side = int(round((n / 8) ** 0.5))
    th, ph, dp = np.meshgrid(theta_grid(side), phi_grid(side), phi_grid(8), indexing="ij")
    grid = (th.ravel(), ph.ravel(), dp.ravel())
    return {
        "slash_batch": lambda m: m.slash_batch(psi, *ops),
        "helicity_batch": lambda m: m.helicity_batch(K, J),
        "eigen_residuals": lambda m: m.eigen_residuals(*grid),
        "projector_residuals": lambda m: m.projector_residuals(*grid),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=65536)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = [("numpy", _fallback)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'kernel':<22}" + "".join(f"{name:>12}" for name, _ in mods) + ("     speedup" if _kernels else ""))
    for label, fn in workloads(args.n).items():
        times = [min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for _, m in mods]
        row = f"{label:<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if _kernels:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
