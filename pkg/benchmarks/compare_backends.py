"""Time the compiled summation kernel against its pure-Python mirror.

Runs the same thermally weighted sweep through both backends, reports the
best-of-N wall time for each, the speedup, and the maximum absolute
deviation between the two result arrays (expected: exactly 0.0, the byte
level is part of the contract).

Usage: python benchmarks/compare_backends.py [--nbar F] [--steps N] [--repeats K]
"""

import argparse
import time

import numpy as np

from twinphoton import _core_py
from twinphoton.dynamics import ATOM_INDEX, _weights
from twinphoton.model import TimeGrid
from twinphoton.thermal import FockCutoff

try:
    from twinphoton import _core
except ImportError:
    _core = None


def run(kernel, code, w1, w2, gts, repeats):
    out = np.empty((gts.shape[0], 5))
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        kernel.thermal_sweep(code, w1, w2, gts, out)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nbar", type=float, default=1.0)
    ap.add_argument("--steps", type=int, default=1000)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--tail-tol", type=float, default=1e-10)
    args = ap.parse_args()

    cutoff = FockCutoff.choose(args.nbar, args.nbar, args.tail_tol)
    w1 = np.ascontiguousarray(_weights(args.nbar, cutoff.n_max1))
    w2 = np.ascontiguousarray(_weights(args.nbar, cutoff.n_max2))
    gts = TimeGrid(10.0, args.steps).points()
    terms = w1.size * w2.size * gts.size
    print(
        f"workload: one-excited-atom sweep, nbar={args.nbar:g}, "
        f"Fock grid {w1.size}x{w2.size}, {gts.size} times "
        f"({terms:.2e} term evaluations)"
    )

    code = ATOM_INDEX["eg"]
    t_py, out_py = run(_core_py, code, w1, w2, gts, args.repeats)
    print(f"pure python: {t_py:.4f} s  ({terms / t_py:.3e} terms/s)")

    if _core is None:
        print("compiled backend not built; nothing to compare")
        return

    t_c, out_c = run(_core, code, w1, w2, gts, args.repeats)
    print(f"compiled:    {t_c:.4f} s  ({terms / t_c:.3e} terms/s)")
    print(f"speedup:     {t_py / t_c:.1f}x")
    dev = float(np.abs(out_c - out_py).max())
    print(f"max |compiled - python| = {dev:.3e}" + ("  (bit-identical)" if dev == 0.0 else ""))


if __name__ == "__main__":
    main()
