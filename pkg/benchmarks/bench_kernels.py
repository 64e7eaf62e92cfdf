"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--pf-n 7] [--hhl 3,2,2] [--repeat 3]
"""

import argparse
import time

from nablasym import _pykernels as py
from nablasym.parking import dyck_paths

try:
    from nablasym import _ckernels as cy
except ImportError:
    cy = None


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def pf_all(mod, n):
    return [mod.pf_path_histogram(a) for a in dyck_paths(n)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pf-n", type=int, default=7)
    ap.add_argument("--hhl", default="3,2,2")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mu = tuple(int(x) for x in args.hhl.split(","))
    cases = [
        (f"pf histograms, n={args.pf_n}", lambda mod: pf_all(mod, args.pf_n)),
        (f"hhl histogram, mu={mu}", lambda mod: mod.hhl_histogram(mu)),
    ]
    print(f"{'kernel':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, fn in cases:
        tp, rp = _time(lambda: fn(py), args.repeat)
        if cy is None:
            print(f"{label:32} {tp:10.3f} {'n/a':>10} {'':>8}")
            continue
        tc, rc = _time(lambda: fn(cy), args.repeat)
        assert rp == rc, f"backends disagree on {label}"
        print(f"{label:32} {tp:10.3f} {tc:10.3f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
