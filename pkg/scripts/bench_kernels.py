#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Two views:
  * micro: direct calls into both kernel modules on identical inputs
  * end to end: a fixed verification workload run in a subprocess with
    FCWORD_BACKEND forced each way

Usage: python3 scripts/bench_kernels.py [--trials N]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fcword import _purekernels, garside  # noqa: E402

try:
    from fcword import _kernels
except ImportError:
    _kernels = None


def time_call(fn, repeats=5):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return min(best), statistics.median(best)


def micro(trials):
    rng = random.Random(1)
    t = garside.sym_tables(7)
    fan = len(t.perms[0]) - 1
    jobs = []
    for _ in range(trials):
        jobs.append([rng.randrange(len(t.perms)) for _ in range(rng.randint(5, 60))])
    args = (t.rmul, t.lmul, t.rdesc, t.ldesc, fan, t.id_idx, t.w0)

    def run(mod):
        def inner():
            for fs in jobs:
                mod.normalize_factors(list(fs), *args)

        return inner

    words = [
        [rng.randint(1, 5) for _ in range(rng.randint(5, 80))] for _ in range(trials)
    ]

    def run_apply(mod):
        def inner():
            for w in words:
                win = list(range(1, 6))
                mod.apply_word(win, w, 4)
                mod.strip_word(win, 4, True)

        return inner

    rows = []
    for label, fn in (
        ("normalize_factors", run),
        ("apply+strip", run_apply),
    ):
        pure_best, _ = time_call(fn(_purekernels))
        if _kernels is not None:
            c_best, _ = time_call(fn(_kernels))
            rows.append((label, pure_best, c_best, pure_best / c_best))
        else:
            rows.append((label, pure_best, None, None))
    return rows


WORKLOAD = r"""
import random
from fcword import fc, garside, normalform, kernels
from fcword.coxeter import AffineA

rng = random.Random(3)
for _ in range(1500):
    m = rng.randint(3, 7)
    w = [rng.choice((1, -1)) * rng.randint(1, m - 1) for _ in range(30)]
    garside.normal_form(m, w)
ct = AffineA(3)
for e in fc.enumerate_fc(ct, 10):
    if 4 in e.word:
        normalform.affine_nf(e.element)
print(kernels.BACKEND)
"""


def end_to_end():
    out = []
    for backend in ("c", "pure"):
        env = dict(os.environ, FCWORD_BACKEND=backend)
        t0 = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
        )
        dt = time.perf_counter() - t0
        used = proc.stdout.strip()
        out.append((backend, used, dt, proc.returncode))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=400)
    args = ap.parse_args()

    print("micro benchmarks (best of 5):")
    for label, pure, comp, ratio in micro(args.trials):
        if comp is None:
            print(f"  {label:<20} pure {pure * 1e3:8.2f} ms   (no compiled module)")
        else:
            print(
                f"  {label:<20} pure {pure * 1e3:8.2f} ms   "
                f"compiled {comp * 1e3:8.2f} ms   speedup x{ratio:4.1f}"
            )

    print("end to end (garside + affine nf workload, subprocess each way):")
    for backend, used, dt, rc in end_to_end():
        state = "ok" if rc == 0 and used == backend else f"rc={rc} used={used!r}"
        print(f"  FCWORD_BACKEND={backend:<5} {dt:6.2f} s   [{state}]")


if __name__ == "__main__":
    main()
