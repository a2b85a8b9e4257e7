"""Compare the compiled and pure-Python row-reduction kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Each backend is measured
on raw ``rref`` throughput and on full ``oracle_counts`` runs; the latter
happen in subprocesses because the backend is chosen at import time.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from btstrata import _kernels
from btstrata.oracle import get_field

ORACLE_CASES = [(2, 3, 2), (3, 2, 2), (3, 2, 3)]


def bench_rref(mod, field, shape, reps, seed=0):
    tables = mod.Tables(field.add, field.sub, field.mul, field.inv, None)
    rng = np.random.default_rng(seed)
    mats = [rng.integers(0, field.order, size=shape) for _ in range(reps)]
    t0 = time.perf_counter()
    for m in mats:
        mod.rref(m, tables)
    return time.perf_counter() - t0


def bench_oracle(backend, theta, q, n):
    code = (
        "import time; from btstrata.oracle import oracle_counts;"
        f"t0 = time.perf_counter(); oracle_counts({theta}, {q}, {n}, max_work=10**9);"
        "print(time.perf_counter() - t0)"
    )
    env = dict(os.environ, BTSTRATA_KERNEL=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=2000)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    backends = _kernels.available_backends()
    results = []
    for p, k in [(2, 2), (3, 2), (2, 4)]:
        field = get_field(p, k)
        for shape in [(3, 6), (8, 6)]:
            row = {"bench": f"rref GF({field.order}) {shape[0]}x{shape[1]} x{args.reps}"}
            for name, mod in backends.items():
                row[name] = bench_rref(mod, field, shape, args.reps)
            results.append(row)
    for theta, q, n in ORACLE_CASES:
        row = {"bench": f"oracle_counts theta={theta} q={q} n={n}"}
        for name in backends:
            row[name] = bench_oracle(name, theta, q, n)
        results.append(row)

    if args.json:
        print(json.dumps(results, indent=2))
        return
    names = list(backends)
    print(f"{'benchmark':45s}" + "".join(f"{n:>10s}" for n in names) + "   speedup")
    for row in results:
        cells = "".join(f"{row[n]:10.3f}" for n in names)
        speed = f"{row['python'] / row['cython']:8.1f}x" if "cython" in row else ""
        print(f"{row['bench']:45s}{cells}  {speed}")


if __name__ == "__main__":
    main()
