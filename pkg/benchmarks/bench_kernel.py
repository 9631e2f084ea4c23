"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernel.py [--configs 200]

Times the raw kernel primitives on random data and a full theorem sweep
over fuzz configurations with each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from cevconic import _backend, _purekernel


def kernel_cases(rng, n=200, size=10**6):
    def vec():
        return tuple(rng.randint(-size, size) for _ in range(3))

    def mat():
        return tuple(rng.randint(-size, size) for _ in range(9))

    vecs = [(vec(), vec()) for _ in range(n)]
    mats = [(mat(), mat()) for _ in range(n)]
    rows = [[tuple(rng.randint(-50, 50) for _ in range(6)) for _ in range(5)] for _ in range(n)]
    return {
        "cross": lambda k: [k.cross(p, q) for p, q in vecs],
        "matmul": lambda k: [k.matmul(m, q) for m, q in mats],
        "adjugate": lambda k: [k.adjugate(m) for m, _ in mats],
        "congruence": lambda k: [k.congruence(m, q) for m, q in mats],
        "nullspace": lambda k: [k.nullspace(r, 6) for r in rows],
    }


SWEEP = """
import time
from cevconic import BACKEND
from cevconic.fuzz import fuzz
t = time.perf_counter()
s = fuzz(42, {n}, 10)
print(BACKEND, time.perf_counter() - t, s["failed"])
"""


def sweep(n, pure):
    env = {**os.environ, "CEVCONIC_PURE_PYTHON": "1" if pure else ""}
    out = subprocess.run([sys.executable, "-c", SWEEP.format(n=n)], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return out[0], float(out[1]), int(out[2])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--configs", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    compiled = _backend.load()
    if compiled is _purekernel:
        print("compiled kernel not built; nothing to compare")
        return
    cases = kernel_cases(random.Random(0))
    print(f"{'primitive':12s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in cases.items():
        assert fn(_purekernel) == fn(compiled), name
        tp = min(timeit.repeat(lambda: fn(_purekernel), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:12s} {tp * 1e3:10.2f} {tc * 1e3:12.2f} {tp / tc:8.2f}x")

    print(f"\ntheorem sweep over {args.configs} fuzz configs")
    for pure in (True, False):
        backend, secs, failed = sweep(args.configs, pure)
        print(f"{backend:9s} {secs:7.3f} s  FAILED {failed}")


if __name__ == "__main__":
    main()
