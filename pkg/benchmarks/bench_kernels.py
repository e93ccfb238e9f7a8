"""Compare the compiled and pure-Python permutation kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Micro benchmarks call both backends directly; the end-to-end benchmark builds
the graph of Example B in a subprocess per backend, since the backend is
chosen once at import.
"""

from __future__ import annotations

import argparse
import importlib
import os
import random
import subprocess
import sys
import timeit

from ussbraid import _kernel_py

END_TO_END = """
import time
from ussbraid.normal_form import GroupElement
from ussbraid.uss_graph import build_graph
x = GroupElement.parse(6, "2 1 4 3 2 1 5 4 2 4")
t = time.perf_counter()
for _ in range({reps}):
    build_graph(x)
print(time.perf_counter() - t)
"""


def random_perm(rng: random.Random, n: int) -> bytes:
    return bytes(rng.sample(range(n), n))


def micro_cases(n: int, seed: int = 0):
    rng = random.Random(seed)
    pairs = [(random_perm(rng, n), random_perm(rng, n)) for _ in range(200)]
    seqs = [[random_perm(rng, n) for _ in range(5)] for _ in range(50)]
    bodies = [(_kernel_py.normalize_factors(list(s))[1], random_perm(rng, n)) for s in seqs]
    return {
        "meet": lambda K: [K.meet(a, b) for a, b in pairs],
        "join": lambda K: [K.join(a, b) for a, b in pairs],
        "slide": lambda K: [K.slide(a, b) for a, b in pairs],
        "normalize_factors": lambda K: [K.normalize_factors(list(s)) for s in seqs],
        "sss_step": lambda K: [K.sss_step(list(b), False, s) for b, s in bodies],
    }


def end_to_end(pure: bool, reps: int) -> float:
    env = dict(os.environ)
    if pure:
        env["USSBRAID_PURE_PYTHON"] = "1"
    else:
        env.pop("USSBRAID_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END.format(reps=reps)],
        env=env, capture_output=True, text=True, check=True,
    )
    return float(out.stdout.strip())


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    try:
        compiled = importlib.import_module("ussbraid._kernel")
    except ImportError:
        print("compiled kernel not built; only the pure-Python backend is available")
        compiled = None

    print(f"{'case':<24}{'n':>4}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for n in (5, 8, 12):
        for name, fn in micro_cases(n).items():
            t_py = min(timeit.repeat(lambda: fn(_kernel_py), number=1, repeat=args.repeat))
            row = f"{name:<24}{n:>4}{t_py * 1e3:>14.2f}"
            if compiled is not None:
                t_cy = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
                row += f"{t_cy * 1e3:>14.2f}{t_py / t_cy:>9.1f}x"
            print(row)

    t_py = end_to_end(True, 3)
    row = f"{'build_graph(Example B)':<24}{6:>4}{t_py * 1e3:>14.2f}"
    if compiled is not None:
        t_cy = end_to_end(False, 3)
        row += f"{t_cy * 1e3:>14.2f}{t_py / t_cy:>9.1f}x"
    print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
