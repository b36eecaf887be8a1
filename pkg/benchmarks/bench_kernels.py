"""Compare the Cython and pure-Python polynomial kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Times each kernel on random rational polynomials, then times an end-to-end
workload (one verification suite) in a subprocess under each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from tetrabox import _pykernels

try:
    from tetrabox import _speedups
except ImportError:
    _speedups = None


def random_poly(rng, deg):
    return tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(deg)) + (Fraction(1),)


def kernel_cases(rng, deg):
    a, b = random_poly(rng, deg), random_poly(rng, deg)
    d = random_poly(rng, max(1, deg // 3))
    return {
        "add": lambda m: m.add(a, b),
        "mul": lambda m: m.mul(a, b),
        "divmod_": lambda m: m.divmod_(a, d),
        "divide_linear": lambda m: m.divide_linear(a, Fraction(1)),
        "shift": lambda m: m.shift(a, Fraction(1)),
        "evaluate": lambda m: m.evaluate(a, Fraction(3, 7)),
    }


def time_suite(suite, pure):
    env = dict(os.environ, TETRABOX_PURE="1" if pure else "0")
    code = (
        "import time; from tetrabox.verify import run_suite; "
        f"t = time.perf_counter(); run_suite({suite!r}); print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--suites", nargs="*", default=["ab-table", "tetra"])
    args = parser.parse_args()
    rng = random.Random(1)

    if _speedups is None:
        print("Cython extension not built; only the pure-Python backend is available.")
    print(f"{'kernel':<14}{'deg':>5}{'python (us)':>14}{'cython (us)':>14}{'speedup':>9}")
    for deg in (8, 32):
        for name, fn in kernel_cases(rng, deg).items():
            py = min(timeit.repeat(lambda: fn(_pykernels), number=args.repeat, repeat=3)) / args.repeat
            if _speedups is not None:
                cy = min(timeit.repeat(lambda: fn(_speedups), number=args.repeat, repeat=3)) / args.repeat
                print(f"{name:<14}{deg:>5}{py * 1e6:>14.2f}{cy * 1e6:>14.2f}{py / cy:>8.2f}x")
            else:
                print(f"{name:<14}{deg:>5}{py * 1e6:>14.2f}{'-':>14}{'-':>9}")

    print()
    print(f"{'suite':<14}{'python (s)':>12}{'cython (s)':>12}{'speedup':>9}")
    for suite in args.suites:
        py = time_suite(suite, pure=True)
        if _speedups is not None:
            cy = time_suite(suite, pure=False)
            print(f"{suite:<14}{py:>12.2f}{cy:>12.2f}{py / cy:>8.2f}x")
        else:
            print(f"{suite:<14}{py:>12.2f}{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()
