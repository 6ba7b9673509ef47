"""Time the compiled difference kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --length 200 --repeat 5
"""

from __future__ import annotations

import argparse
import random
import timeit
from fractions import Fraction

from apseq import _kernels_py

try:
    from apseq import _kernels
except ImportError:
    _kernels = None


def workloads(length: int, seed: int):
    rng = random.Random(seed)
    ints = [rng.randint(-10**6, 10**6) for _ in range(length)]
    fracs = [Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(length)]
    floats = [rng.uniform(-1.0, 1.0) for _ in range(length)]
    depth = min(length - 1, 40)
    newton = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(12)]
    return {
        "difference_rows/int": lambda k: k.difference_rows(ints, depth),
        "difference_rows/fraction": lambda k: k.difference_rows(fracs, depth),
        "direct_difference/int": lambda k: k.direct_difference(ints, depth),
        "difference_rows_float": lambda k: k.difference_rows_float(floats, depth),
        "float_row_vanishes": lambda k: k.float_row_vanishes(
            floats, k.difference_rows_float(floats, 8)[8], 8, 1e-9),
        "newton_eval": lambda k: [k.newton_eval(newton, n) for n in range(length)],
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--length", type=int, default=200, help="sequence length")
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions (best is kept)")
    parser.add_argument("--number", type=int, default=3, help="calls per repetition")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    backends = [("python", _kernels_py)]
    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    else:
        backends.append(("compiled", _kernels))

    print(f"{'kernel':28s}" + "".join(f"{name:>14s}" for name, _ in backends) + "   speedup")
    for label, fn in workloads(args.length, args.seed).items():
        times = []
        for _, mod in backends:
            best = min(timeit.repeat(lambda: fn(mod), repeat=args.repeat, number=args.number))
            times.append(best / args.number)
        speedup = f"{times[0] / times[1]:8.2f}x" if len(times) == 2 else ""
        print(f"{label:28s}" + "".join(f"{t * 1e3:12.3f}ms" for t in times) + "  " + speedup)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
