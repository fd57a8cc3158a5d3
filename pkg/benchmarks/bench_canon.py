"""Compare the compiled and pure-Python canonical labeling kernels.

    python benchmarks/bench_canon.py [--n 8] [--repeat 3]

Each kernel labels every simple rank-3 matroid on n points under a fixed
set of random relabelings; results are checked to agree.
"""

import argparse
import random
import time

from matroid_chern import _canon_py, canon
from matroid_chern.canon import canonical_family
from matroid_chern.geography import linear_spaces


def workload(n, copies, seed):
    rng = random.Random(seed)
    out = []
    for fam in linear_spaces(n, allow_nine=True):
        for _ in range(copies):
            perm = list(range(n))
            rng.shuffle(perm)
            out.append(tuple(canon.apply_labeling(L, perm) for L in fam))
    return out


def run(kernel, families, n):
    start = time.perf_counter()
    result = [canonical_family(n, fam, kernel) for fam in families]
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--copies", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    families = workload(args.n, args.copies, args.seed)
    kernels = {"python": _canon_py}
    if canon.KERNEL == "compiled":
        kernels["compiled"] = canon._kernel
    else:
        print("compiled kernel not built; timing the Python kernel only")

    timings, results = {}, {}
    for name, kernel in kernels.items():
        best = None
        for _ in range(args.repeat):
            t, res = run(kernel, families, args.n)
            best = t if best is None else min(best, t)
        timings[name], results[name] = best, res
    if len(results) == 2:
        assert results["python"] == results["compiled"], "kernels disagree"

    print(f"n={args.n}: {len(families)} families, best of {args.repeat}")
    for name, t in timings.items():
        print(f"  {name:9s} {t * 1e3:9.1f} ms  {t / len(families) * 1e6:8.1f} us/family")
    if len(timings) == 2:
        print(f"  speedup   {timings['python'] / timings['compiled']:9.1f}x")


if __name__ == "__main__":
    main()
