"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from verlinde_abelian import _kernels_py, kernels

CASES = [
    ("count_coordinate_solutions d=500", "count_coordinate_solutions", (3, 7, 11, 500)),
    ("count_pair_solutions_direct d=3", "count_pair_solutions_direct", (2, 1, 3, 3)),
    ("order_phase_histogram n=15", "order_phase_histogram", (15, 1, 2, 3, 4)),
    ("order_phase_histogram n=27", "order_phase_histogram", (27, 1, 2, 3, 4)),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    impls = {"python": _kernels_py}
    if "cython" in kernels.IMPLEMENTATIONS:
        impls["cython"] = kernels.IMPLEMENTATIONS["cython"]
    else:
        print("compiled extension not available; timing the fallback only")
    print(f"{'kernel':<36}" + "".join(f"{name:>12}" for name in impls) + f"{'speedup':>10}")
    for label, fn_name, fn_args in CASES:
        times = {}
        results = set()
        for name, impl in impls.items():
            fn = getattr(impl, fn_name)
            results.add(str(fn(*fn_args)))
            times[name] = min(timeit.repeat(lambda: fn(*fn_args), number=1, repeat=args.repeat))
        assert len(results) == 1, f"backends disagree on {label}"
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<36}" + "".join(f"{times[n]:>11.4f}s" for n in impls) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
