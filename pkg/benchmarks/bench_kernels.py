"""Compiled kernels vs the numpy fallback on the workloads that dominate.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import time

from ternary_codes import kernels
from ternary_codes.codes import code_spec, weight_distribution
from ternary_codes.dualcheck import dual_min_distance
from ternary_codes.expsums import lemma2_distribution
from ternary_codes.field import make_field
from ternary_codes.sequences import crosscorrelation, m_sequence


def workloads(quick: bool):
    f5, f7 = make_field(3, 5), make_field(3, 7)
    out = [
        ("weights m=5 naive (3^10 words)", lambda: weight_distribution(code_spec(f5, 1, 182), orbit=False)),
        ("weights m=7 orbit", lambda: weight_distribution(code_spec(f7, 1, 1640))),
        ("quadratic sums m=5", lambda: lemma2_distribution(1, f5)),
        ("crosscorrelation m=7", lambda: crosscorrelation(m_sequence(f7), 547, f7)),
        ("dual distance m=5", lambda: dual_min_distance(code_spec(f5, 1, 182))),
    ]
    if not quick:
        out.append(("dual distance m=7", lambda: dual_min_distance(code_spec(f7, 1, 1640))))
    return out


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the m=7 dual search")
    args = ap.parse_args()

    backends = kernels.available()
    if "cython" not in backends:
        print("compiled extension not built; only the numpy fallback is timed")
    print(f"{'workload':<34}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in workloads(args.quick):
        row, results = [], []
        for b in backends:
            with kernels.use_backend(b):
                t, res = best_of(fn, args.repeat)
            row.append(t)
            results.append(res)
        if any(r != results[0] for r in results[1:]):
            raise SystemExit(f"{name}: backends disagree")
        line = f"{name:<34}" + "".join(f"{t:>11.4f}s" for t in row)
        if len(row) > 1:
            line += f"{row[0] / row[1]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
