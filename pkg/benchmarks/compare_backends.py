"""Time the compiled and pure-Python inflation kernels on the same inputs.

    python3 benchmarks/compare_backends.py [--reps 3] [--sizes 100,200,400]
"""
import argparse
import statistics
import time

from pdtest import _backend
from pdtest.bigraph import triangularise
from pdtest.generators import gen_nakayama, random_positive_bigraph


def _time(fn, reps):
    out = []
    for _ in range(reps):
        t0 = time.perf_counter()
        res = fn()
        out.append(time.perf_counter() - t0)
    return statistics.median(out), res


def workloads(sizes):
    for n in sizes:
        G = triangularise(gen_nakayama(n))
        yield f"nak{n} pair-loop s=0", G, lambda k, m, n=n: k.pair_loop(m, 0, n * n, None, False)
        yield f"nak{n} pair-loop s=1", G, lambda k, m, n=n: k.pair_loop(m, 1, n * n, None, False)
        yield f"nak{n} root-loop", G, lambda k, m: k.root_loop(m, False, False)
    for n in (30, 60):
        G = random_positive_bigraph(n, n, 4 * n)
        yield f"rand{n} pair-loop s=0", G, lambda k, m, n=n: k.pair_loop(m, 0, n * n, None, False)
        yield f"rand{n} root-loop", G, lambda k, m: k.root_loop(m, False, False)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--sizes", default="100,200,400")
    args = ap.parse_args()
    names = _backend.available()
    if "cython" not in names:
        print("compiled kernels not built; only the Python backend is available")
    kernels = {name: _backend.get(name) for name in names}
    print(f"{'workload':<24}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, G, fn in workloads([int(x) for x in args.sizes.split(",")]):
        times, results = {}, {}
        for name, k in kernels.items():
            times[name], results[name] = _time(lambda: fn(k, G.array.copy()), args.reps)
        if len(set(map(str, results.values()))) != 1:
            raise SystemExit(f"{label}: backends disagree")
        row = f"{label:<24}" + "".join(f"{times[n] * 1000:>10.2f}ms" for n in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
