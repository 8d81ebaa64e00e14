"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from morsejones import diagram as dg
from morsejones import kernels
from morsejones.evaluator import bracket_bruteforce, sweep_stats

SWEEP_CASES = [
    ("torus(2,500)", dg.torus_closure(2, 500)),
    ("torus(3,200)", dg.torus_closure(3, 200)),
    ("torus(5,40)", dg.torus_closure(5, 40)),
    ("random g=10", dg.random_diagram(1, 10, 120)),
]
STATE_SUM_CASES = [
    ("torus(2,14)", dg.torus_closure(2, 14)),
    ("torus(3,8)", dg.torus_closure(3, 8)),
    ("random g=6", dg.random_diagram(5, 6, 24)),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.backends()
    names = sorted(backends)
    if "cython" not in backends:
        print("compiled extension not built; only the Python kernels are timed")
    print(f"{'kernel':<10} {'case':<14} {'crossings':>9} " +
          " ".join(f"{n + ' ms':>11}" for n in names) + "   speedup")
    for label, cases, run in (
            ("sweep", SWEEP_CASES, lambda D, mod: sweep_stats(D, mod)),
            ("statesum", STATE_SUM_CASES, lambda D, mod: bracket_bruteforce(D, mod))):
        for case, D in cases:
            results = {n: run(D, backends[n]) for n in names}
            assert len({str(v) for v in results.values()}) == 1, f"{case}: backends disagree"
            times = {n: best_of(lambda: run(D, backends[n]), args.repeat) for n in names}
            speed = (f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "")
            print(f"{label:<10} {case:<14} {D.crossings:>9} " +
                  " ".join(f"{times[n]:>11.2f}" for n in names) + "  " + speed)


if __name__ == "__main__":
    main()
