"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

Each kernel runs on the same inputs under both backends; outputs are
checked for equality before timings are reported.
"""

import argparse
import json
import random
import time

from schreierkit._kernels import _pure

try:
    from schreierkit._kernels import _fast
except ImportError:
    _fast = None


def _random_words(seed, count, n, max_len):
    rng = random.Random(seed)
    letters = [i for i in range(-n, n + 1) if i]
    return [[rng.choice(letters) for _ in range(rng.randint(0, max_len))] for _ in range(count)]


def workloads():
    word_lists = [_random_words(s, 6, 3, 12) for s in range(2000)]
    s8 = [tuple((x + 1) % 8 for x in range(8)), (1, 0, 2, 3, 4, 5, 6, 7)]
    affine = [tuple((x + 1) % 101 for x in range(101)), tuple((2 * x) % 101 for x in range(101))]
    folds = lambda out: [(v, list(f)) for v, f in out]
    tuples = lambda out: sorted(tuple(map(tuple, t)) for t in out)
    elements = lambda out: sorted(map(tuple, out))
    # name -> (run on a kernel module, normalize output for comparison)
    return {
        "fold: 2000 random lists of 6 words in F_3": (lambda k: [k.fold(3, w) for w in word_lists], folds),
        "canonical_tuples: index 5 in F_3": (lambda k: list(k.canonical_tuples(3, 5)), tuples),
        "canonical_tuples: index 5 in F_2": (lambda k: list(k.canonical_tuples(2, 5)), tuples),
        "closure: S_8": (lambda k: k.closure(s8, 8), elements),
        "closure: AGL(1, 101)": (lambda k: k.closure(affine, 101), elements),
    }


def best_of(fn, kernel, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(kernel)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    rows = []
    for name, (fn, normalize) in workloads().items():
        t_py, out_py = best_of(fn, _pure, args.repeat)
        row = {"workload": name, "python_s": t_py}
        if _fast is not None:
            t_c, out_c = best_of(fn, _fast, args.repeat)
            if normalize(out_py) != normalize(out_c):
                raise SystemExit(f"backends disagree on {name}")
            row.update(cython_s=t_c, speedup=t_py / t_c if t_c else float("inf"))
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if _fast is None:
        print("compiled extension not built; timing the pure-Python backend only")
    print(f"{'workload':45s} {'python':>9s} {'cython':>9s} {'speedup':>8s}")
    for r in rows:
        c = f"{r['cython_s']:8.3f}s" if "cython_s" in r else "        -"
        s = f"{r['speedup']:7.1f}x" if "speedup" in r else "       -"
        print(f"{r['workload']:45s} {r['python_s']:8.3f}s {c} {s}")


if __name__ == "__main__":
    main()
