"""Compare the numba kernels with the pure-numpy fallback.

    python benchmarks/bench_kernels.py            # both paths, side by side
    python benchmarks/bench_kernels.py --worker   # current path only (internal)

The fallback is selected with NCT_DISABLE_NUMBA=1, so each path runs in
its own interpreter.
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _cases():
    import numpy as np

    from nct import _kernels
    from nct.addcomb import ExtremalProblem, max_extremal
    from nct.bounds import build_model, min_cover

    models = {n_g: build_model(*n_g) for n_g in [(46, "S"), (64, "S"), (97, "A")]}
    rng = np.random.default_rng(0)
    a = (rng.random(4001) < 0.3).astype(np.int64)
    b = (rng.random(4001) < 0.3).astype(np.int64)

    yield "min_cover S_46", lambda: min_cover(models[46, "S"]).value
    yield "min_cover S_64", lambda: min_cover(models[64, "S"]).value
    yield "min_cover A_97", lambda: min_cover(models[97, "A"]).value
    yield "sum-free n=60", lambda: max_extremal(ExtremalProblem("coprime-sum-free", 60)).maximum
    yield "cube-free n=40", lambda: max_extremal(ExtremalProblem("coprime-cube-free", 40)).maximum
    yield "rep counts n=4001", lambda: int(_kernels.representation_counts(a, b).sum())
    yield "triples n=4001", lambda: int(_kernels.count_triples(a))


def worker(repeat):
    from nct._jit import HAVE_NUMBA

    out = {"numba": HAVE_NUMBA, "cases": {}}
    for name, fn in _cases():
        fn()  # warm-up, pays any compile cost
        best = float("inf")
        for _ in range(repeat):
            t = time.perf_counter()
            value = fn()
            best = min(best, time.perf_counter() - t)
        out["cases"][name] = {"seconds": best, "value": value}
    print(json.dumps(out))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if args.worker:
        worker(args.repeat)
        return
    results = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, NCT_DISABLE_NUMBA=flag)
        p = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        results[label] = json.loads(p.stdout.strip().splitlines()[-1])
    if not results["numba"]["numba"]:
        print("numba is not importable here; both columns use the fallback")
    print(f"{'case':<20}{'numba s':>12}{'numpy s':>12}{'speedup':>10}  agree")
    for name, r in results["numba"]["cases"].items():
        f = results["numpy"]["cases"][name]
        speed = f["seconds"] / r["seconds"] if r["seconds"] else float("inf")
        print(f"{name:<20}{r['seconds']:>12.4f}{f['seconds']:>12.4f}{speed:>10.1f}  {r['value'] == f['value']}")


if __name__ == "__main__":
    main()
