"""Benchmark the compiled mod-p kernels against the pure-Python twin.

Runs the primitive operations on sizes typical for the graded-linear-algebra
engines, then one end-to-end workload (the linear-annihilator scan over a
small Artinian quotient, both backends).

    python benchmarks/bench_kernels.py [--forms N]
"""

import argparse
import random
import time

from koszulkit import _kernels_py as KP

try:
    from koszulkit import _kernels as KC
except ImportError:
    KC = None


def bench(label, fn, repeats):
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def bench_primitives():
    rng = random.Random(1)
    sizes = [(12, 52), (52, 102), (102, 90), (300, 300)]
    p = 3
    print(f"{'operation':<28}{'python':>12}{'compiled':>12}{'speedup':>9}")
    for n, m in sizes:
        flat = bytes(rng.randrange(p) for _ in range(n * m))
        repeats = max(1, 40000 // (n * m))
        tp = bench("", lambda: KP.rref(bytearray(flat), n, m, p), max(1, repeats // 8))
        row = f"rref {n}x{m} mod {p}"
        if KC is not None:
            tc = bench("", lambda: KC.rref(bytearray(flat), n, m, p), repeats * 4)
            print(f"{row:<28}{tp * 1e3:>10.2f}ms{tc * 1e3:>10.3f}ms{tp / tc:>8.0f}x")
        else:
            print(f"{row:<28}{tp * 1e3:>10.2f}ms{'-':>12}{'-':>9}")
    for n, m in [(12, 52), (52, 102)]:
        flat = bytes(rng.randrange(p) for _ in range(n * m))
        tp = bench("", lambda: KP.left_kernel(flat, n, m, p), 3)
        row = f"left_kernel {n}x{m}"
        if KC is not None:
            tc = bench("", lambda: KC.left_kernel(flat, n, m, p), 200)
            print(f"{row:<28}{tp * 1e3:>10.2f}ms{tc * 1e3:>10.3f}ms{tp / tc:>8.0f}x")
    n, m, k = 300, 52, 102
    a = bytes(rng.randrange(p) for _ in range(n * m))
    b = bytes(rng.randrange(p) for _ in range(m * k))
    tp = bench("", lambda: KP.matmul(a, n, m, b, k, p), 2)
    row = f"matmul {n}x{m}x{k}"
    if KC is not None:
        tc = bench("", lambda: KC.matmul(a, n, m, b, k, p), 200)
        print(f"{row:<28}{tp * 1e3:>10.2f}ms{tc * 1e3:>10.3f}ms{tp / tc:>8.0f}x")


def bench_scan(form_limit):
    """End-to-end: annihilator-linearity scan over a 6-variable Artinian
    quotient, forced onto each backend in a subprocess."""
    import subprocess
    import sys

    snippet = f"""
import itertools, time
from koszulkit.quotient import QuotientRing, _artinian_scan
from koszulkit.rings import GF, DegRevLex, PolyRing
ring = PolyRing(GF(3), list("uvwxyz"), DegRevLex(6))
gens = [ring.parse(f"{{v}}^2") for v in "uvwxyz"]
gens += [ring.parse(s) for s in ("u*(v-w)", "v*(u-w)", "x*(y-z)", "y*(x-z)")]
R = QuotientRing(ring, gens)
t0 = time.perf_counter()
hits = sum(1 for _, ok in itertools.islice(_artinian_scan(R), {form_limit}) if ok)
print(f"{{hits}} hits {{time.perf_counter() - t0:.2f}}s")
"""
    for env_label, env_extra in (("compiled", {}), ("python", {"KOSZULKIT_PUREPYTHON": "1"})):
        if env_label == "compiled" and KC is None:
            continue
        import os

        env = dict(os.environ, **env_extra)
        out = subprocess.run(
            [sys.executable, "-c", snippet], capture_output=True, text=True, env=env
        )
        print(f"scan[{env_label:>8}] ({form_limit} forms): {out.stdout.strip()}"
              + (f"  [{out.stderr.strip()}]" if out.returncode else ""))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--forms", type=int, default=5000,
                    help="forms to scan in the end-to-end benchmark")
    args = ap.parse_args()
    if KC is None:
        print("note: compiled extension not built; showing pure-Python only")
    bench_primitives()
    bench_scan(args.forms)


if __name__ == "__main__":
    main()
