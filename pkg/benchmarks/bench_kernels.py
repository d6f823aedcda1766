"""Benchmark: compiled extension kernels vs the pure-Python fallback.

Micro level times the sparse multiply-reduce kernel directly on workloads at
representative conductors; macro level re-runs a family computation in a
subprocess with HECKEFAM_PURE=1 to force the fallback.

Usage: python benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

sys.stdout.reconfigure(line_buffering=True)

from heckefam._kernel import pure
from heckefam.cyclotomic import _reduction_table

try:
    from heckefam._kernel import _speedups as compiled
except ImportError:
    compiled = None

from heckefam.ntheory import euler_phi


def random_map(n, size, rng):
    return {
        rng.randrange(euler_phi(n)): Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
        for _ in range(size)
    }


def bench_micro(impl, n, pairs, reps):
    table = _reduction_table(n)
    t0 = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            impl.mul_reduce(a, b, n, table)
    return time.perf_counter() - t0


def micro():
    rng = random.Random(20240817)
    print(f"{'conductor':>10} {'terms':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n, size in ((12, 4), (15, 6), (29, 10), (60, 8)):
        pairs = [(random_map(n, size, rng), random_map(n, size, rng)) for _ in range(60)]
        reps = 40
        t_pure = bench_micro(pure, n, pairs, reps)
        if compiled is None:
            print(f"{n:>10} {size:>6} {t_pure:>10.3f} {'(not built)':>13}")
            continue
        t_comp = bench_micro(compiled, n, pairs, reps)
        print(f"{n:>10} {size:>6} {t_pure:>10.3f} {t_comp:>13.3f} {t_pure / t_comp:>7.2f}x")


MACRO_SNIPPET = """
import time
t0 = time.perf_counter()
from heckefam.groups import dihedral_group
from heckefam.blocks import families
from heckefam import _kernel
W = dihedral_group(21)
fam = families(W)
assert len(fam.parts) == 3
print(f"{_kernel.IMPLEMENTATION}: families(I2(21)) in {time.perf_counter() - t0:.2f}s")
"""


def macro():
    for pure_flag in ("0", "1"):
        env = dict(os.environ)
        if pure_flag == "1":
            env["HECKEFAM_PURE"] = "1"
        else:
            env.pop("HECKEFAM_PURE", None)
        subprocess.run([sys.executable, "-c", MACRO_SNIPPET], env=env, check=True)


if __name__ == "__main__":
    print("== kernel micro-benchmark (sparse cyclotomic multiply-reduce) ==", flush=True)
    micro()
    print("\n== end-to-end (subprocess per kernel) ==", flush=True)
    macro()
