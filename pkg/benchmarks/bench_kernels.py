"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

Covers the batched sparse products on the 28x28 grid operators, patch
extraction, the Adam update and one full SCCONV training step.
"""
import argparse
import time

import numpy as np

from simplicial_conv import kernels
from simplicial_conv.complex import grid_complex
from simplicial_conv.experiment import Problem
from simplicial_conv.nn import adam_step, build_model


def best_of(fn, repeat):
    fn()  # warm-up (JIT compile, caches)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    problem = Problem()
    ops = problem.ops
    out = {}
    for key, feats in (("00", 16), ("11", 32), ("12", 32), ("22", 32)):
        op = ops.prop[key]
        x = rng.normal(size=(8, op.matrix.shape[1], feats))
        out[f"spmm prop[{key}] batch 8 x {feats}"] = lambda op=op, x=x: op.apply(x)
    _, geom = grid_complex(28, 28, 4, 4)
    imgs = rng.random((1000, 28, 28))
    r0, c0 = geom.patch_origins()
    out["patches 1000 images"] = lambda: kernels.extract_patches(imgs, r0, c0, 4)
    p, g = rng.normal(size=(5584, 32)), rng.normal(size=(5584, 32))
    m, v = np.zeros_like(p), np.zeros_like(p)
    out["adam update 5584x32"] = lambda: kernels.adam_update(p, g, m, v, 1e-4, 0.9, 0.999, 0.1, 0.001, 1e-8)
    model = build_model("scconv-conv1d-fc", ops, problem.graph_ops, problem.in_dims, rng)
    x = problem.features(rng.random((8, 28, 28)))
    y = rng.integers(0, 10, 8)

    def step():
        model.params.zero_grad()
        model.loss(x, y, train=True, rng=rng).backward()
        adam_step(model.params, 1e-4)

    out["scconv train step batch 8"] = step
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if not kernels.USE_NUMBA:
        print("numba path disabled (SIMPLICIAL_CONV_DISABLE_NUMBA); comparing numpy with itself")
    numba_default = kernels.USE_NUMBA
    rng = np.random.default_rng(0)
    print(f"{'case':<34} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, fn in cases(rng).items():
        kernels.USE_NUMBA = numba_default
        t_jit = best_of(fn, args.repeat)
        kernels.USE_NUMBA = False
        t_np = best_of(fn, args.repeat)
        print(f"{name:<34} {1e3 * t_jit:>10.3f} {1e3 * t_np:>10.3f} {t_np / t_jit:>7.2f}x")
    kernels.USE_NUMBA = numba_default


if __name__ == "__main__":
    main()
