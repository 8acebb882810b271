"""Compiled kernels vs the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]

Prints the median wall time per call for each kernel and backend, and the
speedup of the compiled version. Both backends are checked for equal output
before timing.
"""
import argparse
import time

import numpy as np

from crowdheads import _fallback

try:
    from crowdheads import _kernels as compiled
except ImportError:
    compiled = None


def _median_time(fn, repeat):
    fn()  # warm up
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def cases(rng):
    # Shapes of one smallconv batch of 100 MNIST images.
    x1 = rng.random((100, 1, 28, 28)).astype(np.float32)
    x2 = rng.random((100, 16, 14, 14)).astype(np.float32)
    cols = rng.random((100 * 14 * 14, 16 * 25)).astype(np.float32)
    pool_in = rng.random((100, 16, 28, 28)).astype(np.float32)
    out, idx = _fallback.maxpool2x2_forward(pool_in)
    dout = rng.random(out.shape).astype(np.float32)
    n, a, k, r = 2000, 10, 5, 6000
    log_theta = np.log(rng.dirichlet(np.ones(k), size=(a, k)))
    log_prior = np.log(np.full(k, 1 / k))
    ex, an = rng.integers(0, n, r), rng.integers(0, a, r)
    counts = np.eye(k)[rng.integers(0, k, r)]
    return {
        "im2col conv1": ("im2col", (x1, 5, 2)),
        "im2col conv2": ("im2col", (x2, 5, 2)),
        "col2im conv2": ("col2im", (cols, 100, 16, 14, 14, 5, 2)),
        "maxpool forward": ("maxpool2x2_forward", (pool_in,)),
        "maxpool backward": ("maxpool2x2_backward", (dout, idx, 28, 28)),
        "em log joint": ("em_log_joint", (log_prior, log_theta, ex, an, counts, n)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<18} {'numpy ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, (fn, call_args) in cases(rng).items():
        ref = getattr(_fallback, fn)
        t_np = _median_time(lambda: ref(*call_args), args.repeat)
        if compiled is None:
            print(f"{name:<18} {1e3 * t_np:>10.3f} {'n/a':>10} {'n/a':>8}")
            continue
        fast = getattr(compiled, fn)
        a, b = ref(*call_args), fast(*call_args)
        for u, v in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
            assert np.allclose(u, v, rtol=0, atol=1e-12), name
        t_cy = _median_time(lambda: fast(*call_args), args.repeat)
        print(f"{name:<18} {1e3 * t_np:>10.3f} {1e3 * t_cy:>10.3f} {t_np / t_cy:>7.2f}x")


if __name__ == "__main__":
    main()
