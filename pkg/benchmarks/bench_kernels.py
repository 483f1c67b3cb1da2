"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row is a kernel at a shape typical of the small presets; both
backends are checked for equal output before timing.
"""
import argparse
import timeit

import numpy as np

from csnet import _pykernels

try:
    from csnet import _ckernels
except ImportError:
    _ckernels = None

def _inputs(rng):
    x = rng.standard_normal((100, 32, 30, 30)).astype(np.float32)
    y = rng.standard_normal((100, 32, 28, 28)).astype(np.float32)
    cols = _pykernels.im2col(x, 3, 3)
    _, arg = _pykernels.maxpool_forward(y, 3, 3, 2, 2, 14, 14)
    g = rng.standard_normal((100, 32, 14, 14)).astype(np.float32)
    return [
        ("im2col      100x32x30x30 k3x3", "im2col", (x, 3, 3)),
        ("col2im      100x32x30x30 k3x3", "col2im", (cols, 100, 32, 30, 30, 3, 3)),
        ("maxpool fwd 100x32x28x28 3x3/2", "maxpool_forward", (y, 3, 3, 2, 2, 14, 14)),
        ("maxpool bwd 100x32x14x14 -> 28x28", "maxpool_backward", (g, arg, 28, 28)),
    ]


def _same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(u, v) for u, v in zip(a, b))
    return np.allclose(a, b, rtol=1e-6, atol=1e-6)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; run `pip install --no-build-isolation -e .` first")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':<36}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for label, fn, call_args in _inputs(rng):
        py, cy = getattr(_pykernels, fn), getattr(_ckernels, fn)
        if not _same(py(*call_args), cy(*call_args)):
            raise SystemExit(f"{label}: backends disagree")
        tp = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: cy(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:<36}{tp:>11.2f}{tc:>11.2f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
