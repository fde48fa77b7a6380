"""Time the numpy and numba versions of the loop-shaped kernels side by side.

    python benchmarks/bench_kernels.py [--repeat 20] [--scale desk|paper]

Each pair is first checked for agreement, then timed with ``timeit`` after a
warm-up call (so numba compilation is excluded). Sizes mirror the desk and
paper presets: server batches of 32 instances over groups of clients, and
k-means on one group's concatenated embeddings.
"""
import argparse
import timeit

import numpy as np

from fedgraph import _accel

SCALES = {
    # (batch, clients, width, avg degree, kmeans points, kmeans dim, k)
    "desk": (32, 10, 64, 4, 800, 256, 40),
    "paper": (32, 50, 256, 10, 1200, 1280, 20),
}


def random_csr(n, degree, rng):
    indptr = [0]
    indices = []
    for m in range(n):
        nb = np.sort(rng.choice(n, size=min(n, degree), replace=False))
        indices.extend(nb.tolist())
        indptr.append(len(indices))
    indptr = np.array(indptr, dtype=np.int64)
    indices = np.array(indices, dtype=np.int64)
    counts = np.diff(indptr)
    weights = np.repeat(1.0 / counts, counts)
    return indptr, indices, weights


def cases(scale, rng):
    B, M, d, deg, n, dim, k = SCALES[scale]
    indptr, indices, weights = random_csr(M, deg, rng)
    x = rng.normal(size=(B, M, d))
    pts = rng.normal(size=(n, dim))
    ctr = pts[rng.choice(n, size=k, replace=False)]
    cur = np.full(n, np.inf)
    return {
        "aggregate": (x, indptr, indices, weights),
        "aggregate_adjoint": (x, indptr, indices, weights, M),
        "assign": (pts, ctr),
        "min_sqdist": (pts, ctr[0], cur),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(same(u, v) for u, v in zip(a, b))
    return np.allclose(a, b, rtol=1e-10, atol=1e-10)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--scale", choices=sorted(SCALES), default="desk")
    args = ap.parse_args(argv)

    print(f"numba available: {_accel.HAVE_NUMBA}, used by default: {_accel.USE_NUMBA}")
    print(f"{'kernel':<20}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, call_args in cases(args.scale, np.random.default_rng(0)).items():
        fn_np = getattr(_accel, f"{name}_numpy")
        fn_nb = getattr(_accel, f"{name}_numba")
        ref = fn_np(*call_args)
        if not same(ref, fn_nb(*call_args)):  # also the warm-up / compile call
            raise SystemExit(f"{name}: numpy and numba results differ")
        t_np = min(timeit.repeat(lambda: fn_np(*call_args), number=1, repeat=args.repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: fn_nb(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<20}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
