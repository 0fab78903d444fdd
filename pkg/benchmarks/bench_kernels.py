"""Time the compiled and pure-Python index kernels on the same CSR input.

    python benchmarks/bench_kernels.py [--side 700] [--repeat 3]

The input is an L x L grid graph (L*L vertices, ~2*L*L edges) built directly
as CSR arrays, so only kernel time is measured.
"""

import argparse
import timeit
from array import array

from hyperzagreb import _pykernels

try:
    from hyperzagreb import _ckernels
except ImportError:
    _ckernels = None


def grid_csr(side: int):
    indptr = array("q", [0])
    indices = array("q")
    for r in range(side):
        for c in range(side):
            u = r * side + c
            if r > 0:
                indices.append(u - side)
            if c > 0:
                indices.append(u - 1)
            if c < side - 1:
                indices.append(u + 1)
            if r < side - 1:
                indices.append(u + side)
            indptr.append(len(indices))
    return indptr, indices


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--side", type=int, default=700)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    indptr, indices = grid_csr(args.side)
    print(f"grid {args.side}x{args.side}: {len(indptr) - 1} vertices, {len(indices) // 2} edges")
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    results = {}
    for name, mod in backends:
        best = min(timeit.repeat(lambda: mod.index_sums(indptr, indices), number=1, repeat=args.repeat))
        results[name] = (best, mod.index_sums(indptr, indices))
        print(f"{name:>7}: {best * 1e3:9.1f} ms")
    if len(results) == 2:
        assert results["python"][1] == tuple(results["cython"][1]), "backends disagree"
        print(f"speedup: {results['python'][0] / results['cython'][0]:.1f}x (outputs identical)")
    else:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
