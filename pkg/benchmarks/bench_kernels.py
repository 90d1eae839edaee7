"""Compare the compiled enumeration kernels against the pure-Python fallback.

Both backends expose identical functions (see quditline/kernels.py); this
script times the hot ones on the same inputs and prints one table row per
(kernel, modulus) pair.  Usage:

    python3 benchmarks/bench_kernels.py [--moduli 12,36,60] [--repeat 5]
"""

from __future__ import annotations

import argparse
import math
import time

from quditline import _kernels_py

try:
    from quditline import _kernels
except ImportError:
    _kernels = None


def _best_of(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _cases(d: int):
    gens = [
        (b, c) for b in range(d) for c in range(d) if math.gcd(b, c, d) == 1
    ]
    yield "perp_masks", lambda impl: impl.perp_masks(d)
    yield "dedup_points", lambda impl: impl.dedup_points(d)
    yield "union_sweep", lambda impl: impl.union_sweep(d, gens)
    yield "span_mask", lambda impl: impl.span_mask(d, gens, d * d)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--moduli",
        default="12,36,60",
        help="comma-separated moduli to benchmark (default 12,36,60)",
    )
    parser.add_argument("--repeat", type=int, default=5, help="timings per cell; best is kept")
    args = parser.parse_args()
    moduli = [int(tok) for tok in args.moduli.split(",") if tok]

    if _kernels is None:
        print("compiled extension unavailable; timing the pure backend only\n")
    header = f"{'kernel':<14} {'d':>4} {'pure':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for d in moduli:
        for name, call in _cases(d):
            pure = _best_of(lambda: call(_kernels_py), args.repeat)
            if _kernels is not None:
                comp = _best_of(lambda: call(_kernels), args.repeat)
                ratio = f"{pure / comp:8.1f}x" if comp > 0 else "      inf"
                comp_txt = f"{comp * 1e3:10.3f}ms"
            else:
                ratio, comp_txt = "        -", "           -"
            print(f"{name:<14} {d:>4} {pure * 1e3:10.3f}ms {comp_txt} {ratio}")
    if _kernels is not None:
        sample = moduli[-1]
        for name, call in _cases(sample):
            if call(_kernels) != call(_kernels_py):
                raise SystemExit(f"backend outputs diverge on {name}(d={sample})")
        print(f"\nbackends agree bit-for-bit on d={sample}")


if __name__ == "__main__":
    main()
