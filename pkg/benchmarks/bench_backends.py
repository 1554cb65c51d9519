#!/usr/bin/env python3
"""Benchmark the compiled closure/orbit kernels against the pure-Python
fallback on representative matrix groups.

Run from the repository root after an editable install:

    python3 benchmarks/bench_backends.py
"""

from __future__ import annotations

import time

from orbitcert.groups import core_pure

try:
    from orbitcert.groups import _fastcore
except ImportError:
    _fastcore = None


def _flat(rows):
    return tuple(x for row in rows for x in row)


def _companion(coeffs, p):
    """Companion matrix (row-major, flat) of x^n + sum(coeffs[i] x^i)."""
    n = len(coeffs)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = (-coeffs[i]) % p
    return _flat(rows)


CASES = [
    {
        "name": "SL(2,3) closure + orbits",
        "p": 3,
        "dim": 2,
        "generators": [_flat([[1, 1], [0, 1]]), _flat([[0, 2], [1, 0]])],
        "cap": 100,
        "repeat": 200,
    },
    {
        "name": "GL(4,2) closure (20160 elements)",
        "p": 2,
        "dim": 4,
        "generators": [
            _flat([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]),
            _flat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
        ],
        "cap": 30_000,
        "repeat": 1,
    },
    {
        "name": "GL(2,13) closure (26208 elements)",
        "p": 13,
        "dim": 2,
        "generators": [_flat([[2, 0], [0, 1]]), _flat([[12, 1], [12, 0]])],
        "cap": 30_000,
        "repeat": 1,
    },
    {
        "name": "cyclic shift register on GF(2)^14 (16384 vectors)",
        "p": 2,
        "dim": 14,
        "generators": [_companion([1, 1] + [0] * 12, 2)],
        "cap": 30_000,
        "repeat": 3,
    },
]


def _time(func, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = func()
        best = min(best, time.perf_counter() - started)
    return best, result


def run_case(case, backend):
    gens, p, dim = case["generators"], case["p"], case["dim"]
    close_time, closed = _time(
        lambda: backend.close_set(gens, p, dim, case["cap"]), case["repeat"]
    )
    if closed is None:
        raise RuntimeError(f"cap too small for {case['name']}")
    orbit_time, sizes = _time(
        lambda: backend.orbit_partition(gens, p, dim), case["repeat"]
    )
    return close_time, orbit_time, len(closed), sorted(sizes)[-1]


def main() -> int:
    backends = [("pure", core_pure)]
    if _fastcore is not None:
        backends.append(("compiled", _fastcore))
    else:
        print("compiled backend not built; timing the pure backend only")
    print(
        f"{'case':<48} {'backend':<9} {'close (s)':>10} {'orbits (s)':>11} "
        f"{'|G|':>7} {'max orbit':>10}"
    )
    timings = {}
    for case in CASES:
        for name, backend in backends:
            close_time, orbit_time, order, max_orbit = run_case(case, backend)
            timings[(case["name"], name)] = (close_time, orbit_time)
            print(
                f"{case['name']:<48} {name:<9} {close_time:>10.4f} "
                f"{orbit_time:>11.4f} {order:>7} {max_orbit:>10}"
            )
        if _fastcore is not None:
            pure = timings[(case["name"], "pure")]
            fast = timings[(case["name"], "compiled")]
            speedup_close = pure[0] / fast[0] if fast[0] else float("inf")
            speedup_orbit = pure[1] / fast[1] if fast[1] else float("inf")
            print(
                f"{'':<48} {'speedup':<9} {speedup_close:>9.1f}x "
                f"{speedup_orbit:>10.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
