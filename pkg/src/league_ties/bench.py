"""Benchmark the compiled kernels against their pure-Python twins.

Three workloads cover the hot paths: the base-3 season sweep, the
unpruned completion sweep, and the recursive completion search summed over
the SEARCH profiles of one league size.  Each workload checks that both
backends return identical values before timing is reported.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .kernels import available_backends
from .profiles import ProfileClass, classify_profile, iter_profiles
from .scoring import complement


@dataclass(frozen=True)
class BenchResult:
    workload: str
    backend: str
    seconds: float
    value: int


def _workloads(teams: int) -> list[tuple[str, callable]]:
    searched = [
        p for p in iter_profiles(teams)
        if classify_profile(p) is ProfileClass.SEARCH
    ]
    sweep_profiles = [
        p for p in iter_profiles(min(teams, 5))
        if classify_profile(p) is ProfileClass.SEARCH
    ]

    def season_sweep(impl) -> int:
        return impl.count_tied_range(4, 0, 3**12)

    def completion_sweep(impl) -> int:
        total = 0
        for p in sweep_profiles:
            base = tuple(complement(t) for t in p.takes)
            total += impl.completions_sweep(base, p.taken)
        return total

    def completion_search(impl) -> int:
        total = 0
        for p in searched:
            base = tuple(complement(t) for t in p.takes)
            total += impl.completions_search(base, p.taken, False, ())
        return total

    return [
        ("season sweep n=4", season_sweep),
        (f"completion sweep n={min(teams, 5)}", completion_sweep),
        (f"completion search n={teams}", completion_search),
    ]


def run_benchmarks(teams: int = 5, repeat: int = 3) -> list[BenchResult]:
    """Time each workload on every available backend (best of ``repeat``)."""
    if not 3 <= teams <= 7:
        raise ValueError("bench supports 3 <= teams <= 7")
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    backends = available_backends()
    results: list[BenchResult] = []
    for name, work in _workloads(teams):
        values = {}
        for backend_name, impl in backends.items():
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                value = work(impl)
                best = min(best, time.perf_counter() - t0)
            values[backend_name] = value
            results.append(BenchResult(name, backend_name, best, value))
        if len(set(values.values())) > 1:
            raise AssertionError(f"backend disagreement on {name}: {values}")
    return results


def format_results(results: list[BenchResult]) -> str:
    lines = []
    by_workload: dict[str, dict[str, BenchResult]] = {}
    for r in results:
        by_workload.setdefault(r.workload, {})[r.backend] = r
    for workload, per_backend in by_workload.items():
        lines.append(f"{workload}  (value={next(iter(per_backend.values())).value})")
        for backend, r in per_backend.items():
            lines.append(f"  {backend:<9} {r.seconds * 1000:10.2f} ms")
        if "pure" in per_backend and "compiled" in per_backend:
            ratio = per_backend["pure"].seconds / per_backend["compiled"].seconds
            lines.append(f"  speedup   {ratio:10.1f}x")
    if not any(r.backend == "compiled" for r in results):
        lines.append("compiled backend not built; showing pure-Python timings only")
    return "\n".join(lines)
