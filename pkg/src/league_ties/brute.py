"""Ground-truth counters by full enumeration.

Two oracles live here.  The season sweep walks all ``3**M`` base-3 season
encodings and counts the outcomes with every team level on points.  The
completion sweep walks all pair-code assignments of the matches among the
non-leading teams for one fixed take vector of the first team.  Both are
deliberately free of the symmetry and pruning arguments used by the
optimised counter, which is exactly what makes them useful as oracles.
"""

from __future__ import annotations

from collections.abc import Sequence
from multiprocessing import Pool

from . import kernels
from .errors import SizeRefusedError
from .scoring import (
    LeagueSize,
    TAKE_VALUES,
    as_league_size,
    complement,
    match_order,
    result_points,
)

#: Largest n swept by default; 3**20 encodings is the desk-scale ceiling.
BRUTE_CEILING = 5

#: Default number of encodings per work chunk.
DEFAULT_CHUNK = 3**10


def encode_outcome(results: Sequence[int], size: LeagueSize | int) -> int:
    """Base-3 encoding of a full season, digit i = result of match i."""
    size = as_league_size(size)
    if len(results) != size.matches:
        raise ValueError(f"expected {size.matches} results, got {len(results)}")
    value = 0
    for i, r in enumerate(results):
        if r not in (0, 1, 2):
            raise ValueError(f"bad result {r!r} at match {i}")
        value += r * 3**i
    return value


def decode_outcome(encoding: int, size: LeagueSize | int) -> tuple[int, ...]:
    """Base-3 digits of ``encoding`` in canonical match order."""
    size = as_league_size(size)
    if not 0 <= encoding < 3**size.matches:
        raise ValueError(f"encoding {encoding} out of range for n={size.n}")
    digits = []
    e = encoding
    for _ in range(size.matches):
        e, r = divmod(e, 3)
        digits.append(r)
    return tuple(digits)


def tally_points(results: Sequence[int], size: LeagueSize | int) -> tuple[int, ...]:
    """Per-team point totals of one full season of match results."""
    size = as_league_size(size)
    if len(results) != size.matches:
        raise ValueError(f"expected {size.matches} results, got {len(results)}")
    points = [0] * size.n
    for (h, a), r in zip(match_order(size.n), results):
        ph, pa = result_points(r)
        points[h] += ph
        points[a] += pa
    return tuple(points)


def _count_range_task(args: tuple[int, int, int]) -> int:
    n, start, stop = args
    return kernels.count_tied_range(n, start, stop)


def count_tied_bruteforce(
    size: LeagueSize | int,
    *,
    allow_large: bool = False,
    workers: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> int:
    """Count tied outcomes by sweeping all ``3**M`` season encodings.

    Refuses ``n > 5`` unless ``allow_large`` is set: the n=5 sweep already
    visits ~3.5e9 encodings and every further team multiplies the space by
    ``3**(2n)``.  The sweep is split into contiguous ranges of ``chunk``
    encodings; partial counts combine by addition, so any ``workers`` count
    gives the same total.
    """
    size = as_league_size(size)
    if size.n > BRUTE_CEILING and not allow_large:
        raise SizeRefusedError(
            f"brute-force sweep of n={size.n} means 3**{size.matches} outcomes; "
            f"the default ceiling is n={BRUTE_CEILING} (pass allow_large to override)"
        )
    if chunk < 1:
        raise ValueError("chunk must be positive")
    space = 3**size.matches
    ranges = [(size.n, s, min(s + chunk, space)) for s in range(0, space, chunk)]
    if workers <= 1:
        return sum(_count_range_task(r) for r in ranges)
    with Pool(workers) as pool:
        return sum(pool.imap_unordered(_count_range_task, ranges, chunksize=16))


def _check_takes(takes: Sequence[int], n: int) -> tuple[int, ...]:
    takes = tuple(takes)
    if len(takes) != n - 1:
        raise ValueError(f"need {n - 1} takes for n={n}, got {len(takes)}")
    for t in takes:
        if t not in TAKE_VALUES:
            raise ValueError(f"bad take {t!r}; must be one of {TAKE_VALUES}")
    return takes


def count_completions_bruteforce(
    takes: Sequence[int],
    size: LeagueSize | int,
    *,
    allow_large: bool = False,
) -> int:
    """Weighted completions of one ordered take vector, by full sweep.

    ``takes[k]`` is what the first team takes from opponent k+2; that
    opponent starts on the complementary points.  Every assignment of pair
    codes to the encounters among teams 2..n is visited and those ending
    with all of them exactly on the first team's total contribute the
    product of their code multiplicities.  The first team's own doubling
    and the orderings of ``takes`` are *not* included here.
    """
    size = as_league_size(size)
    if size.n > BRUTE_CEILING and not allow_large:
        raise SizeRefusedError(
            f"completion sweep of n={size.n} means 6**{size.rest_matches // 2} "
            f"assignments; the default ceiling is n={BRUTE_CEILING}"
        )
    takes = _check_takes(takes, size.n)
    base = tuple(complement(t) for t in takes)
    return kernels.completions_sweep(base, sum(takes))
