"""Composition of the exact tied-season count.

The total for ``n`` teams is assembled from the profile classes: the single
all-draw outcome, the draw-free class counted in closed form by Eulerian
digraphs, and one weighted search per SEARCH profile.  Per-profile results
are exact integers and combine by addition, so worker count, scheduling
order and interruption points cannot change the total.

A checkpoint ledger (one header line, then one JSON record per finished
profile) makes long runs resumable: on restart, profiles already on record
are not searched again.  All counts are carried as Python integers end to
end; the compiled kernels raise instead of wrapping, so a reported total is
exact or the run fails loudly.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path

from .errors import CheckpointError, LeagueTiesError, SizeRefusedError
from .eulerian import eulerian_count
from .profiles import (
    Profile,
    ProfileClass,
    classify_profile,
    doubling_factor,
    iter_profiles,
    representation_factor,
)
from .scoring import LeagueSize, as_league_size
from .search import count_completions, split_prefixes

ENGINE_VERSION = "0.1.0"

#: Largest league the optimised counter accepts.  n=8 finishes but is a
#: multi-hour batch job, not a desk-scale run; n=9 would need a different
#: algorithm.
MAX_TEAMS = 8

#: Previously computed totals (OEIS A380592), used as reference values by
#: the verify command and the test suite.  The n=8 value is documented here
#: precisely because reproducing it is an opt-in long run.
KNOWN_TOTALS: dict[int, int] = {
    2: 3,
    3: 27,
    4: 1083,
    5: 296081,
    6: 696779523,
    7: 16503494334993,
    8: 3439079361325736243,
}

#: Profiles whose raw search space reaches this many leaves are split into
#: per-prefix subtasks when running with several workers.
SPLIT_LEAF_THRESHOLD = 6**10

_MAIN_PID = os.getpid()
_FAIL_ONCE_TAKES: frozenset[tuple[int, ...]] = frozenset()  # test hook


@dataclass(frozen=True)
class ClassStats:
    """Profile count and exact contribution of one profile class."""

    profiles: int
    contribution: int


@dataclass(frozen=True)
class TiedCountReport:
    """Result of one optimised count."""

    n: int
    total: int
    class_breakdown: dict[str, ClassStats]
    searched_profiles: int
    elapsed: float
    workers: int
    resumed_from: str | None = None

    def breakdown_json(self) -> dict[str, dict[str, object]]:
        """Breakdown with contributions as decimal strings, for serialising."""
        return {
            tag: {"profiles": st.profiles, "contribution": str(st.contribution)}
            for tag, st in self.class_breakdown.items()
        }


def _options_digest(n: int, strict: bool) -> str:
    blob = json.dumps({"n": n, "strict": strict}, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


class CheckpointLedger:
    """Append-only per-profile record of completion counts.

    Line 1 is a header pinning the league size and an options digest; each
    further line records one searched profile.  Only the final line may ever
    be damaged (a killed writer), so a corrupt trailing record is dropped
    with a warning while damage anywhere else is refused as a stale or
    foreign file.
    """

    def __init__(self, path: str | Path, n: int, strict: bool):
        self.path = Path(path)
        self.n = n
        self.strict = strict
        self.digest = _options_digest(n, strict)
        self._handle = None

    def header_line(self) -> str:
        header = {
            "kind": "header",
            "n": self.n,
            "version": ENGINE_VERSION,
            "strict": self.strict,
            "digest": self.digest,
        }
        return json.dumps(header, sort_keys=True)

    def load(self) -> dict[tuple[int, ...], int]:
        """Validated completion counts already on record, keyed by takes."""
        if not self.path.exists() or self.path.stat().st_size == 0:
            return {}
        raw = self.path.read_bytes()
        lines = raw.split(b"\n")
        if lines and lines[-1] == b"":
            lines.pop()
        try:
            header = json.loads(lines[0])
        except (json.JSONDecodeError, IndexError) as exc:
            raise CheckpointError(f"{self.path}: unreadable header: {exc}") from None
        for key, want in (("kind", "header"), ("n", self.n), ("digest", self.digest)):
            if header.get(key) != want:
                raise CheckpointError(
                    f"{self.path}: header {key}={header.get(key)!r} does not match "
                    f"the requested run ({key}={want!r}); refusing to resume"
                )

        entries: dict[tuple[int, ...], int] = {}
        offset = len(lines[0]) + 1
        for idx, line in enumerate(lines[1:], start=1):
            try:
                entries_update = self._parse_entry(line)
            except (ValueError, KeyError, TypeError) as exc:
                if idx == len(lines) - 1:
                    warnings.warn(
                        f"{self.path}: dropping corrupt trailing record ({exc})",
                        stacklevel=2,
                    )
                    with open(self.path, "r+b") as fh:
                        fh.truncate(offset)
                    break
                raise CheckpointError(
                    f"{self.path}: corrupt record on line {idx + 1}: {exc}"
                ) from None
            takes, completions = entries_update
            if takes in entries and entries[takes] != completions:
                raise CheckpointError(
                    f"{self.path}: conflicting records for profile {takes}"
                )
            entries[takes] = completions
            offset += len(line) + 1
        return entries

    def _parse_entry(self, line: bytes) -> tuple[tuple[int, ...], int]:
        record = json.loads(line)
        if record.get("kind") != "entry":
            raise ValueError(f"unexpected record kind {record.get('kind')!r}")
        takes = tuple(record["takes"])
        profile = Profile(takes)
        completions = int(record["completions"])
        if completions < 0:
            raise ValueError("negative completion count")
        if record["representation"] != representation_factor(profile):
            raise ValueError(f"representation factor mismatch for {takes}")
        if record["doubling"] != doubling_factor(profile):
            raise ValueError(f"doubling factor mismatch for {takes}")
        return takes, completions

    def open_for_append(self) -> None:
        fresh = not self.path.exists() or self.path.stat().st_size == 0
        try:
            self._handle = open(self.path, "a", encoding="ascii")
        except OSError as exc:
            raise CheckpointError(f"cannot write checkpoint {self.path}: {exc}") from exc
        if fresh:
            self._handle.write(self.header_line() + "\n")
            self._handle.flush()

    def append(self, takes: tuple[int, ...], completions: int, worker: int) -> None:
        profile = Profile(takes)
        record = {
            "kind": "entry",
            "takes": list(takes),
            "completions": str(completions),
            "representation": representation_factor(profile),
            "doubling": doubling_factor(profile),
            "worker": worker,
            "ts": round(time.time(), 3),
        }
        assert self._handle is not None
        self._handle.write(json.dumps(record, sort_keys=True) + "\n")
        self._handle.flush()

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None

    @staticmethod
    def read_header(path: str | Path) -> dict:
        """Header of an existing ledger (for resuming without knowing n)."""
        path = Path(path)
        try:
            with open(path, encoding="ascii") as fh:
                first = fh.readline()
            header = json.loads(first)
        except (OSError, json.JSONDecodeError) as exc:
            raise CheckpointError(f"{path}: unreadable header: {exc}") from None
        if header.get("kind") != "header" or "n" not in header:
            raise CheckpointError(f"{path}: not a checkpoint ledger")
        return header


def _search_task(
    args: tuple[tuple[int, ...], bool, tuple[int, ...]],
) -> tuple[tuple[int, ...], tuple[int, ...], int | None, str | None]:
    takes, strict, prefix = args
    try:
        if takes in _FAIL_ONCE_TAKES and os.getpid() != _MAIN_PID:
            raise RuntimeError("injected worker failure")
        count = count_completions(Profile(takes), strict=strict, prefix=prefix)
        return takes, prefix, count, None
    except Exception as exc:  # report back; the scheduler retries in-process
        return takes, prefix, None, f"{type(exc).__name__}: {exc}"


def count_tied(
    size: LeagueSize | int,
    *,
    workers: int = 1,
    checkpoint: str | Path | None = None,
    strict: bool = False,
    split_prefix: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> TiedCountReport:
    """Exact number of season outcomes with all teams level on points.

    Args:
        size: team count (or :class:`LeagueSize`), 2..8.
        workers: search worker processes; any value yields the same total.
        checkpoint: optional ledger path for interruptable runs.
        strict: disable mid-row overshoot pruning in the searches.
        split_prefix: codes of team 2's row pinned per subtask when a
            profile is split across workers (default: automatic).
        progress: callback ``(profiles_done, profiles_total)`` over the
            SEARCH class, including profiles restored from the ledger.
    """
    size = as_league_size(size)
    n = size.n
    if n > MAX_TEAMS:
        raise SizeRefusedError(
            f"optimised counter supports 2 <= n <= {MAX_TEAMS}; n={n} needs a "
            f"different algorithm"
        )
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.perf_counter()

    stats = {cls: 0 for cls in ProfileClass}
    searches: list[tuple[tuple[int, ...], int]] = []  # (takes, rep * dbl)
    for profile in iter_profiles(n):
        cls = classify_profile(profile)
        stats[cls] += 1
        if cls is ProfileClass.SEARCH:
            weight = representation_factor(profile) * doubling_factor(profile)
            searches.append((profile.takes, weight))

    ledger: CheckpointLedger | None = None
    recorded: dict[tuple[int, ...], int] = {}
    resumed_from: str | None = None
    if checkpoint is not None:
        ledger = CheckpointLedger(checkpoint, n, strict)
        recorded = ledger.load()
        known = {takes for takes, _ in searches}
        foreign = set(recorded) - known
        if foreign:
            raise CheckpointError(
                f"{ledger.path}: records for profiles outside the SEARCH class "
                f"of n={n}: {sorted(foreign)[:3]}..."
            )
        if recorded:
            resumed_from = str(ledger.path)
        ledger.open_for_append()

    try:
        search_total, done = _run_searches(
            searches, recorded, n, workers, strict, split_prefix, ledger, progress
        )
    finally:
        if ledger is not None:
            ledger.close()

    breakdown: dict[str, ClassStats] = {}
    for cls in ProfileClass:
        if cls is ProfileClass.ALL_DRAW_SPECIAL:
            contribution = 1
        elif cls is ProfileClass.EULERIAN_SPECIAL:
            contribution = eulerian_count(n)
        elif cls is ProfileClass.SEARCH:
            contribution = search_total
        else:
            contribution = 0
        breakdown[cls.value] = ClassStats(stats[cls], contribution)

    total = sum(st.contribution for st in breakdown.values())
    return TiedCountReport(
        n=n,
        total=total,
        class_breakdown=breakdown,
        searched_profiles=len(searches),
        elapsed=time.perf_counter() - start,
        workers=workers,
        resumed_from=resumed_from,
    )


def _run_searches(
    searches: Sequence[tuple[tuple[int, ...], int]],
    recorded: dict[tuple[int, ...], int],
    n: int,
    workers: int,
    strict: bool,
    split_prefix: int | None,
    ledger: CheckpointLedger | None,
    progress: Callable[[int, int], None] | None,
) -> tuple[int, int]:
    """Run all outstanding searches; return (weighted sum, profiles done)."""
    weights = dict(searches)
    total = sum(weights[takes] * completions for takes, completions in recorded.items())
    done = len(recorded)
    if progress is not None and done:
        progress(done, len(searches))

    pending = [takes for takes, _ in searches if takes not in recorded]
    if not pending:
        return total, done

    if split_prefix is None:
        raw_leaves = 6 ** ((n - 1) * (n - 2) // 2)
        split_prefix = 2 if workers > 1 and raw_leaves >= SPLIT_LEAF_THRESHOLD else 0

    tasks: list[tuple[tuple[int, ...], bool, tuple[int, ...]]] = []
    parts_needed: dict[tuple[int, ...], int] = {}
    for takes in pending:
        prefixes = split_prefixes(Profile(takes), split_prefix)
        parts_needed[takes] = len(prefixes)
        tasks.extend((takes, strict, prefix) for prefix in prefixes)

    partial: dict[tuple[int, ...], int] = {takes: 0 for takes in pending}
    failed: list[tuple[tuple[tuple[int, ...], bool, tuple[int, ...]], str]] = []

    def consume(result, worker_id: int) -> None:
        nonlocal total, done
        takes, prefix, count, error = result
        if error is not None:
            failed.append(((takes, strict, prefix), error))
            return
        partial[takes] += count
        parts_needed[takes] -= 1
        if parts_needed[takes] == 0:
            completions = partial.pop(takes)
            total += weights[takes] * completions
            done += 1
            if ledger is not None:
                ledger.append(takes, completions, worker_id)
            if progress is not None:
                progress(done, len(searches))

    if workers == 1:
        for task in tasks:
            consume(_search_task(task), 0)
    else:
        with Pool(workers) as pool:
            for result in pool.imap_unordered(_search_task, tasks):
                consume(result, 1)

    if failed:
        # One in-process retry per failed subtask; a second failure aborts.
        retry, failed = failed, []
        for task, _ in retry:
            consume(_search_task(task), 0)
        if failed:
            (takes, _, prefix), error = failed[0]
            raise LeagueTiesError(
                f"search failed twice for profile {takes} (prefix {prefix}): {error}"
            )
    return total, done


def resume(
    checkpoint: str | Path,
    *,
    workers: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> TiedCountReport:
    """Finish an interrupted count from its checkpoint ledger."""
    header = CheckpointLedger.read_header(checkpoint)
    return count_tied(
        int(header["n"]),
        workers=workers,
        checkpoint=checkpoint,
        strict=bool(header.get("strict", False)),
        progress=progress,
    )
