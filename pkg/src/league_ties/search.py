"""Recursive weighted counting of tied completions for one profile.

Once the first team's takes are fixed, every opponent starts on the
complementary points and all matches among teams 2..n remain open.  Those
matches are searched row by row: team i's row assigns one pair code to each
encounter with a higher-indexed team, encoded base 6 with the nearest
opponent in the least significant digit.  When a row completes, that team's
total is final and the branch survives only if it hits the target exactly;
the branch weight doubles for every code with two home/away realisations.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, replace

from . import kernels
from .profiles import Profile
from .scoring import PAIR_MULTIPLICITY, PAIR_POINTS, complement


def row_code_digits(code: int, width: int) -> tuple[int, ...]:
    """Base-6 digits of a row code, nearest opponent first."""
    if not 0 <= code < 6**width:
        raise ValueError(f"row code {code} out of range for width {width}")
    digits = []
    for _ in range(width):
        code, d = divmod(code, 6)
        digits.append(d)
    return tuple(digits)


def row_code_from_digits(digits: Sequence[int]) -> int:
    """Inverse of :func:`row_code_digits`."""
    value = 0
    for k, d in enumerate(digits):
        if not 0 <= d <= 5:
            raise ValueError(f"bad pair code {d!r} in row digits")
        value += d * 6**k
    return value


@dataclass(frozen=True)
class SearchState:
    """Snapshot of the search between rows.

    ``points`` holds the running totals of teams 2..n (index 0 = team 2);
    ``level`` is the team whose row is assigned next.  ``weight`` is the
    product of multiplicities collected so far, always a power of two.
    """

    target: int
    points: tuple[int, ...]
    level: int
    weight: int = 1

    @property
    def n(self) -> int:
        return len(self.points) + 1


def apply_row(state: SearchState, row: Sequence[int]) -> SearchState | None:
    """Apply one full row of pair codes; ``None`` when the branch is dead.

    The row belongs to team ``state.level`` and must hold one code per
    higher-indexed team.  Dead means: the row owner's now-final total missed
    the target, or some opponent was pushed beyond it.
    """
    n = state.n
    i = state.level
    if not 2 <= i < n:
        raise ValueError(f"level {i} out of range for n={n}")
    if len(row) != n - i:
        raise ValueError(f"team {i}'s row needs {n - i} codes, got {len(row)}")
    points = list(state.points)
    weight = state.weight
    own = i - 2
    for k, code in enumerate(row):
        a, b = PAIR_POINTS[code]
        points[own] += a
        points[own + 1 + k] += b
        if PAIR_MULTIPLICITY[code] == 2:
            weight <<= 1
    if points[own] != state.target:
        return None
    if any(p > state.target for p in points):
        return None
    return replace(state, points=tuple(points), level=i + 1, weight=weight)


def initial_state(profile: Profile) -> SearchState:
    """Search state before any row is assigned: opponents on their complements."""
    return SearchState(
        target=profile.taken,
        points=tuple(complement(t) for t in profile.takes),
        level=2,
    )


def count_completions(
    profile: Profile,
    *,
    strict: bool = False,
    prefix: tuple[int, ...] = (),
) -> int:
    """Weighted number of tied completions of one profile.

    Matches the full-sweep oracle on every input; the recursion merely skips
    branches that cannot recover.  ``strict=True`` drops the mid-row
    overshoot check and inspects totals only at row ends, which is slower
    but useful for differential testing.  ``prefix`` pins the first codes of
    team 2's row so one profile can be split into disjoint sub-searches
    whose results add up to the whole.
    """
    state = initial_state(profile)
    return kernels.completions_search(state.points, state.target, strict, tuple(prefix))


def split_prefixes(profile: Profile, length: int) -> list[tuple[int, ...]]:
    """All prefixes of ``length`` codes for team 2's row of this profile."""
    width = profile.n - 2
    if not 0 <= length <= width:
        raise ValueError(f"prefix length {length} out of range for n={profile.n}")
    prefixes: list[tuple[int, ...]] = [()]
    for _ in range(length):
        prefixes = [p + (d,) for p in prefixes for d in range(6)]
    return prefixes
