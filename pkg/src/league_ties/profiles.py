"""First-team profiles: canonical take vectors, their weights, classification.

Any ordering of the first team's per-opponent takes completes to a tied
table in the same number of ways, so only the weakly descending ordering
(the profile) is ever searched and the result is scaled by the number of
distinct orderings.  A second factor of 2 per doubled take accounts for the
two home/away realisations of the takes 1, 3 and 4.

Classification sorts each profile into one bucket: provably zero
contribution (four pruning reasons), a closed-form special (the all-draw
outcome, or the draw-free class counted by Eulerian digraphs), or a genuine
search case.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass
from math import factorial

from .scoring import DOUBLED_TAKES, TAKE_VALUES, complement

_DESCENDING_TAKES = tuple(sorted(TAKE_VALUES, reverse=True))


@dataclass(frozen=True)
class Profile:
    """Weakly descending takes of the first team against its opponents."""

    takes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.takes) < 1:
            raise ValueError("profile must cover at least one opponent")
        for t in self.takes:
            if t not in TAKE_VALUES:
                raise ValueError(f"bad take {t!r}; must be one of {TAKE_VALUES}")
        if any(a < b for a, b in zip(self.takes, self.takes[1:])):
            raise ValueError(f"takes must be weakly descending, got {self.takes}")

    @property
    def n(self) -> int:
        """Number of teams in the league this profile belongs to."""
        return len(self.takes) + 1

    @property
    def taken(self) -> int:
        """Points the first team takes in total."""
        return sum(self.takes)

    @property
    def conceded(self) -> int:
        """Points the opponents take against the first team in total."""
        return sum(complement(t) for t in self.takes)


class ProfileClass(enum.Enum):
    """Disposition of one profile in the optimised count."""

    PRUNED_LOW = "PRUNED_LOW"
    ALL_DRAW_SPECIAL = "ALL_DRAW_SPECIAL"
    PRUNED_SPREAD_LOW = "PRUNED_SPREAD_LOW"
    SEARCH = "SEARCH"
    PRUNED_SPREAD_HIGH = "PRUNED_SPREAD_HIGH"
    EULERIAN_SPECIAL = "EULERIAN_SPECIAL"
    PRUNED_HIGH = "PRUNED_HIGH"


#: Classes that provably contribute nothing.
PRUNED_CLASSES = frozenset(
    {
        ProfileClass.PRUNED_LOW,
        ProfileClass.PRUNED_SPREAD_LOW,
        ProfileClass.PRUNED_SPREAD_HIGH,
        ProfileClass.PRUNED_HIGH,
    }
)


def iter_profiles(n: int) -> Iterator[Profile]:
    """All profiles for an ``n``-team league, lexicographically descending.

    Emits every weakly descending length ``n-1`` sequence over the take
    values exactly once, starting at (6, 6, ..., 6) and ending at
    (0, 0, ..., 0).
    """
    if n < 2:
        raise ValueError(f"a league needs at least 2 teams, got {n}")

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[Profile]:
        if remaining == 0:
            yield Profile(tuple(prefix))
            return
        for v in _DESCENDING_TAKES:
            if v <= cap:
                prefix.append(v)
                yield from rec(remaining - 1, v, prefix)
                prefix.pop()

    yield from rec(n - 1, 6, [])


def representation_factor(profile: Profile) -> int:
    """Number of distinct orderings of the profile's takes."""
    result = factorial(len(profile.takes))
    for v in set(profile.takes):
        result //= factorial(profile.takes.count(v))
    return result


def doubling_factor(profile: Profile) -> int:
    """2 to the number of takes with two home/away realisations (1, 3, 4)."""
    return 2 ** sum(1 for t in profile.takes if t in DOUBLED_TAKES)


def classify_profile(profile: Profile) -> ProfileClass:
    """Assign the unique class of a profile.

    The cutoffs on the first team's total come first; they subsume the two
    closed-form specials.  Profiles inside the open interval are then tested
    against bounds on the points the remaining teams must distribute among
    themselves: with every team finishing on the first team's total P, those
    teams' mutual matches must hand out exactly ``(n-1)*P - conceded``
    points, while each of the L such matches hands out 2 or 3.  For n >= 5
    the bounds sharpen to [2L+3, 3L-3] (a tied table needs at least three
    non-draws and at least three draws among those matches once the first
    team sits in the open interval); the sharpened form is not established
    for n <= 4, so the plain [2L, 3L] is used there.
    """
    n = profile.n
    p = profile.taken
    if p < 2 * n - 2:
        return ProfileClass.PRUNED_LOW
    if p == 2 * n - 2:
        # Only the all-draw season reaches a tie this low, so the one
        # all-2s profile carries that outcome and its siblings are dead.
        if all(t == 2 for t in profile.takes):
            return ProfileClass.ALL_DRAW_SPECIAL
        return ProfileClass.PRUNED_LOW
    if p == 3 * n - 3:
        # A tie this high forces a draw-free season, so any profile with a
        # drawish take (1, 2 or 4) is dead.
        if all(t in (0, 3, 6) for t in profile.takes):
            return ProfileClass.EULERIAN_SPECIAL
        return ProfileClass.PRUNED_HIGH
    if p > 3 * n - 3:
        return ProfileClass.PRUNED_HIGH

    rest_matches = (n - 1) * (n - 2)
    spread = (n - 1) * p - profile.conceded
    if n >= 5:
        low, high = 2 * rest_matches + 3, 3 * rest_matches - 3
    else:
        low, high = 2 * rest_matches, 3 * rest_matches
    if spread < low:
        return ProfileClass.PRUNED_SPREAD_LOW
    if spread > high:
        return ProfileClass.PRUNED_SPREAD_HIGH
    return ProfileClass.SEARCH
