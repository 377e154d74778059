"""Player sets represented as bit masks.

Players carry indices 0..n-1 and a coalition is the set of indices whose
bits are set in ``mask``. Bit masks keep the subset algebra cheap and give
every enumeration a canonical order: ascending mask value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_PLAYERS = 64


@dataclass(frozen=True)
class PlayerSet:
    """Immutable set of player indices backed by a 64-bit mask."""

    mask: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("player mask must be nonnegative")
        if self.mask >> MAX_PLAYERS:
            raise ValueError(f"player indices must lie below {MAX_PLAYERS}")

    @classmethod
    def of(cls, *players: int) -> PlayerSet:
        return cls.from_players(players)

    @classmethod
    def from_players(cls, players: Iterable[int]) -> PlayerSet:
        mask = 0
        for p in players:
            if not 0 <= p < MAX_PLAYERS:
                raise ValueError(f"player index {p} out of range")
            mask |= 1 << p
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> PlayerSet:
        """The grand coalition of players 0..n-1."""
        if not 0 <= n <= MAX_PLAYERS:
            raise ValueError(f"team size {n} out of range")
        return cls((1 << n) - 1)

    @classmethod
    def empty(cls) -> PlayerSet:
        return cls(0)

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def fits(self, n: int) -> bool:
        """True when every member index lies below ``n``."""
        return self.mask < (1 << n)

    def complement(self, n: int) -> PlayerSet:
        return PlayerSet(((1 << n) - 1) & ~self.mask)

    def isdisjoint(self, other: PlayerSet) -> bool:
        return not self.mask & other.mask

    def issubset(self, other: PlayerSet) -> bool:
        return self.mask & other.mask == self.mask

    def __contains__(self, player: int) -> bool:
        return 0 <= player < MAX_PLAYERS and bool(self.mask >> player & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: PlayerSet) -> PlayerSet:
        return PlayerSet(self.mask | other.mask)

    def __and__(self, other: PlayerSet) -> PlayerSet:
        return PlayerSet(self.mask & other.mask)

    def __sub__(self, other: PlayerSet) -> PlayerSet:
        return PlayerSet(self.mask & ~other.mask)

    def __le__(self, other: PlayerSet) -> bool:
        return self.issubset(other)

    def __repr__(self) -> str:
        return f"PlayerSet.of({', '.join(map(str, self))})"


def iter_subset_masks(n: int, *, nonempty: bool = False) -> Iterator[int]:
    """All subset masks of an n-player team, ascending."""
    return iter(range(1 if nonempty else 0, 1 << n))


def iter_submasks(mask: int, *, nonempty: bool = False) -> list[int]:
    """All submasks of ``mask``, ascending.

    The classic descending-submask walk is reversed so every enumeration in
    the package shares the ascending convention.
    """
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.reverse()
    if nonempty:
        subs = subs[1:] if subs and subs[0] == 0 else subs
    return subs


def subsets(n: int, *, nonempty: bool = False) -> Iterator[PlayerSet]:
    """All coalitions of an n-player team as PlayerSets, ascending mask order."""
    for mask in iter_subset_masks(n, nonempty=nonempty):
        yield PlayerSet(mask)


def disjoint_pairs(n: int, *, nonempty_b: bool = True) -> Iterator[tuple[PlayerSet, PlayerSet]]:
    """Ordered pairs (A, B) of disjoint coalitions with A nonempty.

    With ``nonempty_b=False`` the pairs with B = empty set are included.
    Ascending in (A mask, B mask).
    """
    for a_mask in iter_subset_masks(n, nonempty=True):
        rest = ((1 << n) - 1) & ~a_mask
        for b_mask in iter_submasks(rest, nonempty=nonempty_b):
            yield PlayerSet(a_mask), PlayerSet(b_mask)
