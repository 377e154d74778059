"""Subset team games and cooperation-space metrics.

A subset team game gives every coalition S an outcome V(S) and every
assessing subset A its own valuation u_A of outcomes. The marginal worth a
coalition adds then splits into two comparable parts:

* competitive contribution  c_A = u_{A|B}(V(A|B)) - u_B(V(A|B)),
  two assessments of the same outcome;
* altruistic contribution   a_A = u_B(V(A|B)) - u_B(V(B)),
  one bystander's assessment of two outcomes;

with total marginal m_A = c_A + a_A. The pair (a_A, c_A) is a point in
cooperation space; quadrant I (both positive) is where stable teamwork
lives.

Empty-set convention: the empty assessor values everything at 0 and the
empty coalition produces a distinct null outcome (``None``). Metrics with
B empty therefore reduce to m_A(A) = u_A(V(A)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping

from .errors import (
    DisjointnessError,
    MissingUtilityError,
    NotReducibleError,
    SizeLimitError,
)
from .parallel import ordered_map
from .players import PlayerSet, iter_submasks
from .tu import DEFAULT_TOL, TUGame

Outcome = Hashable
NULL_OUTCOME: Outcome = None

MAX_PAIR_SCAN = 16  # predicates walk ~3^n disjoint pairs
MAX_POINTS = 20     # cooperation-space point tables


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True, eq=False)
class STGame:
    """Team game with per-subset outcome assessments.

    ``consequence`` maps every nonempty coalition mask to an outcome id and
    ``utility`` evaluates (assessor mask, outcome) pairs. Tabulated games
    keep their sparse utility table in ``utility_table`` (masked keys), which
    also powers serialization; functional games leave it ``None``.
    """

    n: int
    outcomes: tuple
    players: tuple[str, ...]
    _consequence: Callable[[int], Outcome]
    _utility: Callable[[int, Outcome], float]
    utility_table: Mapping[tuple[int, Outcome], float] | None = None
    consequence_table: Mapping[int, Outcome] | None = None

    @classmethod
    def from_tables(
        cls,
        n: int,
        outcomes,
        consequence: Mapping[int, Outcome],
        utilities: Mapping[tuple[int, Outcome], float],
        players=None,
    ) -> STGame:
        """Build a tabulated game and eagerly validate totality.

        ``consequence`` must cover every nonempty coalition mask, and the
        utility table must contain every (A, V(S)) entry with A a nonempty
        subset of S: exactly the assessments the metrics can reach. Other
        entries may be present (detectors for co-additive structure use
        them) but are not required.
        """
        outcomes = tuple(outcomes)
        players = tuple(players) if players is not None else _default_names(n)
        if len(players) != n:
            raise ValueError("player name list must match the player count")
        known = set(outcomes)
        full = (1 << n) - 1
        for mask in range(1, full + 1):
            if mask not in consequence:
                raise ValueError(
                    f"consequence map is missing coalition {_subset_label(mask, players)}"
                )
            if consequence[mask] not in known:
                raise ValueError(
                    f"consequence of {_subset_label(mask, players)} is an undeclared outcome "
                    f"{consequence[mask]!r}"
                )
        for key, value in utilities.items():
            a_mask, outcome = key
            if not 0 < a_mask <= full:
                raise ValueError(f"utility entry has invalid assessor mask {a_mask}")
            if outcome not in known:
                raise ValueError(f"utility entry references undeclared outcome {outcome!r}")
            float(value)
        for s_mask in range(1, full + 1):
            x = consequence[s_mask]
            for a_mask in iter_submasks(s_mask, nonempty=True):
                if (a_mask, x) not in utilities:
                    raise ValueError(
                        f"missing utility: assessor {_subset_label(a_mask, players)} "
                        f"at outcome {x!r} (reachable via coalition "
                        f"{_subset_label(s_mask, players)})"
                    )
        table = dict(utilities)
        cons = dict(consequence)

        def _lookup(a_mask: int, outcome: Outcome) -> float:
            try:
                return float(table[(a_mask, outcome)])
            except KeyError:
                raise MissingUtilityError(_subset_label(a_mask, players), outcome) from None

        return cls(
            n=n,
            outcomes=outcomes,
            players=players,
            _consequence=cons.__getitem__,
            _utility=_lookup,
            utility_table=table,
            consequence_table=cons,
        )

    @classmethod
    def from_functions(
        cls,
        n: int,
        outcomes,
        consequence: Callable[[PlayerSet], Outcome],
        utility: Callable[[PlayerSet, Outcome], float],
        players=None,
    ) -> STGame:
        """Wrap callables over PlayerSets; no totality check is possible."""
        players = tuple(players) if players is not None else _default_names(n)
        return cls(
            n=n,
            outcomes=tuple(outcomes),
            players=players,
            _consequence=lambda mask: consequence(PlayerSet(mask)),
            _utility=lambda mask, x: float(utility(PlayerSet(mask), x)),
        )

    def consequence(self, coalition: PlayerSet) -> Outcome:
        """Outcome produced by a coalition; the empty coalition yields the null outcome."""
        if not coalition.fits(self.n):
            raise ValueError(f"{coalition} is not a coalition of a {self.n}-player team")
        if not coalition:
            return NULL_OUTCOME
        return self._consequence(coalition.mask)

    def assess(self, assessor: PlayerSet, outcome: Outcome) -> float:
        """Value of an outcome to an assessing subset; empty assessor values 0."""
        if not assessor.fits(self.n):
            raise ValueError(f"{assessor} is not a subset of a {self.n}-player team")
        if not assessor:
            return 0.0
        return self._utility(assessor.mask, outcome)

    def subset_utility(self, assessor: PlayerSet, coalition: PlayerSet) -> float:
        """u_A(S): the assessor's value of the coalition's outcome."""
        return self.assess(assessor, self.consequence(coalition))

    # mask-level accessors for the hot enumeration loops
    def _v(self, mask: int) -> Outcome:
        return NULL_OUTCOME if mask == 0 else self._consequence(mask)

    def _u(self, mask: int, outcome: Outcome) -> float:
        return 0.0 if mask == 0 else self._utility(mask, outcome)


def _subset_label(mask: int, players) -> str:
    return "{" + ",".join(players[i] for i in PlayerSet(mask)) + "}"


def _require_pair(g: STGame, a: PlayerSet, b: PlayerSet) -> None:
    if not a.isdisjoint(b):
        raise DisjointnessError(f"{a} and {b} overlap")
    if not a:
        raise ValueError("the contributing subset A must be nonempty")
    if not (a | b).fits(g.n):
        raise ValueError(f"{a} and {b} do not fit a {g.n}-player team")


def total_marginal(g: STGame, a: PlayerSet, b: PlayerSet) -> float:
    """m_A(A|B): joint worth to the joint coalition minus B's worth to itself."""
    _require_pair(g, a, b)
    union = a.mask | b.mask
    return g._u(union, g._v(union)) - g._u(b.mask, g._v(b.mask))


def competitive_contribution(g: STGame, a: PlayerSet, b: PlayerSet) -> float:
    """c_A(A|B): how much more the joint coalition values its own outcome than B does."""
    _require_pair(g, a, b)
    union = a.mask | b.mask
    x = g._v(union)
    return g._u(union, x) - g._u(b.mask, x)


def altruistic_contribution(g: STGame, a: PlayerSet, b: PlayerSet) -> float:
    """a_A(A|B): how much B gains, by its own lights, from A's participation."""
    _require_pair(g, a, b)
    if not b:
        raise ValueError("the bystanding subset B must be nonempty")
    union = a.mask | b.mask
    return g._u(b.mask, g._v(union)) - g._u(b.mask, g._v(b.mask))


class Quadrant(enum.Enum):
    """Region of cooperation space, with explicit axis and origin tags."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    AXIS_A = "axis-a"  # on the altruism axis: c within tolerance of 0
    AXIS_C = "axis-c"  # on the competitive axis: a within tolerance of 0
    ORIGIN = "origin"


@dataclass(frozen=True)
class CoopPoint:
    """One subset's coordinates in cooperation space (vs. the rest of the team)."""

    altruism: float
    competitive: float
    marginal: float
    subset: PlayerSet

    def as_pair(self) -> tuple[float, float]:
        return (self.altruism, self.competitive)


def classify_quadrant(point: CoopPoint, tol: float = DEFAULT_TOL, *, closed: bool = False) -> Quadrant:
    """Which quadrant a cooperation-space point occupies.

    Open mode (default) keeps a symmetric tolerance band around the axes and
    reports axis/origin tags for points inside it. Closed mode absorbs the
    band into the nonnegative side, so quadrant I means a >= -tol and
    c >= -tol; this matches predicates stated with >= 0.
    """
    a, c = point.altruism, point.competitive
    if closed:
        if a >= -tol:
            return Quadrant.I if c >= -tol else Quadrant.IV
        return Quadrant.II if c >= -tol else Quadrant.III
    a_sign = 0 if abs(a) <= tol else (1 if a > 0 else -1)
    c_sign = 0 if abs(c) <= tol else (1 if c > 0 else -1)
    if a_sign == 0 and c_sign == 0:
        return Quadrant.ORIGIN
    if a_sign == 0:
        return Quadrant.AXIS_C
    if c_sign == 0:
        return Quadrant.AXIS_A
    if a_sign > 0:
        return Quadrant.I if c_sign > 0 else Quadrant.IV
    return Quadrant.II if c_sign > 0 else Quadrant.III


def coop_point(g: STGame, a: PlayerSet) -> CoopPoint:
    """Cooperation-space point of subset A against the rest of the team.

    For A equal to the whole team the bystander set is empty, so altruism is
    0 by convention and the competitive part carries the full marginal.
    """
    if not a:
        raise ValueError("subset must be nonempty")
    if not a.fits(g.n):
        raise ValueError(f"{a} is not a subset of a {g.n}-player team")
    b = a.complement(g.n)
    c = competitive_contribution(g, a, b)
    if b:
        alt = altruistic_contribution(g, a, b)
    else:
        alt = 0.0
    return CoopPoint(altruism=alt, competitive=c, marginal=alt + c, subset=a)


def all_coop_points(g: STGame, *, include_grand: bool = True) -> list[CoopPoint]:
    """One point per nonempty subset, ascending mask order.

    The grand coalition's point (computed under the empty-bystander
    convention) comes last; drop it with ``include_grand=False``. Points for
    different subsets are independent, so they may be computed in parallel;
    the result order is fixed either way.
    """
    if g.n > MAX_POINTS:
        raise SizeLimitError(f"point tables support n <= {MAX_POINTS}, got {g.n}")
    full = (1 << g.n) - 1
    top = full + 1 if include_grand else full
    return ordered_map(lambda mask: coop_point(g, PlayerSet(mask)), range(1, top))


def _check_pair_scan(n: int) -> None:
    if n > MAX_PAIR_SCAN:
        raise SizeLimitError(f"disjoint-pair scans support n <= {MAX_PAIR_SCAN}, got {n}")


def is_sensible(g: STGame, tol: float = DEFAULT_TOL) -> bool:
    """No subset's participation is valued below the bystanders' assessment.

    Quantifies c_A(A|B) >= 0 over all disjoint nonempty pairs and over the
    B-empty case (self-assessments nonnegative).
    """
    _check_pair_scan(g.n)
    full = (1 << g.n) - 1
    for a_mask in range(1, full + 1):
        for b_mask in iter_submasks(full & ~a_mask):
            union = a_mask | b_mask
            x = g._v(union)
            if g._u(union, x) - g._u(b_mask, x) < -tol:
                return False
    return True


def is_cohesive(g: STGame, s: PlayerSet, tol: float = DEFAULT_TOL) -> bool:
    """No part of coalition S loses, by its own assessment, from another part joining."""
    if not s:
        raise ValueError("coalition must be nonempty")
    if not s.fits(g.n):
        raise ValueError(f"{s} is not a coalition of a {g.n}-player team")
    _check_pair_scan(len(s))
    for a_mask in iter_submasks(s.mask, nonempty=True):
        for b_mask in iter_submasks(s.mask & ~a_mask, nonempty=True):
            union = a_mask | b_mask
            if g._u(b_mask, g._v(union)) - g._u(b_mask, g._v(b_mask)) < -tol:
                return False
    return True


def is_fully_cooperative(g: STGame, tol: float = DEFAULT_TOL) -> bool:
    """Every coalition is cohesive.

    Pairs inside any coalition are also pairs inside the whole team, so this
    is equivalent to cohesiveness of the grand coalition.
    """
    _check_pair_scan(g.n)
    return is_cohesive(g, PlayerSet.full(g.n), tol)


def in_st_core(
    n: int,
    outcomes,
    consequence: Mapping[int, Outcome],
    utilities: Mapping[tuple[int, Outcome], float],
    tol: float = DEFAULT_TOL,
    players=None,
) -> bool:
    """Does this utility table make the consequence function fully cooperative?

    Membership predicate for the set of utility functions under which the
    given consequence map supports stable teamwork.
    """
    game = STGame.from_tables(n, outcomes, consequence, utilities, players)
    return is_fully_cooperative(game, tol)


def from_ntu(
    n: int,
    outcomes,
    consequence: Mapping[int, Outcome] | Callable[[PlayerSet], Outcome],
    individual: Mapping[int, Mapping[Outcome, float]],
    players=None,
) -> STGame:
    """Embed per-player utilities as an additive team game: u_A = sum of members' u_a."""
    for p in range(n):
        if p not in individual:
            raise ValueError(f"missing individual utility for player {p}")
    if callable(consequence):
        cons_fn = consequence
    else:
        cons_map = dict(consequence)
        cons_fn = lambda s: cons_map[s.mask]  # noqa: E731

    def utility(a: PlayerSet, outcome) -> float:
        return sum(individual[p][outcome] for p in a)

    return STGame.from_functions(n, outcomes, cons_fn, utility, players)


def reduce_to_tu(g: STGame, tol: float = DEFAULT_TOL) -> TUGame:
    """Collapse a competition-free team game to its TU payoff table.

    Requires every competitive contribution over disjoint nonempty pairs to
    vanish (all participating subsets then agree on each reachable outcome's
    value). Raises :class:`NotReducibleError` with the witnessing pair
    otherwise.
    """
    _check_pair_scan(g.n)
    full = (1 << g.n) - 1
    for a_mask in range(1, full + 1):
        for b_mask in iter_submasks(full & ~a_mask, nonempty=True):
            union = a_mask | b_mask
            x = g._v(union)
            c = g._u(union, x) - g._u(b_mask, x)
            if abs(c) > tol:
                raise NotReducibleError(PlayerSet(a_mask), PlayerSet(b_mask), c)
    table = [0.0] * (full + 1)
    for mask in range(1, full + 1):
        table[mask] = g._u(mask, g._v(mask))
    return TUGame(g.n, table, g.players)
