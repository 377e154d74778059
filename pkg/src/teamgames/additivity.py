"""Additive, co-additive, and bi-additive structure in team games.

A subset utility is additive when it splits over the assessing subset,
co-additive when it splits over the coalition members, and bi-additive when
both hold, in which case the whole game collapses to an n-by-n matrix of
pairwise perceptions M[a][b] = u_a(V({b})). Structured games admit fast
closed forms for the cooperation metrics and per-player stability
conditions, and can be drawn as a weighted digraph.

All identities are checked only on pairs with the assessor inside the
coalition; values u_A(S) with A not in S are unconstrained by structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import MissingUtilityError, SizeLimitError, StructureError
from .players import PlayerSet, iter_submasks
from .st import STGame
from .tu import DEFAULT_TOL

MAX_DETECT = 16


def _check_size(n: int) -> None:
    if n > MAX_DETECT:
        raise SizeLimitError(f"structure detectors support n <= {MAX_DETECT}, got {n}")


def _bits(mask: int) -> list[int]:
    return list(PlayerSet(mask))


def _find_additive_violation(g: STGame, tol: float):
    """First (assessor, coalition, got, expected) where u_A(S) != sum of members' u_a(S)."""
    _check_size(g.n)
    full = (1 << g.n) - 1
    for s_mask in range(1, full + 1):
        x = g._v(s_mask)
        singles = {a: g._u(1 << a, x) for a in _bits(s_mask)}
        for a_mask in iter_submasks(s_mask, nonempty=True):
            expected = sum(singles[a] for a in _bits(a_mask))
            got = g._u(a_mask, x)
            if abs(got - expected) > tol:
                return (a_mask, s_mask, got, expected)
    return None


def _find_coadditive_violation(g: STGame, tol: float):
    """First violation of u_A(S) = sum over members b of u_A(V({b})).

    A tabulated game that lacks a needed singleton assessment cannot satisfy
    the identity as a total function; the missing entry is reported as the
    violation.
    """
    _check_size(g.n)
    full = (1 << g.n) - 1
    for s_mask in range(1, full + 1):
        x = g._v(s_mask)
        for a_mask in iter_submasks(s_mask, nonempty=True):
            try:
                expected = sum(g._u(a_mask, g._v(1 << b)) for b in _bits(s_mask))
            except MissingUtilityError:
                return (a_mask, s_mask, None, None)
            got = g._u(a_mask, x)
            if abs(got - expected) > tol:
                return (a_mask, s_mask, got, expected)
    return None


def is_additive(g: STGame, tol: float = DEFAULT_TOL) -> bool:
    return _find_additive_violation(g, tol) is None


def is_coadditive(g: STGame, tol: float = DEFAULT_TOL) -> bool:
    return _find_coadditive_violation(g, tol) is None


def is_biadditive(g: STGame, tol: float = DEFAULT_TOL) -> bool:
    return is_additive(g, tol) and is_coadditive(g, tol)


@dataclass(frozen=True)
class BiAdditiveMatrix:
    """Pairwise perception matrix: m[a][b] is assessor a's value of player b's presence."""

    n: int
    m: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.m, dtype=float)
        if mat.shape != (self.n, self.n):
            raise ValueError(f"matrix must be {self.n}x{self.n}, got {mat.shape}")
        mat = mat.copy()
        mat.flags.writeable = False
        object.__setattr__(self, "m", mat)

    def utility(self, assessor: PlayerSet, coalition: PlayerSet) -> float:
        return float(sum(self.m[a][b] for a in assessor for b in coalition))

    def to_game(self, players=None) -> STGame:
        """The bi-additive team game this matrix determines.

        Outcomes are the coalition masks themselves (the consequence map is
        the identity), so every subset's assessment of any coalition's
        outcome is defined.
        """
        n = self.n
        outcomes = tuple(range(1, 1 << n))
        mat = self.m

        def utility(a: PlayerSet, outcome) -> float:
            members = _bits(int(outcome))
            return float(sum(mat[x][b] for x in a for b in members))

        return STGame.from_functions(
            n, outcomes, lambda s: s.mask, utility, players=players
        )


class FastMetrics(NamedTuple):
    altruism: float
    competitive: float
    marginal: float


def extract_matrix(g: STGame, tol: float = DEFAULT_TOL) -> BiAdditiveMatrix:
    """Read the perception matrix off a bi-additive game's singleton assessments.

    Every u_a(V({b})) entry must exist, and the reconstruction
    u_A(S) = sum over a in A, b in S of m[a][b] must match the game on all
    nested (assessor, coalition) pairs; otherwise a StructureError carries
    the first witness.
    """
    _check_size(g.n)
    n = g.n
    mat = np.zeros((n, n))
    for a in range(n):
        for b in range(n):
            try:
                mat[a][b] = g._u(1 << a, g._v(1 << b))
            except MissingUtilityError:
                raise StructureError(
                    f"singleton assessment u_{g.players[a]}(V({{{g.players[b]}}})) is missing; "
                    "cannot extract a perception matrix",
                    witness=(1 << a, 1 << b, None, None),
                ) from None
    full = (1 << n) - 1
    for s_mask in range(1, full + 1):
        x = g._v(s_mask)
        cols = _bits(s_mask)
        row_sums = mat[:, cols].sum(axis=1)
        for a_mask in iter_submasks(s_mask, nonempty=True):
            expected = float(sum(row_sums[a] for a in _bits(a_mask)))
            got = g._u(a_mask, x)
            if abs(got - expected) > tol:
                raise StructureError(
                    f"game is not bi-additive: u at assessor mask {a_mask}, coalition mask "
                    f"{s_mask} is {got}, matrix reconstruction gives {expected}",
                    witness=(a_mask, s_mask, got, expected),
                )
    return BiAdditiveMatrix(n, mat)


def fast_metrics(matrix: BiAdditiveMatrix, a: PlayerSet, b: PlayerSet) -> FastMetrics:
    """Closed-form cooperation metrics for a bi-additive game.

    The competitive part is everything A perceives in the joint coalition;
    the altruistic part is everything B perceives in A.
    """
    if not a.isdisjoint(b):
        raise ValueError(f"{a} and {b} overlap")
    mat = matrix.m
    union = list(a) + list(b)
    competitive = float(sum(mat[x][y] for x in a for y in union))
    altruism = float(sum(mat[x][y] for x in b for y in a))
    return FastMetrics(altruism, competitive, altruism + competitive)


def additive_metrics(g: STGame, a: PlayerSet, b: PlayerSet) -> FastMetrics:
    """Cooperation metrics of an additive game from singleton assessments only.

    Competitive: the members of A's own stakes in the joint outcome.
    Altruistic: each bystander's gain between the joint and stand-alone
    outcomes. Assumes additivity; no structure check is repeated here.
    """
    if not a.isdisjoint(b):
        raise ValueError(f"{a} and {b} overlap")
    x_union = g._v(a.mask | b.mask)
    competitive = float(sum(g._u(1 << p, x_union) for p in a))
    x_b = g._v(b.mask)
    altruism = float(sum(g._u(1 << p, x_union) - g._u(1 << p, x_b) for p in b))
    return FastMetrics(altruism, competitive, altruism + competitive)


def coadditive_metrics(g: STGame, a: PlayerSet, b: PlayerSet) -> FastMetrics:
    """Cooperation metrics of a co-additive game from per-member assessments.

    Altruistic: B's perception of A's members. Competitive: the assessment
    shift from B to the joint coalition summed over all members present.
    Assumes co-additivity.
    """
    if not a.isdisjoint(b):
        raise ValueError(f"{a} and {b} overlap")
    union = a | b
    altruism = float(sum(g._u(b.mask, g._v(1 << p)) for p in a))
    competitive = float(
        sum(
            g._u(union.mask, g._v(1 << p)) - g._u(b.mask, g._v(1 << p))
            for p in union
        )
    )
    return FastMetrics(altruism, competitive, altruism + competitive)


@dataclass(frozen=True)
class AdditiveReport:
    """Per-player stability analysis of an additive game.

    ``sensible`` and ``fully_cooperative`` are exact (they equal the generic
    predicates). ``individual_values_nonneg`` restates sensibility through
    each member's own stake; ``individual_gains_nonneg`` asks that no single
    bystander lose from any join, which forces cohesion but can fail in
    games whose bystander groups only gain in aggregate.
    """

    sensible: bool
    fully_cooperative: bool
    individual_values_nonneg: bool
    individual_gains_nonneg: bool


def additive_predicates(g: STGame, tol: float = DEFAULT_TOL) -> AdditiveReport:
    violation = _find_additive_violation(g, tol)
    if violation is not None:
        raise StructureError("game is not additive", witness=violation)
    _check_size(g.n)
    full = (1 << g.n) - 1

    values_ok = True
    for s_mask in range(1, full + 1):
        x = g._v(s_mask)
        if any(g._u(1 << a, x) < -tol for a in _bits(s_mask)):
            values_ok = False
            break

    coop_ok = True
    gains_ok = True
    for a_mask in range(1, full + 1):
        for b_mask in iter_submasks(full & ~a_mask, nonempty=True):
            x_union = g._v(a_mask | b_mask)
            x_b = g._v(b_mask)
            gains = [g._u(1 << p, x_union) - g._u(1 << p, x_b) for p in _bits(b_mask)]
            if sum(gains) < -tol:
                coop_ok = False
            if any(gain < -tol for gain in gains):
                gains_ok = False
        if not coop_ok and not gains_ok:
            break
    return AdditiveReport(
        sensible=values_ok,
        fully_cooperative=coop_ok,
        individual_values_nonneg=values_ok,
        individual_gains_nonneg=gains_ok,
    )


@dataclass(frozen=True)
class CoadditiveReport:
    """Per-player stability analysis of a co-additive game.

    ``fully_cooperative`` and ``sensible`` are exact. A co-additive game is
    cohesive exactly when every subset values every outside player's
    presence nonnegatively (``perceptions_of_outsiders_nonneg``);
    ``assessments_monotone`` asks each per-member valuation to grow with the
    assessing subset, which forces sensibility but is not implied by it.
    """

    sensible: bool
    fully_cooperative: bool
    perceptions_of_outsiders_nonneg: bool
    assessments_monotone: bool


def coadditive_predicates(g: STGame, tol: float = DEFAULT_TOL) -> CoadditiveReport:
    violation = _find_coadditive_violation(g, tol)
    if violation is not None:
        raise StructureError("game is not co-additive", witness=violation)
    _check_size(g.n)
    full = (1 << g.n) - 1
    singleton_outcomes = [g._v(1 << p) for p in range(g.n)]

    outsiders_ok = True
    for b_mask in range(1, full + 1):
        for p in range(g.n):
            if b_mask >> p & 1:
                continue
            if g._u(b_mask, singleton_outcomes[p]) < -tol:
                outsiders_ok = False
                break
        if not outsiders_ok:
            break

    sensible_ok = True
    monotone_ok = True
    for a_mask in range(1, full + 1):
        for b_mask in iter_submasks(full & ~a_mask):
            union = a_mask | b_mask
            deltas = [
                g._u(union, singleton_outcomes[p]) - g._u(b_mask, singleton_outcomes[p])
                for p in _bits(union)
            ]
            if sum(deltas) < -tol:
                sensible_ok = False
            if any(d < -tol for d in deltas):
                monotone_ok = False
        if not sensible_ok and not monotone_ok:
            break
    return CoadditiveReport(
        sensible=sensible_ok,
        fully_cooperative=outsiders_ok,
        perceptions_of_outsiders_nonneg=outsiders_ok,
        assessments_monotone=monotone_ok,
    )


@dataclass(frozen=True)
class PerceptionGraph:
    """Weighted digraph form of a bi-additive game.

    The edge x -> y carries m[y][x]: the value x provides as perceived by y.
    Altruism of a subset A (against its complement) is then the total weight
    leaving A, and its competitive contribution is the total weight
    terminating in A.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]

    def out_weight(self, a: PlayerSet) -> float:
        return float(sum(w for src, dst, w in self.edges if src in a and dst not in a))

    def in_weight(self, a: PlayerSet) -> float:
        return float(sum(w for _, dst, w in self.edges if dst in a))

    def to_lines(self) -> list[str]:
        """Edge-list serialization: one ``src dst weight`` line per edge."""
        return [f"{src} {dst} {w!r}" for src, dst, w in self.edges]


def export_graph(matrix: BiAdditiveMatrix) -> PerceptionGraph:
    """All n^2 perception edges (self-loops included), ascending (src, dst)."""
    edges = tuple(
        (src, dst, float(matrix.m[dst][src]))
        for src in range(matrix.n)
        for dst in range(matrix.n)
    )
    return PerceptionGraph(matrix.n, edges)
