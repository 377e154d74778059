"""Seeded random game generators for property sweeps and tests."""

from __future__ import annotations

import numpy as np

from .additivity import BiAdditiveMatrix
from .players import PlayerSet
from .st import STGame, from_ntu
from .tu import TUGame


def random_tu_game(n: int, rng: np.random.Generator, scale: float = 1.0) -> TUGame:
    table = rng.uniform(-scale, scale, size=1 << n)
    table[0] = 0.0
    return TUGame(n, table)


def random_st_game(n: int, rng: np.random.Generator, n_outcomes: int | None = None) -> STGame:
    """Tabulated team game with random consequences and assessments.

    Every (assessor, outcome) pair gets a value, so the table is total for
    every operation, including the structure detectors.
    """
    full = (1 << n) - 1
    if n_outcomes is None:
        n_outcomes = full
    outcomes = tuple(f"o{k}" for k in range(n_outcomes))
    consequence = {
        mask: outcomes[int(rng.integers(0, n_outcomes))] for mask in range(1, full + 1)
    }
    utilities = {
        (a_mask, x): float(rng.uniform(-1.0, 1.0))
        for a_mask in range(1, full + 1)
        for x in outcomes
    }
    return STGame.from_tables(n, outcomes, consequence, utilities)


def random_additive_game(
    n: int, rng: np.random.Generator, *, nonnegative: bool = False, monotone: bool = False
) -> STGame:
    """Additive game from random per-player utilities over per-subset outcomes.

    ``nonnegative`` bounds individual values below by 0 (which makes the
    game sensible); ``monotone`` makes every player value larger coalitions'
    outcomes weakly more (which makes it fully cooperative).
    """
    full = (1 << n) - 1
    outcomes = tuple(range(1, full + 1))
    lo = 0.0 if nonnegative else -1.0
    individual: dict[int, dict] = {p: {} for p in range(n)}
    for p in range(n):
        if monotone:
            for mask in outcomes:
                base = 0.25 * mask.bit_count()
                individual[p][mask] = base + float(rng.uniform(0.0, 0.2))
        else:
            for mask in outcomes:
                individual[p][mask] = float(rng.uniform(lo, 1.0))
    return from_ntu(n, outcomes, {mask: mask for mask in outcomes}, individual)


def random_coadditive_game(
    n: int, rng: np.random.Generator, *, monotone: bool = False
) -> STGame:
    """Co-additive game: each subset's per-player perception drawn at random.

    ``monotone`` makes perceptions nonnegative and growing with the
    assessing subset, which yields a sensible and fully cooperative game.
    """
    full = (1 << n) - 1
    outcomes = tuple(range(1, full + 1))
    if monotone:
        perception = {
            (a_mask, b): 0.3 * a_mask.bit_count() + float(rng.uniform(0.0, 0.2))
            for a_mask in range(1, full + 1)
            for b in range(n)
        }
    else:
        perception = {
            (a_mask, b): float(rng.uniform(-1.0, 1.0))
            for a_mask in range(1, full + 1)
            for b in range(n)
        }

    def utility(a: PlayerSet, outcome) -> float:
        return sum(perception[(a.mask, b)] for b in PlayerSet(int(outcome)))

    return STGame.from_functions(n, outcomes, lambda s: s.mask, utility)


def random_biadditive_matrix(n: int, rng: np.random.Generator) -> BiAdditiveMatrix:
    return BiAdditiveMatrix(n, rng.uniform(-1.0, 1.0, size=(n, n)))


def tabulate(game: STGame) -> STGame:
    """Materialize a functional game into tables (e.g. for serialization).

    Entries cover every (assessor, outcome) pair, so detectors needing
    assessments outside nested pairs keep working.
    """
    full = (1 << game.n) - 1
    consequence = {mask: game._v(mask) for mask in range(1, full + 1)}
    utilities = {
        (a_mask, x): game._u(a_mask, x)
        for a_mask in range(1, full + 1)
        for x in game.outcomes
    }
    return STGame.from_tables(game.n, game.outcomes, consequence, utilities, game.players)


def monotone_series(n: int, rng: np.random.Generator) -> STGame:
    """Fully cooperative tabulated game: everyone weakly prefers bigger coalitions."""
    full = (1 << n) - 1
    outcomes = tuple(f"o{mask}" for mask in range(1, full + 1))
    consequence = {mask: f"o{mask}" for mask in range(1, full + 1)}
    utilities = {}
    for a_mask in range(1, full + 1):
        for s_mask in range(1, full + 1):
            base = 0.5 * s_mask.bit_count()
            jitter = float(rng.uniform(0.0, 0.4)) if a_mask & s_mask == a_mask else float(
                rng.uniform(-0.5, 0.5)
            )
            utilities[(a_mask, f"o{s_mask}")] = base + jitter
    return STGame.from_tables(n, outcomes, consequence, utilities)
