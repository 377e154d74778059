"""Transferable-utility cooperative games.

A TU game assigns one real payoff to every coalition of an n-player team.
This module covers the classical machinery: marginal contributions, the
Shapley value (three independent routes), convexity and superadditivity
predicates, core membership, and an exact core-nonemptiness decision.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DisjointnessError, SizeLimitError
from .exact_lp import minimal_coalition_cover
from .players import PlayerSet, iter_submasks

DEFAULT_TOL = 1e-9

MAX_EXHAUSTIVE = 20   # 2^n table walks
MAX_PERMUTATION = 8   # n! join orders
MAX_CORE_DECIDE = 10  # exact LP columns: 2^n - 2


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class TUGame:
    """Payoff table over all 2^n coalitions, indexed by coalition mask.

    The empty coalition must be worth exactly 0; inputs violating that are
    rejected rather than silently shifted.
    """

    n: int
    u: np.ndarray
    players: tuple[str, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_EXHAUSTIVE:
            raise SizeLimitError(f"TU games support 1..{MAX_EXHAUSTIVE} players, got {self.n}")
        table = np.asarray(self.u, dtype=float)
        if table.shape != (1 << self.n,):
            raise ValueError(f"payoff table must have length {1 << self.n}, got {table.shape}")
        if table[0] != 0.0:
            raise ValueError(f"empty coalition must be worth 0, got {table[0]}")
        table = table.copy()
        table.flags.writeable = False
        object.__setattr__(self, "u", table)
        names = self.players or _default_names(self.n)
        if len(names) != self.n:
            raise ValueError("player name list must match the player count")
        object.__setattr__(self, "players", tuple(names))

    @classmethod
    def from_function(cls, n: int, worth, players=None) -> TUGame:
        """Tabulate ``worth(coalition: PlayerSet) -> float`` over all coalitions."""
        table = np.zeros(1 << n)
        for mask in range(1, 1 << n):
            table[mask] = worth(PlayerSet(mask))
        return cls(n, table, players)

    def value(self, coalition: PlayerSet) -> float:
        if not coalition.fits(self.n):
            raise ValueError(f"{coalition} is not a coalition of a {self.n}-player team")
        return float(self.u[coalition.mask])

    def grand_value(self) -> float:
        return float(self.u[-1])


def marginal_contribution(game: TUGame, a: PlayerSet, b: PlayerSet) -> float:
    """Worth added by coalition A joining the disjoint coalition B."""
    if not a.isdisjoint(b):
        raise DisjointnessError(f"{a} and {b} overlap")
    return float(game.u[a.mask | b.mask] - game.u[b.mask])


def _mask_sizes(n: int) -> np.ndarray:
    """Popcount of every mask below 2^n."""
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        sizes += (masks >> i) & 1
    return sizes


def shapley_value(game: TUGame) -> np.ndarray:
    """Shapley allocation via the subset-weighted sum.

    Each player receives the average of their marginal contributions, the
    subset S they join being weighted by |S|!(n-1-|S|)!/n!. Vectorized over
    the 2^n table, so the full n <= 20 range stays practical.
    """
    n = game.n
    u = game.u
    fact = [math.factorial(k) for k in range(n + 1)]
    weights = np.array([fact[k] * fact[n - k - 1] / fact[n] for k in range(n)])
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = _mask_sizes(n)
    phi = np.zeros(n)
    for i in range(n):
        bit = 1 << i
        without = masks[(masks & bit) == 0]
        phi[i] = float(np.sum(weights[sizes[without]] * (u[without | bit] - u[without])))
    return phi


def shapley_value_stratified(game: TUGame) -> np.ndarray:
    """Shapley allocation by size strata: average within each coalition size,
    then average over the n sizes.

    Algebraically identical to :func:`shapley_value` but enumerated through
    ``itertools.combinations``, so the two serve as mutual checks.
    """
    n = game.n
    u = game.u
    phi = np.zeros(n)
    for i in range(n):
        rest = [j for j in range(n) if j != i]
        bit = 1 << i
        total = 0.0
        for k in range(n):
            layer = 0.0
            for combo in itertools.combinations(rest, k):
                s_mask = 0
                for j in combo:
                    s_mask |= 1 << j
                layer += u[s_mask | bit] - u[s_mask]
            total += layer / math.comb(n - 1, k)
        phi[i] = total / n
    return phi


def shapley_by_permutations(game: TUGame) -> np.ndarray:
    """Brute-force Shapley oracle: average marginal gains over all n! join orders."""
    n = game.n
    if n > MAX_PERMUTATION:
        raise SizeLimitError(f"permutation enumeration supports n <= {MAX_PERMUTATION}, got {n}")
    u = game.u
    phi = np.zeros(n)
    for order in itertools.permutations(range(n)):
        mask = 0
        prev = 0.0
        for i in order:
            mask |= 1 << i
            cur = u[mask]
            phi[i] += cur - prev
            prev = cur
    return phi / math.factorial(n)


def is_convex(game: TUGame, tol: float = DEFAULT_TOL) -> bool:
    """True when marginal contributions weakly increase with coalition size.

    Checked through the local pairwise form: for every i, S not containing i
    and j outside S+i, the margin of i on S is at most its margin on S+j.
    Vectorized per (i, j) pair over all eligible subsets.
    """
    n = game.n
    u = game.u
    masks = np.arange(1 << n, dtype=np.int64)
    for i in range(n):
        ibit = 1 << i
        for j in range(n):
            if j == i:
                continue
            jbit = 1 << j
            s = masks[(masks & (ibit | jbit)) == 0]
            lhs = u[s | ibit] - u[s]
            rhs = u[s | ibit | jbit] - u[s | jbit]
            if np.any(lhs > rhs + tol):
                return False
    return True


def is_superadditive(game: TUGame, tol: float = DEFAULT_TOL) -> bool:
    """True when u(A|B) >= u(A) + u(B) for every disjoint nonempty pair."""
    n = game.n
    u = game.u
    full = (1 << n) - 1
    for a_mask in range(1, full + 1):
        for b_mask in iter_submasks(full & ~a_mask, nonempty=True):
            if u[a_mask | b_mask] < u[a_mask] + u[b_mask] - tol:
                return False
    return True


def coalition_sums(n: int, phi) -> np.ndarray:
    """Sum of allocation entries over every coalition mask (length 2^n)."""
    phi = np.asarray(phi, dtype=float)
    masks = np.arange(1 << n, dtype=np.int64)
    sums = np.zeros(1 << n)
    for i in range(n):
        sums += phi[i] * ((masks >> i) & 1)
    return sums


def is_efficient(game: TUGame, phi, tol: float = DEFAULT_TOL) -> bool:
    return abs(float(np.sum(phi)) - game.grand_value()) <= tol


def in_core(game: TUGame, phi, tol: float = DEFAULT_TOL) -> bool:
    """Core membership: efficient, and no coalition can beat its share."""
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (game.n,):
        raise ValueError(f"allocation must have length {game.n}")
    if not is_efficient(game, phi, tol):
        return False
    sums = coalition_sums(game.n, phi)
    return bool(np.all(sums >= game.u - tol))


def core_witness(game: TUGame) -> np.ndarray | None:
    """An allocation in the core, or None when the core is empty.

    Decided in exact rational arithmetic: the cheapest total payout that
    honors every proper-coalition claim is found by an exact simplex over
    coalition covers; the core is nonempty exactly when that minimum does
    not exceed the grand coalition's worth, and any surplus is then spread
    evenly to restore efficiency.
    """
    n = game.n
    if n > MAX_CORE_DECIDE:
        raise SizeLimitError(f"core decision supports n <= {MAX_CORE_DECIDE}, got {n}")
    grand = Fraction(float(game.u[-1]))
    if n == 1:
        return np.array([float(grand)])
    worth = {mask: Fraction(float(game.u[mask])) for mask in range(1, (1 << n) - 1)}
    best_total, prices = minimal_coalition_cover(n, worth)
    if best_total > grand:
        return None
    slack = (grand - best_total) / n
    phi = [p + slack for p in prices]
    # exact sanity check before leaving rational arithmetic
    for mask, val in worth.items():
        if sum(phi[i] for i in range(n) if mask >> i & 1) < val:
            raise AssertionError("exact witness violates a coalition claim")
    return np.array([float(p) for p in phi])


def core_is_nonempty(game: TUGame) -> bool:
    return core_witness(game) is not None


def unanimity_game(n: int, carrier: PlayerSet) -> TUGame:
    """Game worth 1 to coalitions containing ``carrier`` and 0 otherwise."""
    if not carrier:
        raise ValueError("carrier must be nonempty")
    if not carrier.fits(n):
        raise ValueError(f"carrier {carrier} does not fit a {n}-player team")
    table = np.zeros(1 << n)
    for mask in range(1, 1 << n):
        if mask & carrier.mask == carrier.mask:
            table[mask] = 1.0
    return TUGame(n, table)


def random_convex_game(n: int, rng: np.random.Generator, scale: float = 1.0) -> TUGame:
    """Random convex game: a nonnegative combination of unanimity games.

    Unanimity games are convex and convexity is preserved by nonnegative
    sums, so the result is convex by construction.
    """
    table = np.zeros(1 << n)
    for carrier in range(1, 1 << n):
        coeff = rng.uniform(0.0, scale)
        for mask in range(carrier, 1 << n):
            if mask & carrier == carrier:
                table[mask] += coeff
    return TUGame(n, table)
