"""Two prisoners through the lens of cooperation space.

Each player can work with their partner or go it alone. The team game
records three outcomes (together, A alone, B alone) and lets every subset
assess them: together is worth 4 to the pair and 2 to each member; alone
each member scores 1.
"""

import teamgames as tg
from teamgames.scenarios import builtin_game

game = builtin_game("pd")
a, b = tg.PlayerSet.of(0), tg.PlayerSet.of(1)

print("== the three contribution metrics ==")
print("total marginal of A joining B :", tg.total_marginal(game, a, b))
print("competitive (selfish) part    :", tg.competitive_contribution(game, a, b))
print("altruistic part               :", tg.altruistic_contribution(game, a, b))
print()

# Every nonempty subset gets a point (altruism, competitive) in
# cooperation space. Quadrant I = helps the team AND helps the others:
# the configuration where teamwork is self-sustaining.
print("== cooperation space ==")
for point in tg.all_coop_points(game, include_grand=False):
    members = "".join(game.players[i] for i in point.subset)
    quadrant = tg.classify_quadrant(point)
    print(
        f"subset {members}: altruism={point.altruism}, "
        f"competitive={point.competitive} -> quadrant {quadrant.value}"
    )
print()

print("== stability predicates ==")
print("sensible (nobody's presence is valued negatively):", tg.is_sensible(game))
print("fully cooperative (no part prefers splitting off):", tg.is_fully_cooperative(game))
print()

# The assessments split over the assessing subset (4 = 2 + 2), so the game
# is additive; but the pair's own value cannot be recovered from per-member
# outcomes, so it is not co-additive.
print("== structure ==")
print("additive:   ", tg.is_additive(game))
print("co-additive:", tg.is_coadditive(game))
print()

# A team game collapses to a classical TU game only when every competitive
# contribution vanishes. Here each player keeps a selfish stake of 2, and
# the reduction reports exactly that witness.
print("== why this is genuinely a team game ==")
try:
    tg.reduce_to_tu(game)
except tg.NotReducibleError as exc:
    print(f"not reducible: c[{exc.a} | {exc.b}] = {exc.value}")
