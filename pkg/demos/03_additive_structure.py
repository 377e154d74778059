"""Additivity structure: when a team game is really an n-by-n matrix.

A bi-additive game is determined by pairwise perceptions m[a][b] (what
assessor a thinks player b's presence is worth). The cooperation metrics
then collapse to row/column sums, and the whole game can be drawn as a
weighted digraph whose edge x -> y carries y's perception of x.
"""

import numpy as np

import teamgames as tg
from teamgames.game_io import write_edges

# three players; mostly mutual appreciation, but player 2 resents player 0
perceptions = np.array(
    [
        [0.8, 0.3, 0.4],
        [0.5, 0.6, 0.2],
        [-0.7, 0.4, 0.9],
    ]
)
matrix = tg.BiAdditiveMatrix(3, perceptions)
game = matrix.to_game()

print("== detectors ==")
print("additive:   ", tg.is_additive(game))
print("co-additive:", tg.is_coadditive(game))
print("bi-additive:", tg.is_biadditive(game))
print("round-trip recovers the matrix:",
      np.allclose(tg.extract_matrix(game).m, perceptions))
print()

print("== fast metrics vs generic evaluation ==")
for mask in range(1, 7):
    subset = tg.PlayerSet(mask)
    rest = subset.complement(3)
    fast = tg.fast_metrics(matrix, subset, rest)
    generic = tg.coop_point(game, subset)
    members = ",".join(str(i) for i in subset)
    print(
        f"A={{{members}}}: altruism {fast.altruism:+.2f} "
        f"(generic {generic.altruism:+.2f}), "
        f"competitive {fast.competitive:+.2f} (generic {generic.competitive:+.2f})"
    )
print()

print("== per-player stability conditions ==")
report = tg.coadditive_predicates(game)
print("fully cooperative:", report.fully_cooperative)
print("  (player 2's perception of player 0 is negative, so any coalition")
print("   containing 2 would rather form without 0)")
print("sensible:", report.sensible)
print()

print("== the perception graph ==")
graph = tg.export_graph(matrix)
for src, dst, weight in graph.edges:
    if src != dst:
        print(f"  {src} -> {dst}  weight {weight:+.2f}   ({dst}'s view of {src})")
write_edges(graph, "perceptions.edges")
print("wrote perceptions.edges (src dst weight lines)")

subset = tg.PlayerSet.of(0)
print()
print("graph totals reproduce the metrics for A={0}:")
print("  out-weight (altruism)    :", graph.out_weight(subset))
print("  in-weight  (competitive) :", graph.in_weight(subset))
