"""Walkthrough: the nested-commutator rewriting engine.

Every c(J \\ i, u_i) is a polynomial in the generators.  The engine walks
shortest paths in the full subcomplex K_J: if i sits in the component of
max(J) the element collapses step by step (distance 1 means it is zero
outright); in another component it walks to the smallest vertex, which
indexes a generator.  Each step trades one nested commutator for another of
smaller rank plus commutators of strictly smaller degree, via the
rearrangement identity for c(J \\ {i,j}, [u_i, u_j]) along an edge {i, j}.
"""

import random

from looppres import (
    ZZ,
    clique_complex,
    commutator_value,
    evaluate,
    gptw_assignment,
    rewrite_chat,
)
from looppres.presentation import pc_algebra
from looppres.simplicial import all_subsets, path_complex

# A path 1-2-3-4-5: every K_J is a disjoint union of sub-paths, so the loop
# homology is a free algebra, yet plenty of rewriting happens.
path = path_complex(5)
J = frozenset({1, 2, 3, 4, 5})
for i in (5, 4, 3, 2, 1):
    poly = rewrite_chat(path, J, i)
    print("c(J\\%d, u_%d) =" % (i, i), poly.render())

# Rank-1 collapse: vertex adjacent to max(J) gives zero.
print("\nc({1}, u_2) over the edge {1,2}... ",
      rewrite_chat(path, frozenset({1, 2}), 2).render())

# Soundness: evaluate each rewritten polynomial in k[K]^! and compare with
# the directly computed nested commutator.
rng = random.Random(7)
k = clique_complex(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6),
                       (2, 5)])
algebra = pc_algebra(k, ZZ)
assignment = gptw_assignment(k, ZZ)
checked = 0
for j_set in all_subsets(k.m):
    if len(j_set) < 2:
        continue
    for i in sorted(j_set):
        lhs = evaluate(rewrite_chat(k, j_set, i), algebra, assignment)
        rhs = commutator_value(algebra, j_set - {i}, i)
        assert lhs == rhs, (sorted(j_set), i)
        checked += 1
print("\nhexagon-with-chord: %d rewritings all evaluate correctly" % checked)
