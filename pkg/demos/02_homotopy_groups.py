"""Walkthrough: sphere-product decompositions and homotopy group ranks.

For a flag complex the looped moment-angle complex splits as a product of
looped spheres; the multiplicities fall out of an exact polynomial identity
between the reduced Euler characteristics of full subcomplexes and the
h-polynomial.  All arithmetic is exact.
"""

from looppres import (
    cycle_complex,
    disjoint_points,
    euler_identity_check,
    multiplicity_report,
    octahedron,
    simplex,
)

for name, k in [
    ("two points", disjoint_points(2)),
    ("square", cycle_complex(4)),
    ("pentagon", cycle_complex(5)),
    ("hexagon", cycle_complex(6)),
    ("octahedron", octahedron()),
    ("3-simplex", simplex(3)),
]:
    lhs, rhs, equal = euler_identity_check(k)
    report = multiplicity_report(k, trunc=12)
    print("== %s (m=%d)" % (name, k.m))
    print("   P(t) = %s   (identity holds: %s)" % (lhs, equal))
    mults = report.nonzero_multiplicities()
    if mults:
        print("   loops on spheres: " +
              ", ".join("Omega S^%d x%d" % (n, d) for n, d in mults.items()))
    else:
        print("   contractible decomposition (no sphere factors)")
    ranks = {n: r for n, r in report.rational_ranks.items() if r}
    print("   rational homotopy ranks:",
          " ".join("pi_%d=%d" % (n, r) for n, r in sorted(ranks.items()))
          or "all zero")
    print("   loop homology Poincare series:", report.poincare[:9])
    print()

# The two-points case is the 3-sphere itself: D_3 = 1 and nothing else.
# The square gives (Omega S^3)^2, matching P = (1 - t^2)^2.
