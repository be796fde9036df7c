"""
Cycle-count filtrations and the multicycle bookkeeping behind them
==================================================================

Between the cycle-free complex (no induced cycles) and the full
chessboard complex (any number of them) sits a filtration by how many
disjoint cycles a face may induce.  Its quotients decompose into
pieces indexed by multicycles, which this script enumerates and counts.
"""

from collections import Counter

from cyclefree import (
    delta,
    filtration_level,
    full_board,
    homology,
    make_spec,
    multicycles,
    omega,
    relative_homology,
    sym,
)

# Level p admits faces inducing at most p disjoint cycles.  Level 0 is
# the cycle-free complex; high levels exhaust the chessboard complex.
n = 4
levels = [filtration_level("delta", n, p) for p in range(n + 1)]
print("f-vectors of the filtration on the 4 x 4 board:")
for p, c in enumerate(levels):
    print(f"  F_{p}: {c.f_vector()}")
print("level 0 is cycle-free:", levels[0] == omega(make_spec(n)))
print("level", n, "is the chessboard complex:", levels[-1] == delta(full_board(n)))

# The step from F_0 to F_1 is measured by relative homology, and the
# answer is assembled from one suspended cycle-free complex per single
# cycle: a cycle of length l contributes a copy of the (n - l)-board
# complex shifted up by l degrees.
rel = relative_homology(levels[1], levels[0])
print("H(F_1, F_0):", rel)

fams = multicycles(n, 1)
print("single cycles on 4 nodes by length:", dict(Counter(f.length for f in fams)))

# One shifted summand per cycle above, assembled by hand:
from cyclefree import AbelianGroup

summands = {}
for fam in fams:
    base = homology(omega(make_spec(n - fam.length)))
    for k, g in base.nontrivial().items():
        key = k + fam.length
        summands.setdefault(key, []).append(g)
expected = {k: AbelianGroup.direct_sum(gs) for k, gs in sorted(summands.items())}
print("assembled from multicycles:", expected)

# The same shift in its purest form: the suspension of the cycle-free
# complex on p+1 rows, whose homology is the base's moved up one degree.
for p in (1, 2, 3):
    print(f"sym({p}):", homology(sym(p)), "   base:", homology(omega(make_spec(p + 1))))
