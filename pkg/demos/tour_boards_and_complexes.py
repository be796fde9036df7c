"""
A tour of boards, rook configurations, and the cycle-free complex
=================================================================

"""

# A board spec is a set of squares plus a distinguished block X x Y and
# a bijection alpha from columns to rows.  The standard square spec has
# X = Y = {1..n} and alpha the identity.
from cyclefree import make_spec

spec = make_spec(4)
print("board squares:", len(spec.board))
print("distinguished rows:", sorted(spec.x_rows))

# Every square (x, y) of the block induces the arc x -> alpha(y).  A
# non-taking rook configuration is banned exactly when those arcs close
# a directed cycle; the diagonal square (i, i) is a one-step cycle all
# by itself.
from cyclefree import Square, alpha_cycles

config = [Square(1, 2), Square(2, 3), Square(3, 1)]
print("cycles of the triangle config:", alpha_cycles(config, spec))
path = [Square(1, 2), Square(2, 3), Square(3, 4)]
print("cycles of the path config:", alpha_cycles(path, spec))

# Dropping every cyclic configuration from the chessboard complex
# leaves the cycle-free complex.  On the 4 x 4 board it loses the four
# diagonal vertices and every facet shrinks to three squares: a full
# placement is a permutation, and permutations always contain cycles.
from cyclefree import delta, full_board, omega

chess = delta(full_board(4))
free = omega(spec)
print("chessboard f-vector: ", chess.f_vector())
print("cycle-free f-vector:", free.f_vector())
print("is subcomplex:", free.is_subcomplex_of(chess))

# The local structure is self-similar: the link of any vertex is again
# a cycle-free complex, on the spec with that square's row and column
# spliced out.
from cyclefree import reduced_spec

v = Square(1, 2)
link = free.link(v)
print("link of", v, "equals reduced-spec complex:", link == omega(reduced_spec(spec, v)))

# Exact homology over the integers comes from sparse Smith normal form.
from cyclefree import homology

print("reduced homology of the cycle-free complex:", homology(free))
print("reduced homology of the chessboard complex:", homology(chess))

# Complexes round-trip through a one-facet-per-line text format, so any
# external tool can feed the same pipeline.
from cyclefree import format_complex

text = format_complex(free, spec)
print("facet file starts with:")
print("\n".join(text.splitlines()[:4]))
