"""Family builders: chessboard and cycle-free complexes, filtrations,
digraph routes, multicycle enumeration, suspensions.

Homology values pinned here were derived independently before freezing;
the small chessboard ones (3 x 3 circle of rank 4, the 3 x 4 torus) are
classical and double as sanity anchors.
"""

from collections import Counter

import pytest

from cyclefree import (
    AbelianGroup,
    BoardSpec,
    Bijection,
    Digraph,
    Multicycle,
    Square,
    complete_digraph,
    delta,
    delta_digraph,
    directed_matching,
    filtration_level,
    full_board,
    homology,
    intersection,
    make_spec,
    multicycles,
    omega,
    omega_digraph,
    sym,
    theta,
    theta1,
    theta2,
    union,
)


def H(complex_):
    return homology(complex_).nontrivial()


def free(rank):
    return AbelianGroup(rank)


class TestDelta:
    def test_two_by_two(self):
        c = delta(full_board(2))
        assert c.f_vector() == (4, 2)
        assert H(c) == {0: free(1)}

    def test_three_by_three_is_a_circle_bouquet(self):
        assert H(delta(full_board(3))) == {1: free(4)}

    def test_three_by_four_is_a_torus(self):
        c = delta(full_board(3, 4))
        assert c.f_vector() == (12, 36, 24)
        assert H(c) == {1: free(2), 2: free(1)}
        assert c.euler_characteristic() == 0

    def test_f_vector_counts_partial_matchings(self):
        # f_{k}(n x m) = C(n, k+1) C(m, k+1) (k+1)!
        from math import comb, factorial

        c = delta(full_board(4, 5))
        expected = tuple(
            comb(4, k) * comb(5, k) * factorial(k) for k in range(1, 5)
        )
        assert c.f_vector() == expected


OMEGA_HOMOLOGY = {
    2: {0: free(1)},
    3: {0: free(1), 1: free(2)},
    4: {1: free(7), 2: free(6)},
    5: {2: free(43), 3: free(24)},
    6: {2: free(1), 3: free(272), 4: free(120)},
}

OMEGA_F = {
    2: (2,),
    3: (6, 6),
    4: (12, 36, 24),
    5: (20, 120, 240, 120),
    6: (30, 300, 1200, 1800, 720),
}


class TestOmega:
    @pytest.mark.parametrize("n", sorted(OMEGA_HOMOLOGY))
    def test_square_board_homology(self, n):
        c = omega(make_spec(n))
        assert c.f_vector() == OMEGA_F[n]
        assert H(c) == OMEGA_HOMOLOGY[n]

    def test_facets_have_n_minus_one_squares(self):
        # a full placement always induces a cycle, so dim is n - 2
        for n in (3, 4, 5):
            assert omega(make_spec(n)).dim == n - 2

    def test_diagonal_squares_never_appear(self):
        verts = omega(make_spec(4)).vertices
        assert all(r != c for r, c in verts)

    def test_extra_row_homology(self):
        assert H(omega(make_spec(2, 1))) == {0: free(1)}
        assert H(omega(make_spec(2, 2))) == {1: free(1)}
        assert H(omega(make_spec(3, 1))) == {1: free(4)}
        assert H(omega(make_spec(4, 1))) == {2: free(15)}

    def test_extra_rows_can_create_torsion(self):
        assert H(omega(make_spec(3, 2))) == {1: AbelianGroup(1, (2,))}


class TestThetaFamily:
    def test_theta_is_the_union(self):
        for n in (3, 4, 5):
            assert theta(n) == union(theta1(n), theta2(n))

    def test_halves_avoid_one_line_each(self):
        big = omega(make_spec(5))
        t1, t2 = theta1(5), theta2(5)
        assert t1.is_subcomplex_of(big) and t2.is_subcomplex_of(big)
        assert all(c != 1 for _, c in t1.vertices)
        assert all(r != 1 for r, _ in t2.vertices)

    def test_intersection_is_the_inner_cycle_free_complex(self):
        n = 5
        inner = range(2, n + 1)
        spec = BoardSpec(
            [(r, c) for r in inner for c in inner],
            inner,
            inner,
            Bijection.identity(inner),
        )
        assert intersection(theta1(n), theta2(n)) == omega(spec)

    def test_homology(self):
        assert theta(4).f_vector() == (12, 30, 12)
        assert H(theta(4)) == {1: free(7)}
        assert H(theta(5)) == {2: free(31)}

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            theta1(1)


class TestDigraphRoutes:
    def test_digraph_validation(self):
        with pytest.raises(ValueError, match="leave"):
            Digraph([1, 2], [(1, 3)])
        g = Digraph([1, 2], [(1, 2)])
        with pytest.raises(AttributeError):
            g.nodes = frozenset()

    def test_complete_digraph_sizes(self):
        assert len(complete_digraph(3).edges) == 9
        assert len(complete_digraph(3, loops=False).edges) == 6

    def test_full_digraph_route_matches_board_route(self):
        # arcs (i, j) and squares (i, j) induce identical complexes
        for n in (2, 3):
            assert delta_digraph(complete_digraph(n)) == delta(full_board(n))
            assert omega_digraph(complete_digraph(n, loops=False)) == omega(
                make_spec(n)
            )

    def test_directed_matching_homology(self):
        assert H(directed_matching(2)) == {}
        assert H(directed_matching(3)) == {1: free(2)}
        assert H(directed_matching(4)) == {2: free(4)}

    def test_path_digraph(self):
        g = Digraph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
        with_cycles = delta_digraph(g)
        without = omega_digraph(g)
        assert with_cycles.has_face(((1, 2), (2, 3), (3, 1)))
        assert not without.has_face(((1, 2), (2, 3), (3, 1)))
        assert without.has_face(((1, 2), (2, 3)))


class TestFiltration:
    def test_level_zero_is_cycle_free(self):
        for family in ("delta", "dm"):
            assert filtration_level(family, 4, 0) == omega(make_spec(4))

    def test_top_level_exhausts_the_family(self):
        assert filtration_level("delta", 4, 4) == delta(full_board(4))
        assert filtration_level("dm", 4, 2) == directed_matching(4)

    def test_levels_are_nested(self):
        levels = [filtration_level("delta", 4, p) for p in range(0, 5)]
        for small, big in zip(levels, levels[1:]):
            assert small.is_subcomplex_of(big)

    def test_frozen_f_vectors(self):
        assert filtration_level("delta", 4, 1).f_vector() == (16, 66, 68, 6)
        assert filtration_level("dm", 4, 1).f_vector() == (12, 42, 44, 6)

    def test_validation(self):
        with pytest.raises(ValueError, match="family"):
            filtration_level("nope", 3, 0)
        with pytest.raises(ValueError):
            filtration_level("delta", 0, 0)
        with pytest.raises(ValueError):
            filtration_level("delta", 3, -1)


class TestMulticycles:
    def test_single_cycle_counts(self):
        # on 3 nodes: 3 loops, 3 transpositions, 2 oriented triangles
        assert len(multicycles(3, 1)) == 8
        assert len(multicycles(3, 1, min_len=2)) == 5
        assert len(multicycles(5, 1)) == 89

    def test_pair_counts_by_type(self):
        fams = multicycles(4, 2)
        assert len(fams) == 29
        assert Counter(f.type for f in fams) == {
            (1, 1): 6,
            (1, 2): 12,
            (1, 3): 8,
            (2, 2): 3,
        }

    def test_loopless_pairs(self):
        fams = multicycles(4, 2, min_len=2)
        assert len(fams) == 3
        assert all(f.type == (2, 2) for f in fams)

    def test_enumeration_is_sorted_and_duplicate_free(self):
        fams = multicycles(4, 2)
        keys = [f.cycles for f in fams]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)

    def test_two_nodes_two_loops(self):
        assert multicycles(2, 2) == [Multicycle([(1,), (2,)])]

    def test_canonicalization(self):
        assert Multicycle([(2, 3, 1)]) == Multicycle([(1, 2, 3)])
        assert Multicycle([(4, 5), (1, 2)]).cycles == ((1, 2), (4, 5))

    def test_validation(self):
        with pytest.raises(ValueError, match="empty"):
            Multicycle([()])
        with pytest.raises(ValueError, match="repeated"):
            Multicycle([(1, 2, 1)])
        with pytest.raises(ValueError, match="disjoint"):
            Multicycle([(1, 2), (2, 3)])

    def test_type_length_config(self):
        mc = Multicycle([(1,), (2, 3)])
        assert mc.type == (1, 2)
        assert mc.length == 3
        assert mc.config() == frozenset(
            {Square(1, 1), Square(2, 3), Square(3, 2)}
        )


class TestSym:
    def test_frozen_values(self):
        assert sym(1).f_vector() == (4, 4)
        assert H(sym(1)) == {1: free(1)}
        assert sym(2).f_vector() == (8, 18, 12)
        assert H(sym(2)) == {1: free(1), 2: free(2)}
        assert sym(3).f_vector() == (14, 60, 96, 48)
        assert H(sym(3)) == {2: free(7), 3: free(6)}

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_suspension_shifts_the_base(self, p):
        base = homology(omega(make_spec(p + 1))).nontrivial()
        shifted = {k + 1: g for k, g in base.items()}
        assert H(sym(p)) == shifted

    def test_validation(self):
        with pytest.raises(ValueError):
            sym(0)
