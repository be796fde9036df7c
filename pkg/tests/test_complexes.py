import pytest

from cyclefree import (
    Cover,
    SimplicialComplex,
    intersection,
    join,
    nerve,
    suspension,
    union,
)


def K(*facets):
    return SimplicialComplex.from_facets(facets)


VOID = SimplicialComplex.from_facets([])
POINT = K("a")
EMPTYFACE = K([])  # the complex whose only face is the empty one
TRIANGLE_BOUNDARY = K("ab", "bc", "ca")
SOLID_TRIANGLE = K("abc")


def test_void_versus_empty_face():
    assert VOID.is_void and VOID.dim == -2
    assert VOID.faces(-1) == ()
    assert not EMPTYFACE.is_void and EMPTYFACE.dim == -1
    assert EMPTYFACE.faces(-1) == ((),)
    assert VOID != EMPTYFACE


def test_from_facets_drops_dominated_faces():
    c = SimplicialComplex.from_facets(["ab", "b", "abc", ""])
    assert c.facets == frozenset({frozenset("abc")})


def test_faces_are_sorted_tuples():
    c = K("ca", "cb")
    assert c.faces(0) == (("a",), ("b",), ("c",))
    assert c.faces(1) == (("a", "c"), ("b", "c"))
    assert c.faces(2) == ()
    assert c.faces(-3) == ()


def test_face_index_matches_enumeration():
    idx = TRIANGLE_BOUNDARY.face_index(1)
    assert [idx[f] for f in TRIANGLE_BOUNDARY.faces(1)] == [0, 1, 2]


def test_f_vector_and_euler():
    assert SOLID_TRIANGLE.f_vector() == (3, 3, 1)
    assert SOLID_TRIANGLE.euler_characteristic() == 1
    assert TRIANGLE_BOUNDARY.f_vector() == (3, 3)
    assert TRIANGLE_BOUNDARY.euler_characteristic() == 0


def test_has_face():
    assert SOLID_TRIANGLE.has_face("ab")
    assert SOLID_TRIANGLE.has_face([])
    assert not TRIANGLE_BOUNDARY.has_face("abc")
    assert not VOID.has_face([])


def test_subcomplex_relation():
    assert TRIANGLE_BOUNDARY.is_subcomplex_of(SOLID_TRIANGLE)
    assert not SOLID_TRIANGLE.is_subcomplex_of(TRIANGLE_BOUNDARY)
    assert VOID.is_subcomplex_of(VOID)
    assert EMPTYFACE.is_subcomplex_of(POINT)
    assert not EMPTYFACE.is_subcomplex_of(VOID)


class TestLocalStructure:
    def test_link_star_antistar(self):
        c = K("abc", "cd")
        assert c.link("c") == K("ab", "d")
        assert c.star("c") == c
        assert c.antistar("c") == K("ab", "d")
        assert c.link("d") == K("c")

    def test_link_of_missing_vertex(self):
        with pytest.raises(ValueError):
            SOLID_TRIANGLE.link("z")

    def test_star_is_join_of_vertex_and_link(self):
        c = K("abc", "bcd", "de")
        for v in c.vertices:
            assert c.star(v) == join(K([v]), c.link(v))


class TestJoin:
    def test_segment_join_segment(self):
        # S^0 * S^0 is a 4-cycle
        s0 = K("a", "b")
        t0 = K("x", "y")
        j = join(s0, t0)
        assert j.f_vector() == (4, 4)

    def test_empty_face_is_identity(self):
        assert join(EMPTYFACE, TRIANGLE_BOUNDARY) == TRIANGLE_BOUNDARY

    def test_void_absorbs(self):
        assert join(VOID, TRIANGLE_BOUNDARY).is_void

    def test_overlapping_vertices_rejected(self):
        with pytest.raises(ValueError):
            join(K("ab"), K("bc"))

    def test_f_polynomial_multiplies(self):
        # the generating function with f_{-1} = 1 is multiplicative
        def poly(c):
            coeffs = [1] + list(c.f_vector())
            return coeffs

        import numpy as np

        a, b = K("ab", "bc"), K("xy")
        pa, pb = poly(a), poly(b)
        pj = poly(join(a, b))
        assert list(np.convolve(pa, pb)) == pj


def test_suspension_of_circle_is_a_sphere():
    s = suspension(TRIANGLE_BOUNDARY)
    assert s.f_vector() == (5, 9, 6)
    assert s.euler_characteristic() == 2
    # the two new poles are never adjacent
    poles = set(s.vertices) - set(TRIANGLE_BOUNDARY.vertices)
    assert len(poles) == 2
    assert not s.has_face(poles)


def test_union_and_intersection():
    a, b = K("ab", "bc"), K("bc", "cd")
    assert union(a, b) == K("ab", "bc", "cd")
    assert intersection(a, b) == K("bc")
    assert intersection(K("ab"), K("cd")).is_void is False  # share no face but the empty one
    assert intersection(K("ab"), VOID).is_void


def test_nerve_of_a_cover():
    c = K("ab", "bc", "cd")
    cover = Cover([K("ab"), K("bc"), K("cd")])
    n = nerve(cover)
    assert n.has_face((0, 1))
    assert n.has_face((1, 2))
    assert not n.has_face((0, 2))
    assert union(union(K("ab"), K("bc")), K("cd")) == c


def test_equality_ignores_construction_order():
    assert K("ab", "cd") == K("cd", "ab")
    assert hash(K("ab")) == hash(K("ab"))
    assert K("ab") != K("ab", "cd")
