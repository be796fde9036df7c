"""Randomized invariants.

Each property here is a statement the library relies on everywhere:
boundaries square to zero, the two Smith normal form routes agree,
joins multiply f-polynomials, links of cycle-free complexes are again
cycle-free complexes on the reduced spec.  Hypothesis shrinks any
counterexample to a small one, so a failure prints a usable repro.
"""

import math
from collections import Counter
from itertools import combinations_with_replacement

from hypothesis import given, settings, strategies as st

from cyclefree import (
    AbelianGroup,
    Chain,
    SimplicialComplex,
    betti_numbers,
    dense_snf,
    homology,
    join,
    make_spec,
    multicycles,
    omega,
    rank_mod_p,
    rank_z,
    reduced_spec,
    snf,
    suspension,
)
from cyclefree.homology import SparseIntMatrix

SETTINGS = settings(max_examples=60, deadline=None, derandomize=True)


def complexes(pool):
    faces = st.lists(
        st.lists(st.sampled_from(pool), min_size=1, max_size=4, unique=True),
        min_size=0,
        max_size=10,
    )
    return faces.map(lambda fs: SimplicialComplex.from_facets(fs or [[]]))


@st.composite
def chains(draw):
    c = draw(complexes(range(8)).filter(lambda k: k.dim >= 0))
    k = draw(st.integers(0, c.dim))
    faces = list(c.faces(k))
    picked = draw(
        st.lists(st.sampled_from(faces), min_size=1, max_size=len(faces), unique=True)
    )
    coeffs = {f: draw(st.integers(-3, 3)) for f in picked}
    return Chain(coeffs, degree=k)


@st.composite
def matrices(draw):
    nrows = draw(st.integers(1, 5))
    ncols = draw(st.integers(1, 5))
    dense = draw(
        st.lists(
            st.lists(st.integers(-9, 9), min_size=ncols, max_size=ncols),
            min_size=nrows,
            max_size=nrows,
        )
    )
    cols: dict[int, dict[int, int]] = {}
    for i, row in enumerate(dense):
        for j, v in enumerate(row):
            if v:
                cols.setdefault(j, {})[i] = v
    return dense, SparseIntMatrix(nrows, ncols, cols)


@SETTINGS
@given(chains())
def test_boundary_squares_to_zero(chain):
    assert chain.boundary().boundary().is_zero


@SETTINGS
@given(matrices())
def test_sparse_and_dense_smith_forms_agree(pair):
    dense, sparse = pair
    assert snf(sparse) == dense_snf(dense)


@SETTINGS
@given(matrices(), st.sampled_from([2, 3, 5]))
def test_field_rank_counts_factors_coprime_to_p(pair, p):
    dense, sparse = pair
    factors = dense_snf(dense)
    assert rank_z(sparse) == len(factors)
    assert rank_mod_p(sparse, p) == sum(1 for d in factors if d % p)


@SETTINGS
@given(complexes(range(6)), complexes(range(10, 16)))
def test_join_multiplies_f_polynomials(k1, k2):
    # f-polynomials with the empty face included, so f(K * L) = f(K) f(L)
    def poly(c):
        coeffs = [1]
        for count in c.f_vector():
            coeffs.append(count)
        return coeffs

    p1, p2, pj = poly(k1), poly(k2), poly(join(k1, k2))
    product = [0] * (len(p1) + len(p2) - 1)
    for i, a in enumerate(p1):
        for j, b in enumerate(p2):
            product[i + j] += a * b
    assert pj == product[: len(pj)]
    assert all(x == 0 for x in product[len(pj):])


@SETTINGS
@given(complexes(range(6)).filter(lambda c: c.vertices))
def test_star_is_join_of_vertex_and_link(c):
    v = c.vertices[0]
    cone = join(SimplicialComplex.from_facets([[v]]), c.link(v))
    assert c.star(v) == cone


@SETTINGS
@given(complexes(range(6)))
def test_suspension_shifts_reduced_homology(c):
    base = homology(c).nontrivial()
    shifted = {k + 1: g for k, g in base.items()}
    assert homology(suspension(c)).nontrivial() == shifted


@SETTINGS
@given(complexes(range(7)))
def test_euler_characteristic_is_alternating_betti_sum(c):
    bettis = betti_numbers(c, reduced=False)
    assert c.euler_characteristic() == sum(
        (-1) ** k * b for k, b in bettis.items()
    )


@settings(max_examples=20, deadline=None, derandomize=True)
@given(st.integers(2, 3), st.integers(0, 2), st.integers(0, 2), st.randoms())
def test_links_are_cycle_free_complexes_of_the_reduced_spec(n, m, p, rng):
    spec = make_spec(n, m, p)
    c = omega(spec)
    v = rng.choice(c.vertices)
    assert c.link(v) == omega(reduced_spec(spec, v))


@SETTINGS
@given(st.lists(st.integers(2, 60), max_size=5))
def test_invariant_factors_form_a_divisor_chain(torsion):
    g = AbelianGroup(0, torsion)
    chain = g.torsion
    assert all(b % a == 0 for a, b in zip(chain, chain[1:]))
    assert math.prod(chain, start=1) == math.prod(torsion, start=1)


@SETTINGS
@given(
    st.lists(st.integers(0, 3), max_size=3),
    st.lists(st.integers(2, 30), max_size=3),
)
def test_direct_sum_is_order_independent(ranks, torsion):
    groups = [AbelianGroup(r) for r in ranks] + [AbelianGroup(0, (t,)) for t in torsion]
    total = AbelianGroup.direct_sum(groups)
    assert total == AbelianGroup.direct_sum(reversed(groups))
    assert total.rank == sum(ranks)


def _count_by_formula(n: int, p: int, min_len: int) -> int:
    # p disjoint oriented cycles with length multiset (l_1 <= ... <= l_p):
    # n! / ((n - L)! * prod l_i * prod mult_j!)
    total = 0
    for lengths in combinations_with_replacement(range(min_len, n + 1), p):
        used = sum(lengths)
        if used > n:
            continue
        ways = math.factorial(n) // math.factorial(n - used)
        for l in lengths:
            ways //= l
        for mult in Counter(lengths).values():
            ways //= math.factorial(mult)
        total += ways
    return total


@settings(max_examples=30, deadline=None, derandomize=True)
@given(st.integers(0, 5), st.integers(0, 2), st.sampled_from([1, 2]))
def test_multicycle_enumeration_matches_the_counting_formula(n, p, min_len):
    fams = multicycles(n, p, min_len=min_len)
    assert len(fams) == _count_by_formula(n, p, min_len)
    assert len(set(fams)) == len(fams)
    for fam in fams:
        assert len(fam.cycles) == p
        assert all(len(cyc) >= min_len for cyc in fam.cycles)
