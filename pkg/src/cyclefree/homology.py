"""Exact simplicial homology over Z and over prime fields.

Boundary matrices follow the one ordering convention of the package:
faces are sorted vertex tuples, listed lexicographically, and the face
obtained by deleting the vertex in position ``i`` carries sign
``(-1)**i``.  Reduced homology is the default; the empty face sits in
degree -1, so the complex whose only face is the empty one has
``H~_{-1} = Z``.

Two independent computation routes are provided on purpose.  The
workhorse is a sparse integer elimination with unit-pivot (Markowitz
style) preprocessing feeding a small dense Smith normal form remainder.
The second route, :func:`dense_snf`, is a straightforward textbook
Smith reduction of the full dense matrix; it shares no elimination code
with the sparse route and serves as an oracle in the test suite.

Membership of a cycle in the boundary lattice is decided without
transform bookkeeping: a column vector lies in the column lattice of an
integer matrix iff appending it changes neither the rank nor the
invariant factors (the quotient's torsion order would otherwise drop by
the index of the smaller lattice).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .complexes import SimplicialComplex

# ---------------------------------------------------------------------------
# abelian groups


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divisor_chain(factors: Iterable[int]) -> tuple[int, ...]:
    """Canonical invariant-factor chain of a direct sum of cyclic groups."""
    primary: dict[int, list[int]] = {}
    for f in factors:
        if f in (0, 1):
            continue
        for p, e in _factorize(abs(f)).items():
            primary.setdefault(p, []).append(e)
    for exps in primary.values():
        exps.sort(reverse=True)
    depth = max((len(e) for e in primary.values()), default=0)
    chain = []
    for i in range(depth):
        chain.append(prod(p ** exps[i] for p, exps in primary.items() if len(exps) > i))
    return tuple(reversed(chain))


class AbelianGroup:
    """A finitely generated abelian group in invariant factor form.

    ``AbelianGroup(rank, torsion)`` is Z^rank plus a cyclic factor per
    torsion entry; any multiset of cyclic orders is accepted and
    canonicalized, so ``AbelianGroup(0, (2, 3)) == AbelianGroup(0, (6,))``.
    """

    __slots__ = ("rank", "torsion")

    def __init__(self, rank: int = 0, torsion: Iterable[int] = ()):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "torsion", _divisor_chain(torsion))

    def __setattr__(self, name, value):
        raise AttributeError("AbelianGroup is immutable")

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank)

    @classmethod
    def direct_sum(cls, groups: Iterable["AbelianGroup"]) -> "AbelianGroup":
        groups = list(groups)
        return cls(
            sum(g.rank for g in groups),
            [t for g in groups for t in g.torsion],
        )

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __eq__(self, other):
        return (
            isinstance(other, AbelianGroup)
            and self.rank == other.rank
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianGroup({self.rank}, {self.torsion})"


TRIVIAL_GROUP = AbelianGroup(0)

# ---------------------------------------------------------------------------
# chains


class Chain:
    """An integer chain: finitely many oriented simplices with coefficients.

    Simplices are sorted vertex tuples of one common dimension.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, coeffs: Mapping[tuple, int], degree: Optional[int] = None):
        clean: dict[tuple, int] = {}
        for face, c in coeffs.items():
            face = tuple(face)
            if tuple(sorted(face)) != face:
                raise ValueError(f"simplex not sorted: {face}")
            if c:
                clean[face] = int(c)
        sizes = {len(f) for f in clean}
        if len(sizes) > 1:
            raise ValueError(f"mixed simplex dimensions: {sorted(sizes)}")
        if degree is None:
            if not sizes:
                raise ValueError("degree needed for the zero chain")
            degree = sizes.pop() - 1
        elif sizes and sizes.pop() - 1 != degree:
            raise ValueError("degree disagrees with simplex size")
        self.degree = degree
        self._coeffs = clean

    @classmethod
    def from_simplex(cls, face: Iterable, coeff: int = 1) -> "Chain":
        face = tuple(sorted(face))
        return cls({face: coeff}, degree=len(face) - 1)

    def coefficient(self, face: Iterable) -> int:
        return self._coeffs.get(tuple(sorted(face)), 0)

    def items(self):
        return self._coeffs.items()

    def support(self) -> tuple:
        return tuple(sorted(self._coeffs))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __add__(self, other: "Chain") -> "Chain":
        if self.degree != other.degree:
            raise ValueError("cannot add chains of different degrees")
        out = dict(self._coeffs)
        for f, c in other._coeffs.items():
            out[f] = out.get(f, 0) + c
        return Chain(out, degree=self.degree)

    def __neg__(self) -> "Chain":
        return Chain({f: -c for f, c in self._coeffs.items()}, degree=self.degree)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, k: int) -> "Chain":
        return Chain({f: k * c for f, c in self._coeffs.items()}, degree=self.degree)

    def boundary(self) -> "Chain":
        """Reduced simplicial boundary; vertices map to the empty face."""
        out: dict[tuple, int] = {}
        for face, c in self._coeffs.items():
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                out[sub] = out.get(sub, 0) + (-1) ** i * c
        return Chain(out, degree=self.degree - 1)

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.degree == other.degree
            and self._coeffs == other._coeffs
        )

    def __repr__(self):
        if not self._coeffs:
            return f"Chain(0, degree={self.degree})"
        bits = []
        for f in sorted(self._coeffs):
            c = self._coeffs[f]
            bits.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{f}")
        return "Chain(" + " ".join(bits) + ")"


# ---------------------------------------------------------------------------
# sparse integer matrices


class SparseIntMatrix:
    """A sparse integer matrix stored by columns."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: dict[int, dict[int, int]]):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in self.cols.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, int]:
        return dict(self.cols.get(j, {}))

    def with_extra_column(self, col: Mapping[int, int]) -> "SparseIntMatrix":
        cols = {j: dict(c) for j, c in self.cols.items()}
        extra = {i: int(v) for i, v in col.items() if v}
        if extra:
            cols[self.ncols] = extra
        return SparseIntMatrix(self.nrows, self.ncols + 1, cols)

    def __repr__(self):
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


def boundary_matrix(
    complex_: SimplicialComplex,
    k: int,
    rows: Optional[Sequence[tuple]] = None,
    cols: Optional[Sequence[tuple]] = None,
) -> SparseIntMatrix:
    """The degree-k boundary matrix, (k-1)-faces by k-faces.

    ``rows``/``cols`` override the face lists (used for relative
    chains); entries whose target face is missing from ``rows`` are
    dropped.
    """
    if cols is None:
        cols = complex_.faces(k)
    if rows is None:
        rows = complex_.faces(k - 1)
        row_index = complex_.face_index(k - 1) if rows else {}
    else:
        row_index = {f: i for i, f in enumerate(rows)}
    data: dict[int, dict[int, int]] = {}
    for j, face in enumerate(cols):
        col: dict[int, int] = {}
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            r = row_index.get(sub)
            if r is not None:
                col[r] = (-1) ** i
        if col:
            data[j] = col
    return SparseIntMatrix(len(rows), len(cols), data)


# ---------------------------------------------------------------------------
# sparse elimination

_MOD_P = "mod_p"
_EXACT_RANK = "rank"
_EXACT_SNF = "snf"


def _sparse_eliminate(matrix: SparseIntMatrix, mode: str, p: int = 0):
    """Unit/invertible-pivot sparse elimination.

    mode == _MOD_P:   returns the rank over F_p (p prime).
    mode == _EXACT_RANK: returns (unit_rank, leftover_cols) where the
        leftover contains no +-1 entry; column gcds are divided out.
    mode == _EXACT_SNF: like _EXACT_RANK but gcd reduction is skipped,
        so the leftover's invariant factors complete those of the input.

    Pivots are chosen by a Markowitz-flavoured heuristic: smallest
    column first, then the entry of smallest row occupancy (restricted
    to units in exact modes).
    """
    cols: dict[int, dict[int, int]] = {
        j: dict(c) for j, c in matrix.cols.items() if c
    }
    if mode == _MOD_P:
        for col in cols.values():
            for i in list(col):
                v = col[i] % p
                if v:
                    col[i] = v
                else:
                    del col[i]
        for j in [j for j, c in cols.items() if not c]:
            del cols[j]
    rowocc: dict[int, set[int]] = {}
    for j, col in cols.items():
        for i in col:
            rowocc.setdefault(i, set()).add(j)
    heap = [(len(col), j) for j, col in cols.items()]
    heapq.heapify(heap)
    deferred: set[int] = set()
    rank = 0
    while heap:
        nnz, j = heapq.heappop(heap)
        col = cols.get(j)
        if col is None or not col:
            cols.pop(j, None)
            continue
        if len(col) != nnz:
            heapq.heappush(heap, (len(col), j))
            continue
        if j in deferred:
            continue
        if mode == _MOD_P:
            r = min(col, key=lambda i: len(rowocc[i]))
        else:
            units = [i for i, v in col.items() if v == 1 or v == -1]
            if not units:
                deferred.add(j)
                continue
            r = min(units, key=lambda i: len(rowocc[i]))
        v = col[r]
        if mode == _MOD_P and v != 1:
            inv = pow(v, -1, p)
            for i in list(col):
                col[i] = col[i] * inv % p
        targets = rowocc[r] - {j}
        for t in targets:
            tcol = cols[t]
            w = tcol[r]
            if mode == _MOD_P:
                for i, cv in col.items():
                    nv = (tcol.get(i, 0) - w * cv) % p
                    if nv:
                        if i not in tcol:
                            rowocc[i].add(t)
                        tcol[i] = nv
                    elif i in tcol:
                        del tcol[i]
                        rowocc[i].discard(t)
            else:
                f = w * v  # v in {1,-1}: w / v
                for i, cv in col.items():
                    nv = tcol.get(i, 0) - f * cv
                    if nv:
                        if i not in tcol:
                            rowocc[i].add(t)
                        tcol[i] = nv
                    elif i in tcol:
                        del tcol[i]
                        rowocc[i].discard(t)
                if mode == _EXACT_RANK and tcol:
                    g = 0
                    for cv in tcol.values():
                        g = gcd(g, cv)
                        if g == 1:
                            break
                    if g > 1:
                        for i in tcol:
                            tcol[i] //= g
            if tcol:
                deferred.discard(t)
                heapq.heappush(heap, (len(tcol), t))
            else:
                del cols[t]
                for i in list(rowocc):
                    rowocc[i].discard(t)
        # retire pivot row and column
        for i in col:
            occ = rowocc.get(i)
            if occ is not None:
                occ.discard(j)
        rowocc.pop(r, None)
        del cols[j]
        rank += 1
    if mode == _MOD_P:
        return rank
    leftover = {j: col for j, col in cols.items() if col}
    return rank, leftover


def rank_mod_p(matrix: SparseIntMatrix, p: int) -> int:
    """Rank over the prime field F_p."""
    if p < 2:
        raise ValueError("p must be a prime")
    return _sparse_eliminate(matrix, _MOD_P, p)


def _dense_fraction_rank(cols: dict[int, dict[int, int]]) -> int:
    """Exact rank of a small leftover block, by fraction elimination."""
    if not cols:
        return 0
    rows_used = sorted({i for c in cols.values() for i in c})
    dense = [
        [Fraction(c.get(r, 0)) for r in rows_used] for c in cols.values()
    ]  # columns as rows of the working array; rank is symmetric
    rank = 0
    for pivot_col in range(len(rows_used)):
        pr = next((i for i in range(rank, len(dense)) if dense[i][pivot_col]), None)
        if pr is None:
            continue
        dense[rank], dense[pr] = dense[pr], dense[rank]
        pv = dense[rank][pivot_col]
        for i in range(len(dense)):
            if i != rank and dense[i][pivot_col]:
                f = dense[i][pivot_col] / pv
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[rank])]
        rank += 1
    return rank


def rank_z(matrix: SparseIntMatrix) -> int:
    """Exact rank over Z (equivalently over Q)."""
    units, leftover = _sparse_eliminate(matrix, _EXACT_RANK)
    return units + _dense_fraction_rank(leftover)


def snf(matrix: SparseIntMatrix) -> tuple[int, ...]:
    """Invariant factors of an integer matrix (Smith normal form diagonal).

    Unit pivots are split off sparsely; whatever remains (entries all of
    absolute value >= 2) is finished by the dense reduction.  The two
    stages are glued by ``diag(1,...,1) (+) leftover``, whose invariant
    factors are the 1s followed by those of the leftover block.
    """
    units, leftover = _sparse_eliminate(matrix, _EXACT_SNF)
    rest: tuple[int, ...] = ()
    if leftover:
        rows_used = sorted({i for c in leftover.values() for i in c})
        rmap = {r: i for i, r in enumerate(rows_used)}
        dense = [[0] * len(leftover) for _ in rows_used]
        for jj, col in enumerate(leftover.values()):
            for i, v in col.items():
                dense[rmap[i]][jj] = v
        rest = dense_snf(dense)
    return (1,) * units + rest


def _snf_multiset(matrix: SparseIntMatrix) -> tuple[int, tuple[int, ...]]:
    factors = snf(matrix)
    return len(factors), tuple(sorted(f for f in factors if f > 1))


def in_column_lattice(matrix: SparseIntMatrix, col: Mapping[int, int]) -> bool:
    """Whether an integer vector lies in the span-over-Z of the columns.

    Appending a vector of the lattice changes neither rank nor invariant
    factors; appending anything else changes at least one of them, since
    the torsion order of the cokernel drops by the index of the smaller
    lattice (or the rank grows).
    """
    base = _snf_multiset(matrix)
    aug = _snf_multiset(matrix.with_extra_column(col))
    return base == aug


def in_column_space_mod_p(matrix: SparseIntMatrix, col: Mapping[int, int], p: int) -> bool:
    base = rank_mod_p(matrix, p)
    aug = rank_mod_p(matrix.with_extra_column(col), p)
    return base == aug


# ---------------------------------------------------------------------------
# dense Smith normal form (oracle route)


def dense_snf(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Textbook Smith normal form of a dense integer matrix.

    Returns the positive invariant factors d_1 | d_2 | ... .  Kept free
    of any sparse-elimination code on purpose: this is the oracle the
    optimized route is checked against.
    """
    a = np.array(rows, dtype=object)
    if a.size == 0:
        return ()
    m, n = a.shape
    factors: list[int] = []
    t = 0
    while t < m and t < n:
        sub = a[t:, t:]
        nz = np.nonzero(sub)
        if len(nz[0]) == 0:
            break
        # smallest nonzero entry to the pivot position
        vals = np.abs(sub[nz])
        k = int(np.argmin(vals))
        i0, j0 = int(nz[0][k]) + t, int(nz[1][k]) + t
        if i0 != t:
            a[[t, i0], :] = a[[i0, t], :]
        if j0 != t:
            a[:, [t, j0]] = a[:, [j0, t]]
        while True:
            piv = a[t, t]
            done = True
            for i in range(t + 1, m):
                if a[i, t] % piv:
                    done = False
            for j in range(t + 1, n):
                if a[t, j] % piv:
                    done = False
            if done:
                for i in range(t + 1, m):
                    if a[i, t]:
                        a[i, :] -= (a[i, t] // piv) * a[t, :]
                for j in range(t + 1, n):
                    if a[t, j]:
                        a[:, j] -= (a[t, j] // piv) * a[:, t]
                if np.count_nonzero(a[t + 1:, t]) or np.count_nonzero(a[t, t + 1:]):
                    continue  # remainders appeared; reduce again
                break
            # replace entries by remainders to shrink the pivot
            for i in range(t + 1, m):
                if a[i, t] % piv:
                    a[i, :] -= (a[i, t] // piv) * a[t, :]
            for j in range(t + 1, n):
                if a[t, j] % piv:
                    a[:, j] -= (a[t, j] // piv) * a[:, t]
            sub = a[t:, t:]
            nz = np.nonzero(sub)
            vals = np.abs(sub[nz])
            k = int(np.argmin(vals))
            i0, j0 = int(nz[0][k]) + t, int(nz[1][k]) + t
            if i0 != t:
                a[[t, i0], :] = a[[i0, t], :]
            if j0 != t:
                a[:, [t, j0]] = a[:, [j0, t]]
        # pivot must divide the rest of the matrix for the divisor chain
        piv = a[t, t]
        bad = None
        for i in range(t + 1, m):
            row = a[i, t + 1:]
            for j in range(t + 1, n):
                if a[i, j] % piv:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            a[t, :] += a[bad, :]
            continue
        factors.append(abs(int(piv)))
        t += 1
    return tuple(factors)


# ---------------------------------------------------------------------------
# homology of a complex


class HomologyResult:
    """Homology groups per degree, with optional generator chains."""

    __slots__ = ("groups", "coefficients", "generators")

    def __init__(
        self,
        groups: dict[int, AbelianGroup],
        coefficients: Union[None, int] = None,
        generators: Optional[dict[int, tuple]] = None,
    ):
        self.groups = dict(groups)
        self.coefficients = coefficients
        self.generators = generators or {}

    def group(self, k: int) -> AbelianGroup:
        return self.groups.get(k, TRIVIAL_GROUP)

    def __getitem__(self, k: int) -> AbelianGroup:
        return self.group(k)

    def betti(self, k: int) -> int:
        return self.group(k).rank

    def nontrivial(self) -> dict[int, AbelianGroup]:
        return {k: g for k, g in sorted(self.groups.items()) if not g.is_trivial}

    def __eq__(self, other):
        if not isinstance(other, HomologyResult):
            return NotImplemented
        return self.nontrivial() == other.nontrivial()

    def __str__(self):
        nt = self.nontrivial()
        if not nt:
            return "trivial"
        return ", ".join(f"H_{k} = {g}" for k, g in nt.items())

    def __repr__(self):
        return f"HomologyResult({self.nontrivial()})"


def _degree_list(complex_: SimplicialComplex, degrees, reduced: bool) -> list[int]:
    if degrees is None:
        lo = -1 if reduced else 0
        return list(range(lo, max(complex_.dim, lo) + 1))
    if isinstance(degrees, int):
        return [degrees]
    return sorted(set(int(d) for d in degrees))


def homology(
    complex_: SimplicialComplex,
    degrees=None,
    coefficients: Union[None, int] = None,
    reduced: bool = True,
    generators: bool = False,
) -> HomologyResult:
    """Homology of a complex, reduced by default.

    ``coefficients=None`` computes exact integer groups via Smith normal
    forms of the boundary matrices; a prime ``p`` computes dimensions of
    the F_p homology instead (the result's groups are then free of
    torsion by construction and ``rank`` means F_p-dimension).

    With ``generators=True`` (integer coefficients only) each group
    comes with representative cycles; this routes the relevant boundary
    matrices through dense transform-tracking Smith reduction, so keep
    it to complexes of moderate size.
    """
    if complex_.is_void:
        return HomologyResult({}, coefficients)
    degs = _degree_list(complex_, degrees, reduced)
    if generators:
        if coefficients is not None:
            raise ValueError("generators are only computed over Z")
        return _homology_with_generators(complex_, degs, reduced)
    rank_cache: dict[int, int] = {}
    tors_cache: dict[int, tuple[int, ...]] = {}

    def boundary_rank_and_torsion(k: int) -> tuple[int, tuple[int, ...]]:
        # rank and torsion contribution of the boundary map C_k -> C_{k-1}
        if k in rank_cache:
            return rank_cache[k], tors_cache[k]
        nk = len(complex_.faces(k))
        nk1 = len(complex_.faces(k - 1)) if (reduced or k - 1 >= 0) else 0
        if nk == 0 or nk1 == 0:
            rank_cache[k], tors_cache[k] = 0, ()
            return 0, ()
        mat = boundary_matrix(complex_, k)
        if coefficients is None:
            factors = snf(mat)
            rank_cache[k] = len(factors)
            tors_cache[k] = tuple(f for f in factors if f > 1)
        else:
            rank_cache[k] = rank_mod_p(mat, coefficients)
            tors_cache[k] = ()
        return rank_cache[k], tors_cache[k]

    groups: dict[int, AbelianGroup] = {}
    for k in degs:
        if k < -1 or k > complex_.dim:
            groups[k] = TRIVIAL_GROUP
            continue
        nk = len(complex_.faces(k))
        if nk == 0:
            groups[k] = TRIVIAL_GROUP
            continue
        if k == -1 and not reduced:
            groups[k] = TRIVIAL_GROUP
            continue
        if k == 0 and not reduced:
            rk = 0
        else:
            rk, _ = boundary_rank_and_torsion(k)
        rk1, tors = boundary_rank_and_torsion(k + 1)
        groups[k] = AbelianGroup(nk - rk - rk1, tors)
    return HomologyResult(groups, coefficients)


def betti_numbers(
    complex_: SimplicialComplex,
    p: int = 0,
    reduced: bool = True,
    through: Union[None, int] = None,
) -> dict[int, int]:
    """Reduced Betti numbers over F_p, or over Q for p == 0 (exact).

    ``through`` caps the largest degree reported; degrees above it are
    never touched, which keeps low-degree questions cheap on complexes
    whose top boundary matrices are large.
    """
    if complex_.is_void:
        return {}
    out: dict[int, int] = {}
    ranks: dict[int, int] = {}

    def rk(k: int) -> int:
        if k not in ranks:
            nk = len(complex_.faces(k))
            nk1 = len(complex_.faces(k - 1))
            if nk == 0 or nk1 == 0:
                ranks[k] = 0
            else:
                mat = boundary_matrix(complex_, k)
                ranks[k] = rank_z(mat) if p == 0 else rank_mod_p(mat, p)
        return ranks[k]

    lo = -1 if reduced else 0
    hi = complex_.dim if through is None else min(through, complex_.dim)
    for k in range(lo, hi + 1):
        nk = len(complex_.faces(k))
        if not reduced and k == 0:
            out[k] = nk - rk(1)
        else:
            out[k] = nk - rk(k) - rk(k + 1)
    return out


def homological_connectivity(
    complex_: SimplicialComplex, coefficients: Union[None, int] = None
):
    """The largest c with reduced homology trivial in every degree <= c.

    An empty complex (void or not: its realization is the empty space)
    reports -2.  If every reduced group through the top dimension
    vanishes the complex is homologically contractible and the result is
    ``math.inf``.
    """
    if not complex_.vertices:
        return -2
    res = homology(complex_, coefficients=coefficients, reduced=True)
    for k in range(0, complex_.dim + 1):
        if not res.group(k).is_trivial:
            return k - 1
    return float("inf")


# ---------------------------------------------------------------------------
# relative homology


def _relative_faces(
    complex_: SimplicialComplex, sub: SimplicialComplex, k: int
) -> tuple:
    inside = set(sub.faces(k))
    return tuple(f for f in complex_.faces(k) if f not in inside)


def relative_homology(
    complex_: SimplicialComplex,
    sub: SimplicialComplex,
    degrees=None,
) -> HomologyResult:
    """Integer homology of the pair, via the quotient chain complex.

    Chains are unaugmented, so ``relative_homology(K, {empty face})``
    equals unreduced H(K).  The subcomplex must consist of faces of the
    ambient complex.
    """
    if not sub.is_subcomplex_of(complex_):
        raise ValueError("second argument is not a subcomplex of the first")
    if complex_.is_void:
        return HomologyResult({})
    degs = (
        list(range(0, complex_.dim + 1))
        if degrees is None
        else _degree_list(complex_, degrees, reduced=False)
    )
    faces_cache: dict[int, tuple] = {}

    def rel_faces(k: int) -> tuple:
        if k not in faces_cache:
            faces_cache[k] = _relative_faces(complex_, sub, k) if k >= 0 else ()
        return faces_cache[k]

    rank_cache: dict[int, int] = {}
    tors_cache: dict[int, tuple[int, ...]] = {}

    def rel_rank(k: int) -> tuple[int, tuple[int, ...]]:
        if k not in rank_cache:
            rows, cols = rel_faces(k - 1), rel_faces(k)
            if not rows or not cols:
                rank_cache[k], tors_cache[k] = 0, ()
            else:
                mat = boundary_matrix(complex_, k, rows=rows, cols=cols)
                factors = snf(mat)
                rank_cache[k] = len(factors)
                tors_cache[k] = tuple(f for f in factors if f > 1)
        return rank_cache[k], tors_cache[k]

    groups: dict[int, AbelianGroup] = {}
    for k in degs:
        nk = len(rel_faces(k))
        if nk == 0:
            groups[k] = TRIVIAL_GROUP
            continue
        rk, _ = rel_rank(k)
        rk1, tors = rel_rank(k + 1)
        groups[k] = AbelianGroup(nk - rk - rk1, tors)
    return HomologyResult(groups)


# ---------------------------------------------------------------------------
# cycles, boundaries, classes


def chain_vector(chain: Chain, complex_: SimplicialComplex) -> dict[int, int]:
    """Column-vector form of a chain w.r.t. the complex's face order."""
    index = complex_.face_index(chain.degree)
    vec: dict[int, int] = {}
    for face, c in chain.items():
        if face not in index:
            raise ValueError(f"chain uses a face outside the complex: {face}")
        vec[index[face]] = c
    return vec


def is_cycle(chain: Chain, complex_: Optional[SimplicialComplex] = None) -> bool:
    """Whether the reduced boundary of the chain vanishes.

    Passing a complex additionally checks that the chain is supported on
    its faces.  The reduced convention makes a 0-chain a cycle exactly
    when its coefficients sum to zero.
    """
    if complex_ is not None:
        chain_vector(chain, complex_)
    return chain.boundary().is_zero


def is_boundary(
    chain: Chain, complex_: SimplicialComplex, mod: int = 0
) -> bool:
    """Whether the chain bounds in the complex (over Z, or over F_mod)."""
    vec = chain_vector(chain, complex_)
    mat = boundary_matrix(complex_, chain.degree + 1)
    if mod:
        return in_column_space_mod_p(mat, vec, mod)
    return in_column_lattice(mat, vec)


# ---------------------------------------------------------------------------
# dense SNF with transforms, presentations, induced maps


def _snf_transforms(a: np.ndarray):
    """Full Smith reduction with unimodular transforms.

    Returns (d, U, Uinv, V, Vinv) with U a Vinv... precisely:
    U @ A @ V = D (diagonal, divisor chain), A = Uinv @ D @ Vinv.
    Arrays use dtype=object so arithmetic stays exact.
    """
    a = a.copy()
    m, n = a.shape
    u = np.eye(m, dtype=object)
    uinv = np.eye(m, dtype=object)
    v = np.eye(n, dtype=object)
    vinv = np.eye(n, dtype=object)

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i, :] -= q * a[j, :]
        u[i, :] -= q * u[j, :]
        uinv[:, j] += q * uinv[:, i]

    def col_op(i, j, q):  # col_i -= q * col_j
        a[:, i] -= q * a[:, j]
        v[:, i] -= q * v[:, j]
        vinv[j, :] += q * vinv[i, :]

    def row_swap(i, j):
        a[[i, j], :] = a[[j, i], :]
        u[[i, j], :] = u[[j, i], :]
        uinv[:, [i, j]] = uinv[:, [j, i]]

    def col_swap(i, j):
        a[:, [i, j]] = a[:, [j, i]]
        v[:, [i, j]] = v[:, [j, i]]
        vinv[[i, j], :] = vinv[[j, i], :]

    t = 0
    while t < m and t < n:
        sub = a[t:, t:]
        nz = np.nonzero(sub)
        if len(nz[0]) == 0:
            break
        vals = np.abs(sub[nz])
        k = int(np.argmin(vals))
        i0, j0 = int(nz[0][k]) + t, int(nz[1][k]) + t
        row_swap(t, i0)
        col_swap(t, j0)
        clean = False
        while not clean:
            piv = a[t, t]
            for i in range(t + 1, m):
                if a[i, t]:
                    row_op(i, t, a[i, t] // piv)
            for j in range(t + 1, n):
                if a[t, j]:
                    col_op(j, t, a[t, j] // piv)
            if np.count_nonzero(a[t + 1:, t]) or np.count_nonzero(a[t, t + 1:]):
                # remainders survived: a smaller pivot appeared
                sub = a[t:, t:]
                nz = np.nonzero(sub)
                vals = np.abs(sub[nz])
                k = int(np.argmin(vals))
                i0, j0 = int(nz[0][k]) + t, int(nz[1][k]) + t
                row_swap(t, i0)
                col_swap(t, j0)
                continue
            clean = True
            piv = a[t, t]
            for i in range(t + 1, m):
                bad = next((j for j in range(t + 1, n) if a[i, j] % piv), None)
                if bad is not None:
                    row_op(t, i, -1)  # pull the offending row up
                    clean = False
                    break
        t += 1
    if a[:t, :].size:
        for i in range(t):
            if a[i, i] < 0:
                a[i, :] = -a[i, :]
                u[i, :] = -u[i, :]
                uinv[:, i] = -uinv[:, i]
    d = [int(a[i, i]) for i in range(min(m, n))]
    return d, u, uinv, v, vinv


class Presentation:
    """H_k of a complex with generator cycles and class coordinates.

    Built from dense transform-tracking Smith reductions of the two
    boundary matrices.  ``class_of`` maps a cycle to its coordinates
    over the nontrivial generators (entries reduced modulo the finite
    orders; order 0 means an infinite cyclic summand).
    """

    def __init__(self, complex_: SimplicialComplex, degree: int, reduced: bool = True):
        self.complex = complex_
        self.degree = degree
        k = degree
        faces_k = complex_.faces(k)
        nk = len(faces_k)
        rows = complex_.faces(k - 1) if reduced else (complex_.faces(k - 1) if k - 1 >= 0 else ())
        a_mat = boundary_matrix(complex_, k)
        a = np.zeros((max(len(rows), 1), max(nk, 1)), dtype=object) if nk else np.zeros((1, 1), dtype=object)
        for j, col in a_mat.cols.items():
            for i, val in col.items():
                a[i, j] = val
        if not rows:
            a = np.zeros((1, max(nk, 1)), dtype=object)
        d_a, _, _, v_a, vinv_a = _snf_transforms(a)
        rank_a = sum(1 for x in d_a if x)
        kernel_idx = [i for i in range(nk) if i >= len(d_a) or not d_a[i]]
        # columns of V at kernel_idx form a basis of the integer kernel lattice
        self._v = v_a
        self._vinv = vinv_a
        self._kernel_idx = kernel_idx
        s = len(kernel_idx)
        b_mat = boundary_matrix(complex_, k + 1)
        nb = len(complex_.faces(k + 1))
        c = np.zeros((s, max(nb, 1)), dtype=object)
        for j in range(nb):
            col = b_mat.cols.get(j, {})
            vec = np.zeros(nk, dtype=object)
            for i, val in col.items():
                vec[i] = val
            w = vinv_a @ vec if nk else vec
            for t_i, ki in enumerate(kernel_idx):
                c[t_i, j] = w[ki]
        d_c, u_c, uinv_c, _, _ = _snf_transforms(c) if s else ([], np.eye(0, dtype=object), np.eye(0, dtype=object), None, None)
        self._u_c = u_c
        orders = []
        for i in range(s):
            orders.append(d_c[i] if i < len(d_c) else 0)
        # generator i of the cokernel is Kb @ Uinv_c column i, of order orders[i]
        gens = []
        kb = self._kernel_basis_matrix(nk)
        for i in range(s):
            if orders[i] == 1:
                continue
            col = kb @ uinv_c[:, i]
            chain = Chain(
                {faces_k[j]: int(col[j]) for j in range(nk) if col[j]},
                degree=k,
            )
            gens.append((chain, int(orders[i])))
        self._all_orders = orders
        self.generators = tuple(gens)
        self.group = AbelianGroup(
            sum(1 for o in orders if o == 0),
            [o for o in orders if o > 1],
        )
        self._faces_k = faces_k

    def _kernel_basis_matrix(self, nk: int):
        kb = np.zeros((nk, len(self._kernel_idx)), dtype=object)
        for t_i, ki in enumerate(self._kernel_idx):
            kb[:, t_i] = self._v[:, ki]
        return kb

    def class_of(self, chain: Chain) -> tuple[int, ...]:
        """Coordinates of a cycle's class over the nontrivial generators."""
        if chain.degree != self.degree:
            raise ValueError("chain degree does not match the presentation")
        nk = len(self._faces_k)
        index = self.complex.face_index(self.degree)
        vec = np.zeros(nk, dtype=object)
        for face, cval in chain.items():
            if face not in index:
                raise ValueError(f"chain uses a face outside the complex: {face}")
            vec[index[face]] = cval
        w = self._vinv @ vec
        coords = np.zeros(len(self._kernel_idx), dtype=object)
        for t_i, ki in enumerate(self._kernel_idx):
            coords[t_i] = w[ki]
        if any(w[i] for i in range(nk) if i not in set(self._kernel_idx)):
            raise ValueError("chain is not a cycle")
        cc = self._u_c @ coords if len(coords) else coords
        out = []
        for i, o in enumerate(self._all_orders):
            if o == 1:
                continue
            out.append(int(cc[i] % o) if o else int(cc[i]))
        return tuple(out)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for o in self._all_orders if o != 1)


def _homology_with_generators(
    complex_: SimplicialComplex, degs: list[int], reduced: bool
) -> HomologyResult:
    groups: dict[int, AbelianGroup] = {}
    gens: dict[int, tuple] = {}
    for k in degs:
        if k < 0 or k > complex_.dim:
            res = homology(complex_, degrees=[k], reduced=reduced)
            groups[k] = res.group(k)
            gens[k] = ()
            continue
        pres = Presentation(complex_, k, reduced=reduced)
        groups[k] = pres.group
        gens[k] = pres.generators
    return HomologyResult(groups, None, gens)


@dataclass(frozen=True)
class InducedMap:
    """The map on degree-k homology induced by a subcomplex inclusion.

    ``matrix[i][j]`` is the i-th coordinate (in the codomain's generator
    basis, orders in ``codomain_orders``, 0 meaning infinite) of the
    image of the j-th domain generator.
    """

    degree: int
    domain: AbelianGroup
    codomain: AbelianGroup
    matrix: tuple[tuple[int, ...], ...]
    domain_orders: tuple[int, ...]
    codomain_orders: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        for j in range(len(self.domain_orders)):
            for i, o in enumerate(self.codomain_orders):
                c = self.matrix[i][j] if self.matrix else 0
                if (o and c % o) or (not o and c):
                    return False
        return True

    @property
    def surjective(self) -> bool:
        """Whether the images generate the whole codomain.

        The cokernel of [matrix | diag(orders)] must vanish: its Smith
        form has to be all ones of full length.
        """
        n_cod = len(self.codomain_orders)
        if n_cod == 0:
            return True
        n_dom = len(self.domain_orders)
        rows = []
        for i in range(n_cod):
            row = [self.matrix[i][j] for j in range(n_dom)]
            row.extend(
                self.codomain_orders[i] if t == i else 0 for t in range(n_cod)
            )
            rows.append(row)
        factors = dense_snf(rows)
        return len(factors) == n_cod and all(f == 1 for f in factors)


def induced_map(
    sub: SimplicialComplex, complex_: SimplicialComplex, degree: int
) -> InducedMap:
    """Homology map of an inclusion of complexes in a fixed degree.

    Faces are shared identities, so a cycle of the subcomplex is already
    a cycle of the ambient complex in the same coordinates.
    """
    if not sub.is_subcomplex_of(complex_):
        raise ValueError("first argument must be a subcomplex of the second")
    dom = Presentation(sub, degree)
    cod = Presentation(complex_, degree)
    cols = []
    for gen_chain, _ in dom.generators:
        cols.append(cod.class_of(gen_chain))
    matrix = tuple(
        tuple(col[i] for col in cols) for i in range(len(cod.orders))
    )
    return InducedMap(
        degree=degree,
        domain=dom.group,
        codomain=cod.group,
        matrix=matrix,
        domain_orders=tuple(o for o in dom.orders),
        codomain_orders=tuple(o for o in cod.orders),
    )
