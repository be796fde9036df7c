"""Constructors for the complex families living on boards and digraphs.

Boards give the chessboard complex ``delta`` and its cycle-free
subcomplex ``omega``; digraphs give the same two pictures with arcs in
place of squares.  On top of these sit the column/row restrictions
``theta1``/``theta2``/``theta``, the directed matching complex, the
cycle-count filtrations, the multicycle bookkeeping the filtrations are
indexed by, and the suspension ``sym``.

Everything here is pure and deterministic: enumeration walks rows (or
arcs) in sorted order and facet sets are canonicalized by
``SimplicialComplex.from_facets``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .boards import (
    Bijection,
    BoardSpec,
    Square,
    alpha_cycles,
    as_config,
    facet_from_order,
    make_spec,
)
from .complexes import SimplicialComplex, suspension, union

__all__ = [
    "Digraph",
    "Multicycle",
    "complete_digraph",
    "delta",
    "delta_digraph",
    "directed_matching",
    "filtration_level",
    "full_board",
    "multicycles",
    "omega",
    "omega_digraph",
    "sym",
    "theta",
    "theta1",
    "theta2",
]


def full_board(n: int, m: int | None = None) -> frozenset[Square]:
    """The product board with rows 1..n and columns 1..m (m defaults to n)."""
    m = n if m is None else m
    return as_config((r, c) for r in range(1, n + 1) for c in range(1, m + 1))


# -- chessboard complexes ------------------------------------------------


def _nontaking_configs(squares: Iterable[Square]) -> Iterator[tuple[Square, ...]]:
    """Every non-taking configuration on the given squares, empty included.

    Rows are processed in sorted order; each either contributes one of
    its free-column squares or is skipped, so each configuration is
    produced exactly once.
    """
    squares = sorted(as_config(squares))
    rows = sorted({s.row for s in squares})
    by_row = {r: [s for s in squares if s.row == r] for r in rows}
    used_cols: set = set()
    config: list[Square] = []

    def extend(i: int) -> Iterator[tuple[Square, ...]]:
        if i == len(rows):
            yield tuple(config)
            return
        yield from extend(i + 1)
        for s in by_row[rows[i]]:
            if s.col in used_cols:
                continue
            used_cols.add(s.col)
            config.append(s)
            yield from extend(i + 1)
            config.pop()
            used_cols.remove(s.col)

    return extend(0)


def delta(board: Iterable) -> SimplicialComplex:
    """The chessboard complex of a board: all non-taking configurations.

    A full product board gets its facets written down directly (every
    maximal configuration pairs each row of the smaller side with a
    distinct column), anything else goes through plain enumeration.

    >>> delta(full_board(2)).f_vector()
    (4, 2)
    >>> delta([(1, 1)]).f_vector()
    (1,)
    """
    board = as_config(board)
    if not board:
        return SimplicialComplex.from_facets([[]])
    rows = sorted({s.row for s in board})
    cols = sorted({s.col for s in board})
    if len(board) == len(rows) * len(cols):
        if len(rows) > len(cols):
            facets = (
                zip(perm, cols) for perm in itertools.permutations(rows, len(cols))
            )
        else:
            facets = (
                zip(rows, perm) for perm in itertools.permutations(cols, len(rows))
            )
        return SimplicialComplex.from_facets(
            [Square(r, c) for r, c in f] for f in facets
        )
    return SimplicialComplex.from_facets(_nontaking_configs(board))


def _cycle_free_configs(spec: BoardSpec) -> Iterator[tuple[Square, ...]]:
    """Every non-taking, cycle-free configuration on a spec's board.

    Same row-by-row walk as ``_nontaking_configs`` with one extra prune:
    a square of the distinguished block is skipped whenever its arc
    would close a directed cycle, and every extension of a cyclic
    configuration stays cyclic, so the prune is exact.
    """
    squares = sorted(spec.board)
    rows = sorted({s.row for s in squares})
    by_row = {r: [s for s in squares if s.row == r] for r in rows}
    x, y, alpha = spec.x_rows, spec.y_cols, spec.alpha
    used_cols: set = set()
    config: list[Square] = []
    arcs: dict[int, int] = {}

    def closes_cycle(s: Square) -> bool:
        if s.row not in x or s.col not in y:
            return False
        node = alpha(s.col)
        while True:
            if node == s.row:
                return True
            if node not in arcs:
                return False
            node = arcs[node]

    def extend(i: int) -> Iterator[tuple[Square, ...]]:
        if i == len(rows):
            yield tuple(config)
            return
        yield from extend(i + 1)
        for s in by_row[rows[i]]:
            if s.col in used_cols or closes_cycle(s):
                continue
            used_cols.add(s.col)
            config.append(s)
            arc = s.row in x and s.col in y
            if arc:
                arcs[s.row] = alpha(s.col)
            yield from extend(i + 1)
            if arc:
                del arcs[s.row]
            config.pop()
            used_cols.remove(s.col)

    return extend(0)


def omega(spec: BoardSpec) -> SimplicialComplex:
    """The cycle-free complex of a spec.

    On a bare square block (no extra rows or columns) the facets are
    written down without search: a cycle-free configuration induces a
    disjoint union of directed paths on the rows of X, any such forest
    with fewer than ``|X| - 1`` arcs extends by concatenating two paths,
    and the forests with exactly ``|X| - 1`` arcs are the single paths,
    one per linear order of X.  General specs are enumerated.

    >>> omega(make_spec(2)).f_vector()
    (2,)
    >>> omega(make_spec(3)).f_vector()
    (6, 6)
    >>> omega(make_spec(0)).dim
    -1
    """
    bare = not spec.z_rows and not spec.t_cols
    if bare and len(spec.board) == len(spec.x_rows) * len(spec.y_cols):
        return SimplicialComplex.from_facets(
            facet_from_order(order, spec)
            for order in itertools.permutations(sorted(spec.x_rows))
        )
    return SimplicialComplex.from_facets(_cycle_free_configs(spec))


# -- column/row restrictions ---------------------------------------------


def _inner_spec(n: int, drop_col: bool) -> BoardSpec:
    inner = range(2, n + 1)
    if drop_col:
        board = [(r, c) for r in range(1, n + 1) for c in inner]
    else:
        board = [(r, c) for r in inner for c in range(1, n + 1)]
    return BoardSpec(board, inner, inner, Bijection.identity(inner))


def theta1(n: int) -> SimplicialComplex:
    """Faces of ``omega(make_spec(n))`` that avoid column 1.

    With column 1 unused no arc enters row-node 1, so no induced cycle
    visits it; the squares of row 1 only emit arcs that cannot lie on a
    cycle.  Cycle-freeness therefore restricts to the block on
    {2..n} x {2..n}, which is what the constructed spec encodes.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return omega(_inner_spec(n, drop_col=True))


def theta2(n: int) -> SimplicialComplex:
    """Faces of ``omega(make_spec(n))`` that avoid row 1 (mirror of theta1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return omega(_inner_spec(n, drop_col=False))


def theta(n: int) -> SimplicialComplex:
    """Faces of ``omega(make_spec(n))`` not using row 1 and column 1 together.

    The union of ``theta1(n)`` and ``theta2(n)``; their intersection is
    the cycle-free complex on the inner block {2..n} x {2..n}.
    """
    return union(theta1(n), theta2(n))


# -- digraph complexes ----------------------------------------------------


class Digraph:
    """A finite digraph: nodes plus a set of ordered edges, loops allowed."""

    __slots__ = ("nodes", "edges")

    def __init__(self, nodes: Iterable, edges: Iterable[tuple]):
        nodes = frozenset(nodes)
        edges = frozenset((a, b) for a, b in edges)
        stray = [e for e in edges if e[0] not in nodes or e[1] not in nodes]
        if stray:
            raise ValueError(f"edges leave the node set: {sorted(stray)}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.nodes == other.nodes
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.nodes, self.edges))

    def __repr__(self):
        return f"Digraph({len(self.nodes)} nodes, {len(self.edges)} edges)"


def complete_digraph(n: int, loops: bool = True) -> Digraph:
    """The complete digraph on nodes 1..n, with or without loops."""
    nodes = range(1, n + 1)
    edges = [(a, b) for a in nodes for b in nodes if loops or a != b]
    return Digraph(nodes, edges)


def _degree_valid_subsets(g: Digraph, allow_cycles: bool) -> Iterator[tuple]:
    """Edge subsets with in- and out-degree at most one everywhere.

    Such a subset decomposes into directed paths and directed cycles
    (a loop being a cycle of length one); with ``allow_cycles`` off the
    cycle-closing edge is pruned, leaving path forests only.
    """
    edges = sorted(g.edges)
    tails: set = set()
    heads: set = set()
    succ: dict = {}
    config: list[tuple] = []

    def closes_cycle(a, b) -> bool:
        node = b
        while True:
            if node == a:
                return True
            if node not in succ:
                return False
            node = succ[node]

    def extend(i: int) -> Iterator[tuple]:
        if i == len(edges):
            yield tuple(config)
            return
        yield from extend(i + 1)
        a, b = edges[i]
        if a in tails or b in heads:
            return
        if not allow_cycles and closes_cycle(a, b):
            return
        tails.add(a)
        heads.add(b)
        succ[a] = b
        config.append(edges[i])
        yield from extend(i + 1)
        config.pop()
        del succ[a]
        heads.remove(b)
        tails.remove(a)

    return extend(0)


def delta_digraph(g: Digraph) -> SimplicialComplex:
    """The complex of subgraphs whose components are paths or cycles.

    Vertices are the edges of ``g``.  On the complete digraph with
    loops this is the chessboard complex of the full square board under
    the edge-to-square identification (i, j) <-> square (i, j).
    """
    return SimplicialComplex.from_facets(_degree_valid_subsets(g, allow_cycles=True))


def omega_digraph(g: Digraph) -> SimplicialComplex:
    """The complex of subgraphs whose components are paths only.

    >>> omega_digraph(complete_digraph(2, loops=False)).f_vector()
    (2,)
    """
    return SimplicialComplex.from_facets(_degree_valid_subsets(g, allow_cycles=False))


def directed_matching(n: int) -> SimplicialComplex:
    """Arc sets on 1..n whose components are paths or cycles of length >= 2.

    The loopless counterpart of the full square chessboard complex:
    dropping loops from the complete digraph is exactly dropping the
    diagonal squares, and with them the cycles of length one.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    return delta_digraph(complete_digraph(n, loops=False))


# -- cycle-count filtrations ----------------------------------------------


def filtration_level(family: str, n: int, p: int) -> SimplicialComplex:
    """Faces of the square-board family with at most ``p`` induced cycles.

    ``family="delta"`` filters the full chessboard complex on the n x n
    board, where a diagonal square is a cycle of length one;
    ``family="dm"`` filters the directed matching complex, so only
    cycles of length >= 2 occur.  Level 0 is the cycle-free complex in
    both families; levels at or above n exhaust the family.
    """
    if family not in ("delta", "dm"):
        raise ValueError(f"unknown family {family!r}")
    if n < 1 or p < 0:
        raise ValueError("need n >= 1 and p >= 0")
    spec = make_spec(n)
    board = spec.board
    if family == "dm":
        board = board - spec.loop_squares()
    admitted = [
        config
        for config in _nontaking_configs(board)
        if len(alpha_cycles(config, spec)) <= p
    ]
    return SimplicialComplex.from_facets(admitted)


class Multicycle:
    """Pairwise vertex-disjoint directed cycles on integer nodes.

    Cycles are stored rotated to start at their smallest node and
    sorted by that node, so equal families compare equal.
    """

    __slots__ = ("cycles",)

    def __init__(self, cycles: Iterable[Iterable[int]]):
        canon = []
        seen: set[int] = set()
        for cyc in cycles:
            cyc = tuple(int(v) for v in cyc)
            if not cyc:
                raise ValueError("empty cycle")
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated node within a cycle: {cyc}")
            k = cyc.index(min(cyc))
            cyc = cyc[k:] + cyc[:k]
            if seen & set(cyc):
                raise ValueError("cycles are not vertex-disjoint")
            seen.update(cyc)
            canon.append(cyc)
        object.__setattr__(self, "cycles", tuple(sorted(canon)))

    def __setattr__(self, name, value):
        raise AttributeError("Multicycle is immutable")

    @property
    def type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths, as a sorted tuple."""
        return tuple(sorted(len(c) for c in self.cycles))

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.cycles)

    def config(self) -> frozenset[Square]:
        """The rook configuration inducing exactly these cycles.

        Under the identity bijection the arc v -> w is the square
        (v, w); a loop at v is the diagonal square (v, v).
        """
        squares = []
        for cyc in self.cycles:
            for k, v in enumerate(cyc):
                squares.append(Square(v, cyc[(k + 1) % len(cyc)]))
        return frozenset(squares)

    def __eq__(self, other):
        return isinstance(other, Multicycle) and self.cycles == other.cycles

    def __hash__(self):
        return hash(self.cycles)

    def __repr__(self):
        return f"Multicycle({list(self.cycles)})"


def multicycles(n: int, p: int, min_len: int = 1) -> list[Multicycle]:
    """All families of ``p`` vertex-disjoint directed cycles on 1..n.

    ``min_len`` admits loops (1) or bans them (2).  Cycles are anchored
    at their smallest node and anchors increase along the family, so
    each family appears once; the result is sorted.

    >>> len(multicycles(3, 1))
    8
    >>> len(multicycles(3, 1, min_len=2))
    5
    >>> len(multicycles(2, 2))
    1
    """
    if min_len not in (1, 2):
        raise ValueError("min_len must be 1 or 2")
    if n < 0 or p < 0:
        raise ValueError("need n >= 0 and p >= 0")
    out: list[Multicycle] = []

    def build(pool: tuple[int, ...], floor: int, chosen: tuple) -> None:
        if len(chosen) == p:
            out.append(Multicycle(chosen))
            return
        for a in pool:
            if a <= floor:
                continue
            bigger = tuple(v for v in pool if v > a)
            for size in range(min_len - 1, len(bigger) + 1):
                for members in itertools.combinations(bigger, size):
                    rest = tuple(
                        v for v in pool if v != a and v not in members
                    )
                    for arrangement in itertools.permutations(members):
                        build(rest, a, chosen + ((a, *arrangement),))

    build(tuple(range(1, n + 1)), 0, ())
    out.sort(key=lambda mc: mc.cycles)
    return out


# -- suspensions -----------------------------------------------------------


def sym(p: int) -> SimplicialComplex:
    """The suspension of the cycle-free complex on p+1 rows.

    >>> sym(1).f_vector()
    (4, 4)
    """
    if p < 1:
        raise ValueError("need p >= 1")
    return suspension(omega(make_spec(p + 1)))
