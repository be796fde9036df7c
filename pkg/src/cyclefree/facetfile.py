"""Plain-text facet files.

One facet per line, each square a ``ROW,COL`` token, tokens separated
by whitespace; labels are integers (negative rows are the free rows).
Lines starting with ``#`` are comments.  An optional header

    !spec X=1,2,3 Y=1,2,3 alpha=1:1,2:2,3:3

records the distinguished rows, columns and the column-to-row
bijection of a board spec; the board itself is reconstructed as the block X x Y
together with every square mentioned in the file.

A file without facet lines denotes the complex whose only face is the
empty one.  The void complex has no representation and is rejected on
write.
"""

from __future__ import annotations

import io
from typing import Optional

from .boards import BoardSpec, Square
from .complexes import SimplicialComplex

__all__ = ["format_complex", "read_complex", "write_complex"]


def _parse_header(line: str) -> dict[str, str]:
    fields = {}
    for part in line[len("!spec"):].split():
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    missing = {"X", "Y", "alpha"} - set(fields)
    if missing:
        raise ValueError(f"spec header missing {sorted(missing)}")
    return fields


def _parse_labels(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def _parse_square(token: str) -> Square:
    row, _, col = token.partition(",")
    try:
        return Square(int(row), int(col))
    except ValueError:
        raise ValueError(f"bad square token {token!r}, expected ROW,COL") from None


def read_complex(path) -> tuple[SimplicialComplex, Optional[BoardSpec]]:
    """Read a facet file; returns the complex and its spec, if recorded."""
    facets: list[list[Square]] = []
    header: Optional[dict[str, str]] = None
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("!spec"):
                header = _parse_header(line)
                continue
            facets.append([_parse_square(tok) for tok in line.split()])
    complex_ = SimplicialComplex.from_facets(facets if facets else [[]])
    spec = None
    if header is not None:
        x = _parse_labels(header["X"])
        y = _parse_labels(header["Y"])
        alpha = {}
        for pair in header["alpha"].split(","):
            if not pair:
                continue
            col, _, row = pair.partition(":")
            alpha[int(col)] = int(row)
        board = {Square(r, c) for r in x for c in y}
        board.update(sq for f in facets for sq in f)
        spec = BoardSpec(board, x, y, alpha)
    return complex_, spec


def format_complex(complex_: SimplicialComplex, spec: Optional[BoardSpec] = None) -> str:
    """Render a complex (and optionally its spec header) as facet-file text."""
    if complex_.is_void:
        raise ValueError("the void complex has no facet-file representation")
    for v in complex_.vertices:
        if not (isinstance(v, tuple) and len(v) == 2):
            raise ValueError(f"vertex {v!r} is not a square")
    out = io.StringIO()
    if spec is not None:
        x = ",".join(str(r) for r in sorted(spec.x_rows))
        y = ",".join(str(c) for c in sorted(spec.y_cols))
        a = ",".join(f"{c}:{r}" for c, r in sorted(spec.alpha.items()))
        out.write(f"!spec X={x} Y={y} alpha={a}\n")
    for facet in sorted(sorted(f) for f in complex_.facets):
        out.write(" ".join(f"{s[0]},{s[1]}" for s in facet) + "\n")
    return out.getvalue()


def write_complex(path, complex_: SimplicialComplex, spec: Optional[BoardSpec] = None) -> None:
    """Write a complex (and optionally its spec header) as a facet file."""
    text = format_complex(complex_, spec)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
