"""Facet-file round trips and parse errors."""

import pytest

from cyclefree import (
    SimplicialComplex,
    format_complex,
    make_spec,
    omega,
    read_complex,
    write_complex,
)


def test_roundtrip_without_spec(tmp_path):
    c = omega(make_spec(3))
    path = tmp_path / "omega3.facets"
    write_complex(path, c)
    back, spec = read_complex(path)
    assert back == c
    assert spec is None


def test_roundtrip_with_spec(tmp_path):
    spec = make_spec(3, 1)
    c = omega(spec)
    path = tmp_path / "omega31.facets"
    write_complex(path, c, spec)
    back, back_spec = read_complex(path)
    assert back == c
    # every free-row square occurs in some facet, so the board and with
    # it the whole spec survive the trip
    assert back_spec == spec


def test_comments_and_blank_lines_skipped(tmp_path):
    path = tmp_path / "c.facets"
    path.write_text("# a comment\n\n1,1 2,2\n# another\n3,3\n")
    c, spec = read_complex(path)
    assert spec is None
    assert c.f_vector() == (3, 1)


def test_no_facet_lines_is_the_empty_face_complex(tmp_path):
    path = tmp_path / "empty.facets"
    path.write_text("# nothing here\n")
    c, _ = read_complex(path)
    assert not c.is_void
    assert c.dim == -1


def test_negative_rows_roundtrip(tmp_path):
    path = tmp_path / "neg.facets"
    path.write_text("-1,2 1,3\n")
    c, _ = read_complex(path)
    assert c.has_face(((-1, 2), (1, 3)))


def test_void_rejected():
    void = SimplicialComplex(frozenset(), nonvoid=False)
    with pytest.raises(ValueError, match="void"):
        format_complex(void)


def test_non_square_vertices_rejected():
    c = SimplicialComplex.from_facets([["a", "b"]])
    with pytest.raises(ValueError, match="square"):
        format_complex(c)


def test_bad_square_token(tmp_path):
    path = tmp_path / "bad.facets"
    path.write_text("1;2\n")
    with pytest.raises(ValueError, match="token"):
        read_complex(path)


def test_header_requires_all_fields(tmp_path):
    path = tmp_path / "h.facets"
    path.write_text("!spec X=1 Y=1\n1,1\n")
    with pytest.raises(ValueError, match="missing"):
        read_complex(path)


def test_output_is_deterministic():
    c = omega(make_spec(3))
    text = format_complex(c, make_spec(3))
    assert text == format_complex(c, make_spec(3))
    lines = text.splitlines()
    assert lines[0].startswith("!spec X=1,2,3 Y=1,2,3 alpha=1:1,")
    assert lines[1:] == sorted(lines[1:])
