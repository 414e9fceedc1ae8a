import pytest

from antipodal import io
from antipodal.covers import closed_set
from antipodal.degree import build_simplicial_map
from antipodal.generators import circle


def test_complex_round_trip(octahedron):
    T, _ = octahedron
    back = io.parse_complex(io.format_complex(T))
    assert back.names == T.names
    assert back.facets == T.facets


def test_involution_and_labelling_round_trip(fig2):
    T, A, L = fig2
    A2 = io.parse_involution(io.format_involution(A), A.complex)
    assert A2.as_dict() == A.as_dict()
    L2 = io.parse_labelling(io.format_labelling(L), T, 3)
    assert L2.values == L.values


def test_map_round_trip():
    src, dst = circle(6, "s"), circle(3, "t")
    f = build_simplicial_map(src, dst, {f"s{i}": f"t{i % 3}" for i in range(6)})
    assert io.parse_map(io.format_map(f), src, dst).vmap == f.vmap


def test_cover_round_trip(octahedron):
    T, _ = octahedron
    sets = [closed_set(T, "P", ["+1", "+2"]), closed_set(T, "N", ["-1", "-2"])]
    cf = io.parse_cover(io.format_cover(sets, [("P", "N")], T), T)
    assert [S.vertices for S in cf.sets] == [S.vertices for S in sets]
    assert cf.paired()[-1].name == "N"


def test_layout_round_trip():
    lay = {"a": (0.5, -1.0), "b": (2.0, 3.25)}
    assert io.parse_layout(io.format_layout(lay)) == lay


def test_comments_and_blank_lines():
    T = io.parse_complex("# a circle\ndim 1\n\na b  # first edge\nb c\nc a\n")
    assert len(T.facets) == 3


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("a b\n", 1),
        ("dim x\n", 1),
        ("dim 1\na b\nb c d\n", 3),
    ],
)
def test_complex_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(io.ParseError) as err:
        io.parse_complex(text, "t.cx")
    assert err.value.lineno == lineno
    assert f"t.cx:{lineno}" in str(err.value)


def test_missing_header():
    with pytest.raises(io.ParseError, match="missing"):
        io.parse_complex("")


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("p00 1\nzz 2\n", 2, "unknown vertex"),
        ("p00 one\n", 1, "not an integer"),
        ("p00 0\n", 1, "label 0"),
        ("p00 7\n", 1, "outside"),
        ("p00 1\np00 2\n", 2, "twice"),
    ],
)
def test_labelling_parse_errors(fig2, text, lineno, fragment):
    T = fig2[0]
    with pytest.raises(io.ParseError, match=fragment) as err:
        io.parse_labelling(text, T, 3)
    assert err.value.lineno == lineno


def test_incomplete_labelling(fig2):
    with pytest.raises(io.ParseError, match="no label"):
        io.parse_labelling("p00 1\n", fig2[0])


def test_involution_paired_twice(octahedron):
    T, _ = octahedron
    with pytest.raises(io.ParseError, match="paired twice"):
        io.parse_involution("+1 -1\n+1 -2\n", T)


def test_cover_errors(octahedron):
    T, _ = octahedron
    with pytest.raises(io.ParseError, match="outside"):
        io.parse_cover("+1 +2\n", T)
    with pytest.raises(io.ParseError, match="undefined"):
        io.parse_cover("set A +1\npair A B\n", T)
    with pytest.raises(io.ParseError, match="twice"):
        io.parse_cover("set A +1\nset A +2\n", T)


def test_names_with_spaces_are_refused():
    from antipodal.complex import build_complex

    with pytest.raises(ValueError):
        io.format_complex(build_complex([["a b", "c"]]))
