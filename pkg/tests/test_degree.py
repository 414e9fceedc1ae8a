import pytest

from antipodal.common import (
    DimensionMismatch,
    NotAntipodal,
    NotClosedPseudomanifold,
    NotSimplicial,
)
from antipodal.complex import build_complex
from antipodal.degree import (
    build_simplicial_map,
    degree_mod2,
    is_antipodal_map,
    preimage_counts,
    verify_odd_mapping,
)
from antipodal.generators import circle, circle_rotation
from antipodal.symmetry import crosspolytope_sphere


def winding(k, times=3):
    src, dst = circle(times * k, "s"), circle(k, "t")
    f = build_simplicial_map(src, dst, {f"s{i}": f"t{i % k}" for i in range(times * k)})
    return src, dst, f


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_winding_three_times(k):
    _, _, f = winding(k)
    rep = degree_mod2(f)
    assert set(rep.counts.values()) == {3}
    assert rep.deg2 == 1
    assert rep.consistent


def test_even_winding_has_degree_zero():
    _, _, f = winding(4, times=2)
    assert degree_mod2(f).deg2 == 0


def test_composition_multiplies():
    _, mid, f = winding(3)
    big = circle(27, "u")
    g = build_simplicial_map(big, circle(9, "s"), {f"u{i}": f"s{i % 9}" for i in range(27)})
    h = f.compose(g)
    assert set(degree_mod2(h).counts.values()) == {9}


def test_identity_and_constant(octahedron):
    T, A = octahedron
    ident = build_simplicial_map(T, T, {v: v for v in T.names})
    assert degree_mod2(ident).deg2 == 1
    const = build_simplicial_map(T, T, {v: "+1" for v in T.names})
    rep = degree_mod2(const)
    assert rep.deg2 == 0
    assert preimage_counts(const) == {}


def test_non_simplicial_vertex_map(octahedron):
    T, _ = octahedron
    with pytest.raises(NotSimplicial):
        # the edge {+1, +2} lands on {+1, -1}, which is not an edge
        build_simplicial_map(T, T, {**{v: v for v in T.names}, "+2": "-1"})


def test_dimension_and_closedness_checks(octahedron):
    T, _ = octahedron
    C = circle(4)
    f = build_simplicial_map(C, T, {v: "+1" for v in C.names})
    with pytest.raises(DimensionMismatch):
        degree_mod2(f)
    disk = build_complex([["a", "b", "c"]])
    g = build_simplicial_map(disk, T, {"a": "+1", "b": "+2", "c": "+3"})
    with pytest.raises(NotClosedPseudomanifold):
        degree_mod2(g)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_antipodal_identity_is_odd(d):
    T, A = crosspolytope_sphere(d)
    f = build_simplicial_map(T, T, {v: v for v in T.names})
    assert is_antipodal_map(f, A, A)
    assert verify_odd_mapping(f, A, A).holds


def test_antipodal_winding_of_circle():
    # a 12-cycle wound three times around a 4-cycle, both with the half-turn
    src = circle(12, "s")
    dst = circle(4, "t")
    f = build_simplicial_map(src, dst, {f"s{i}": f"t{i % 4}" for i in range(12)})
    A_src = circle_rotation(src, 6, "s")
    A_dst = circle_rotation(dst, 2, "t")
    assert is_antipodal_map(f, A_src, A_dst)
    assert verify_odd_mapping(f, A_src, A_dst).report.deg2 == 1


def test_non_antipodal_map_rejected():
    src, dst, f = winding(4, times=2)
    with pytest.raises(NotAntipodal):
        verify_odd_mapping(f, circle_rotation(src, 4, "s"), circle_rotation(dst, 2, "t"))
