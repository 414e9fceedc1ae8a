import pytest

from antipodal import io
from antipodal.complex import euler_characteristic, manifold_check
from antipodal.generators import (
    GeneratorSpec,
    disk,
    genus2_surface,
    punctured_torus,
    random_antipodal_labelling,
    random_boundary_antipodal_labelling,
    refine,
    search_complementary_free,
)
from antipodal.labels import complementary_edges, is_antipodal_labelling
from antipodal.symmetry import crosspolytope_sphere, is_free


def test_fig2_matches_committed_fixture(fixtures_dir, tmp_path):
    spec = GeneratorSpec("fig2")
    T, A, L = spec.build()
    assert io.format_complex(T) == (fixtures_dir / "fig2.cx").read_text()
    assert io.format_involution(A) == (fixtures_dir / "fig2.inv").read_text()
    assert io.format_labelling(L) == (fixtures_dir / "fig2.lab").read_text()
    assert io.format_layout(spec.layout()) == (fixtures_dir / "fig2.layout").read_text()


def test_fig2_shape(fig2):
    T, A, L = fig2
    assert T.num_vertices == 16
    assert len(T.facets) == 18
    assert A("p00") == "p33"
    assert A("p10") == "p23"
    assert L["p00"] == 2 and L["p33"] == -2


@pytest.mark.parametrize("k", [2, 3, 6])
def test_disk(k):
    T, A = disk(k)
    assert len(T.facets) == 2 * k
    assert euler_characteristic(T) == 1
    assert is_free(A)


def test_punctured_torus_and_genus2(genus2):
    M, A = punctured_torus()
    assert len(M.facets) == 16
    assert A.complex.num_vertices == 4
    T, B = genus2
    assert len(T.facets) == 32
    assert T.num_vertices == 14
    assert euler_characteristic(T) == -2
    assert manifold_check(T).is_closed_pseudomanifold
    assert is_free(B)


def test_refine_counts(octahedron):
    T, A = refine(*octahedron, 2)
    assert len(T.facets) == 8 * 6 * 6
    assert is_free(A)


def test_random_labelling_is_seeded_and_antipodal(sd_octahedron):
    T, A = sd_octahedron
    a = random_antipodal_labelling(T, A, 2, 7)
    b = random_antipodal_labelling(T, A, 2, 7)
    c = random_antipodal_labelling(T, A, 2, 8)
    assert a.values == b.values
    assert a.values != c.values
    assert is_antipodal_labelling(a, A)


def test_random_boundary_labelling(fig2):
    T, A, _ = fig2
    L = random_boundary_antipodal_labelling(T, A, 3, 0)
    assert is_antipodal_labelling(L, A)
    assert L.n == 3


def test_search_finds_distinct_complementary_free_labellings(sd_octahedron):
    T, A = sd_octahedron
    seen = set()
    for seed in range(10):
        res = search_complementary_free(T, A, 3, seed=seed)
        assert res.found
        assert complementary_edges(T, res.labelling) == []
        assert is_antipodal_labelling(res.labelling, A)
        seen.add(res.labelling.values)
    assert len(seen) > 1


@pytest.mark.parametrize("d", [1, 2, 3])
def test_search_exhausts_when_n_equals_d(d):
    T, A = crosspolytope_sphere(d)
    res = search_complementary_free(T, A, d, seed=0)
    assert not res.found
    assert res.exhausted


def test_search_budget():
    T, A = refine(*crosspolytope_sphere(2), 1)
    res = search_complementary_free(T, A, 2, seed=0, budget=10)
    assert not res.found
    assert not res.exhausted


def test_generator_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec("torus")
    with pytest.raises(ValueError):
        GeneratorSpec("disk", k=1)
    with pytest.raises(ValueError):
        GeneratorSpec("crosspolytope", refine=-1)


def test_generator_spec_refined_fig2_keeps_labels():
    T, A, L = GeneratorSpec("fig2", refine=1).build()
    assert len(T.facets) == 18 * 6
    assert is_antipodal_labelling(L, A)
    assert complementary_edges(T, L) == []
