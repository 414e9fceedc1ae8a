"""Acceptance criteria, one test per criterion.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.  Run on its own with

    pytest tests/test_acceptance.py -v
"""

import functools
import itertools
import json
import time

import numpy as np
import pytest

from antipodal import io
from antipodal.cli import main
from antipodal.common import InputNotAntipodeFree
from antipodal.complex import euler_characteristic, manifold_check
from antipodal.covers import (
    ClosedSet,
    cover_from_labelling,
    fan_transform,
    find_rainbow_simplex,
    ls_corollary_check,
    verify_cover,
    verify_fan_cover_theorem,
)
from antipodal.degree import build_simplicial_map, degree_mod2
from antipodal.generators import (
    circle,
    circle_rotation,
    disk,
    genus2_surface,
    punctured_torus,
    random_antipodal_labelling,
    refine,
    search_complementary_free,
)
from antipodal.labels import (
    all_signatures,
    complementary_edges,
    count_signature,
    induced_map,
    make_labelling,
    shashkin_report,
    verify_tucker,
)
from antipodal.symmetry import crosspolytope_sphere, double, is_free

pytestmark = pytest.mark.acceptance


@pytest.mark.criterion(1, "fig2 fixture: exact ns table, boundary antipodal, no complementary edge, < 1 s")
def test_criterion_1_fig2(fixtures_dir, capsys):
    start = time.perf_counter()
    code = main(
        [
            "verify", "shashkin", "--json",
            "--complex", str(fixtures_dir / "fig2.cx"),
            "--boundary-involution", str(fixtures_dir / "fig2.inv"),
            "--labelling", str(fixtures_dir / "fig2.lab"),
        ]
    )
    elapsed = time.perf_counter() - start
    rep = json.loads(capsys.readouterr().out)
    assert code == 0
    assert rep["witnesses"]["mode"] == "boundary"
    assert rep["witnesses"]["boundary_antipodal"] is True
    assert rep["counts"] == {
        "ns(1,2,3)": 3,
        "ns(1,-2,3)": 1,
        "ns(1,2,-3)": 3,
        "ns(1,-2,-3)": 3,
        "complementary_edges": 0,
    }
    assert elapsed < 1.0


@pytest.mark.criterion(2, "crosspolytope identity labelling d=1..4: counts all 1, deg2 = 1, < 1 s")
def test_criterion_2_identity_labelling():
    start = time.perf_counter()
    for d in range(1, 5):
        T, A = crosspolytope_sphere(d)
        L = make_labelling(T, {v: int(v) for v in T.names})
        assert complementary_edges(T, L) == []
        sigs = all_signatures(d)
        assert len(sigs) == 2 ** (d + 1)
        assert all(count_signature(T, L, s) == 1 for s in sigs)
        rep = degree_mod2(induced_map(L))
        assert rep.consistent and rep.deg2 == 1
        assert shashkin_report(T, A, L).holds
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(3, "1000 seeded labellings per sphere and refinement, d=1..3: 1000/1000 edges, < 30 s")
def test_criterion_3_tucker_sweep():
    start = time.perf_counter()
    hits = {}
    for d in (1, 2, 3):
        for r in (0, 1):
            T, A = refine(*crosspolytope_sphere(d), r)
            hits[(d, r)] = sum(
                verify_tucker(T, A, random_antipodal_labelling(T, A, d, seed)).holds
                for seed in range(1000)
            )
    elapsed = time.perf_counter() - start
    assert hits == {key: 1000 for key in hits}
    assert elapsed < 30.0


@functools.lru_cache(maxsize=None)
def searched_labellings():
    """Complementary-free labellings for criteria 4 and 7."""
    out = []
    T, A = refine(*crosspolytope_sphere(2), 1)
    for seed in range(50):
        out.append((T, A, search_complementary_free(T, A, 3, seed=seed)))
    G, B = genus2_surface()
    for seed in range(20):
        out.append((G, B, search_complementary_free(G, B, 3, seed=seed)))
    return tuple(out)


@pytest.mark.criterion(4, "searched labellings (50 octahedron, 20 genus 2): counts odd = deg2 = 1, < 60 s")
def test_criterion_4_shashkin_and_degree():
    start = time.perf_counter()
    runs = searched_labellings()
    assert len(runs) == 70
    for T, A, res in runs:
        assert res.found
        L = res.labelling
        rep = shashkin_report(T, A, L)
        assert rep.mode == "closed"
        deg = degree_mod2(induced_map(L))
        assert deg.consistent and deg.deg2 == 1
        assert all(c % 2 == 1 for c in rep.table.values())
        assert all(c % 2 == deg.deg2 for c in rep.table.values())
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion(5, "double(disk(k)) k=2..5 closed, chi 2, free, facets doubled; punctured torus gives chi -2, < 1 s")
def test_criterion_5_doubling():
    start = time.perf_counter()
    for k in range(2, 6):
        M, A = disk(k)
        res = double(M, A)
        assert manifold_check(res.complex).is_closed_pseudomanifold
        assert euler_characteristic(res.complex) == 2
        assert is_free(res.involution)
        assert len(res.complex.facets) == 2 * len(M.facets)
    res = double(*punctured_torus())
    assert euler_characteristic(res.complex) == -2
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(6, "winding 3k -> k (k=3..6) counts 3, deg2 1; identity 1; constant 0")
def test_criterion_6_winding():
    for k in range(3, 7):
        src, dst = circle(3 * k, "s"), circle(k, "t")
        f = build_simplicial_map(src, dst, {f"s{i}": f"t{i % k}" for i in range(3 * k)})
        rep = degree_mod2(f)
        assert set(rep.counts.values()) == {3}
        assert rep.deg2 == 1
        ident = build_simplicial_map(dst, dst, {v: v for v in dst.names})
        assert degree_mod2(ident).deg2 == 1
        const = build_simplicial_map(dst, dst, {v: "t0" for v in dst.names})
        assert degree_mod2(const).deg2 == 0
    for d in (1, 2, 3):
        T, _ = crosspolytope_sphere(d)
        assert degree_mod2(build_simplicial_map(T, T, {v: v for v in T.names})).deg2 == 1
        assert degree_mod2(build_simplicial_map(T, T, {v: "+1" for v in T.names})).deg2 == 0


@pytest.mark.criterion(7, "rainbow facet for every signature of every criterion 4 labelling, re-verified")
def test_criterion_7_rainbow():
    witnesses = 0
    for T, _, res in searched_labellings():
        L = res.labelling
        cover = cover_from_labelling(L)
        raw = {label: {v for v in T.names if L[v] == label} for label in cover.members}
        for sig in all_signatures(T.dim):
            r = find_rainbow_simplex(T, cover, sig)
            assert r.found
            assert sorted(r.assignment) == sorted(sig)
            assert set(r.assignment.values()) == set(r.facet)
            assert T.has_face(T.simplex(r.facet))
            for label, v in r.assignment.items():
                assert v in raw[label]
            witnesses += 1
    assert witnesses == 70 * 8


@pytest.mark.criterion(8, "fan4 fixture: both identities hold, brute-force-checked witness for k=1,2,3")
def test_criterion_8_fan_cover(fixtures_dir):
    T = io.parse_complex(io.read_text(fixtures_dir / "octa_sd.cx"))
    A = io.parse_involution(io.read_text(fixtures_dir / "octa_sd.inv"), T)
    C = io.parse_cover(io.read_text(fixtures_dir / "fan4.cov"), T).sets
    assert len(C) == 4
    # raw data straight from the files, independent of the library objects
    antipode = {}
    for line in (fixtures_dir / "octa_sd.inv").read_text().split("\n"):
        if line.strip():
            a, b = line.split()
            antipode[a], antipode[b] = b, a
    raw = [set(S.vertices) for S in C]
    facets = [set(line.split()) for line in (fixtures_dir / "octa_sd.cx").read_text().splitlines()[1:]]

    B = fan_transform(T, A, C)
    for i in (1, 2, 3):
        assert not (B[i].vertices & B[-i].vertices)
    assert all(any(f <= S.vertices for S in B.sets()) for f in facets)

    for k in (1, 2, 3):
        w = verify_fan_cover_theorem(T, A, C, k)
        assert w.level == 0
        assert antipode[w.x] == w.image
        assert all(w.x in S for S in raw[:k])
        assert all(w.image in S for S in raw[k:])
        brute = {x for x in antipode if all(x in S for S in raw[:k]) and all(antipode[x] in S for S in raw[k:])}
        assert w.x in brute


def _antipode_free_subsets(pairs):
    for choice in itertools.product((None, 0, 1), repeat=len(pairs)):
        yield frozenset(p[c] for p, c in zip(pairs, choice) if c is not None)


@pytest.mark.criterion(9, "no two antipode-free sets cover a 2k-gon (k<=5); 10^4 sampled triples on sd octahedron, < 60 s")
def test_criterion_9_ls():
    start = time.perf_counter()
    checked = 0
    for k in range(2, 6):
        C = circle(2 * k)
        A = circle_rotation(C, k)
        pairs = [(f"v{i}", f"v{i + k}") for i in range(k)]
        edges = [set(C.named(f)) for f in C.facets]
        sets = [ClosedSet("S", s) for s in _antipode_free_subsets(pairs)]
        assert len(sets) == 3**k
        for S1, S2 in itertools.combinations_with_replacement(sets, 2):
            rep = ls_corollary_check(C, A, [S1, S2])
            assert not rep.violated
            assert not all(e <= S1.vertices or e <= S2.vertices for e in edges)
            checked += 1

    T, A = refine(*crosspolytope_sphere(2), 1)
    orbits = [(T.names[v], T.names[w]) for v, w in A.orbits()]
    rng = np.random.default_rng(20240601)
    triples = 10_000
    for _ in range(triples):
        family = []
        for j in range(3):
            p = rng.uniform(0.3, 0.5)
            draw = rng.random(len(orbits))
            verts = [a if x < p else b for (a, b), x in zip(orbits, draw) if x < 2 * p]
            family.append(ClosedSet(f"S{j}", frozenset(verts)))
        rep = ls_corollary_check(T, A, family)
        assert not rep.violated
        assert not verify_cover(T, family)
        checked += 1
    with pytest.raises(InputNotAntipodeFree):
        ls_corollary_check(T, A, [ClosedSet("bad", frozenset(orbits[0]))])
    assert checked >= 10_000
    assert time.perf_counter() - start < 60.0
