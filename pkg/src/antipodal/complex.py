"""Finite pure simplicial complexes given by their facets.

Vertices are interned to dense integers in order of first appearance; the
original names are kept in ``Complex.names`` so files round-trip exactly.
A simplex is a strictly increasing tuple of vertex ids.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from .common import (
    Check,
    DuplicateVertexInFacet,
    EmptyInput,
    MixedDimension,
    NotPseudomanifold,
    UnknownVertex,
)

Simplex = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Complex:
    dim: int
    facets: tuple[Simplex, ...]
    names: tuple[Hashable, ...]

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {name: i for i, name in enumerate(self.names)}

    @property
    def num_vertices(self) -> int:
        return len(self.names)

    @property
    def vertices(self) -> range:
        return range(len(self.names))

    def vid(self, name: Hashable) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertex(f"vertex {name!r} is not in the complex") from None

    def simplex(self, names: Iterable[Hashable]) -> Simplex:
        return tuple(sorted(self.vid(n) for n in names))

    def named(self, s: Iterable[int]) -> tuple[Hashable, ...]:
        return tuple(self.names[v] for v in s)

    @cached_property
    def faces(self) -> dict[int, tuple[Simplex, ...]]:
        """All nonempty faces, keyed by dimension, each level sorted."""
        levels: dict[int, set[Simplex]] = defaultdict(set)
        for f in self.facets:
            for k in range(1, len(f) + 1):
                levels[k - 1].update(itertools.combinations(f, k))
        return {k: tuple(sorted(levels[k])) for k in sorted(levels)}

    @cached_property
    def face_set(self) -> frozenset[Simplex]:
        return frozenset(s for level in self.faces.values() for s in level)

    def has_face(self, s: Iterable[int]) -> bool:
        return tuple(sorted(set(s))) in self.face_set

    @cached_property
    def edges(self) -> np.ndarray:
        """Edge list as an (E, 2) integer array."""
        e = self.faces.get(1, ())
        return np.array(e, dtype=np.int64).reshape(len(e), 2)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in self.names]
        for u, v in self.faces.get(1, ()):
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def ridge_incidence(self) -> dict[Simplex, tuple[int, ...]]:
        """(d-1)-simplex -> indices of the facets containing it."""
        inc: dict[Simplex, list[int]] = defaultdict(list)
        for i, f in enumerate(self.facets):
            for r in itertools.combinations(f, len(f) - 1):
                inc[r].append(i)
        return {r: tuple(v) for r, v in sorted(inc.items())}

    def facet_name_sets(self) -> frozenset[frozenset]:
        return frozenset(frozenset(self.named(f)) for f in self.facets)

    def same_as(self, other: "Complex") -> bool:
        """Equal as abstract complexes on the same vertex names."""
        return self.dim == other.dim and self.facet_name_sets() == other.facet_name_sets()

    def __repr__(self) -> str:
        return f"Complex(dim={self.dim}, vertices={self.num_vertices}, facets={len(self.facets)})"


def empty_complex(dim: int) -> Complex:
    return Complex(dim=dim, facets=(), names=())


def build_complex(facets: Iterable[Sequence[Hashable]]) -> Complex:
    facets = [list(f) for f in facets]
    if not facets or any(len(f) == 0 for f in facets):
        raise EmptyInput("a complex needs at least one nonempty facet")
    size = len(facets[0])
    names: list[Hashable] = []
    index: dict[Hashable, int] = {}
    canon: set[Simplex] = set()
    for f in facets:
        if len(f) != size:
            raise MixedDimension(f"facet {f!r} has {len(f)} vertices, expected {size}")
        if len(set(f)) != len(f):
            raise DuplicateVertexInFacet(f"facet {f!r} repeats a vertex")
        for v in f:
            if v not in index:
                index[v] = len(names)
                names.append(v)
        canon.add(tuple(sorted(index[v] for v in f)))
    return Complex(dim=size - 1, facets=tuple(sorted(canon)), names=tuple(names))


@dataclass(frozen=True)
class ManifoldCheckReport:
    is_closed_pseudomanifold: bool
    is_pseudomanifold_with_boundary: bool
    is_strongly_connected: bool
    boundary_ridges: tuple[Simplex, ...]


def _strongly_connected(T: Complex) -> bool:
    if not T.facets:
        return False
    adj: list[list[int]] = [[] for _ in T.facets]
    for fs in T.ridge_incidence.values():
        for a, b in itertools.combinations(fs, 2):
            adj[a].append(b)
            adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(T.facets)


def manifold_check(T: Complex) -> ManifoldCheckReport:
    counts = Counter({r: len(fs) for r, fs in T.ridge_incidence.items()})
    nonempty = bool(T.facets)
    closed = nonempty and all(c == 2 for c in counts.values())
    with_boundary = nonempty and all(c in (1, 2) for c in counts.values())
    boundary = tuple(r for r, c in counts.items() if c == 1) if with_boundary else ()
    return ManifoldCheckReport(
        is_closed_pseudomanifold=closed,
        is_pseudomanifold_with_boundary=with_boundary,
        is_strongly_connected=_strongly_connected(T),
        boundary_ridges=boundary,
    )


def boundary_complex(T: Complex) -> Complex:
    """Ridges lying in exactly one facet; empty complex when T is closed."""
    if T.dim < 1:
        raise NotPseudomanifold("boundary needs dimension >= 1")
    report = manifold_check(T)
    if not report.is_pseudomanifold_with_boundary:
        raise NotPseudomanifold("some ridge lies in more than two facets")
    if not report.boundary_ridges:
        return empty_complex(T.dim - 1)
    return build_complex(T.named(r) for r in report.boundary_ridges)


def is_full_subcomplex(T: Complex, K: Complex) -> Check:
    """True iff every simplex of T spanned by vertices of K is a simplex of K."""
    inside = {T.vid(n) for n in K.names}
    kfaces = {frozenset(K.named(s)) for s in K.face_set}
    for s in sorted(T.face_set):
        if len(s) > 1 and inside.issuperset(s) and frozenset(T.named(s)) not in kfaces:
            return Check(False, T.named(s))
    return Check(True)


def euler_characteristic(T: Complex) -> int:
    return sum((-1) ** k * len(level) for k, level in T.faces.items())


def face_vertex_name(names: Iterable[Hashable]) -> Hashable:
    """Name of the barycentre of a face: vertices keep their own name."""
    names = list(names)
    if len(names) == 1:
        return names[0]
    return "(" + ",".join(sorted(map(str, names))) + ")"


def barycentric_subdivision(T: Complex) -> tuple[Complex, dict[frozenset, Hashable]]:
    """Standard barycentric subdivision.

    Returns the subdivided complex and a map from each face of ``T`` (as a
    frozenset of vertex names) to the name of its barycentre in the result.
    """
    face_map: dict[frozenset, Hashable] = {}
    for level in T.faces.values():
        for s in level:
            face_map[frozenset(T.named(s))] = face_vertex_name(T.named(s))
    if len(set(face_map.values())) != len(face_map):
        raise ValueError("barycentre names collide; rename vertices to avoid '(' and ','")
    chains = []
    for f in T.facets:
        for order in itertools.permutations(f):
            chains.append([face_map[frozenset(T.named(order[: i + 1]))] for i in range(len(order))])
    return build_complex(chains), face_map

