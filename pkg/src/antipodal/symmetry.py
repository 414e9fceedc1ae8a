"""Free simplicial involutions, the crosspolytope embedding and doubling."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping

import numpy as np

from .common import (
    BoundaryInvolutionNotFree,
    BoundaryNotFull,
    Check,
    InvolutionNotFree,
    NotManifoldWithBoundary,
    NotOrderTwo,
    NotSimplicial,
    UnknownVertex,
)
from .complex import (
    Complex,
    Simplex,
    boundary_complex,
    build_complex,
    is_full_subcomplex,
    manifold_check,
)


@dataclass(frozen=True, eq=False)
class Involution:
    complex: Complex
    perm: tuple[int, ...]

    def __call__(self, name: Hashable) -> Hashable:
        T = self.complex
        return T.names[self.perm[T.vid(name)]]

    def image(self, s: Simplex) -> Simplex:
        return tuple(sorted(self.perm[v] for v in s))

    def as_dict(self) -> dict[Hashable, Hashable]:
        names = self.complex.names
        return {names[v]: names[w] for v, w in enumerate(self.perm)}

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.perm, dtype=np.int64)

    def orbits(self) -> list[tuple[int, int]]:
        """Vertex orbits ``(v, A(v))`` with ``v`` the smaller id; fixed points as ``(v, v)``."""
        return [(v, w) for v, w in enumerate(self.perm) if v <= w]


def build_involution(T: Complex, mapping: Mapping[Hashable, Hashable]) -> Involution:
    """Validate a vertex map as an order-two simplicial involution of ``T``.

    Pairs may be given in one direction only; the reverse is implied.
    Freeness is not required here, see :func:`is_free`.
    """
    perm: list[int | None] = [None] * T.num_vertices
    for a, b in mapping.items():
        perm[T.vid(a)] = T.vid(b)
    for v, w in enumerate(list(perm)):
        if w is not None and perm[w] is None:
            perm[w] = v
    missing = [T.names[v] for v, w in enumerate(perm) if w is None]
    if missing:
        raise UnknownVertex(f"involution undefined on {missing[:5]!r}")
    for v, w in enumerate(perm):
        if perm[w] != v:
            raise NotOrderTwo(f"A(A({T.names[v]!r})) != {T.names[v]!r}", witness=T.names[v])
    facets = set(T.facets)
    for f in T.facets:
        img = tuple(sorted(perm[v] for v in f))
        if img not in facets:
            raise NotSimplicial(f"image of facet {T.named(f)} is not a facet", witness=T.named(f))
    return Involution(T, tuple(perm))


@dataclass(frozen=True)
class FreenessReport:
    is_free: bool
    fixed_vertices: tuple[Hashable, ...]
    fixed_simplices: tuple[tuple[Hashable, ...], ...]

    def __bool__(self) -> bool:
        return self.is_free


def is_free(A: Involution) -> FreenessReport:
    T = A.complex
    fixed_v = tuple(T.names[v] for v, w in enumerate(A.perm) if v == w)
    fixed_s = tuple(T.named(s) for s in sorted(T.face_set) if len(s) > 1 and A.image(s) == s)
    return FreenessReport(not fixed_v and not fixed_s, fixed_v, fixed_s)


def lift_involution(
    A: Involution,
    sd: Complex,
    face_map: Mapping[frozenset, Hashable],
    target: Complex | None = None,
) -> Involution:
    """Carry ``A`` to the barycentric subdivision: barycentre of s goes to barycentre of A(s).

    ``target`` defaults to ``sd``; pass ``boundary_complex(sd)`` to lift an
    involution that lives on the boundary of the subdivided complex.
    """
    target = sd if target is None else target
    face_of = {name: face for face, name in face_map.items()}
    mapping = {}
    for x in target.names:
        face = face_of[x]
        mapping[x] = face_map[frozenset(A(v) for v in face)]
    return build_involution(target, mapping)


def crosspolytope_sphere(d: int) -> tuple[Complex, Involution]:
    """Boundary of the (d+1)-dimensional crosspolytope with the antipodal map.

    Vertex ``"+i"`` stands for e_i and ``"-i"`` for -e_i.
    """
    if d < 0:
        raise ValueError("dimension must be >= 0")
    facets = [
        [f"{s}{i + 1}" for i, s in enumerate(signs)]
        for signs in itertools.product("+-", repeat=d + 1)
    ]
    T = build_complex(facets)
    A = build_involution(T, {f"+{i}": f"-{i}" for i in range(1, d + 2)})
    return T, A


@dataclass(frozen=True)
class DoublingResult:
    complex: Complex
    involution: Involution
    inclusion: dict[Hashable, Hashable]
    mirror: dict[Hashable, Hashable]
    boundary_map: dict[Hashable, Hashable]


def double(M: Complex, A: Involution) -> DoublingResult:
    """Glue two copies of ``M`` along the boundary via the boundary involution ``A``.

    An interior vertex ``v`` becomes ``v+`` in the original copy and ``v-`` in
    the mirrored one, and the doubled involution swaps them.  Boundary vertices
    keep their name and are acted on by ``A``.
    """
    report = manifold_check(M)
    if not report.is_pseudomanifold_with_boundary or not report.boundary_ridges:
        raise NotManifoldWithBoundary("M must be a pseudomanifold with nonempty boundary")
    bd = boundary_complex(M)
    if not A.complex.same_as(bd):
        raise NotManifoldWithBoundary("the involution does not act on the boundary of M")
    freeness = is_free(A)
    if not freeness:
        raise BoundaryInvolutionNotFree(
            f"boundary involution fixes {freeness.fixed_vertices or freeness.fixed_simplices[:1]}"
        )
    full = is_full_subcomplex(M, bd)
    if not full:
        raise BoundaryNotFull(
            f"interior simplex {full.witness} is spanned by boundary vertices; subdivide first"
        )

    on_boundary = set(bd.names)
    plus = {v: v if v in on_boundary else f"{v}+" for v in M.names}
    minus = {v: A(v) if v in on_boundary else f"{v}-" for v in M.names}
    tagged = [plus[v] for v in M.names if v not in on_boundary]
    tagged += [minus[v] for v in M.names if v not in on_boundary]
    if len(set(tagged) | on_boundary) != len(tagged) + len(on_boundary):
        raise ValueError("tagged interior names collide with existing vertex names")

    facets = [[plus[v] for v in M.named(f)] for f in M.facets]
    facets += [[minus[v] for v in M.named(f)] for f in M.facets]
    Mt = build_complex(facets)
    mapping = {plus[v]: minus[v] for v in M.names if v not in on_boundary}
    mapping.update({w: A(w) for w in bd.names})
    At = build_involution(Mt, mapping)
    return DoublingResult(
        complex=Mt,
        involution=At,
        inclusion=plus,
        mirror=minus,
        boundary_map={w: w for w in bd.names},
    )


@dataclass(frozen=True)
class CrosspolytopeEmbedding:
    coords: dict[Hashable, tuple[int, ...]]
    m: int
    n: int
    complex: Complex
    subcomplex_vertices: frozenset
    involution: Involution | None

    def antipodality(self) -> Check:
        """F(A(y)) = -F(y) for every vertex y of the subcomplex."""
        if self.involution is None:
            return Check(True)
        for y in sorted(self.subcomplex_vertices, key=self.complex.vid):
            if self.coords[self.involution(y)] != tuple(-c for c in self.coords[y]):
                return Check(False, y)
        return Check(True)

    def positivity(self) -> Check:
        """Vertices off the subcomplex have x_{m+1} + ... + x_n > 0."""
        for v in self.complex.names:
            if v not in self.subcomplex_vertices and sum(self.coords[v][self.m :]) <= 0:
                return Check(False, v)
        return Check(True)

    def nondegenerate(self) -> Check:
        """Every facet goes to an affinely independent point set."""
        X = self.complex
        for f in X.facets:
            pts = np.array([self.coords[v] for v in X.named(f)], dtype=np.int64)
            if len(f) > 1 and np.linalg.matrix_rank(pts[1:] - pts[0]) != len(f) - 1:
                return Check(False, X.named(f))
        return Check(True)


def crosspolytope_embedding(
    X: Complex, Y: Complex | None = None, A: Involution | None = None
) -> CrosspolytopeEmbedding:
    """Vertex coordinates sending antipodal pairs of ``Y`` to ±e_k and the rest of ``X`` to e_k."""
    if Y is None or not Y.names:
        paired: list[Hashable] = []
        sub: frozenset = frozenset()
        A = None
    else:
        if A is None:
            raise ValueError("a nonempty subcomplex needs an involution")
        freeness = is_free(A)
        if not freeness:
            raise InvolutionNotFree(f"involution on the subcomplex is not free: {freeness}")
        sub = frozenset(Y.names)
        missing = [y for y in Y.names if y not in X.index]
        if missing:
            raise UnknownVertex(f"subcomplex vertices {missing[:5]!r} are not in X")
        paired = sorted(sub, key=X.vid)
    reps: list[Hashable] = []
    seen: set = set()
    for y in paired:
        if y not in seen:
            reps.append(y)
            seen.update((y, A(y)))
    m = len(reps)
    rest = [v for v in X.names if v not in sub]
    n = m + len(rest)
    coords: dict[Hashable, tuple[int, ...]] = {}
    for k, y in enumerate(reps):
        e = [0] * n
        e[k] = 1
        coords[y] = tuple(e)
        coords[A(y)] = tuple(-c for c in e)
    for j, v in enumerate(rest):
        e = [0] * n
        e[m + j] = 1
        coords[v] = tuple(e)
    return CrosspolytopeEmbedding(coords, m, n, X, sub, A)
