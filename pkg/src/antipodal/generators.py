"""Canonical test objects and seeded labellings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Hashable

import numpy as np

from .complex import Complex, barycentric_subdivision, boundary_complex, build_complex
from .labels import Labelling, alphabet, make_labelling
from .symmetry import Involution, build_involution, crosspolytope_sphere, double, lift_involution

__all__ = [
    "GeneratorSpec",
    "crosspolytope_sphere",
    "disk",
    "fig2_grid",
    "genus2_surface",
    "punctured_torus",
    "random_antipodal_labelling",
    "random_boundary_antipodal_labelling",
    "refine",
    "search_complementary_free",
]

# column x, bottom to top
FIG2_LABELS = (
    (2, 1, 3, -1),
    (3, 3, 1, 2),
    (-2, -1, -2, -3),
    (1, -3, -1, -2),
)


def _grid_name(x: int, y: int) -> str:
    return f"p{x}{y}"


def fig2_grid() -> tuple[Complex, Involution, Labelling]:
    """4x4 vertex grid, every cell cut along its bottom-left/top-right diagonal."""
    facets = []
    for x in range(3):
        for y in range(3):
            bl, br = _grid_name(x, y), _grid_name(x + 1, y)
            tr, tl = _grid_name(x + 1, y + 1), _grid_name(x, y + 1)
            facets += [[bl, br, tr], [bl, tr, tl]]
    T = build_complex(facets)
    bd = boundary_complex(T)
    A = build_involution(bd, {v: _grid_name(3 - int(v[1]), 3 - int(v[2])) for v in bd.names})
    L = make_labelling(
        T, {_grid_name(x, y): FIG2_LABELS[x][y] for x in range(4) for y in range(4)}, 3
    )
    return T, A, L


def fig2_layout() -> dict[Hashable, tuple[float, float]]:
    return {_grid_name(x, y): (float(x), float(y)) for x in range(4) for y in range(4)}


def disk(k: int) -> tuple[Complex, Involution]:
    """Cone from centre ``c`` over the 2k-gon ``b0 .. b{2k-1}``; boundary rotation by k."""
    if k < 2:
        raise ValueError("disk(k) needs k >= 2")
    ring = [f"b{i}" for i in range(2 * k)]
    T = build_complex([["c", ring[i], ring[(i + 1) % (2 * k)]] for i in range(2 * k)])
    bd = boundary_complex(T)
    A = build_involution(bd, {ring[i]: ring[(i + k) % (2 * k)] for i in range(2 * k)})
    return T, A


def disk_layout(k: int) -> dict[Hashable, tuple[float, float]]:
    out: dict[Hashable, tuple[float, float]] = {"c": (0.0, 0.0)}
    for i in range(2 * k):
        a = math.pi * i / k
        out[f"b{i}"] = (math.cos(a), math.sin(a))
    return out


def circle(size: int, prefix: str = "v") -> Complex:
    if size < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    return build_complex([[f"{prefix}{i}", f"{prefix}{(i + 1) % size}"] for i in range(size)])


def circle_rotation(C: Complex, shift: int, prefix: str = "v") -> Involution:
    size = C.num_vertices
    return build_involution(C, {f"{prefix}{i}": f"{prefix}{(i + shift) % size}" for i in range(size)})


def _torus_name(x: int, y: int) -> str:
    return f"t{x}{y}"


def punctured_torus(n: int = 3) -> tuple[Complex, Involution]:
    """n x n grid torus with the square cell at the origin removed.

    The boundary is the 4-cycle around the missing cell, with the free
    involution exchanging opposite corners.
    """
    if n < 3:
        raise ValueError("grid torus needs n >= 3")
    facets = []
    for x in range(n):
        for y in range(n):
            if (x, y) == (0, 0):
                continue
            bl = _torus_name(x, y)
            br = _torus_name((x + 1) % n, y)
            tr = _torus_name((x + 1) % n, (y + 1) % n)
            tl = _torus_name(x, (y + 1) % n)
            facets += [[bl, br, tr], [bl, tr, tl]]
    T = build_complex(facets)
    bd = boundary_complex(T)
    corners = {"t00": "t11", "t10": "t01"}
    A = build_involution(bd, corners)
    return T, A


def genus2_surface() -> tuple[Complex, Involution]:
    M, A = punctured_torus()
    res = double(M, A)
    return res.complex, res.involution


def refine(T: Complex, A: Involution, levels: int = 1) -> tuple[Complex, Involution]:
    """Barycentric subdivision ``levels`` times, carrying the involution along.

    ``A`` may act on all of ``T`` or on its boundary only.
    """
    for _ in range(levels):
        sd, face_map = barycentric_subdivision(T)
        on_boundary = A.complex is not T and not A.complex.same_as(T)
        target = boundary_complex(sd) if on_boundary else sd
        A = lift_involution(A, sd, face_map, target)
        T = sd
    return T, A


def random_antipodal_labelling(T: Complex, A: Involution, n: int, seed: int) -> Labelling:
    """Uniform label from Pi_n on one vertex per orbit, the negation on its partner."""
    rng = np.random.default_rng(seed)
    orbits = A.orbits()
    if any(v == w for v, w in orbits):
        raise ValueError("involution has fixed vertices")
    draws = rng.choice(np.array(alphabet(n)), size=len(orbits))
    values = np.zeros(T.num_vertices, dtype=np.int64)
    for (v, w), k in zip(orbits, draws):
        values[v], values[w] = k, -k
    return Labelling(T, tuple(int(x) for x in values), n)


def random_boundary_antipodal_labelling(
    T: Complex, A: Involution, n: int, seed: int
) -> Labelling:
    """Antipodal on the vertices ``A`` acts on, uniform on the rest."""
    rng = np.random.default_rng(seed)
    sigma = np.array(alphabet(n))
    mapping: dict[Hashable, int] = {}
    for v, w in A.orbits():
        k = int(rng.choice(sigma))
        mapping[A.complex.names[v]] = k
        mapping[A.complex.names[w]] = -k
    for v in T.names:
        if v not in mapping:
            mapping[v] = int(rng.choice(sigma))
    return make_labelling(T, mapping, n)


@dataclass(frozen=True)
class SearchResult:
    labelling: Labelling | None
    steps: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return self.labelling is not None


def search_complementary_free(
    T: Complex, A: Involution, n: int, seed: int = 0, budget: int = 200_000
) -> SearchResult:
    """Backtracking search for an antipodal labelling into Pi_n with no complementary edge.

    Orbits are visited in breadth-first order from a seeded start vertex and
    label choices are tried in a seeded order.  ``exhausted`` means the whole
    space was searched without success; running out of ``budget`` first
    leaves it false.
    """
    rng = np.random.default_rng(seed)
    nv = T.num_vertices
    perm = A.perm
    if any(perm[v] == v for v in range(nv)):
        raise ValueError("involution has fixed vertices")
    adj = T.neighbours

    start = int(rng.integers(nv))
    order: list[int] = []
    seen = [False] * nv
    queue = [start]
    for v in queue:
        if seen[v]:
            continue
        rep = v
        seen[v] = seen[perm[v]] = True
        order.append(rep)
        queue += [w for w in adj[v] + adj[perm[v]] if not seen[w]]
    for v in range(nv):
        if not seen[v]:
            order.append(v)
            seen[v] = seen[perm[v]] = True

    sigma = list(alphabet(n))
    choices = [[int(x) for x in rng.permutation(sigma)] for _ in order]
    values = [0] * nv
    steps = 0

    def ok(v: int, k: int) -> bool:
        return all(values[w] != -k for w in adj[v])

    def assign(i: int) -> bool:
        nonlocal steps
        if i == len(order):
            return True
        v = order[i]
        w = perm[v]
        for k in choices[i]:
            steps += 1
            if steps > budget:
                raise _BudgetExceeded
            # v and w are both unlabelled here; an edge v-w is complementary regardless
            if w in adj[v]:
                continue
            if ok(v, k) and ok(w, -k):
                values[v], values[w] = k, -k
                if assign(i + 1):
                    return True
                values[v] = values[w] = 0
        return False

    try:
        found = assign(0)
    except _BudgetExceeded:
        return SearchResult(None, steps, False)
    if not found:
        return SearchResult(None, steps, True)
    return SearchResult(Labelling(T, tuple(values), n), steps, False)


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    dim: int = 2
    refine: int = 0
    k: int = 2
    seed: int = 0
    params: dict = field(default_factory=dict)

    KINDS = ("crosspolytope", "fig2", "disk", "punctured-torus", "genus2")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown generator {self.kind!r}; choose from {self.KINDS}")
        if self.kind == "crosspolytope" and self.dim < 1:
            raise ValueError("crosspolytope needs dim >= 1")
        if self.kind == "disk" and self.k < 2:
            raise ValueError("disk needs k >= 2")
        if self.refine < 0:
            raise ValueError("refine depth must be >= 0")

    def build(self) -> tuple[Complex, Involution, Labelling | None]:
        L = None
        if self.kind == "crosspolytope":
            T, A = crosspolytope_sphere(self.dim)
        elif self.kind == "fig2":
            T, A, L = fig2_grid()
        elif self.kind == "disk":
            T, A = disk(self.k)
        elif self.kind == "punctured-torus":
            T, A = punctured_torus()
        else:
            T, A = genus2_surface()
        if self.refine:
            if L is not None:
                from .labels import subdivide_labelling

                for _ in range(self.refine):
                    sd, face_map = barycentric_subdivision(T)
                    A = lift_involution(A, sd, face_map, boundary_complex(sd))
                    L = subdivide_labelling(L, sd, face_map)
                    T = sd
            else:
                T, A = refine(T, A, self.refine)
        return T, A, L

    def layout(self) -> dict[Hashable, tuple[float, float]] | None:
        if self.refine:
            return None
        if self.kind == "fig2":
            return fig2_layout()
        if self.kind == "disk":
            return disk_layout(self.k)
        if self.kind == "crosspolytope" and self.dim in (1, 2):
            return crosspolytope_layout(self.dim)
        return None


def crosspolytope_layout(d: int) -> dict[Hashable, tuple[float, float]]:
    """Planar drawing: square for d=1, Schlegel diagram of the octahedron for d=2."""
    if d == 1:
        return {"+1": (1.0, 0.0), "+2": (0.0, 1.0), "-1": (-1.0, 0.0), "-2": (0.0, -1.0)}
    if d == 2:
        inner, outer = 0.35, 1.0
        pts = {}
        for i, name in enumerate(("+1", "+2", "+3")):
            a = math.pi / 2 + 2 * math.pi * i / 3
            pts[name] = (inner * math.cos(a), inner * math.sin(a))
        for i, name in enumerate(("-1", "-2", "-3")):
            a = -math.pi / 2 + 2 * math.pi * i / 3
            pts[name] = (outer * math.cos(a), outer * math.sin(a))
        return pts
    raise ValueError("no planar layout above dimension 2")
