"""Simplicial maps between closed pseudomanifolds and their mod-2 degree."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Mapping

import numpy as np

from .common import (
    Check,
    DimensionMismatch,
    NotAntipodal,
    NotClosedPseudomanifold,
    NotSimplicial,
    TargetNotStronglyConnected,
    UnknownVertex,
)
from .complex import Complex, Simplex, manifold_check
from .symmetry import Involution


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    source: Complex
    target: Complex
    vmap: tuple[int, ...]

    def image(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.vmap[v] for v in s}))

    def __call__(self, name: Hashable) -> Hashable:
        return self.target.names[self.vmap[self.source.vid(name)]]

    def as_dict(self) -> dict[Hashable, Hashable]:
        return {self.source.names[v]: self.target.names[w] for v, w in enumerate(self.vmap)}

    def compose(self, inner: "SimplicialMap") -> "SimplicialMap":
        """``self ∘ inner``."""
        if inner.target is not self.source and not inner.target.same_as(self.source):
            raise DimensionMismatch("inner map does not land in this map's source")
        vmap = tuple(self.vmap[self.source.vid(inner.target.names[w])] for w in inner.vmap)
        return SimplicialMap(inner.source, self.target, vmap)


def build_simplicial_map(
    src: Complex, dst: Complex, mapping: Mapping[Hashable, Hashable]
) -> SimplicialMap:
    """Validate a vertex map; degenerate images are allowed."""
    vmap = []
    for v in src.names:
        if v not in mapping:
            raise UnknownVertex(f"map undefined on {v!r}")
        vmap.append(dst.vid(mapping[v]))
    f = SimplicialMap(src, dst, tuple(vmap))
    for s in src.facets:
        if f.image(s) not in dst.face_set:
            raise NotSimplicial(
                f"image of {src.named(s)} is not a simplex of the target", witness=src.named(s)
            )
    return f


def is_antipodal_map(f: SimplicialMap, A_src: Involution, A_dst: Involution) -> Check:
    """f(A_src(v)) == A_dst(f(v)) on every vertex; witness is the first failing vertex."""
    lhs = np.asarray(f.vmap)[A_src.array]
    rhs = A_dst.array[np.asarray(f.vmap)]
    bad = np.flatnonzero(lhs != rhs)
    if bad.size:
        return Check(False, f.source.names[int(bad[0])])
    return Check(True)


@dataclass(frozen=True)
class DegreeReport:
    counts: dict[tuple[Hashable, ...], int]
    deg2: int | None
    consistent: bool


def preimage_counts(f: SimplicialMap) -> Counter:
    """Target facet -> number of source facets mapped onto it without collapse."""
    d = f.source.dim
    hits: Counter = Counter()
    for s in f.source.facets:
        img = f.image(s)
        if len(img) == d + 1:
            hits[img] += 1
    return hits


def degree_mod2(f: SimplicialMap) -> DegreeReport:
    src, dst = f.source, f.target
    if src.dim != dst.dim:
        raise DimensionMismatch(f"source has dim {src.dim}, target has dim {dst.dim}")
    if not manifold_check(src).is_closed_pseudomanifold:
        raise NotClosedPseudomanifold("source is not a closed pseudomanifold")
    dst_report = manifold_check(dst)
    if not dst_report.is_closed_pseudomanifold:
        raise NotClosedPseudomanifold("target is not a closed pseudomanifold")
    if not dst_report.is_strongly_connected:
        raise TargetNotStronglyConnected("target facets are not connected through ridges")
    hits = preimage_counts(f)
    counts = {dst.named(t): hits.get(t, 0) for t in dst.facets}
    parities = {c % 2 for c in counts.values()}
    consistent = len(parities) == 1
    return DegreeReport(counts, parities.pop() if consistent else None, consistent)


@dataclass(frozen=True)
class OddMappingVerdict:
    holds: bool
    report: DegreeReport


def verify_odd_mapping(f: SimplicialMap, A_src: Involution, A_dst: Involution) -> OddMappingVerdict:
    """An antipodal map between the artifact's test manifolds must have odd degree."""
    check = is_antipodal_map(f, A_src, A_dst)
    if not check:
        raise NotAntipodal(f"map is not antipodal at vertex {check.witness!r}", check.witness)
    report = degree_mod2(f)
    return OddMappingVerdict(report.consistent and report.deg2 == 1, report)
