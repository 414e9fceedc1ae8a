"""Closed covering families and the covering-family theorems.

A closed set is the full subcomplex spanned by a vertex set.  A family
covers ``T`` when every facet of ``T`` lies inside some member.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .common import (
    Check,
    InputNotAntipodeFree,
    InputNotCovering,
    NoWitnessAtThisResolution,
    UnknownVertex,
    VertexUncovered,
)
from .complex import Complex, barycentric_subdivision
from .labels import Labelling, complementary_edges, make_labelling, make_signature
from .symmetry import Involution, lift_involution


@dataclass(frozen=True)
class ClosedSet:
    name: str
    vertices: frozenset

    def __contains__(self, v: Hashable) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)


def closed_set(T: Complex, name: str, vertices: Iterable[Hashable]) -> ClosedSet:
    vertices = frozenset(vertices)
    unknown = [v for v in vertices if v not in T.index]
    if unknown:
        raise UnknownVertex(f"set {name!r} names unknown vertices {sorted(map(str, unknown))[:5]}")
    return ClosedSet(name, vertices)


def image_set(S: ClosedSet, A: Involution, name: str | None = None) -> ClosedSet:
    return ClosedSet(name or f"A({S.name})", frozenset(A(v) for v in S.vertices))


@dataclass(frozen=True)
class PairedCover:
    """Sets ``B_l`` indexed by labels l in Pi_n."""

    members: dict[int, ClosedSet]

    @property
    def n(self) -> int:
        return max(abs(k) for k in self.members)

    def __getitem__(self, label: int) -> ClosedSet:
        return self.members[label]

    def sets(self) -> list[ClosedSet]:
        return [self.members[k] for k in sorted(self.members, key=lambda x: (abs(x), -x))]


def verify_cover(T: Complex, sets: Sequence[ClosedSet]) -> Check:
    """Every facet lies in some member; the witness is an uncovered facet."""
    for f in T.facets:
        names = set(T.named(f))
        if not any(names <= S.vertices for S in sets):
            return Check(False, T.named(f))
    return Check(True)


def antipodal_pair_free(S: ClosedSet, A: Involution) -> bool:
    return all(A(v) not in S.vertices for v in S.vertices)


def paired_cover(A: Involution, positives: Sequence[ClosedSet]) -> PairedCover:
    """B_1..B_n together with B_{-i} := A(B_i)."""
    members: dict[int, ClosedSet] = {}
    for i, B in enumerate(positives, start=1):
        members[i] = B
        members[-i] = image_set(B, A, f"-{B.name}")
    return PairedCover(members)


def cover_from_labelling(L: Labelling) -> PairedCover:
    """B_l := L^{-1}(l) for every l in Pi_n."""
    T = L.complex
    members = {}
    for k in range(1, L.n + 1):
        for s in (k, -k):
            members[s] = ClosedSet(f"B{s:+d}", frozenset(v for v in T.names if L[v] == s))
    return PairedCover(members)


def _check_pairs_disjoint(cover: PairedCover) -> None:
    for k in range(1, cover.n + 1):
        common = cover[k].vertices & cover[-k].vertices
        if common:
            raise InputNotAntipodeFree(f"B_{k} and B_-{k} share {sorted(map(str, common))[:3]}")


def min_index_labelling(T: Complex, cover: PairedCover) -> Labelling:
    """Label v by the l with v in B_l and |l| as small as possible."""
    _check_pairs_disjoint(cover)
    order = sorted(cover.members, key=lambda x: (abs(x), -x))
    mapping = {}
    for v in T.names:
        for k in order:
            if v in cover[k].vertices:
                mapping[v] = k
                break
        else:
            raise VertexUncovered(f"vertex {v!r} lies in no member of the cover")
    return make_labelling(T, mapping, cover.n)


@dataclass(frozen=True)
class RainbowResult:
    found: bool
    facet: tuple[Hashable, ...] | None
    assignment: dict[int, Hashable] | None
    route: str | None
    complementary_edges: list


def find_rainbow_simplex(T: Complex, cover: PairedCover, signature: Sequence[int]) -> RainbowResult:
    """A facet with one vertex in each of B_{k_1}, ..., B_{k_{d+1}}.

    First looks for a facet carrying exactly the labels ``signature`` under the
    min-index labelling; otherwise matches facet vertices to the sets directly.
    """
    sig = make_signature(signature, T.dim)
    L = min_index_labelling(T, cover)
    edges = complementary_edges(T, L)
    for f in T.facets:
        if tuple(sorted((L.values[v] for v in f), key=abs)) == sig:
            assignment = {L.values[v]: T.names[v] for v in f}
            return RainbowResult(True, T.named(f), assignment, "labelling", edges)
    for f in T.facets:
        names = T.named(f)
        for perm in itertools.permutations(names):
            if all(v in cover[k].vertices for k, v in zip(sig, perm)):
                return RainbowResult(True, names, dict(zip(sig, perm)), "matching", edges)
    return RainbowResult(False, None, None, None, edges)


def _cyclic(i: int, size: int) -> int:
    """Index in 1..size congruent to i."""
    return (i - 1) % size + 1


def fan_transform(T: Complex, A: Involution, C: Sequence[ClosedSet]) -> PairedCover:
    """Turn d+2 antipode-free closed sets covering T into a paired family B_1..B_{d+1}.

    B_i = C_i ∩ (C_{-(i+1)} ∪ ... ∪ C_{-(i+m)} ∪ C_{-(d+2)}) with m = ceil(d/2),
    indices i+1..i+m taken cyclically in 1..d+1, and C_{-j} = A(C_j).
    """
    d = T.dim
    if len(C) != d + 2:
        raise ValueError(f"need {d + 2} sets, got {len(C)}")
    for S in C:
        if not antipodal_pair_free(S, A):
            raise InputNotAntipodeFree(f"set {S.name!r} contains an antipodal pair")
    covered = verify_cover(T, C)
    if not covered:
        raise InputNotCovering(f"facet {covered.witness} is not covered")
    m = math.ceil(d / 2)
    neg = [frozenset(A(v) for v in S.vertices) for S in C]  # neg[j-1] = C_{-j}
    positives = []
    for i in range(1, d + 2):
        partners = [_cyclic(i + t, d + 1) for t in range(1, m + 1)] + [d + 2]
        union = frozenset().union(*(neg[j - 1] for j in partners))
        positives.append(ClosedSet(f"B{i}", C[i - 1].vertices & union))
    B = paired_cover(A, positives)
    for i in range(1, d + 2):
        if B[i].vertices & B[-i].vertices:
            raise AssertionError(f"B_{i} and B_-{i} intersect")
    union_check = verify_cover(T, B.sets())
    if not union_check:
        raise AssertionError(f"B-family misses facet {union_check.witness}")
    return B


def lift_closed_set(S: ClosedSet, face_map: Mapping[frozenset, Hashable]) -> ClosedSet:
    """Barycentre of a face belongs to the lifted set iff the whole face does."""
    return ClosedSet(S.name, frozenset(x for face, x in face_map.items() if face <= S.vertices))


@dataclass(frozen=True)
class FanCoverWitness:
    k: int
    x: Hashable
    image: Hashable
    rainbow_facet: tuple[Hashable, ...]
    flipped: bool
    level: int
    complex: Complex
    involution: Involution
    sets: list[ClosedSet]


def _closed_star_vertices(T: Complex, facet: Sequence[Hashable]) -> list[Hashable]:
    ids = set(T.simplex(facet))
    out = list(facet)
    for f in T.facets:
        if ids & set(f):
            out += [T.names[v] for v in f if T.names[v] not in out]
    return out


def verify_fan_cover_theorem(
    T: Complex, A: Involution, C: Sequence[ClosedSet], k: int, refine: int = 0
) -> FanCoverWitness:
    """Find x in C_1 ∩ ... ∩ C_k with A(x) in C_{k+1} ∩ ... ∩ C_{d+2}.

    Runs the paired-family transform and a rainbow search, then looks for a
    vertex meeting the conclusion in the closed star of the rainbow facet.
    When none exists, subdivides (up to ``refine`` times) and retries.
    """
    d = T.dim
    if not 0 < k < d + 2:
        raise ValueError(f"k must satisfy 0 < k < {d + 2}")
    flipped = k < (d + 2) / 2
    order = list(C[k:]) + list(C[:k]) if flipped else list(C)
    kk = d + 2 - k if flipped else k
    sig = tuple(range(1, kk + 1)) + tuple(-i for i in range(kk + 1, d + 2))
    level_T, level_A, level_sets = T, A, order
    for level in range(refine + 1):
        B = fan_transform(level_T, level_A, level_sets)
        rainbow = find_rainbow_simplex(level_T, B, sig)
        if rainbow.found:
            front, back = level_sets[:kk], level_sets[kk:]
            for y in _closed_star_vertices(level_T, rainbow.facet):
                Ay = level_A(y)
                if all(y in S for S in front) and all(Ay in S for S in back):
                    x, image = (Ay, y) if flipped else (y, Ay)
                    lifted = level_sets[kk:] + level_sets[:kk] if flipped else level_sets
                    return FanCoverWitness(
                        k, x, image, rainbow.facet, flipped, level, level_T, level_A, list(lifted)
                    )
        if level < refine:
            sd, face_map = barycentric_subdivision(level_T)
            level_A = lift_involution(level_A, sd, face_map)
            level_sets = [lift_closed_set(S, face_map) for S in level_sets]
            level_T = sd
    raise NoWitnessAtThisResolution(
        f"no vertex witness for k={k} after {refine} refinement(s); try a larger refine depth"
    )


@dataclass(frozen=True)
class LSReport:
    violated: bool
    uncovered_facet: tuple[Hashable, ...] | None


def ls_corollary_check(T: Complex, A: Involution, sets: Sequence[ClosedSet]) -> LSReport:
    """d+1 antipode-free closed sets must leave some facet uncovered.

    ``violated`` is true when they do cover, which signals a non-BUT input or a bug.
    """
    for S in sets:
        if not antipodal_pair_free(S, A):
            raise InputNotAntipodeFree(f"set {S.name!r} contains an antipodal pair")
    check = verify_cover(T, sets)
    return LSReport(violated=check.ok, uncovered_facet=None if check.ok else check.witness)
