"""Antipodal labellings and the Tucker / Shashkin / Ky Fan verifiers.

Labels are nonzero integers in ``{±1, ..., ±n}``.  A signature is a tuple
``(l_1, ..., l_{d+1})`` with ``|l_i| == i``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .common import (
    Check,
    ComplementaryEdgePresent,
    InvalidSignature,
    LabelOutOfRange,
    NotAntipodal,
    SignatureDimensionMismatch,
    UnknownVertex,
)
from .complex import Complex
from .degree import DegreeReport, SimplicialMap, degree_mod2
from .symmetry import DoublingResult, Involution, crosspolytope_sphere


@dataclass(frozen=True, eq=False)
class Labelling:
    complex: Complex
    values: tuple[int, ...]
    n: int

    def __getitem__(self, name: Hashable) -> int:
        return self.values[self.complex.vid(name)]

    def as_dict(self) -> dict[Hashable, int]:
        return dict(zip(self.complex.names, self.values))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)


def make_labelling(T: Complex, mapping: Mapping[Hashable, int], n: int | None = None) -> Labelling:
    values = []
    for v in T.names:
        if v not in mapping:
            raise UnknownVertex(f"labelling undefined on {v!r}")
        k = int(mapping[v])
        if k == 0:
            raise LabelOutOfRange(f"label of {v!r} is 0")
        values.append(k)
    top = max(abs(k) for k in values) if values else 1
    if n is None:
        n = top
    elif top > n:
        raise LabelOutOfRange(f"label {top} exceeds the alphabet ±1..±{n}")
    return Labelling(T, tuple(values), n)


def alphabet(n: int) -> tuple[int, ...]:
    """Pi_n ordered +1, -1, +2, -2, ..."""
    return tuple(s * k for k in range(1, n + 1) for s in (1, -1))


def make_signature(labels: Iterable[int], d: int | None = None) -> tuple[int, ...]:
    sig = tuple(sorted((int(x) for x in labels), key=abs))
    if [abs(x) for x in sig] != list(range(1, len(sig) + 1)):
        raise InvalidSignature(f"{sig} must carry exactly one label of each absolute value 1..{len(sig)}")
    if d is not None and len(sig) != d + 1:
        raise SignatureDimensionMismatch(f"signature {sig} has {len(sig)} labels, need {d + 1}")
    return sig


def parse_signature(text: str, d: int | None = None) -> tuple[int, ...]:
    return make_signature((int(t) for t in text.replace(" ", "").split(",") if t), d)


def all_signatures(d: int) -> list[tuple[int, ...]]:
    return [
        tuple(s * (i + 1) for i, s in enumerate(signs))
        for signs in itertools.product((1, -1), repeat=d + 1)
    ]


def negate(sig: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in sig)


def _acts_on_whole(T: Complex, A: Involution) -> bool:
    return A.complex is T or A.complex.same_as(T)


def is_antipodal_labelling(L: Labelling, A: Involution) -> Check:
    """L(A(v)) == -L(v) on every vertex ``A`` acts on (all of T, or only its boundary)."""
    T = L.complex
    if A.complex is T:
        bad = np.flatnonzero(L.array[A.array] != -L.array)
        return Check(False, T.names[int(bad[0])]) if bad.size else Check(True)
    for v in A.complex.names:
        if L[A(v)] != -L[v]:
            return Check(False, v)
    return Check(True)


def complementary_edges(T: Complex, L: Labelling) -> list[tuple[Hashable, Hashable]]:
    E = T.edges
    if not len(E):
        return []
    lab = L.array
    hit = np.flatnonzero(lab[E[:, 0]] == -lab[E[:, 1]])
    return [T.named(E[i]) for i in hit]


def has_complementary_edge(T: Complex, L: Labelling) -> bool:
    E = T.edges
    return bool(len(E)) and bool(np.any(L.array[E[:, 0]] == -L.array[E[:, 1]]))


@dataclass(frozen=True)
class TuckerVerdict:
    holds: bool
    edge: tuple[Hashable, Hashable] | None
    mode: str
    complementary_count: int


def verify_tucker(T: Complex, A: Involution, L: Labelling) -> TuckerVerdict:
    """Look for a complementary edge of a labelling into Pi_d.

    ``A`` acting on all of ``T`` is the closed case; ``A`` acting on the
    boundary is the with-boundary case, where only boundary vertices need to
    be antipodal.  ``holds`` false is a counterexample report.
    """
    d = T.dim
    top = int(np.abs(L.array).max())
    if top > d:
        raise LabelOutOfRange(f"label ±{top} is outside Pi_{d}")
    mode = "closed" if _acts_on_whole(T, A) else "boundary"
    check = is_antipodal_labelling(L, A)
    if not check:
        raise NotAntipodal(f"L(A(v)) != -L(v) at {check.witness!r}", check.witness)
    edges = complementary_edges(T, L)
    return TuckerVerdict(bool(edges), edges[0] if edges else None, mode, len(edges))


def facet_signature_counts(T: Complex, L: Labelling) -> Counter:
    """Counter over facets whose labels have pairwise distinct absolute values.

    The key is the label tuple sorted by absolute value.  Facets with a
    repeated absolute value never match a signature and are skipped.
    """
    out: Counter = Counter()
    lab = L.values
    for f in T.facets:
        key = tuple(sorted((lab[v] for v in f), key=abs))
        if len({abs(x) for x in key}) == len(key):
            out[key] += 1
    return out


def count_signature(T: Complex, L: Labelling, sig: Sequence[int]) -> int:
    sig = make_signature(sig, T.dim)
    return facet_signature_counts(T, L).get(sig, 0)


def count_signature_pair(T: Complex, L: Labelling, sig: Sequence[int]) -> int:
    """Facets labelled by ``sig`` plus facets labelled by ``-sig``."""
    sig = make_signature(sig, T.dim)
    counts = facet_signature_counts(T, L)
    return counts.get(sig, 0) + counts.get(negate(sig), 0)


def induced_map(L: Labelling) -> SimplicialMap:
    """Send a vertex labelled ±i to the crosspolytope vertex ±e_i."""
    edges = complementary_edges(L.complex, L)
    if edges:
        raise ComplementaryEdgePresent(f"complementary edge {edges[0]}", edges[0])
    target, _ = crosspolytope_sphere(L.n - 1)
    vmap = tuple(target.vid(f"{k:+d}") for k in L.values)
    return SimplicialMap(L.complex, target, vmap)


@dataclass(frozen=True)
class KyFanCount:
    counts: dict[tuple[int, ...], int]
    total: int
    n_at_least_d_plus_1: bool

    @property
    def odd(self) -> bool:
        return self.total % 2 == 1


def alternating_pattern(ks: Sequence[int]) -> tuple[int, ...]:
    """(k_0, k_1, ...) -> (+k_0, -k_1, +k_2, ...)."""
    return tuple(k if i % 2 == 0 else -k for i, k in enumerate(ks))


def count_alternating(T: Complex, L: Labelling) -> KyFanCount:
    """Count facets labelled {+k_0, -k_1, +k_2, ...} for each k_0 < ... < k_d in 1..n."""
    d, n = T.dim, L.n
    counts = {ks: 0 for ks in itertools.combinations(range(1, n + 1), d + 1)}
    for f in T.facets:
        labs = sorted((L.values[v] for v in f), key=abs)
        ks = tuple(abs(x) for x in labs)
        if len(set(ks)) == d + 1 and tuple(labs) == alternating_pattern(ks):
            counts[ks] += 1
    return KyFanCount(counts, sum(counts.values()), n >= d + 1)


@dataclass(frozen=True)
class ShashkinReport:
    mode: str
    table: dict[tuple[int, ...], int]
    all_odd: bool
    degree: DegreeReport | None = None
    parity_agrees: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.all_odd and self.parity_agrees is not False


def shashkin_report(T: Complex, A: Involution, L: Labelling) -> ShashkinReport:
    """Signature counts for a complementary-free labelling into Pi_{d+1}.

    Closed case: every one of the 2^(d+1) signatures, cross-checked against
    the mod-2 degree of the induced map.  Boundary case: the count of
    ``sig`` together with ``-sig`` for the 2^d signatures starting with +1.
    """
    d = T.dim
    top = int(np.abs(L.array).max())
    if top > d + 1:
        raise LabelOutOfRange(f"label ±{top} is outside Pi_{d + 1}")
    check = is_antipodal_labelling(L, A)
    if not check:
        raise NotAntipodal(f"L(A(v)) != -L(v) at {check.witness!r}", check.witness)
    edges = complementary_edges(T, L)
    if edges:
        raise ComplementaryEdgePresent(f"complementary edge {edges[0]}", edges[0])
    counts = facet_signature_counts(T, L)
    if _acts_on_whole(T, A):
        table = {sig: counts.get(sig, 0) for sig in all_signatures(d)}
        all_odd = all(c % 2 == 1 for c in table.values())
        full = L if L.n == d + 1 else Labelling(T, L.values, d + 1)
        deg = degree_mod2(induced_map(full))
        agrees = deg.consistent and all(c % 2 == deg.deg2 for c in table.values())
        return ShashkinReport("closed", table, all_odd, deg, agrees)
    table = {
        sig: counts.get(sig, 0) + counts.get(negate(sig), 0)
        for sig in all_signatures(d)
        if sig[0] == 1
    }
    all_odd = all(c % 2 == 1 for c in table.values())
    return ShashkinReport("boundary", table, all_odd)


def subdivide_labelling(L: Labelling, sd: Complex, face_map: Mapping[frozenset, Hashable]) -> Labelling:
    """Label each barycentre by the label of smallest absolute value on its face.

    Equivariant for antipodal labellings and never creates complementary
    edges; ambiguous only when the face itself carries a complementary pair.
    """
    face_of = {name: face for face, name in face_map.items()}
    mapping = {}
    for x in sd.names:
        labs = {L[v] for v in face_of[x]}
        low = min(abs(k) for k in labs)
        pick = {k for k in labs if abs(k) == low}
        if len(pick) != 1:
            raise ComplementaryEdgePresent(f"face {sorted(face_of[x], key=str)} carries ±{low}")
        mapping[x] = pick.pop()
    return make_labelling(sd, mapping, L.n)


def double_labelling(result: DoublingResult, L: Labelling) -> Labelling:
    """Extend a boundary-antipodal labelling to the doubled complex by L(v-) = -L(v+)."""
    mapping: dict[Hashable, int] = {}
    for v in L.complex.names:
        for target, k in ((result.inclusion[v], L[v]), (result.mirror[v], -L[v])):
            if mapping.setdefault(target, k) != k:
                raise NotAntipodal(f"labelling is not antipodal on the boundary at {v!r}", v)
    return make_labelling(result.complex, mapping, L.n)
