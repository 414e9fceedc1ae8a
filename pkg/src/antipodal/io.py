"""Plain-text file formats.

complex      ``dim D`` then one facet per line (whitespace-separated names)
involution   ``v w`` per line, meaning A(v) = w and A(w) = v
labelling    ``v k`` per line, k a signed nonzero integer
map          ``v w`` per line, source vertex then image vertex
cover        ``set NAME [v ...]`` opens a block whose following lines list
             vertex names; ``pair NAME1 NAME2`` declares B_{-i} for B_i
layout       ``v x y`` per line

``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Iterator, Mapping

from .common import AntipodalError
from .complex import Complex, build_complex
from .covers import ClosedSet, PairedCover, closed_set
from .degree import SimplicialMap, build_simplicial_map
from .labels import Labelling, make_labelling
from .symmetry import Involution, build_involution


class ParseError(AntipodalError):
    def __init__(self, msg: str, lineno: int | None = None, source: str = "<text>"):
        where = f"{source}:{lineno}" if lineno is not None else source
        super().__init__(f"{where}: {msg}")
        self.lineno = lineno
        self.source = source


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _check_name(name: Hashable) -> str:
    s = str(name)
    if not s or any(c.isspace() for c in s) or "#" in s:
        raise ValueError(f"vertex name {s!r} cannot be written to a text file")
    return s


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def parse_complex(text: str, source: str = "<text>") -> Complex:
    dim = None
    facets = []
    for lineno, tokens in _lines(text):
        if dim is None:
            if tokens[0] != "dim" or len(tokens) != 2:
                raise ParseError("expected 'dim D' header", lineno, source)
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad dimension {tokens[1]!r}", lineno, source) from None
            if dim < 0:
                raise ParseError("dimension must be >= 0", lineno, source)
            continue
        if len(tokens) != dim + 1:
            raise ParseError(f"facet has {len(tokens)} vertices, expected {dim + 1}", lineno, source)
        facets.append(tokens)
    if dim is None:
        raise ParseError("missing 'dim D' header", None, source)
    try:
        return build_complex(facets)
    except AntipodalError as exc:
        raise ParseError(str(exc), None, source) from exc


def format_complex(T: Complex) -> str:
    out = [f"dim {T.dim}"]
    out += [" ".join(_check_name(v) for v in T.named(f)) for f in T.facets]
    return "\n".join(out) + "\n"


def _pairs(text: str, source: str, what: str) -> list[tuple[int, str, str]]:
    rows = []
    for lineno, tokens in _lines(text):
        if len(tokens) != 2:
            raise ParseError(f"{what} line needs exactly two fields", lineno, source)
        rows.append((lineno, tokens[0], tokens[1]))
    return rows


def parse_involution(text: str, T: Complex, source: str = "<text>") -> Involution:
    mapping: dict[str, str] = {}
    for lineno, a, b in _pairs(text, source, "involution"):
        for x in (a, b):
            if x not in T.index:
                raise ParseError(f"unknown vertex {x!r}", lineno, source)
        for x, y in ((a, b), (b, a)):
            if mapping.setdefault(x, y) != y:
                raise ParseError(f"{x!r} is paired twice", lineno, source)
    try:
        return build_involution(T, mapping)
    except AntipodalError as exc:
        raise ParseError(str(exc), None, source) from exc


def format_involution(A: Involution) -> str:
    T = A.complex
    rows = [f"{_check_name(T.names[v])} {_check_name(T.names[w])}" for v, w in A.orbits()]
    return "\n".join(rows) + "\n"


def parse_labelling(text: str, T: Complex, n: int | None = None, source: str = "<text>") -> Labelling:
    mapping: dict[str, int] = {}
    for lineno, v, k in _pairs(text, source, "labelling"):
        if v not in T.index:
            raise ParseError(f"unknown vertex {v!r}", lineno, source)
        try:
            value = int(k)
        except ValueError:
            raise ParseError(f"label {k!r} is not an integer", lineno, source) from None
        if value == 0:
            raise ParseError("label 0 is not allowed", lineno, source)
        if n is not None and abs(value) > n:
            raise ParseError(f"label {value} is outside ±1..±{n}", lineno, source)
        if v in mapping:
            raise ParseError(f"vertex {v!r} labelled twice", lineno, source)
        mapping[v] = value
    missing = [v for v in T.names if v not in mapping]
    if missing:
        raise ParseError(f"no label for {missing[:5]!r}", None, source)
    return make_labelling(T, mapping, n)


def format_labelling(L: Labelling) -> str:
    rows = [f"{_check_name(v)} {k}" for v, k in zip(L.complex.names, L.values)]
    return "\n".join(rows) + "\n"


def parse_map(text: str, src: Complex, dst: Complex, source: str = "<text>") -> SimplicialMap:
    mapping: dict[str, str] = {}
    for lineno, v, w in _pairs(text, source, "map"):
        if v not in src.index:
            raise ParseError(f"unknown source vertex {v!r}", lineno, source)
        if w not in dst.index:
            raise ParseError(f"unknown target vertex {w!r}", lineno, source)
        mapping[v] = w
    try:
        return build_simplicial_map(src, dst, mapping)
    except AntipodalError as exc:
        raise ParseError(str(exc), None, source) from exc


def format_map(f: SimplicialMap) -> str:
    return "\n".join(f"{_check_name(v)} {_check_name(w)}" for v, w in f.as_dict().items()) + "\n"


@dataclass
class CoverFile:
    sets: list[ClosedSet]
    pairs: list[tuple[str, str]] = field(default_factory=list)

    def by_name(self) -> dict[str, ClosedSet]:
        return {S.name: S for S in self.sets}

    def paired(self) -> PairedCover:
        """Pairs in file order become B_{±1}, B_{±2}, ...; first name is the positive one."""
        named = self.by_name()
        members = {}
        for i, (a, b) in enumerate(self.pairs, start=1):
            members[i], members[-i] = named[a], named[b]
        return PairedCover(members)


def parse_cover(text: str, T: Complex, source: str = "<text>") -> CoverFile:
    blocks: dict[str, list[str]] = {}
    order: list[str] = []
    pairs: list[tuple[str, str]] = []
    current: str | None = None
    for lineno, tokens in _lines(text):
        head = tokens[0]
        if head == "set":
            if len(tokens) < 2:
                raise ParseError("'set' needs a name", lineno, source)
            current = tokens[1]
            if current in blocks:
                raise ParseError(f"set {current!r} defined twice", lineno, source)
            blocks[current] = []
            order.append(current)
            rest = tokens[2:]
        elif head == "pair":
            if len(tokens) != 3:
                raise ParseError("'pair' needs two set names", lineno, source)
            pairs.append((tokens[1], tokens[2]))
            current = None
            continue
        else:
            if current is None:
                raise ParseError("vertex names outside a 'set' block", lineno, source)
            rest = tokens
        for v in rest:
            if v not in T.index:
                raise ParseError(f"unknown vertex {v!r}", lineno, source)
        blocks[current].extend(rest)
    for a, b in pairs:
        for x in (a, b):
            if x not in blocks:
                raise ParseError(f"pair names undefined set {x!r}", None, source)
    sets = [closed_set(T, name, blocks[name]) for name in order]
    return CoverFile(sets, pairs)


def format_cover(sets: list[ClosedSet], pairs: list[tuple[str, str]] = (), T: Complex | None = None) -> str:
    out = []
    for S in sets:
        names = sorted(S.vertices, key=T.vid) if T is not None else sorted(S.vertices, key=str)
        out.append(f"set {S.name}")
        out += [" ".join(_check_name(v) for v in names[i : i + 8]) for i in range(0, len(names), 8)]
    out += [f"pair {a} {b}" for a, b in pairs]
    return "\n".join(out) + "\n"


def parse_layout(text: str, source: str = "<text>") -> dict[str, tuple[float, float]]:
    out = {}
    for lineno, tokens in _lines(text):
        if len(tokens) != 3:
            raise ParseError("layout line needs 'v x y'", lineno, source)
        try:
            out[tokens[0]] = (float(tokens[1]), float(tokens[2]))
        except ValueError:
            raise ParseError("coordinates must be numbers", lineno, source) from None
    return out


def format_layout(layout: Mapping[Hashable, tuple[float, float]]) -> str:
    return "\n".join(f"{_check_name(v)} {x:.6g} {y:.6g}" for v, (x, y) in layout.items()) + "\n"
