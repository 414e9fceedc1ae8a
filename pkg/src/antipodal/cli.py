"""Command-line front end.

Exit codes: 0 the checked conclusion holds, 2 it fails (a counterexample
report is printed), 1 bad input or a violated precondition.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import io
from .common import AntipodalError
from .complex import Complex, barycentric_subdivision, boundary_complex, euler_characteristic, manifold_check
from .covers import find_rainbow_simplex, ls_corollary_check, verify_fan_cover_theorem
from .degree import degree_mod2, verify_odd_mapping
from .generators import (
    GeneratorSpec,
    random_antipodal_labelling,
    random_boundary_antipodal_labelling,
    search_complementary_free,
)
from .labels import (
    Labelling,
    all_signatures,
    complementary_edges,
    count_alternating,
    count_signature,
    count_signature_pair,
    double_labelling,
    induced_map,
    is_antipodal_labelling,
    parse_signature,
    shashkin_report,
    subdivide_labelling,
    verify_tucker,
)
from .render import render_svg
from .symmetry import Involution, build_involution, double, is_free, lift_involution

DEFAULT_SEED = 20240601

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


def sig_key(sig: Sequence[int]) -> str:
    return ",".join(f"{x:d}" for x in sig)


def facet_key(names: Sequence) -> str:
    return " ".join(str(v) for v in names)


@dataclass
class RunReport:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    holds: bool | None = None
    verdict: str = ""
    witnesses: dict[str, Any] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    timing: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, default=str)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        for path, digest in self.inputs.items():
            lines.append(f"  input {path} sha256={digest[:16]}")
        for key, value in self.counts.items():
            lines.append(f"  count {key} = {value}")
        for key, value in self.witnesses.items():
            lines.append(f"  witness {key}: {value}")
        lines.append(f"  time {self.timing:.3f}s")
        return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class Inputs:
    """Loads files named on the command line and records their hashes."""

    def __init__(self, report: RunReport):
        self.report = report

    def text(self, path: str) -> str:
        data = Path(path).read_bytes()
        self.report.inputs[path] = hashlib.sha256(data).hexdigest()
        return data.decode()

    def complex(self, path: str) -> Complex:
        return io.parse_complex(self.text(path), path)

    def involution(self, path: str, T: Complex) -> Involution:
        return io.parse_involution(self.text(path), T, path)

    def labelling(self, path: str, T: Complex, n: int | None = None):
        return io.parse_labelling(self.text(path), T, n, path)


def _setting(args, inputs: Inputs):
    """Complex, involution and labelling named by the usual flags, refined ``--refine`` times."""
    T = inputs.complex(args.complex)
    if args.involution and args.boundary_involution:
        raise AntipodalError("give either --involution or --boundary-involution, not both")
    if args.involution:
        A = inputs.involution(args.involution, T)
    elif args.boundary_involution:
        A = inputs.involution(args.boundary_involution, boundary_complex(T))
    else:
        A = None
    L = inputs.labelling(args.labelling, T) if getattr(args, "labelling", None) else None
    for _ in range(getattr(args, "refine", 0) or 0):
        sd, face_map = barycentric_subdivision(T)
        if A is not None:
            target = sd if A.complex is T else boundary_complex(sd)
            A = lift_involution(A, sd, face_map, target)
        if L is not None:
            L = subdivide_labelling(L, sd, face_map)
        T = sd
    return T, A, L


def _need(value, flag: str):
    if value is None:
        raise AntipodalError(f"{flag} is required here")
    return value


def cmd_verify(args, report: RunReport) -> int:
    inputs = Inputs(report)
    kind = args.kind
    if kind in ("tucker", "shashkin", "kyfan"):
        T, A, L = _setting(args, inputs)
        A = _need(A, "--involution or --boundary-involution")
        if kind == "tucker":
            if L is None:
                gen = random_antipodal_labelling if A.complex is T else random_boundary_antipodal_labelling
                L = gen(T, A, T.dim, args.seed)
                report.witnesses["labelling_seed"] = args.seed
            verdict = verify_tucker(T, A, L)
            report.holds = verdict.holds
            report.counts["complementary_edges"] = verdict.complementary_count
            report.witnesses["edge"] = list(verdict.edge) if verdict.edge else None
            report.witnesses["mode"] = verdict.mode
            report.verdict = (
                "complementary edge found" if verdict.holds else "COUNTEREXAMPLE: no complementary edge"
            )
            return EXIT_OK if verdict.holds else EXIT_FAILED
        if L is None:
            if A.complex is not T:
                raise AntipodalError("--labelling is required with a boundary involution")
            n = args.labels or T.dim + 1
            found = search_complementary_free(T, A, n, args.seed, args.budget)
            if not found.found:
                raise AntipodalError(f"no complementary-free labelling into Pi_{n} found ({found.steps} steps)")
            L = found.labelling
            report.witnesses["labelling_seed"] = args.seed
        if kind == "shashkin":
            rep = shashkin_report(T, A, L)
            prefix = "ns" if rep.mode == "boundary" else "n"
            for sig, c in rep.table.items():
                report.counts[f"{prefix}({sig_key(sig)})"] = c
            report.witnesses["mode"] = rep.mode
            report.witnesses["boundary_antipodal"] = True
            report.counts["complementary_edges"] = 0
            if rep.degree is not None:
                report.witnesses["deg2"] = rep.degree.deg2
                report.witnesses["degree_consistent"] = rep.degree.consistent
            report.holds = rep.holds
            report.verdict = "all signature counts odd" if rep.holds else "COUNTEREXAMPLE: even count"
            return EXIT_OK if rep.holds else EXIT_FAILED
        check = is_antipodal_labelling(L, A)
        if not check:
            raise AntipodalError(f"labelling is not antipodal at {check.witness!r}")
        edges = complementary_edges(T, L)
        if edges:
            raise AntipodalError(f"labelling has complementary edge {edges[0]}")
        n = args.labels or L.n
        if n != L.n:
            L = Labelling(T, L.values, n)
        kf = count_alternating(T, L)
        for ks, c in kf.counts.items():
            if c:
                report.counts[f"alt({sig_key(ks)})"] = c
        report.counts["total"] = kf.total
        report.witnesses["n_at_least_d_plus_1"] = kf.n_at_least_d_plus_1
        report.holds = kf.odd and kf.n_at_least_d_plus_1
        report.verdict = "alternating total is odd" if report.holds else "COUNTEREXAMPLE: even total"
        return EXIT_OK if report.holds else EXIT_FAILED

    if kind == "odd-map":
        T, A, L = _setting(args, inputs)
        A = _need(A, "--involution")
        if L is not None:
            f = induced_map(L)
            A_dst = build_involution(f.target, {f"+{i}": f"-{i}" for i in range(1, L.n + 1)})
        else:
            dst = inputs.complex(_need(args.target, "--target"))
            A_dst = inputs.involution(_need(args.target_involution, "--target-involution"), dst)
            f = io.parse_map(inputs.text(_need(args.map, "--map")), T, dst, args.map)
        verdict = verify_odd_mapping(f, A, A_dst)
        report.counts.update({facet_key(k): c for k, c in verdict.report.counts.items()})
        report.witnesses["deg2"] = verdict.report.deg2
        report.witnesses["consistent"] = verdict.report.consistent
        report.holds = verdict.holds
        report.verdict = "odd degree" if verdict.holds else "COUNTEREXAMPLE: degree is not odd"
        return EXIT_OK if verdict.holds else EXIT_FAILED

    if kind in ("cover", "ls"):
        T, A, _ = _setting(args, inputs)
        A = _need(A, "--involution")
        cover = io.parse_cover(inputs.text(_need(args.cover, "--cover")), T, args.cover)
        if kind == "ls":
            ls = ls_corollary_check(T, A, cover.sets)
            report.holds = not ls.violated
            report.witnesses["uncovered_facet"] = list(ls.uncovered_facet) if ls.uncovered_facet else None
            report.verdict = "family does not cover" if report.holds else "COUNTEREXAMPLE: family covers"
            return EXIT_OK if report.holds else EXIT_FAILED
        if cover.pairs:
            paired = cover.paired()
            sigs = [parse_signature(args.signature, T.dim)] if args.signature else all_signatures(T.dim)
            report.holds = True
            for sig in sigs:
                r = find_rainbow_simplex(T, paired, sig)
                report.witnesses[sig_key(sig)] = r.assignment
                report.holds &= r.found
            report.verdict = "rainbow facets found" if report.holds else "COUNTEREXAMPLE: no rainbow facet"
            return EXIT_OK if report.holds else EXIT_FAILED
        k = _need(args.k, "--k")
        w = verify_fan_cover_theorem(T, A, cover.sets, k, refine=args.cover_refine)
        report.holds = True
        report.witnesses.update(
            x=w.x, image=w.image, rainbow_facet=list(w.rainbow_facet), flipped=w.flipped, level=w.level
        )
        report.verdict = f"x in C_1..C_{k} with A(x) in the remaining sets"
        return EXIT_OK
    raise AntipodalError(f"unknown verify kind {kind!r}")


def cmd_count(args, report: RunReport) -> int:
    inputs = Inputs(report)
    T = inputs.complex(args.complex)
    L = inputs.labelling(args.labelling, T)
    if args.alternating:
        kf = count_alternating(T, L)
        report.counts.update({f"alt({sig_key(k)})": c for k, c in kf.counts.items()})
        report.counts["total"] = kf.total
    else:
        sigs = [parse_signature(args.signature, T.dim)] if args.signature else all_signatures(T.dim)
        fn = count_signature_pair if args.pair else count_signature
        for sig in sigs:
            if args.pair and sig[0] < 0 and not args.signature:
                continue
            report.counts[sig_key(sig)] = fn(T, L, sig)
    report.verdict = "counted"
    return EXIT_OK


def cmd_degree(args, report: RunReport) -> int:
    inputs = Inputs(report)
    src = inputs.complex(args.complex)
    dst = inputs.complex(args.target)
    f = io.parse_map(inputs.text(args.map), src, dst, args.map)
    rep = degree_mod2(f)
    report.counts.update({facet_key(k): c for k, c in rep.counts.items()})
    report.witnesses.update(deg2=rep.deg2, consistent=rep.consistent)
    report.verdict = f"deg2 = {rep.deg2}" if rep.consistent else "inconsistent preimage parities"
    report.holds = rep.consistent
    return EXIT_OK


def cmd_double(args, report: RunReport) -> int:
    inputs = Inputs(report)
    args.involution = None
    T, A, L = _setting(args, inputs)
    A = _need(A, "--boundary-involution")
    res = double(T, A)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {f"{args.prefix}.cx": io.format_complex(res.complex), f"{args.prefix}.inv": io.format_involution(res.involution)}
    if L is not None:
        files[f"{args.prefix}.lab"] = io.format_labelling(double_labelling(res, L))
    for name, text in files.items():
        (out / name).write_text(text)
    report.counts.update(
        facets=len(res.complex.facets), vertices=res.complex.num_vertices, euler=euler_characteristic(res.complex)
    )
    report.witnesses.update(closed=manifold_check(res.complex).is_closed_pseudomanifold, free=bool(is_free(res.involution)), files=sorted(files))
    report.verdict = "doubled"
    return EXIT_OK


def cmd_gen(args, report: RunReport) -> int:
    spec = GeneratorSpec(args.kind, dim=args.dim, refine=args.refine, k=args.k, seed=args.seed)
    T, A, L = spec.build()
    prefix = args.prefix or args.kind
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {f"{prefix}.cx": io.format_complex(T), f"{prefix}.inv": io.format_involution(A)}
    if L is not None:
        files[f"{prefix}.lab"] = io.format_labelling(L)
    layout = spec.layout()
    if layout is not None:
        files[f"{prefix}.layout"] = io.format_layout(layout)
    for name, text in files.items():
        (out / name).write_text(text)
    report.counts.update(facets=len(T.facets), vertices=T.num_vertices, euler=euler_characteristic(T))
    report.witnesses.update(
        involution="closed" if A.complex is T else "boundary",
        files=sorted(files),
    )
    report.verdict = f"generated {args.kind}"
    return EXIT_OK


def cmd_render(args, report: RunReport) -> int:
    inputs = Inputs(report)
    T = inputs.complex(args.complex)
    L = inputs.labelling(args.labelling, T) if args.labelling else None
    layout = io.parse_layout(inputs.text(args.layout), args.layout) if args.layout else None
    svg = render_svg(T, L, layout, show_names=args.names)
    Path(args.output).write_text(svg)
    report.counts["facets"] = len(T.facets)
    report.witnesses["output"] = args.output
    report.verdict = "rendered"
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="antipodal", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    shared = _Parser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def setting(sp, labelling=True):
        sp.add_argument("--complex", required=True)
        sp.add_argument("--involution")
        sp.add_argument("--boundary-involution")
        if labelling:
            sp.add_argument("--labelling")
        sp.add_argument("--refine", type=int, default=0, help="barycentric subdivisions before checking")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    v = sub.add_parser("verify", parents=[shared], help="check one of the lemmas on given files")
    v.add_argument("kind", choices=["tucker", "shashkin", "kyfan", "odd-map", "cover", "ls"])
    setting(v)
    v.add_argument("--labels", type=int, help="alphabet size n for Pi_n")
    v.add_argument("--signature", help="e.g. 1,-2,3")
    v.add_argument("--k", type=int, help="number of sets in the first intersection (covering theorem)")
    v.add_argument("--cover")
    v.add_argument("--cover-refine", type=int, default=0, help="refinement budget when no witness is found")
    v.add_argument("--target")
    v.add_argument("--target-involution")
    v.add_argument("--map")
    v.add_argument("--budget", type=int, default=200_000)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", parents=[shared], help="signature or alternating counts")
    c.add_argument("--complex", required=True)
    c.add_argument("--labelling", required=True)
    c.add_argument("--signature")
    c.add_argument("--pair", action="store_true", help="count signature and its negation together")
    c.add_argument("--alternating", action="store_true")
    c.set_defaults(func=cmd_count)

    d = sub.add_parser("degree", parents=[shared], help="mod-2 degree of a simplicial map")
    d.add_argument("--complex", required=True)
    d.add_argument("--target", required=True)
    d.add_argument("--map", required=True)
    d.set_defaults(func=cmd_degree)

    db = sub.add_parser("double", parents=[shared], help="glue two copies along the boundary")
    db.add_argument("--complex", required=True)
    db.add_argument("--boundary-involution", required=True)
    db.add_argument("--labelling")
    db.add_argument("--refine", type=int, default=0, help="subdivide first (needed when the boundary is not full)")
    db.add_argument("--out-dir", default=".")
    db.add_argument("--prefix", default="double")
    db.set_defaults(func=cmd_double)

    g = sub.add_parser("gen", parents=[shared], help="write a generator's files")
    g.add_argument("kind", choices=list(GeneratorSpec.KINDS))
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--refine", type=int, default=0)
    g.add_argument("--seed", type=int, default=DEFAULT_SEED)
    g.add_argument("--out-dir", default=".")
    g.add_argument("--prefix")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("render", parents=[shared], help="draw a complex of dimension <= 2 as SVG")
    r.add_argument("--complex", required=True)
    r.add_argument("--labelling")
    r.add_argument("--layout")
    r.add_argument("--names", action="store_true")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report = RunReport(command=args.command if args.command != "verify" else f"verify {args.kind}")
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except (AntipodalError, OSError, ValueError) as exc:
        report.verdict = f"error: {exc}"
        report.holds = None
        code = EXIT_INPUT
        print(f"error: {exc}", file=sys.stderr)
    report.timing = time.perf_counter() - start
    print(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
