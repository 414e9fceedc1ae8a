"""Sample families of d+1 antipode-free closed sets and confirm none covers.

Each set keeps one vertex of an antipodal pair with probability p each side,
so p = 0.5 gives maximal antipode-free sets.

    python scripts/ls_sampling.py --dim 2 --refine 1 --trials 10000
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from antipodal.covers import ClosedSet, ls_corollary_check
from antipodal.generators import refine
from antipodal.symmetry import crosspolytope_sphere


@dataclass
class SamplingConfig:
    dim: int = 2
    refine: int = 1
    trials: int = 10_000
    p_low: float = 0.3
    p_high: float = 0.5
    seed: int = 20240601


def run(cfg: SamplingConfig) -> tuple[int, int, list[int]]:
    T, A = refine(*crosspolytope_sphere(cfg.dim), cfg.refine)
    orbits = [(T.names[v], T.names[w]) for v, w in A.orbits()]
    rng = np.random.default_rng(cfg.seed)
    violations = 0
    sizes = []
    for _ in range(cfg.trials):
        family = []
        for j in range(cfg.dim + 1):
            p = rng.uniform(cfg.p_low, cfg.p_high)
            draw = rng.random(len(orbits))
            verts = frozenset(a if x < p else b for (a, b), x in zip(orbits, draw) if x < 2 * p)
            family.append(ClosedSet(f"S{j}", verts))
            sizes.append(len(verts))
        violations += ls_corollary_check(T, A, family).violated
    return cfg.trials, violations, sizes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--refine", type=int, default=1)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args()
    cfg = SamplingConfig(dim=args.dim, refine=args.refine, trials=args.trials, seed=args.seed)
    trials, violations, sizes = run(cfg)
    print(f"{trials} families of {cfg.dim + 1} sets, mean set size {np.mean(sizes):.1f}")
    print(f"covering families found: {violations}")


if __name__ == "__main__":
    main()
