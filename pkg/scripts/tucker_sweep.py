"""Seeded sweep of random antipodal labellings into Pi_d on crosspolytope spheres.

Reports, per dimension and refinement depth, how many labellings had a
complementary edge and the mean number of such edges.

    python scripts/tucker_sweep.py --dims 1 2 3 --refine 0 1 --seeds 1000
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from antipodal.generators import random_antipodal_labelling, refine
from antipodal.labels import verify_tucker
from antipodal.symmetry import crosspolytope_sphere


@dataclass
class SweepConfig:
    dims: list[int] = field(default_factory=lambda: [1, 2, 3])
    refine: list[int] = field(default_factory=lambda: [0, 1])
    seeds: int = 1000
    first_seed: int = 0


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for d in cfg.dims:
        for r in cfg.refine:
            T, A = refine(*crosspolytope_sphere(d), r)
            start = time.perf_counter()
            counts = np.array(
                [
                    verify_tucker(T, A, random_antipodal_labelling(T, A, d, s)).complementary_count
                    for s in range(cfg.first_seed, cfg.first_seed + cfg.seeds)
                ]
            )
            rows.append(
                dict(
                    d=d,
                    refine=r,
                    facets=len(T.facets),
                    hits=int((counts > 0).sum()),
                    mean_edges=float(counts.mean()),
                    seconds=time.perf_counter() - start,
                )
            )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--refine", type=int, nargs="+", default=[0, 1])
    ap.add_argument("--seeds", type=int, default=1000)
    ap.add_argument("--first-seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SweepConfig(args.dims, args.refine, args.seeds, args.first_seed)
    print(f"{'d':>2} {'refine':>6} {'facets':>7} {'hits':>10} {'mean edges':>11} {'time':>7}")
    for row in run(cfg):
        print(
            f"{row['d']:>2} {row['refine']:>6} {row['facets']:>7} "
            f"{row['hits']:>5}/{cfg.seeds:<4} {row['mean_edges']:>11.2f} {row['seconds']:>6.2f}s"
        )


if __name__ == "__main__":
    main()
