"""Print the signature-pair table of the 4x4 grid example, before and after doubling.

    python scripts/fig2_table.py [--refine 1]
"""

from __future__ import annotations

import argparse

from antipodal.complex import barycentric_subdivision, boundary_complex, euler_characteristic
from antipodal.generators import fig2_grid
from antipodal.labels import double_labelling, shashkin_report, subdivide_labelling
from antipodal.symmetry import double, lift_involution


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--refine", type=int, default=1, help="subdivisions before doubling (>= 1)")
    args = ap.parse_args()

    T, A, L = fig2_grid()
    rep = shashkin_report(T, A, L)
    print("grid, boundary mode")
    for sig, c in rep.table.items():
        print(f"  ns{sig} = {c}")

    for _ in range(max(args.refine, 1)):
        sd, face_map = barycentric_subdivision(T)
        A = lift_involution(A, sd, face_map, boundary_complex(sd))
        L = subdivide_labelling(L, sd, face_map)
        T = sd
    res = double(T, A)
    D = double_labelling(res, L)
    rep = shashkin_report(res.complex, res.involution, D)
    M = res.complex
    print(f"doubled: {M.num_vertices} vertices, {len(M.facets)} facets, chi = {euler_characteristic(M)}")
    for sig, c in rep.table.items():
        print(f"  n{sig} = {c}")
    print(f"  deg2 = {rep.degree.deg2}, parity agrees: {rep.parity_agrees}")


if __name__ == "__main__":
    main()
