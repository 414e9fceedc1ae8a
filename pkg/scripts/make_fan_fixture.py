"""Write the covering-theorem fixture: four caps on the subdivided octahedron.

Each cap collects the vertices whose direction makes an angle below
arccos(THRESHOLD) with one vertex of a regular tetrahedron.  Caps narrower
than a hemisphere hold no antipodal pair; wider than ~70.5 degrees they cover.

    python scripts/make_fan_fixture.py tests/fixtures
"""

import sys
from pathlib import Path

import numpy as np

from antipodal import io
from antipodal.covers import antipodal_pair_free, closed_set, verify_cover
from antipodal.generators import crosspolytope_sphere, refine

THRESHOLD = 0.25
TETRAHEDRON = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]) / np.sqrt(3)


def direction(name: str) -> np.ndarray:
    p = np.zeros(3)
    for token in name.strip("()").split(","):
        p[int(token[1:]) - 1] += 1 if token[0] == "+" else -1
    return p / np.linalg.norm(p)


def main(out: Path) -> None:
    T, A = refine(*crosspolytope_sphere(2), 1)
    sets = [
        closed_set(T, f"C{j + 1}", [v for v in T.names if direction(v) @ t >= THRESHOLD])
        for j, t in enumerate(TETRAHEDRON)
    ]
    assert verify_cover(T, sets)
    assert all(antipodal_pair_free(S, A) for S in sets)
    out.mkdir(parents=True, exist_ok=True)
    (out / "octa_sd.cx").write_text(io.format_complex(T))
    (out / "octa_sd.inv").write_text(io.format_involution(A))
    header = "# four closed caps around tetrahedron vertices on the subdivided octahedron\n"
    (out / "fan4.cov").write_text(header + io.format_cover(sets, T=T))
    print(f"wrote {out}/octa_sd.cx, octa_sd.inv, fan4.cov")


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures"))
