# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/golden/m2_cell4.ppm from first principles.

The expected image is laid out directly from the 4x4 sign pattern of
sigma_y (x) sigma_y, not by calling the C++ renderer, so the golden file
stays an independent reference.
"""

import pathlib

PALETTE = {0: (128, 128, 128), 1: (0, 0, 0), -1: (255, 255, 255)}

# (sigma_y (x) sigma_y)[r][c]; the +/-i factors always multiply to +/-1.
SIGNS = [
    [0, 0, 0, -1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
]

CELL = 4


def build() -> bytes:
    side = len(SIGNS) * CELL
    rows = []
    for r in range(side):
        row = bytearray()
        for c in range(side):
            row.extend(PALETTE[SIGNS[r // CELL][c // CELL]])
        rows.append(bytes(row))
    header = f"P6\n{side} {side}\n255\n".encode("ascii")
    return header + b"".join(rows)


def main() -> None:
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    target = out / "m2_cell4.ppm"
    target.write_bytes(build())
    print(f"wrote {target} ({target.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
