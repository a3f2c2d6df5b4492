"""The recursion for the numbers N_d of rational plane curves of degree d
through 3d - 1 general points.

Starting from N_1 = 1,

    N_d = sum over d1 + d2 = d, d1, d2 > 0 of
          (d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1)) N_{d1} N_{d2},

with both ordered splits (d1, d2) and (d2, d1) contributing.  Everything is
exact big-integer arithmetic; this table is the independent oracle for the
enumerative counts.
"""

from __future__ import annotations

from math import comb


def kontsevich(d_max: int) -> dict[int, int]:
    """Table {1: 1, 2: 1, 3: 12, 4: 620, ...} up to d_max."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    table = {1: 1}
    for d in range(2, d_max + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            total += (
                d1 * d1 * d2 * d2 * comb(3 * d - 4, 3 * d1 - 2)
                - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
            ) * table[d1] * table[d2]
        table[d] = total
    return table
