"""Reference tables: replacement block bounds and rates at ``ell = 4``."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import List

from .constrained import ENUM, REPLACE, ConstrainedParams, finite_rate
from .rll_replace import max_block_len

# bounds achieved by an earlier replacement scheme, for comparison
REFERENCE_PRIOR_BOUND = {2: 11, 3: 39, 4: 148, 5: 581}
# published values; the rate column follows a different redundancy budget
REFERENCE_CAPACITY = {100: 1.99542, 200: 1.99578, 300: 1.99577}
REFERENCE_RATE = {100: 1.81, 200: 1.92, 300: 1.94}

RATE_EPS = Fraction(1, 10)
RATE_ELL = 4


def block_bound_rows() -> List[dict]:
    return [
        {
            "ell": ell,
            "bound": max_block_len(ell, 4),
            "multi_bound": max_block_len(ell, 4, "multi"),
            "reference_prior": REFERENCE_PRIOR_BOUND[ell],
        }
        for ell in range(2, 6)
    ]


def rate_rows() -> List[dict]:
    rows = []
    for n in (100, 200, 300):
        rep = ConstrainedParams(n, RATE_ELL, RATE_EPS, REPLACE)
        enu = ConstrainedParams(n, RATE_ELL, RATE_EPS, ENUM)
        rows.append(
            {
                "n": n,
                "capacity": round(finite_rate(n, RATE_ELL, 4), 5),
                "reference_capacity": REFERENCE_CAPACITY[n],
                "rate_replace": round(rep.rate, 5),
                "rate_enum": round(enu.rate, 5),
                "reference_rate": REFERENCE_RATE[n],
            }
        )
    return rows


def _text(rows: List[dict]) -> str:
    keys = list(rows[0])
    cells = [[str(k) for k in keys]] + [[str(r[k]) for k in keys] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(keys))]
    return "\n".join("  ".join(c[i].rjust(widths[i]) for i in range(len(keys))) for c in cells)


def _csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render(as_csv: bool = False) -> str:
    fmt = _csv if as_csv else _text
    return "\n".join(
        [
            "# replacement block length bounds (q=4)",
            fmt(block_bound_rows()),
            "",
            f"# rates in bits/nt (ell={RATE_ELL}, eps={RATE_EPS})",
            fmt(rate_rows()),
        ]
    )
