"""Frozen parameter tables for the `table` CLI subcommand.

Rows are literal data: the construction parameters, the resulting
[[n, k, d]]_q triple, the existence-bound flag, and the static literature
comparison for that row.  The CLI recomputes k, the defect, and the flag
from the parameters and exits nonzero on any mismatch with these values.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRow:
    q: int
    lam: int
    tau: int
    rho: int
    sigma: int
    n_y: int
    d: int
    n: int
    k: int
    beats_qgv: bool
    comment: str = ""


def _rows(q, lam, tau, rho, sigma, n_y, triples):
    return tuple(
        TableRow(q, lam, tau, rho, sigma, n_y, d, n, k, beats, comment)
        for (d, n, k, beats, comment) in triples
    )


TABLE2 = _rows(8, 7, 3, 9, 2, 2, [
    (2, 84, 82, True, "Matches codetables.de"),
    (3, 84, 78, False, "Matches codetables.de"),
    (4, 84, 76, True, "Matches codetables.de"),
    (5, 84, 72, True, "Matches codetables.de"),
    (6, 84, 70, True, "Matches codetables.de"),
    (7, 84, 66, True, "Beats [[84,66,6]]_8 from codetables.de"),
    (8, 84, 64, True, "Beats [[84,64,7]]_8 from codetables.de"),
    (9, 84, 60, True, "Beats [[84,60,8]]_8 from codetables.de"),
    (10, 84, 58, True, "Beats [[84,58,8]]_8 from codetables.de"),
])

TABLE3 = _rows(11, 5, 6, 12, 2, 3, [
    (2, 180, 178, True, "MDS"),
    (3, 180, 174, True, "Singleton defect is 2"),
    (5, 180, 166, False, "Beats [[180,164,5]]_11 in [barbero24]"),
    (6, 180, 164, True, "Best known"),
])

TABLE4 = _rows(7, 3, 4, 8, 2, 3, [
    (2, 72, 70, True, "Matches codetables.de"),
    (3, 72, 66, True, "Matches codetables.de"),
    (4, 72, 62, False, "Matches codetables.de"),
    (5, 72, 58, False, "Matches codetables.de"),
    (6, 72, 56, True, "Matches codetables.de"),
])

TABLE_Q8 = _rows(8, 7, 3, 9, 3, 2, [
    (2, 126, 124, True, "Beats [[127,113,3]]_8 in yvesedel.de"),
    (3, 126, 120, True, "Beats [[127,113,3]]_8 in yvesedel.de"),
    (4, 126, 118, True, "Beats [[127,113,3]]_8 in yvesedel.de"),
    (5, 126, 114, True, "Beats [[127,106,5]]_8 in yvesedel.de"),
    (6, 126, 112, True, "Beats [[127,106,5]]_8 in yvesedel.de"),
    (7, 126, 108, True, "Beats [[128,98,7]]_8 in yvesedel.de"),
    (8, 126, 106, True, "Beats [[127,106,5]]_8 in yvesedel.de"),
    (9, 126, 102, True, "Beats [[127,106,5]]_8 in yvesedel.de"),
    (10, 126, 100, True, "Beats [[127,78,10]]_8 in yvesedel.de"),
]) + _rows(8, 7, 3, 9, 3, 3, [
    (2, 189, 187, True, "Beats [[189,177,3]]_8 in yvesedel.de"),
    (3, 189, 183, True, "Beats [[189,177,3]]_8 in yvesedel.de"),
    (4, 189, 179, True, "Beats [[189,175,4]]_8 in yvesedel.de"),
    (5, 189, 175, True, "Beats [[189,171,5]]_8 in yvesedel.de"),
    (6, 189, 173, True, "Beats [[189,171,5]]_8 in yvesedel.de"),
    (7, 189, 167, False, "Beats [[189,161,7]]_8 in yvesedel.de"),
    (8, 189, 165, True, "Beats [[189,157,7]]_8 in yvesedel.de"),
    (9, 189, 161, True, "Beats [[189,151,9]]_8 in yvesedel.de"),
    (10, 189, 157, True, "Beats [[189,157,7]]_8 in yvesedel.de"),
    (11, 189, 153, False, "Beats [[189,145,9]]_8 in yvesedel.de"),
    (12, 189, 151, True, "Beats [[189,137,12]]_8 in yvesedel.de"),
])

_TABLE5_K = (
    2044, 2040, 2038, 2034, 2032, 2028, 2026, 2022, 2020, 2016,
    2014, 2010, 2008, 2004, 2002, 1998, 1996, 1992, 1990, 1986,
    1984, 1980, 1978, 1974, 1972, 1968, 1966, 1962, 1960, 1956,
    1954, 1950, 1948, 1944, 1942, 1938, 1936, 1932, 1930, 1926,
    1924,
)

TABLE5 = _rows(32, 31, 11, 33, 3, 2, [
    (d, 2046, k, True, "") for d, k in zip(range(2, 43), _TABLE5_K)
])

COMPARISONS = (
    TableRow(7, 3, 4, 8, 2, 3, 5, 72, 58, False, "Beats [[72,56,5]]_7 in [barbero24]"),
    TableRow(7, 3, 2, 8, 4, 3, 6, 72, 56, True, "Beats [[72,56,5]]_7 in [barbero24]"),
    TableRow(7, 3, 2, 8, 3, 3, 2, 54, 52, True,
             "Matches codetables.de, beats [[55,51,2]]_7 in [Tian2024]"),
    TableRow(7, 3, 4, 8, 2, 4, 3, 96, 90, True, "Beats [[98,82,3]]_7 in [Tian2024]"),
    TableRow(7, 3, 4, 8, 2, 4, 4, 96, 86, True, "Beats [[98,82,3]]_7 in [Tian2024]"),
    TableRow(7, 3, 2, 8, 3, 6, 3, 108, 102, True, "Beats [[116,100,3]]_7 in [Tian2024]"),
    TableRow(11, 5, 4, 3, 3, 3, 5, 180, 166, False, "Beats [[180,164,5]]_11 in [barbero24]"),
    TableRow(13, 3, 2, 7, 4, 2, 3, 48, 42, False, "Beats [[52,42,3]]_13 in [Zhang2023]"),
    TableRow(23, 11, 2, 4, 2, 2, 3, 88, 82, False, "Beats [[92,82,3]]_23 in [Zhang2023]"),
)

PRESETS: dict[str, tuple[TableRow, ...]] = {
    "table2": TABLE2,
    "table3": TABLE3,
    "table4": TABLE4,
    "table5": TABLE5,
    "tableq8": TABLE_Q8,
    "comparisons": COMPARISONS,
}
