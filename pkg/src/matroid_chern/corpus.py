"""Named matroids used by the CLI, the table and the tests."""

from __future__ import annotations

import re

from .errors import InvalidInput
from .matroid import Matroid, from_rank2_flats, pg2, uniform

FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]

# Points 0-2 and 3-5 on two lines; 6, 7, 8 are the three cross intersections.
PAPPUS_LINES = [(0, 1, 2), (3, 4, 5), (0, 4, 6), (1, 3, 6), (0, 5, 7), (2, 3, 7),
                (1, 5, 8), (2, 4, 8), (6, 7, 8)]

# Edges of K4: 0=ab 1=ac 2=ad 3=bc 4=bd 5=cd; lines are the triangles.
BRAID_LINES = [(0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)]


def fano() -> Matroid:
    return from_rank2_flats(7, FANO_LINES, label="fano")


def nonfano() -> Matroid:
    return from_rank2_flats(7, FANO_LINES[:-1], label="nonfano")


def pappus() -> Matroid:
    return from_rank2_flats(9, PAPPUS_LINES, label="pappus")


def nonpappus() -> Matroid:
    return from_rank2_flats(9, PAPPUS_LINES[:-1], label="nonpappus")


def braid() -> Matroid:
    return from_rank2_flats(6, BRAID_LINES, label="braid")


_FIXED = {"fano": fano, "nonfano": nonfano, "pappus": pappus,
          "nonpappus": nonpappus, "braid": braid}

BUILTIN_NAMES = sorted(_FIXED) + ["pg2-<q>", "u-<r>-<n>"]


def builtin(name: str) -> Matroid:
    """Look up ``fano``, ``nonfano``, ``pappus``, ``nonpappus``, ``braid``,
    ``pg2-Q`` or ``u-R-N``."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"pg2-(\d+)", key)
    if m:
        return pg2(int(m.group(1)))
    m = re.fullmatch(r"u-(\d+)-(\d+)", key)
    if m:
        return uniform(int(m.group(1)), int(m.group(2)))
    raise InvalidInput(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


# Rows of the rank-3 reference table: display name and builtin key.
TABLE_ROWS = [
    ("U_{3,3}", "u-3-3"), ("U_{3,4}", "u-3-4"), ("U_{3,5}", "u-3-5"),
    ("U_{3,7}", "u-3-7"), ("U_{3,9}", "u-3-9"),
    ("PG(2,2)", "pg2-2"), ("PG(2,4)", "pg2-4"), ("PG(2,8)", "pg2-8"), ("PG(2,9)", "pg2-9"),
    ("non-Fano", "nonfano"), ("Pappus", "pappus"), ("non-Pappus", "nonpappus"),
    ("Braid", "braid"),
]
