"""Enumeration of simple rank-3 matroids and the geography of their Chern pairs.

A simple rank-3 matroid is a linear space: a family of lines with at least
three points, any two meeting in at most one point. Families are grown one
line at a time; after every extension only the canonical representative of
each isomorphism class is kept.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .analysis import ChernPair, chern_rank3
from .canon import canonical_family
from .errors import TooLarge
from .lattice import rank2_profile
from .matroid import Matroid, from_rank2_flats, members

DEFAULT_CAP = 8
HARD_CAP = 9


def enumeration_cap(allow_nine: bool = False) -> int:
    cap = DEFAULT_CAP
    env = os.environ.get("MATROID_ENUM_CAP")
    if env:
        cap = int(env)
    if allow_nine:
        cap = max(cap, HARD_CAP)
    return min(cap, HARD_CAP)


def _candidate_lines(n: int) -> list[int]:
    return [sum(1 << i for i in c) for k in range(3, n) for c in combinations(range(n), k)]


def _extensions(n: int, family: tuple, candidates: list[int]) -> set:
    out = set()
    for L in candidates:
        if L in family:
            continue
        if all(bin(L & f).count("1") <= 1 for f in family):
            out.add(canonical_family(n, family + (L,)))
    return out


@lru_cache(maxsize=None)
def _linear_spaces(n: int, threads: int) -> tuple:
    candidates = _candidate_lines(n)
    level = [canonical_family(n, ())]
    found = list(level)
    while level:
        if threads > 1:
            with ThreadPoolExecutor(threads) as pool:
                parts = list(pool.map(lambda fam: _extensions(n, fam, candidates), level))
        else:
            parts = [_extensions(n, fam, candidates) for fam in level]
        level = sorted(set().union(*parts))
        found.extend(level)
    return tuple(sorted(found, key=lambda fam: (len(fam), fam)))


def linear_spaces(n: int, allow_nine: bool = False, threads: int = 1) -> tuple:
    """Canonical line families of every simple rank-3 matroid on ``n`` points."""
    if n < 3:
        raise TooLarge(f"rank-3 enumeration needs n >= 3, got {n}")
    cap = enumeration_cap(allow_nine)
    if n > cap:
        raise TooLarge(f"enumeration is capped at n <= {cap} "
                       f"(n = 9 needs allow_nine or MATROID_ENUM_CAP=9)")
    return _linear_spaces(n, max(1, threads))


def enumerate_rank3(n: int, allow_nine: bool = False, threads: int = 1) -> list[Matroid]:
    return [from_rank2_flats(n, fam) for fam in linear_spaces(n, allow_nine, threads)]


def encode_lines(family) -> str:
    """Compact text form of a line family, e.g. ``0.1.2|0.3.4``; ``-`` when empty."""
    return "|".join(".".join(map(str, members(L))) for L in family) or "-"


@dataclass(frozen=True)
class GeographyRecord:
    n: int
    pair: ChernPair
    witness: str
    count: int


def geography(n: int, coloop_free: bool = False, allow_nine: bool = False,
              threads: int = 1) -> list[GeographyRecord]:
    """Achieved ``(c1^2, c2)`` pairs, sorted, with class counts and one witness each."""
    groups: dict[ChernPair, list] = {}
    for fam in linear_spaces(n, allow_nine, threads):
        M = from_rank2_flats(n, fam)
        if coloop_free and M.coloops():
            continue
        pair = chern_rank3(rank2_profile(M))
        groups.setdefault(pair, []).append(fam)
    return [GeographyRecord(n, pair, encode_lines(min(fams)), len(fams))
            for pair, fams in sorted(groups.items())]


def geography_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "c1sq", "c2", "classes", "witness"])
    for r in records:
        writer.writerow([r.n, r.pair.c1sq, r.pair.c2, r.count, r.witness])
    return buf.getvalue()
