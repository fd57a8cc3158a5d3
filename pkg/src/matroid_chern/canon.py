"""Canonical forms of set families and matroids under relabeling of points.

The expensive part, a branch-and-bound search over labelings, lives in a
compiled extension when one was built; otherwise a pure-Python search with
the same contract is used. ``KERNEL`` names the active implementation and
``MATROID_CHERN_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os
import struct
from typing import Sequence

from . import _canon_py
from .errors import TooLarge

try:
    if os.environ.get("MATROID_CHERN_PURE") == "1":
        raise ImportError
    from . import _canon_ext as _kernel
    KERNEL = "compiled"
except ImportError:
    _kernel = _canon_py
    KERNEL = "python"

DEFAULT_LIMIT = 10


def refine_colors(n: int, family: Sequence[int]) -> list[int]:
    """Relabeling-invariant point colors, refined until stable.

    Colors are ranks of sorted signatures, so isomorphic families get
    matching color classes in the same order.
    """
    fam = [f for f in family if f]
    through = [[f for f in fam if f >> p & 1] for p in range(n)]
    color = _rank_signatures([tuple(sorted(bin(f).count("1") for f in through[p]))
                              for p in range(n)])
    while True:
        sigs = []
        for p in range(n):
            inner = sorted(tuple(sorted(color[q] for q in range(n) if f >> q & 1))
                           for f in through[p])
            sigs.append((color[p], tuple(inner)))
        new = _rank_signatures(sigs)
        if len(set(new)) == len(set(color)):
            return new
        color = new


def _rank_signatures(sigs):
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def twin_predecessors(n: int, family: Sequence[int], color: Sequence[int]) -> list[int]:
    """For each point, its largest smaller-labeled twin, else -1.

    Points are twins when exchanging them maps the family onto itself.
    """
    fam = set(family)
    prev = [-1] * n
    for q in range(n):
        for p in range(q - 1, -1, -1):
            if color[p] == color[q] and _swaps_to_itself(fam, p, q):
                prev[q] = p
                break
    return prev


def _swaps_to_itself(fam, p, q):
    bp, bq = 1 << p, 1 << q
    for f in fam:
        hp, hq = f & bp, f & bq
        if bool(hp) != bool(hq):
            g = f ^ bp ^ bq
            if g not in fam:
                return False
    return True


def canonical_labeling(n: int, family: Sequence[int], kernel=None) -> list[int]:
    """Position assigned to each point by the canonical labeling."""
    if n > DEFAULT_LIMIT:
        raise TooLarge(f"canonical labeling is limited to n <= {DEFAULT_LIMIT}")
    family = sorted(set(family))
    color = refine_colors(n, family)
    prev = twin_predecessors(n, family, color)
    return (kernel or _kernel).search(n, family, color, prev)


def apply_labeling(mask: int, pos: Sequence[int]) -> int:
    out = 0
    p = 0
    while mask:
        if mask & 1:
            out |= 1 << pos[p]
        mask >>= 1
        p += 1
    return out


def canonical_family(n: int, family: Sequence[int], kernel=None) -> tuple[int, ...]:
    """The family relabeled canonically, as a sorted tuple of masks."""
    pos = canonical_labeling(n, family, kernel)
    return tuple(sorted(apply_labeling(f, pos) for f in set(family)))


def matroid_canonical_form(M, limit: int = DEFAULT_LIMIT, kernel=None) -> bytes:
    """Bytes equal for two matroids exactly when they differ by a relabeling."""
    if M.n > limit or M.n > DEFAULT_LIMIT:
        raise TooLarge(f"canonical form limited to n <= {min(limit, DEFAULT_LIMIT)}, got {M.n}")
    levels = M.flats_by_rank
    pos = canonical_labeling(M.n, M.flats, kernel)
    parts = [struct.pack(">BB", M.n, M.rank)]
    for level in levels:
        masks = sorted(apply_labeling(F, pos) for F in level)
        parts.append(struct.pack(f">H{len(masks)}H", len(masks), *masks))
    return b"".join(parts)
