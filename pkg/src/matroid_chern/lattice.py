"""Lattice of flats, Möbius function, characteristic polynomial, beta invariant."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .errors import InvalidInput, LoopError, RankError
from .matroid import Matroid, popcount


class FlatLattice:
    """Flats of a matroid indexed bottom-up, with covers and Möbius values."""

    def __init__(self, M: Matroid):
        self.matroid = M
        self.flats = M.flats
        self.index = {F: i for i, F in enumerate(self.flats)}
        self.ranks = [M.flat_rank(F) for F in self.flats]
        self.covers = [[] for _ in self.flats]
        by_rank = M.flats_by_rank
        for i, F in enumerate(self.flats):
            r = self.ranks[i]
            if r + 1 < len(by_rank):
                self.covers[i] = [self.index[G] for G in by_rank[r + 1] if G & F == F]
        self._rows: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.flats)

    @property
    def bottom(self) -> int:
        return self.flats[0]

    @property
    def top(self) -> int:
        return self.flats[-1]

    def mobius_row(self, F: int) -> dict[int, int]:
        """``{G: mu(F, G)}`` for every flat ``G`` containing ``F``."""
        row = self._rows.get(F)
        if row is not None:
            return row
        row = {F: 1}
        above = [G for G in self.flats if G & F == F and G != F]
        # self.flats is ordered by rank, so every G' below G is finished first
        for G in above:
            row[G] = -sum(v for H, v in row.items() if H & G == H)
        self._rows[F] = row
        return row

    def mobius(self, F: int, G: int) -> int:
        if F & G != F:
            return 0
        return self.mobius_row(F)[G]

    @property
    def mobius_from_bottom(self) -> list[int]:
        row = self.mobius_row(self.bottom)
        return [row[F] for F in self.flats]


def mobius(L: FlatLattice, F: int, G: int) -> int:
    return L.mobius(F, G)


@dataclass(frozen=True)
class CharPoly:
    """Integer polynomial, coefficients from the leading term down."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        v = 0
        for c in self.coefficients:
            v = v * x + c
        return v

    def reduced(self) -> "CharPoly":
        """Quotient by ``lambda - 1``; the division must be exact."""
        out = []
        acc = 0
        for c in self.coefficients:
            acc = acc + c
            out.append(acc)
        if out[-1] != 0:
            raise ValueError("polynomial does not vanish at 1")
        return CharPoly(tuple(out[:-1]))


def char_poly(M: Matroid) -> CharPoly:
    if not M.is_loopless():
        raise LoopError("characteristic polynomial requested for a matroid with loops")
    L = M.lattice()
    coeffs = [0] * (M.rank + 1)
    for F, mu in L.mobius_row(L.bottom).items():
        coeffs[M.flat_rank(F)] += mu
    return CharPoly(tuple(coeffs))


def beta(M: Matroid) -> int:
    if not M.is_loopless():
        raise LoopError("beta invariant requested for a matroid with loops")
    if M.n == 0:
        raise InvalidInput("beta invariant needs a nonempty ground set")
    return (-1) ** (M.rank - 1) * char_poly(M).reduced()(1)


def beta_interval(L: FlatLattice, F: int, G: int) -> int:
    """Beta invariant of the minor whose lattice is the interval ``[F, G]``.

    Uses ``beta = (-1)^(rho-1) * sum_H mu(F, H) * (r(G) - r(H))``, the
    derivative of the characteristic polynomial at 1.
    """
    M = L.matroid
    rG = M.flat_rank(G)
    rho = rG - M.flat_rank(F)
    if rho <= 0:
        raise InvalidInput("interval must have positive length")
    total = 0
    for H, mu in L.mobius_row(F).items():
        if H & G == H:
            total += mu * (rG - M.flat_rank(H))
    return (-1) ** (rho - 1) * total


@dataclass(frozen=True)
class RankTwoProfile:
    """Point count and histogram ``t[m]`` of rank-2 flat sizes of a simple rank-3 matroid."""

    n: int
    t: dict = field(hash=False)

    def __post_init__(self):
        clean = {m: c for m, c in sorted(self.t.items()) if c}
        if any(m < 2 or c < 0 for m, c in clean.items()):
            raise InvalidInput(f"invalid line histogram {self.t}")
        if sum(comb(m, 2) * c for m, c in clean.items()) != comb(self.n, 2):
            raise InvalidInput(
                f"histogram {clean} does not cover the {comb(self.n, 2)} point pairs once")
        object.__setattr__(self, "t", clean)

    def __hash__(self):
        return hash((self.n, tuple(self.t.items())))

    def items(self):
        return self.t.items()

    @property
    def lines(self) -> int:
        return sum(self.t.values())


def rank2_profile(M: Matroid) -> RankTwoProfile:
    if M.rank != 3:
        raise RankError(f"rank-2 profile needs a rank-3 matroid, got rank {M.rank}")
    if not M.is_simple():
        raise RankError("rank-2 profile needs a simple matroid")
    return RankTwoProfile(M.n, dict(Counter(popcount(F) for F in M.flats_by_rank[2])))
