"""Matroids stored through their lattice of flats.

Elements are the integers ``0..n-1`` and every subset is an ``int`` bitmask.
All flats are materialized when a matroid is built; rank and closure are
then answered by scanning the flats bottom-up.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidLinearSpace, NotAMatroid, UnsupportedOrder

Subset = int


def to_mask(S) -> Subset:
    """Accept a bitmask or an iterable of element indices."""
    if isinstance(S, int):
        return S
    mask = 0
    for i in S:
        mask |= 1 << i
    return mask


def members(mask: Subset) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: Subset) -> int:
    return bin(mask).count("1")


class Matroid:
    """An immutable matroid given by its flats grouped by rank.

    ``flats_by_rank[k]`` lists the rank-``k`` flats as bitmasks, sorted
    ascending. ``mapping`` records, for every element, the element of the
    parent matroid it came from when this matroid is a minor;
    ``element_labels`` keeps the original names of elements read from a file.
    """

    __slots__ = ("n", "rank", "flats_by_rank", "label", "mapping", "element_labels",
                 "_flat_rank", "_closure_cache", "_cache")

    def __init__(self, n: int, flats_by_rank: Sequence[Iterable[Subset]],
                 label: str | None = None, mapping: Sequence[int] | None = None,
                 validate: bool = True):
        self.n = n
        self.flats_by_rank = tuple(tuple(sorted(set(level))) for level in flats_by_rank)
        self.rank = len(self.flats_by_rank) - 1
        self.label = label
        self.mapping = tuple(mapping) if mapping is not None else tuple(range(n))
        self.element_labels = None
        self._flat_rank = {F: k for k, level in enumerate(self.flats_by_rank) for F in level}
        self._closure_cache: dict[int, int] = {}
        self._cache: dict = {}
        if validate:
            self._validate()

    # -- structure -------------------------------------------------------

    @property
    def ground(self) -> Subset:
        return (1 << self.n) - 1

    @property
    def flats(self) -> list[Subset]:
        return [F for level in self.flats_by_rank for F in level]

    def flat_rank(self, F: Subset) -> int:
        return self._flat_rank[F]

    def is_flat(self, S) -> bool:
        return to_mask(S) in self._flat_rank

    def proper_flats(self) -> list[Subset]:
        """Flats other than the bottom flat and the ground set."""
        return [F for level in self.flats_by_rank[1:-1] for F in level]

    def _validate(self):
        E = self.ground
        if self.rank < 0:
            raise NotAMatroid("no flats given")
        if len(self.flats_by_rank[0]) != 1:
            raise NotAMatroid("exactly one rank-0 flat required")
        if self.flats_by_rank[-1] != (E,):
            raise NotAMatroid("the only top-rank flat must be the ground set")
        if len(self._flat_rank) != sum(len(level) for level in self.flats_by_rank):
            raise NotAMatroid("a subset appears at two different ranks")
        for F in self._flat_rank:
            if F & ~E:
                raise NotAMatroid(f"flat {members(F)} leaves the ground set")
        for k, level in enumerate(self.flats_by_rank):
            for F, G in combinations(level, 2):
                if F & G == F or F & G == G:
                    raise NotAMatroid(f"rank-{k} flats {members(F)} and {members(G)} are nested")
        flats = self.flats
        for F in flats:
            for G in flats:
                if F & G not in self._flat_rank:
                    raise NotAMatroid("flats are not closed under intersection")
        for k, level in enumerate(self.flats_by_rank[:-1]):
            for F in level:
                covered = 0
                for G in self.flats_by_rank[k + 1]:
                    if G & F == F:
                        if (G & ~F) & covered:
                            raise NotAMatroid(f"covers of {members(F)} overlap")
                        covered |= G & ~F
                if covered != E & ~F:
                    raise NotAMatroid(f"covers of {members(F)} do not partition the rest")

    # -- rank and closure ------------------------------------------------

    def closure(self, S) -> Subset:
        """Smallest flat containing ``S``."""
        S = to_mask(S)
        cached = self._closure_cache.get(S)
        if cached is not None:
            return cached
        for level in self.flats_by_rank:
            for F in level:
                if S & F == S:
                    self._closure_cache[S] = F
                    return F
        raise InvalidInput(f"{members(S)} is not a subset of the ground set")

    def rank_of(self, S) -> int:
        return self._flat_rank[self.closure(S)]

    def loops(self) -> Subset:
        return self.flats_by_rank[0][0]

    def coloops(self) -> Subset:
        E = self.ground
        out = 0
        for i in range(self.n):
            if self.rank_of(E & ~(1 << i)) == self.rank - 1:
                out |= 1 << i
        return out

    def is_simple(self) -> bool:
        if self.loops():
            return False
        return self.rank == 0 or all(popcount(F) == 1 for F in self.flats_by_rank[1])

    def is_loopless(self) -> bool:
        return self.loops() == 0

    # -- minors ----------------------------------------------------------

    def restrict(self, T) -> "Matroid":
        T = to_mask(T) & self.ground
        keep = members(T)
        index = {e: j for j, e in enumerate(keep)}
        levels: dict[int, set[int]] = {}
        for F in self.flats:
            G = F & T
            r = self.rank_of(G)
            levels.setdefault(r, set()).add(_reindex(G, index))
        top = max(levels)
        return Matroid(len(keep), [levels.get(k, ()) for k in range(top + 1)],
                       mapping=[self.mapping[e] for e in keep], validate=False)

    def delete(self, X) -> "Matroid":
        """Standard deletion: the rank of ``U`` in ``M \\ X`` is ``r(U)``."""
        return self.restrict(self.ground & ~to_mask(X))

    def contract(self, X) -> "Matroid":
        X = to_mask(X) & self.ground
        clX = self.closure(X)
        rX = self._flat_rank[clX]
        rest = self.ground & ~X
        keep = members(rest)
        index = {e: j for j, e in enumerate(keep)}
        levels: list[list[int]] = [[] for _ in range(self.rank - rX + 1)]
        for F in self.flats:
            if F & clX == clX:
                levels[self._flat_rank[F] - rX].append(_reindex(F & rest, index))
        return Matroid(len(keep), levels, mapping=[self.mapping[e] for e in keep],
                       validate=False)

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Matroid whose element ``perm[i]`` plays the role of element ``i``."""
        return Matroid(self.n, [[_permute(F, perm) for F in level]
                                for level in self.flats_by_rank],
                       label=self.label, validate=False)

    # -- derived data ----------------------------------------------------

    def bases(self) -> list[Subset]:
        r = self.rank
        return [to_mask(c) for c in combinations(range(self.n), r)
                if self.rank_of(to_mask(c)) == r]

    def lattice(self):
        L = self._cache.get("lattice")
        if L is None:
            from .lattice import FlatLattice
            L = self._cache["lattice"] = FlatLattice(self)
        return L

    def canonical_form(self, limit: int = 10) -> bytes:
        from .canon import matroid_canonical_form
        return matroid_canonical_form(self, limit)

    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.n == other.n
                and self.flats_by_rank == other.flats_by_rank)

    def __hash__(self):
        return hash((self.n, self.flats_by_rank))

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"<Matroid{name} n={self.n} rank={self.rank} flats={len(self._flat_rank)}>"


def _reindex(mask: Subset, index: dict[int, int]) -> Subset:
    out = 0
    for e in members(mask):
        out |= 1 << index[e]
    return out


def _permute(mask: Subset, perm: Sequence[int]) -> Subset:
    out = 0
    for e in members(mask):
        out |= 1 << perm[e]
    return out


# -- constructors ------------------------------------------------------------


def from_rank2_flats(n: int, big_flats: Iterable, label: str | None = None) -> Matroid:
    """Simple rank-3 matroid whose lines of three or more points are ``big_flats``.

    Every pair of points not inside a listed line becomes a two-point line.
    """
    if n < 3:
        raise InvalidInput("a simple rank-3 matroid needs at least 3 elements")
    E = (1 << n) - 1
    lines = []
    for raw in big_flats:
        L = to_mask(raw)
        if L & ~E:
            raise InvalidInput(f"line {members(L)} uses elements outside 0..{n - 1}")
        if popcount(L) < 3:
            raise InvalidInput(f"line {members(L)} has fewer than 3 points")
        if L == E:
            raise InvalidInput("all points on one line: rank would drop to 2")
        lines.append(L)
    if len(set(lines)) != len(lines):
        raise InvalidLinearSpace("a line is listed twice")
    for L1, L2 in combinations(lines, 2):
        if popcount(L1 & L2) >= 2:
            raise InvalidLinearSpace(
                f"lines {members(L1)} and {members(L2)} share {popcount(L1 & L2)} points")
    covered = set()
    for L in lines:
        for a, b in combinations(members(L), 2):
            covered.add((a, b))
    pairs = [(1 << a) | (1 << b) for a, b in combinations(range(n), 2) if (a, b) not in covered]
    points = [1 << i for i in range(n)]
    return Matroid(n, [[0], points, lines + pairs, [E]], label=label, validate=False)


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: every subset of size below ``r`` is a flat."""
    if not 0 <= r <= n:
        raise InvalidInput(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    levels = [[to_mask(c) for c in combinations(range(n), k)] for k in range(r)]
    levels.append([(1 << n) - 1])
    return Matroid(n, levels, label=f"U_{{{r},{n}}}", validate=False)


def from_bases(n: int, bases: Iterable, label: str | None = None) -> Matroid:
    """Matroid from its bases; the exchange axiom is checked on every pair."""
    B = sorted({to_mask(b) for b in bases})
    if not B:
        raise NotAMatroid("a matroid has at least one basis")
    E = (1 << n) - 1
    r = popcount(B[0])
    if any(popcount(b) != r or b & ~E for b in B):
        raise NotAMatroid("bases must all have the same size and lie in the ground set")
    basis_set = set(B)
    for b1 in B:
        for b2 in B:
            for x in members(b1 & ~b2):
                if not any((b1 & ~(1 << x)) | (1 << y) in basis_set for y in members(b2 & ~b1)):
                    raise NotAMatroid(
                        f"exchange fails for {members(b1)}, {members(b2)} at element {x}")

    rank_cache: dict[int, int] = {}

    def rk(S):
        v = rank_cache.get(S)
        if v is None:
            v = max(popcount(S & b) for b in B)
            rank_cache[S] = v
        return v

    def close(S):
        rS = rk(S)
        for e in range(n):
            if not S >> e & 1 and rk(S | 1 << e) == rS:
                S |= 1 << e
        return S

    bottom = close(0)
    levels = [{bottom}]
    frontier = {bottom}
    for _ in range(r):
        nxt = set()
        for F in frontier:
            rest = E & ~F
            while rest:
                e = rest & -rest
                G = close(F | e)
                nxt.add(G)
                rest &= ~G
        levels.append(nxt)
        frontier = nxt
    return Matroid(n, levels, label=label, validate=False)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


# Irreducible polynomials over GF(p), coefficients from the constant term up.
_EXTENSIONS = {4: (2, (1, 1, 1)), 8: (2, (1, 1, 0, 1)), 9: (3, (1, 0, 1))}


def field_tables(q: int) -> tuple[list[list[int]], list[list[int]]]:
    """Addition and multiplication tables of GF(q), elements ``0..q-1``.

    For ``q = p^k`` an element encodes the coefficients of a polynomial of
    degree below ``k`` in base ``p``, least significant digit first.
    """
    if _is_prime(q):
        return ([[(a + b) % q for b in range(q)] for a in range(q)],
                [[(a * b) % q for b in range(q)] for a in range(q)])
    if q not in _EXTENSIONS:
        raise UnsupportedOrder(f"no built-in field of order {q}")
    p, poly = _EXTENSIONS[q]
    k = len(poly) - 1

    def digits(a):
        return [(a // p ** i) % p for i in range(k)]

    def number(ds):
        return sum(d * p ** i for i, d in enumerate(ds))

    def mul(a, b):
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(digits(a)):
            for j, y in enumerate(digits(b)):
                prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(k + 1):
                    prod[deg - k + i] = (prod[deg - k + i] - c * poly[i]) % p
        return number(prod[:k])

    add = [[number([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(q)]
           for a in range(q)]
    return add, [[mul(a, b) for b in range(q)] for a in range(q)]


def pg2(q: int) -> Matroid:
    """The projective plane PG(2, q) as a simple rank-3 matroid."""
    if q < 2 or not (_is_prime(q) or q in _EXTENSIONS):
        raise UnsupportedOrder(f"PG(2,{q}) is only built for prime q or q in {{4, 8, 9}}")
    add, mul = field_tables(q)
    points = ([(1, a, b) for a in range(q) for b in range(q)]
              + [(0, 1, b) for b in range(q)] + [(0, 0, 1)])

    def dot(u, v):
        s = 0
        for x, y in zip(u, v):
            s = add[s][mul[x][y]]
        return s

    lines = []
    for a in points:
        lines.append(to_mask(i for i, x in enumerate(points) if dot(a, x) == 0))
    return from_rank2_flats(len(points), lines, label=f"PG(2,{q})")
