"""Bergman fan chains, CSM cycle weights and the balancing condition.

A cone of the Bergman fan is a chain of proper nonempty flats, stored as a
tuple of bitmasks in increasing order. Rays ``u_F`` live in
``Z^E / Z(1,...,1)``; a vector is represented by its unique lift whose last
coordinate is zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import DimensionError, InvalidInput, LoopError
from .lattice import beta_interval
from .linalg import span_coordinates
from .matroid import Matroid, members

Chain = tuple


def canonical_vector(coords) -> tuple:
    """Representative modulo the all-ones vector with the last entry pinned to 0."""
    last = coords[-1]
    return tuple(c - last for c in coords)


def ray(M: Matroid, S: int) -> tuple:
    """Canonical coordinates of ``u_S``."""
    return canonical_vector([(S >> i) & 1 for i in range(M.n)])


class BergmanFan:
    """Chains of proper flats of a loopless matroid, cached per matroid."""

    def __init__(self, M: Matroid):
        self.matroid = M
        self.d = M.rank - 1
        self.proper = M.proper_flats()
        self.above = {F: [G for G in self.proper if G & F == F and G != F]
                      for F in self.proper}
        self._chains: dict[int, list[Chain]] = {}
        self._beta: dict[tuple[int, int], int] = {}

    @classmethod
    def of(cls, M: Matroid) -> "BergmanFan":
        fan = M._cache.get("fan")
        if fan is None:
            fan = M._cache["fan"] = cls(M)
        return fan

    def chains(self, k: int) -> list[Chain]:
        if not 0 <= k <= max(self.d, 0):
            raise InvalidInput(f"chain length {k} outside 0..{self.d}")
        out = self._chains.get(k)
        if out is None:
            out = sorted(self._walk(k, (), self.proper), key=_chain_key)
            self._chains[k] = out
        return out

    def _walk(self, k: int, prefix: Chain, candidates) -> Iterator[Chain]:
        if len(prefix) == k:
            yield prefix
            return
        for F in candidates:
            yield from self._walk(k, prefix + (F,), self.above[F])

    def beta_step(self, F: int, G: int) -> int:
        key = (F, G)
        b = self._beta.get(key)
        if b is None:
            b = self._beta[key] = beta_interval(self.matroid.lattice(), F, G)
        return b


def _chain_key(chain: Chain):
    return tuple((bin(F).count("1"), F) for F in chain)


def chains(M: Matroid, k: int) -> list[Chain]:
    """All strictly increasing length-``k`` chains of proper nonempty flats."""
    return BergmanFan.of(M).chains(k)


def _require_loopless(M: Matroid):
    if not M.is_loopless():
        raise LoopError("CSM cycles are defined for loopless matroids only")


def csm_weight(M: Matroid, chain: Chain) -> int:
    _require_loopless(M)
    fan = BergmanFan.of(M)
    k = len(chain)
    for F in chain:
        if not M.is_flat(F) or F == 0 or F == M.ground:
            raise InvalidInput(f"{members(F)} is not a proper nonempty flat")
    w = (-1) ** (fan.d - k)
    steps = (0,) + tuple(chain) + (M.ground,)
    for lo, hi in zip(steps, steps[1:]):
        if lo & hi != lo or lo == hi:
            raise InvalidInput("chain is not strictly increasing")
        w *= fan.beta_step(lo, hi)
        if not w:
            return 0
    return w


@dataclass
class MinkowskiWeight:
    """Weights on the ``dim``-dimensional cones; zero weights are omitted."""

    matroid: Matroid
    dim: int
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        self.weights = {c: v for c, v in self.weights.items() if v}

    def __getitem__(self, chain: Chain):
        return self.weights.get(tuple(chain), 0)

    def __eq__(self, other):
        return (isinstance(other, MinkowskiWeight) and self.dim == other.dim
                and self.matroid is other.matroid and self.weights == other.weights)

    def scaled(self, c) -> "MinkowskiWeight":
        return MinkowskiWeight(self.matroid, self.dim, {k: c * v for k, v in self.weights.items()})

    def __add__(self, other: "MinkowskiWeight") -> "MinkowskiWeight":
        if self.dim != other.dim:
            raise DimensionError("cannot add weights of different dimensions")
        out = dict(self.weights)
        for k, v in other.weights.items():
            out[k] = out.get(k, 0) + v
        return MinkowskiWeight(self.matroid, self.dim, out)

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.weights.values())

    def to_json(self) -> dict:
        return {"k": self.dim,
                "weights": [{"chain": [members(F) for F in chain], "w": int(v)}
                            for chain, v in sorted(self.weights.items(),
                                                   key=lambda kv: _chain_key(kv[0]))]}


def csm_cycle(M: Matroid, k: int) -> MinkowskiWeight:
    _require_loopless(M)
    fan = BergmanFan.of(M)
    return MinkowskiWeight(M, k, {c: csm_weight(M, c) for c in fan.chains(k)})


def fundamental_class(M: Matroid) -> MinkowskiWeight:
    """Weight 1 on every maximal cone."""
    fan = BergmanFan.of(M)
    return MinkowskiWeight(M, fan.d, {c: 1 for c in fan.chains(fan.d)})


def facet_sums(W: MinkowskiWeight) -> dict:
    """For each codimension-one face ``tau``: ``sum omega(sigma) u_{sigma - tau}``.

    Returns ``{tau: (vector, [(flat, weight), ...])}`` over the faces of the support.
    """
    M = W.matroid
    out: dict = {}
    for sigma, w in W.weights.items():
        for i, G in enumerate(sigma):
            tau = sigma[:i] + sigma[i + 1:]
            entry = out.get(tau)
            if entry is None:
                entry = out[tau] = [[0] * M.n, []]
            vec = entry[0]
            for e in members(G):
                vec[e] += w
            entry[1].append((G, w))
    return {tau: (canonical_vector(vec), terms) for tau, (vec, terms) in out.items()}


def check_balanced(W: MinkowskiWeight) -> bool:
    """Balancing test by exact elimination in ``N (x) Q`` for every face."""
    if W.dim == 0:
        return True
    M = W.matroid
    for tau, (vec, _) in facet_sums(W).items():
        if span_coordinates([ray(M, F) for F in tau], vec) is None:
            return False
    return True


def vertex_weight(W: MinkowskiWeight):
    if W.dim != 0:
        raise DimensionError(f"vertex weight needs a 0-dimensional weight, got dim {W.dim}")
    return W.weights.get((), 0)
