"""Intersection products of CSM cycles and Chern numbers.

Products are realized through piecewise linear functions on the Bergman
fan. Each CSM cycle is lifted to a rational combination of chain-supported
monomials ``phi_{F1} ... phi_{Fj}`` that, applied as successive divisors to
the fundamental class, reproduces it; applying the same combination to
another cycle computes the product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bergman import BergmanFan, MinkowskiWeight, csm_cycle, facet_sums, fundamental_class, vertex_weight
from .errors import BalancingViolation, InvalidExponents, InvalidFlat, LiftFailure, LoopError
from .linalg import SparseSystem
from .matroid import Matroid, members


@dataclass
class PLFunction:
    """Value at each ray ``u_F``; linear on every cone of the fan."""

    values: dict = field(default_factory=dict)

    def at_ray(self, F: int):
        return self.values.get(F, 0)

    def at_point(self, coords: dict):
        """Value at ``sum_F coords[F] u_F`` for flats forming one cone."""
        return sum(a * self.values.get(F, 0) for F, a in coords.items())


def basis_pl(M: Matroid, F: int) -> PLFunction:
    if F == 0 or F == M.ground or not M.is_flat(F):
        raise InvalidFlat(f"{members(F)} is not a proper nonempty flat")
    return PLFunction({F: 1})


def ray_coordinates(M: Matroid, tau: tuple, vec: Sequence) -> dict | None:
    """Coefficients of ``vec`` in the rays of the chain ``tau``, or ``None``.

    In ``Z^E / Z1`` the span of ``u_F1, ..., u_Fj`` for a chain consists of
    the vectors constant on each layer ``F_i - F_{i-1}`` and on ``E - F_j``.
    """
    prev = 0
    values = []
    for F in tau + (M.ground,):
        idx = members(F & ~prev)
        v = vec[idx[0]]
        for i in idx:
            if vec[i] != v:
                return None
        values.append(v)
        prev = F
    return {F: values[i] - values[i + 1] for i, F in enumerate(tau) if values[i] != values[i + 1]}


class _Faces:
    """Codimension-one data of a weight, arranged for fast divisor application.

    ``contrib[F]`` lists ``(tau, c)`` so that a function with value ``x`` at
    ``u_F`` contributes ``c * x`` to the weight of ``tau``.
    """

    def __init__(self, W: MinkowskiWeight):
        self.W = W
        M = W.matroid
        contrib: dict[int, dict] = {}
        for tau, (vec, terms) in facet_sums(W).items():
            coords = ray_coordinates(M, tau, vec)
            if coords is None:
                raise BalancingViolation(f"weight is not balanced at face "
                                         f"{[members(F) for F in tau]}")
            for G, w in terms:
                slot = contrib.setdefault(G, {})
                slot[tau] = slot.get(tau, 0) + w
            for F, a in coords.items():
                slot = contrib.setdefault(F, {})
                slot[tau] = slot.get(tau, 0) - a
        self.contrib = contrib

    def apply(self, phi: PLFunction) -> MinkowskiWeight:
        out: dict = {}
        for F, x in phi.values.items():
            if not x:
                continue
            for tau, c in self.contrib.get(F, {}).items():
                out[tau] = out.get(tau, 0) + c * x
        return MinkowskiWeight(self.W.matroid, self.W.dim - 1, out)

    def apply_basis(self, F: int) -> MinkowskiWeight:
        return MinkowskiWeight(self.W.matroid, self.W.dim - 1, dict(self.contrib.get(F, {})))


def divisor_apply(phi: PLFunction, W: MinkowskiWeight) -> MinkowskiWeight:
    """Intersect the weight ``W`` with the divisor of ``phi``.

    The weight of a face ``tau`` is
    ``sum_sigma w(sigma) phi(u_{sigma - tau}) - phi(sum_sigma w(sigma) u_{sigma - tau})``.
    """
    if W.dim < 1:
        raise InvalidExponents("cannot intersect a 0-dimensional weight with a divisor")
    return _Faces(W).apply(phi)


Monomial = tuple


def chain_monomials(M: Matroid, degree: int) -> list[Monomial]:
    """Multisets of proper flats of size ``degree`` supported on a chain.

    Each monomial is a non-decreasing tuple of flats, every entry equal to or
    strictly containing the previous one.
    """
    fan = BergmanFan.of(M)
    out: list[Monomial] = []

    def walk(prefix, candidates):
        if len(prefix) == degree:
            out.append(prefix)
            return
        for F in candidates:
            walk(prefix + (F,), [F] + fan.above[F])

    walk((), fan.proper)
    return out


class _MonomialEvaluator:
    """Applies monomials to a fixed weight, sharing work between common prefixes."""

    def __init__(self, W: MinkowskiWeight):
        self.cache: dict[Monomial, MinkowskiWeight] = {(): W}
        self.faces: dict[Monomial, _Faces] = {}

    def __call__(self, mono: Monomial) -> MinkowskiWeight:
        hit = self.cache.get(mono)
        if hit is not None:
            return hit
        prefix = mono[:-1]
        base = self(prefix)
        faces = self.faces.get(prefix)
        if faces is None:
            faces = self.faces[prefix] = _Faces(base)
        result = faces.apply_basis(mono[-1])
        self.cache[mono] = result
        return result


@dataclass
class ChainMonomialCombination:
    """Rational combination of chain monomials of one degree."""

    matroid: Matroid
    degree: int
    terms: dict = field(default_factory=dict)

    def apply(self, W: MinkowskiWeight) -> MinkowskiWeight:
        if W.dim < self.degree:
            raise InvalidExponents(f"cannot lower dimension {W.dim} by {self.degree}")
        evaluate = _MonomialEvaluator(W)
        out: dict = {}
        for mono, c in self.terms.items():
            for chain, v in evaluate(mono).weights.items():
                out[chain] = out.get(chain, 0) + c * v
        return MinkowskiWeight(W.matroid, W.dim - self.degree, out)

    def as_pl_function(self) -> PLFunction:
        if self.degree != 1:
            raise InvalidExponents("only degree-1 combinations are functions")
        return PLFunction({mono[0]: c for mono, c in self.terms.items()})


def lift(W: MinkowskiWeight, reverse: bool = False) -> ChainMonomialCombination:
    """Combination of degree ``d - k`` monomials whose action on the fundamental class is ``W``.

    ``reverse`` flips the pivoting preference, which selects a different
    solution of the same underdetermined system.
    """
    M = W.matroid
    fan = BergmanFan.of(M)
    degree = fan.d - W.dim
    monos = chain_monomials(M, degree)
    evaluate = _MonomialEvaluator(fundamental_class(M))
    rows: dict = {chain: {} for chain in fan.chains(W.dim)}
    for j, mono in enumerate(monos):
        for chain, v in evaluate(mono).weights.items():
            rows[chain][j] = v
    order = range(len(monos) - 1, -1, -1) if reverse else range(len(monos))
    system = SparseSystem(order)
    for chain, row in rows.items():
        if not system.add(row, W[chain]):
            raise LiftFailure(f"no combination of degree {degree} reproduces the weight "
                              f"(first conflict at {[members(F) for F in chain]})")
    sol = system.solution()
    return ChainMonomialCombination(M, degree, {monos[j]: c for j, c in sorted(sol.items())})


def validate_exponents(d: int, exponents: Sequence[int]) -> tuple[int, ...]:
    e = tuple(int(k) for k in exponents)
    if len(e) != d or any(k < 0 for k in e):
        raise InvalidExponents(f"need {d} nonnegative exponents, got {list(exponents)}")
    if sum(i * k for i, k in enumerate(e, start=1)) != d:
        raise InvalidExponents(f"exponents {list(e)} do not satisfy sum i*k_i = {d}")
    return e


def exponent_vectors(d: int) -> list[tuple[int, ...]]:
    """Every ``(k_1, ..., k_d)`` with ``sum i*k_i = d``, in decreasing lexicographic order."""
    out = []

    def walk(i, remaining, prefix):
        if i > d:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for k in range(remaining // i + 1):
            walk(i + 1, remaining - i * k, prefix + [k])

    walk(1, d, [])
    return sorted(out, reverse=True)


def _csm(M: Matroid, k: int) -> MinkowskiWeight:
    key = ("csm", k)
    W = M._cache.get(key)
    if W is None:
        W = M._cache[key] = csm_cycle(M, k)
    return W


def _lifted(M: Matroid, k: int, reverse: bool) -> ChainMonomialCombination:
    key = ("lift", k, reverse)
    c = M._cache.get(key)
    if c is None:
        c = M._cache[key] = lift(_csm(M, k), reverse=reverse)
    return c


def chern_number(M: Matroid, exponents: Sequence[int], carrier: int | None = None,
                 reverse: bool = False) -> int:
    """Vertex weight of ``csm_{d-1}^{k_1} ... csm_0^{k_d}``.

    ``carrier`` picks which factor (by position in the expanded product) is
    kept as a weight; the others are lifted. By default it is the first
    factor of largest dimension.
    """
    if not M.is_loopless():
        raise LoopError("Chern numbers are defined for loopless matroids only")
    d = M.rank - 1
    e = validate_exponents(d, exponents)
    dims = [d - i for i, k in enumerate(e, start=1) for _ in range(k)]
    if not dims:
        return int(vertex_weight(fundamental_class(M)))
    if carrier is None:
        carrier = dims.index(max(dims))
    W = _csm(M, dims[carrier])
    for pos, k in enumerate(dims):
        if pos != carrier:
            W = _lifted(M, k, reverse).apply(W)
    value = Fraction(vertex_weight(W))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral vertex weight {value}")
    return int(value)
