"""Closed-form Chern numbers and the rank-3 inequality checks.

All comparisons are made on integers; ratios are only ever formed as
``Fraction`` for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple, Sequence

from .errors import CoLoopError, RankError
from .intersection import chern_number, validate_exponents
from .lattice import RankTwoProfile, rank2_profile
from .matroid import Matroid


class ChernPair(NamedTuple):
    c1sq: int
    c2: int

    @property
    def ratio(self) -> Fraction | None:
        return Fraction(self.c1sq, self.c2) if self.c2 else None


@dataclass
class TheoremReport:
    theorem: str
    holds: bool
    equality_case: str = "none"  # "none", "left" or "right"
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "holds": self.holds,
                "equality_case": self.equality_case, "witness": self.witness}


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def chern_rank3(p: RankTwoProfile) -> ChernPair:
    n = p.n
    return ChernPair(9 - 5 * n + sum((3 * m - 4) * t for m, t in p.items()),
                     3 - 2 * n + sum((m - 1) * t for m, t in p.items()))


def c1sq_alt(p: RankTwoProfile) -> int:
    return (3 - p.n) ** 2 - sum((2 - m) ** 2 * t for m, t in p.items())


def profile_identity_holds(p: RankTwoProfile) -> bool:
    """``n^2 - n == sum (m^2 - m) t_m``."""
    return p.n ** 2 - p.n == sum((m * m - m) * t for m, t in p.items())


def uniform_chern(r: int, n: int, exponents: Sequence[int]) -> int:
    """Chern number of U_{r,n} from the product-of-binomials formula."""
    d = r - 1
    e = validate_exponents(d, exponents)
    value = (-1) ** d
    for i, k in enumerate(e, start=1):
        value *= _binom(n - (d - i) - 2, i) ** k
    return value


def uniform_pair(n: int) -> ChernPair:
    return ChernPair(uniform_chern(3, n, (2, 0)), uniform_chern(3, n, (0, 1)))


def pg_chern(q: int) -> ChernPair:
    base = q ** 3 - q ** 2 - q + 1
    return ChernPair(3 * base, base)


def melchior_gap(p: RankTwoProfile) -> int:
    """``5 c2 - 2 c1^2``, cross-checked against ``-3 - sum (m - 3) t_m``."""
    pair = chern_rank3(p)
    gap = 5 * pair.c2 - 2 * pair.c1sq
    direct = -3 - sum((m - 3) * t for m, t in p.items())
    if gap != direct:
        raise ArithmeticError(f"gap {gap} disagrees with line count form {direct}")
    return gap


def is_uniform(M: Matroid) -> bool:
    return all(len(M.flats_by_rank[k]) == comb(M.n, k) for k in range(M.rank))


def is_projective_plane(p: RankTwoProfile) -> bool:
    """Coloop-free simple rank-3 matroids with as many lines as points."""
    return p.lines == p.n


def _rank3_data(M: Matroid):
    if M.rank != 3:
        raise RankError(f"rank-3 theorem applied to a rank-{M.rank} matroid")
    p = rank2_profile(M)
    return p, chern_rank3(p)


def verify_positivity(M: Matroid) -> TheoremReport:
    p, pair = _rank3_data(M)
    has_coloop = M.coloops() != 0
    holds = pair.c1sq >= 0 and pair.c2 >= 0 and (pair.c1sq == 0) == has_coloop
    return TheoremReport("positivity", holds, "left" if pair.c1sq == 0 else "none",
                         {"n": p.n, "pair": list(pair), "has_coloop": has_coloop})


def verify_uniform_bounds(M: Matroid) -> TheoremReport:
    p, pair = _rank3_data(M)
    bound = uniform_pair(p.n)
    holds = 0 <= pair.c1sq <= bound.c1sq and 0 <= pair.c2 <= bound.c2
    return TheoremReport("uniform_bounds", holds, "right" if pair == bound else "none",
                         {"n": p.n, "pair": list(pair), "uniform": list(bound)})


def verify_ratio(M: Matroid) -> TheoremReport:
    p, pair = _rank3_data(M)
    if M.coloops():
        raise CoLoopError("ratio bounds need a coloop-free matroid")
    if pair.c2 == 0:
        raise CoLoopError("c2 vanishes, so the matroid has a coloop")
    n = p.n
    left = (n - 2) * pair.c1sq - (2 * n - 6) * pair.c2
    right = 3 * pair.c2 - pair.c1sq
    uniform = is_uniform(M)
    plane = is_projective_plane(p)
    holds = left >= 0 and right >= 0 and (left == 0) == uniform and (right == 0) == plane
    case = "left" if left == 0 else "right" if right == 0 else "none"
    ratio = pair.ratio
    return TheoremReport("ratio_bounds", holds, case,
                         {"n": n, "pair": list(pair), "ratio": f"{ratio.numerator}/{ratio.denominator}",
                          "lower": str(Fraction(2 * n - 6, n - 2)), "uniform": uniform,
                          "projective_plane": plane})


def conjecture_check(M: Matroid, exponents: Sequence[int]) -> TheoremReport:
    """Compare a Chern number against the uniform matroid of the same size.

    Violations are findings recorded in the report, never exceptions.
    """
    value = chern_number(M, exponents)
    bound = uniform_chern(M.rank, M.n, exponents)
    violation = abs(value) > abs(bound)
    equal = abs(value) == abs(bound)
    uniform = is_uniform(M)
    holds = not violation and equal == uniform
    return TheoremReport("uniform_conjecture", holds, "right" if equal else "none",
                         {"n": M.n, "rank": M.rank, "exponents": list(exponents),
                          "value": value, "uniform_value": bound, "violation": violation,
                          "equality_without_uniform": equal and not uniform})


def verify_all(M: Matroid) -> list[TheoremReport]:
    """Every theorem check that applies to ``M`` (rank 3, simple)."""
    reports = [verify_positivity(M), verify_uniform_bounds(M)]
    if not M.coloops():
        reports.append(verify_ratio(M))
    return reports
