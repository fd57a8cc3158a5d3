from math import comb

import pytest
from hypothesis import given, settings

from conftest import linear_spaces, vector_matroids
from matroid_chern.corpus import fano, pappus
from matroid_chern.errors import LoopError, RankError
from matroid_chern.lattice import (CharPoly, FlatLattice, RankTwoProfile, beta, beta_interval,
                                   char_poly, mobius, rank2_profile)
from matroid_chern.matroid import from_bases, from_rank2_flats, members, uniform


def beta_or_zero(M):
    return beta(M) if M.is_loopless() else 0


class TestMobius:
    def test_base_case(self):
        L = FlatLattice(fano())
        assert mobius(L, 0, 0) == 1

    def test_atoms(self):
        M = fano()
        L = M.lattice()
        assert all(mobius(L, 0, F) == -1 for F in M.flats_by_rank[1])

    @pytest.mark.parametrize("M", [fano(), pappus(), uniform(3, 6)])
    def test_rank2_flat(self, M):
        L = M.lattice()
        for F in M.flats_by_rank[2]:
            assert L.mobius(0, F) == bin(F).count("1") - 1

    def test_not_below(self):
        M = fano()
        a, b = M.flats_by_rank[1][:2]
        assert M.lattice().mobius(a, b) == 0

    @settings(max_examples=30, deadline=None)
    @given(vector_matroids())
    def test_defining_sums(self, M):
        L = M.lattice()
        for F in M.flats:
            for G in M.flats:
                if G & F == F and G != F:
                    total = sum(L.mobius(F, H) for H in M.flats if H & F == F and G & H == H)
                    assert total == 0


class TestCharPoly:
    def test_u34(self):
        assert char_poly(uniform(3, 4)).coefficients == (1, -4, 6, -3)

    def test_fano(self):
        assert char_poly(fano()).coefficients == (1, -7, 14, -8)

    def test_u11(self):
        assert char_poly(uniform(1, 1)).coefficients == (1, -1)

    def test_loops_rejected(self):
        with pytest.raises(LoopError):
            char_poly(from_bases(3, [(1,), (2,)]))

    @settings(max_examples=30, deadline=None)
    @given(linear_spaces())
    def test_rank3_shape(self, M):
        p = rank2_profile(M)
        s = sum((m - 1) * t for m, t in p.items())
        assert char_poly(M).coefficients == (1, -M.n, s, -(1 - M.n + s))

    @settings(max_examples=30, deadline=None)
    @given(vector_matroids())
    def test_whitney_count(self, M):
        # chi(M) = sum over subsets (-1)^|S| lambda^(r - r(S)).
        coeffs = [0] * (M.rank + 1)
        for S in range(1 << M.n):
            coeffs[M.rank_of(S)] += (-1) ** bin(S).count("1")
        assert char_poly(M).coefficients == tuple(coeffs)

    def test_evaluation_and_reduction(self):
        chi = char_poly(fano())
        assert chi(1) == 0 and chi(2) == 0
        assert chi.reduced().coefficients == (1, -6, 8)

    def test_reduction_needs_root(self):
        with pytest.raises(ValueError):
            CharPoly((1, 1)).reduced()


class TestBeta:
    def test_fano(self):
        assert beta(fano()) == 3

    @pytest.mark.parametrize("n", [3, 4, 5, 7, 9])
    def test_uniform_rank3(self, n):
        assert beta(uniform(3, n)) == comb(n - 2, 2)

    def test_coloop_gives_zero(self):
        assert beta(from_rank2_flats(6, [range(5)])) == 0

    @settings(max_examples=40, deadline=None)
    @given(vector_matroids())
    def test_crapo_recursion(self, M):
        for e in range(M.n):
            if M.loops() >> e & 1 or M.coloops() >> e & 1:
                continue
            assert beta(M) == beta_or_zero(M.delete([e])) + beta_or_zero(M.contract([e]))

    @settings(max_examples=30, deadline=None)
    @given(vector_matroids())
    def test_interval_matches_minor(self, M):
        L = M.lattice()
        for F in M.flats:
            for G in M.flats:
                if G & F == F and G != F:
                    inside = [i for i, e in enumerate(members(G)) if F >> e & 1]
                    minor = M.restrict(G).contract(inside)
                    assert beta_interval(L, F, G) == beta(minor)


class TestProfile:
    def test_fano(self):
        assert rank2_profile(fano()).t == {3: 7}

    def test_u35(self):
        assert rank2_profile(uniform(3, 5)).t == {2: 10}

    def test_pappus(self):
        p = rank2_profile(pappus())
        assert p.t == {2: 9, 3: 9}
        assert p.lines == 18

    def test_wrong_rank(self):
        with pytest.raises(RankError):
            rank2_profile(uniform(4, 5))

    def test_inconsistent_histogram(self):
        with pytest.raises(ValueError):
            RankTwoProfile(5, {2: 9})
