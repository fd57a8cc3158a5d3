import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import linear_spaces
from matroid_chern import _canon_py, canon
from matroid_chern.canon import (apply_labeling, canonical_family, canonical_labeling,
                                 matroid_canonical_form, refine_colors, twin_predecessors)
from matroid_chern.corpus import fano, nonfano, nonpappus, pappus
from matroid_chern.errors import TooLarge
from matroid_chern.matroid import from_rank2_flats, pg2, uniform

KERNELS = [_canon_py]
if canon.KERNEL == "compiled":
    KERNELS.append(canon._kernel)


def shuffled(M, seed):
    perm = list(range(M.n))
    random.Random(seed).shuffle(perm)
    return M.relabel(perm)


class TestMatroidForms:
    def test_uniform_symmetric(self):
        M = uniform(3, 4)
        assert all(shuffled(M, s).canonical_form() == M.canonical_form() for s in range(5))

    def test_fano_vs_nonfano(self):
        assert fano().canonical_form() != nonfano().canonical_form()

    def test_pappus_vs_nonpappus(self):
        assert pappus().canonical_form() != nonpappus().canonical_form()

    def test_fano_is_pg22(self):
        assert fano().canonical_form() == pg2(2).canonical_form()

    def test_too_large(self):
        with pytest.raises(TooLarge):
            matroid_canonical_form(pg2(3))

    def test_limit(self):
        with pytest.raises(TooLarge):
            matroid_canonical_form(pappus(), limit=8)

    @settings(max_examples=40, deadline=None)
    @given(linear_spaces(max_n=9), st.integers(0, 10 ** 6))
    def test_relabel_invariance(self, M, seed):
        assert shuffled(M, seed).canonical_form() == M.canonical_form()

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_complete_invariant(self, n):
        # Orbits under all n! relabelings versus classes of canonical forms.
        fams = all_linear_spaces(n)
        perms = list(permutations(range(n)))
        orbit = {fam: min(tuple(sorted(apply_labeling(L, p) for L in fam)) for p in perms)
                 for fam in fams}
        forms = {fam: canonical_family(n, fam) for fam in fams}
        assert len(set(orbit.values())) == len(set(forms.values()))
        for a in fams:
            for b in fams:
                if orbit[a] == orbit[b]:
                    assert forms[a] == forms[b]


def all_linear_spaces(n):
    """Every family of 3+ point lines, pairwise meeting in at most one point."""
    lines = [sum(1 << i for i in c) for k in range(3, n) for c in combinations(range(n), k)]
    out = []

    def grow(start, fam):
        out.append(tuple(sorted(fam)))
        for i in range(start, len(lines)):
            if all(bin(lines[i] & L).count("1") <= 1 for L in fam):
                grow(i + 1, fam + [lines[i]])
    grow(0, [])
    return out


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
class TestKernels:
    def test_is_permutation(self, kernel):
        fam = [0b0000111, 0b0011001, 0b1100001]
        pos = canonical_labeling(7, fam, kernel)
        assert sorted(pos) == list(range(7))

    @settings(max_examples=40, deadline=None)
    @given(linear_spaces(max_n=9), st.integers(0, 10 ** 6))
    def test_invariance(self, kernel, M, seed):
        fam = M.flats_by_rank[2]
        other = shuffled(M, seed).flats_by_rank[2]
        assert canonical_family(M.n, fam, kernel) == canonical_family(M.n, other, kernel)


@pytest.mark.skipif(canon.KERNEL != "compiled", reason="compiled kernel not built")
@settings(max_examples=60, deadline=None)
@given(linear_spaces(max_n=9))
def test_kernels_agree(M):
    fam = M.flats_by_rank[2]
    assert (canonical_labeling(M.n, fam, _canon_py)
            == canonical_labeling(M.n, fam, canon._kernel))


def test_refinement_separates_degrees():
    # Point 6 lies on no 3-point line of this family.
    fam = from_rank2_flats(7, [(0, 1, 2), (3, 4, 5)]).flats_by_rank[2]
    color = refine_colors(7, fam)
    assert len({color[i] for i in range(6)}) == 1
    assert color[6] != color[0]


def test_twins():
    fam = uniform(3, 4).flats
    prev = twin_predecessors(4, fam, refine_colors(4, fam))
    assert prev == [-1, 0, 1, 2]


def test_apply_labeling():
    assert apply_labeling(0b101, [2, 0, 1]) == 0b110
