import re
from itertools import combinations

from hypothesis import strategies as st

from matroid_chern.matroid import from_bases, from_rank2_flats, to_mask


def subsets(n):
    return range(1 << n)


def rank_axioms_hold(n, rank):
    """Normalization, unit increase, monotonicity and submodularity, exhaustively."""
    full = (1 << n) - 1
    if rank(0) != 0:
        return False
    for S in subsets(n):
        for e in range(n):
            if not S >> e & 1:
                if rank(S | 1 << e) - rank(S) not in (0, 1):
                    return False
    for A in subsets(n):
        for B in subsets(n):
            if rank(A | B) + rank(A & B) > rank(A) + rank(B):
                return False
    return rank(full) == max(rank(S) for S in subsets(n))


def linear_space_rank(n, lines):
    """Rank of a subset of a simple rank-3 matroid read directly off its long lines."""
    masks = [to_mask(L) for L in lines]

    def rank(S):
        k = bin(S).count("1")
        if k <= 2:
            return k
        return 2 if any(S & L == S for L in masks) else 3
    return rank


def gf_rank(vectors, p):
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def vector_matroid(vectors, p):
    """Matroid of the columns ``vectors`` over GF(p), via its bases."""
    n = len(vectors)
    r = gf_rank(vectors, p)
    bases = [c for c in combinations(range(n), r) if gf_rank([vectors[i] for i in c], p) == r]
    return from_bases(n, bases)


@st.composite
def linear_spaces(draw, min_n=3, max_n=8):
    """Random simple rank-3 matroids, built by greedily accepting random lines."""
    n = draw(st.integers(min_n, max_n))
    line = st.sets(st.integers(0, n - 1), min_size=3, max_size=max(3, n - 1))
    candidates = draw(st.lists(line.filter(lambda s: len(s) < n), max_size=8)) if n > 3 else []
    lines = []
    for c in candidates:
        if all(len(c & L) <= 1 for L in lines):
            lines.append(c)
    return from_rank2_flats(n, [sorted(L) for L in lines])


@st.composite
def vector_matroids(draw, max_n=6):
    """Loopless matroids representable over GF(2) or GF(3)."""
    p = draw(st.sampled_from([2, 3]))
    dim = draw(st.integers(1, 4))
    n = draw(st.integers(dim, max_n))
    vec = st.lists(st.integers(0, p - 1), min_size=dim, max_size=dim).filter(any)
    vectors = draw(st.lists(vec, min_size=n, max_size=n))
    return vector_matroid(vectors, p)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", rep.nodeid)
            if m and (rep.when == "call" or outcome == "error"):
                lines.append((int(m.group(1)), m.group(2), outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, name, outcome in sorted(lines):
            verdict = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {num:2d} {name.replace('_', ' ')}: {verdict}")
