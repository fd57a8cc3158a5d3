"""Pure-Python canonical labeling search (fallback for the compiled kernel).

Finds the labeling of points by positions ``0..n-1`` that maximizes the
code ``(block_0, ..., block_{n-1})``, where ``block_m`` is the set of
relabeled family members whose largest position is ``m``, read as an
integer bitset over the relabeled masks. Positions are filled by color
class, and twins are placed in increasing label order.
"""


def search(n, family, color, twin_prev):
    need = sorted(color)
    fam = [f for f in family if f]
    size = [bin(f).count("1") for f in fam]
    containing = [[j for j, f in enumerate(fam) if f >> p & 1] for p in range(n)]
    pm = [0] * len(fam)
    cnt = [0] * len(fam)
    pos = [-1] * n
    cur = [0] * n
    best = None
    best_pos = None

    def dfs(m, assigned):
        nonlocal best, best_pos
        if m == n:
            if best is None or cur > best:
                best = cur[:]
                best_pos = pos[:]
            return
        c = need[m]
        bit = 1 << m
        for p in range(n):
            if assigned >> p & 1 or color[p] != c:
                continue
            t = twin_prev[p]
            if t >= 0 and not assigned >> t & 1:
                continue
            blk = 0
            for j in containing[p]:
                pm[j] |= bit
                cnt[j] += 1
                if cnt[j] == size[j]:
                    blk |= 1 << pm[j]
            if best is None or blk >= best[m] or cur[:m] != best[:m]:
                cur[m] = blk
                pos[p] = m
                dfs(m + 1, assigned | (1 << p))
                pos[p] = -1
            for j in containing[p]:
                pm[j] &= ~bit
                cnt[j] -= 1

    dfs(0, 0)
    return best_pos
