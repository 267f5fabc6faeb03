"""Semistandard tableaux, Kostka numbers and the Littlewood-Richardson rule.

A tableau is stored as a tuple of rows, each row a tuple of entries in
1..k.  Enumeration is depth-first in row-major entry order, so outputs are
deterministic and reproducible.
"""

from functools import lru_cache

from .partitions import (
    dominates,
    horizontal_strip_predecessors,
    normalize,
)


def enumerate_ssyt(shape, content):
    """All semistandard tableaux of the given shape and content.

    content[i] is the number of occurrences of the value i+1.  Rows weakly
    increase, columns strictly increase.  Returns a list of row-tuples in
    the order produced by row-major depth-first search (smallest entry
    first), which is deterministic.
    """
    shape = normalize(shape)
    content = list(content)
    if sum(content) != sum(shape):
        raise ValueError("content must fill the shape exactly")
    k = len(content)
    rows = [[0] * r for r in shape]
    remaining = content[:]
    out = []

    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]

    def rec(idx):
        if idx == len(cells):
            out.append(tuple(tuple(r) for r in rows))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, k + 1):
            if remaining[v - 1] == 0:
                continue
            rows[i][j] = v
            remaining[v - 1] -= 1
            rec(idx + 1)
            remaining[v - 1] += 1
        rows[i][j] = 0

    rec(0)
    return out


def ssyt_content_kd(shape, k, d):
    """SSYT of content k x d: each value 1..k appears exactly d times."""
    return enumerate_ssyt(shape, [d] * k)


def ssyt_count_column_condition(shape, k, d) -> int:
    """Count SSYT of content k x d where no two values share a column set.

    For each pair i != j, the set of columns containing i must differ from
    the set of columns containing j.  (Column-strictness means a value
    occurs at most once per column, so "columns of i" is a genuine set.)
    """
    shape = normalize(shape)
    if sum(shape) != k * d:
        raise ValueError("order(shape) must equal k*d")
    count = 0
    for tab in ssyt_content_kd(shape, k, d):
        cols = {}
        for i, row in enumerate(tab):
            for j, v in enumerate(row):
                cols.setdefault(v, set()).add(j)
        seen = set()
        ok = True
        for v in range(1, k + 1):
            key = frozenset(cols.get(v, ()))
            if key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            count += 1
    return count


@lru_cache(maxsize=None)
def kostka(lam, mu) -> int:
    """Number of SSYT of shape lam and content mu.

    Computed by peeling the largest value as a horizontal strip; this is
    fast enough for the triangular plethysm solve and agrees with direct
    enumeration (tested).
    """
    lam = normalize(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    if len(mu) == 1:
        return 1 if lam == (mu[0],) else 0
    last = mu[-1]
    if last == 0:
        return kostka(lam, mu[:-1])
    total = 0
    for prev in horizontal_strip_predecessors(lam, last):
        total += kostka(prev, mu[:-1])
    return total


def weight_multiplicity_in_irrep(lam, w) -> int:
    """Dimension of the weight-w space of S_lam(C^n).

    Weight multiplicities are invariant under permuting coordinates, so
    this is the Kostka number at the sorted weight.
    """
    if any(x < 0 for x in w):
        return 0
    mu = tuple(sorted((x for x in w if x > 0), reverse=True))
    if sum(mu) != sum(lam):
        return 0
    if not dominates(lam, tuple(sorted(w, reverse=True))):
        return 0
    return kostka(tuple(lam), mu)


def lr_coefficient(pi, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{pi,mu}.

    Counts LR skew tableaux: semistandard fillings of nu/pi with content
    mu whose reverse reading word (right to left along rows, top to
    bottom) is a lattice word.  Returns 0 unless |nu| = |pi| + |mu| and nu
    contains pi.
    """
    pi = normalize(pi)
    mu = normalize(mu)
    nu = normalize(nu)
    if sum(nu) != sum(pi) + sum(mu):
        return 0
    if len(pi) > len(nu):
        return 0
    if any((pi[i] if i < len(pi) else 0) > nu[i] for i in range(len(nu))):
        return 0
    if not mu:
        return 1 if sum(nu) == sum(pi) else 0
    k = len(mu)

    # cells in reverse reading order: rows top to bottom, right to left
    cells = []
    for i in range(len(nu)):
        inner = pi[i] if i < len(pi) else 0
        for j in range(nu[i] - 1, inner - 1, -1):
            cells.append((i, j))

    filled = {}
    counts = [0] * (k + 1)
    count = 0

    def rec(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        i, j = cells[idx]
        lo, hi = 1, k
        # row weakly increasing: entry <= right neighbour
        if (i, j + 1) in filled:
            hi = min(hi, filled[(i, j + 1)])
        # column strictly increasing: entry > the one above
        if (i - 1, j) in filled:
            lo = max(lo, filled[(i - 1, j)] + 1)
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            # lattice word: every prefix has #v <= #(v-1)
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filled[(i, j)] = v
            counts[v] += 1
            rec(idx + 1)
            counts[v] -= 1
            del filled[(i, j)]

    rec(0)
    return count
