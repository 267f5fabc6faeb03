"""Partitions, orders on them, strips, and the Weyl dimension formula.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros.  Comparisons zero-pad on the fly.
"""

from functools import lru_cache

GREATER = 1
LESS = -1
EQUAL = 0
INCOMPARABLE = 2


def normalize(parts) -> tuple:
    """Canonical partition: tuple, trailing zeros dropped."""
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)) or any(x < 0 for x in t):
        raise ValueError(f"not weakly decreasing and nonnegative: {parts}")
    return t


def order(lam) -> int:
    return sum(lam)


def length(lam) -> int:
    return len(lam)


def lex_compare(a, b) -> int:
    """Total order: the first nonvanishing a_i - b_i decides, zero-padded."""
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return GREATER if x > y else LESS
    return EQUAL


def dominance_compare(a, b) -> int:
    """Partial order on equal-sum integer vectors by prefix sums.

    Returns GREATER, LESS, EQUAL or INCOMPARABLE.  Raises ValueError when
    the total sums differ (the order is only defined on equal sums).
    """
    if sum(a) != sum(b):
        raise ValueError(f"dominance undefined: sums {sum(a)} != {sum(b)}")
    ge = le = True
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            ge = False
        elif sa > sb:
            le = False
    if ge and le:
        return EQUAL
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


def dominates(a, b) -> bool:
    """a >= b in dominance order."""
    return dominance_compare(a, b) in (GREATER, EQUAL)


def conjugate(lam) -> tuple:
    """Transpose of the Young diagram: column lengths."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def partitions_of(n, max_length=None, max_part=None):
    """All partitions of n, descending lex order."""
    res = []
    ml = max_length if max_length is not None else n
    mp = max_part if max_part is not None else n

    def rec(rem, mx, cur):
        if rem == 0:
            res.append(tuple(cur))
            return
        if len(cur) == ml:
            return
        for v in range(min(mx, rem), 0, -1):
            cur.append(v)
            rec(rem - v, v, cur)
            cur.pop()

    rec(n, mp, [])
    return res


@lru_cache(maxsize=None)
def horizontal_strip_predecessors(lam, s):
    """Partitions mu with lam/mu a horizontal strip of s boxes."""
    lam = normalize(lam)
    res = []
    L = len(lam)

    def rec(i, rem, cur):
        if i == L:
            if rem == 0:
                res.append(tuple(x for x in cur if x > 0))
            return
        hi = lam[i]
        lo = max(lam[i + 1] if i + 1 < L else 0, lam[i] - rem)
        for v in range(hi, lo - 1, -1):
            cur.append(v)
            rec(i + 1, rem - (lam[i] - v), cur)
            cur.pop()

    rec(0, s, [])
    return tuple(res)


def pieri_expand(lam, d, max_length):
    """All nu obtained from lam by adding d boxes, no two in one column.

    Exactly Pieri's rule for  S_lam V (x) S^d V ; each nu appears once.
    Output is a list of (nu, 1) pairs sorted descending lex.
    """
    lam = normalize(lam)
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return [(lam, 1)] if len(lam) <= max_length else []
    res = set()
    L = min(max_length, len(lam) + 1)
    padded = list(lam) + [0] * (L - len(lam))

    def rec(i, rem, cur):
        if i == L:
            if rem == 0:
                res.add(tuple(x for x in cur if x > 0))
            return
        # nu_i <= lam_{i-1} keeps the added boxes in distinct columns
        hi = padded[i] + rem
        if i > 0:
            hi = min(hi, cur[i - 1], padded[i - 1])
        for v in range(padded[i], hi + 1):
            cur.append(v)
            rec(i + 1, rem - (v - padded[i]), cur)
            cur.pop()

    rec(0, d, [])
    out = [(nu, 1) for nu in res]
    out.sort(key=lambda t: t[0], reverse=True)
    return out


def weyl_dimension(lam, n) -> int:
    """dim S_lam(C^n) by the hook content formula, exact integers."""
    lam = normalize(lam)
    if len(lam) > n:
        raise ValueError(f"length {len(lam)} exceeds n={n}")
    if not lam:
        return 1
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - i) - 1
    return num // den
