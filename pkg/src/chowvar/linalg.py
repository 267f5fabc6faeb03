"""Sparse exact linear algebra: rational nullspaces, mod-p elimination,
CRT and rational reconstruction.

Rows are dicts mapping column keys (any hashable) to coefficients.  The
exact routines work over Fractions and return integer-primitive vectors;
the modular routines are used as accelerators and for rank certificates,
always behind an exact verification or a two-prime agreement gate.
"""

from fractions import Fraction
from math import gcd, isqrt

from .budget import DEFAULT_PRIMES


def _primitive(vec):
    """Scale a rational vector to coprime integers, first entry sign fixed."""
    denom = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = {k: int(c * denom) for k, c in vec.items() if c}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
    if g > 1:
        ints = {k: c // g for k, c in ints.items()}
    return ints


class ExactRREF:
    """Incremental reduced row echelon form over the rationals."""

    def __init__(self):
        self.pivots = {}  # pivot column -> row dict (pivot coefficient 1)

    def reduce(self, row):
        row = {k: Fraction(v) for k, v in row.items() if v}
        for col in sorted(row, key=_colkey):
            if col not in self.pivots:
                continue
            c = row.get(col)
            if not c:
                continue
            for k, v in self.pivots[col].items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Reduce a row and absorb it; returns the new pivot column or None."""
        row = self.reduce(row)
        if not row:
            return None
        pc = min(row, key=_colkey)
        inv = Fraction(1) / row[pc]
        row = {k: v * inv for k, v in row.items()}
        # back-eliminate the new pivot from stored rows
        for col, stored in self.pivots.items():
            c = stored.get(pc)
            if c:
                for k, v in row.items():
                    nv = stored.get(k, 0) - c * v
                    if nv:
                        stored[k] = nv
                    else:
                        stored.pop(k, None)
        self.pivots[pc] = row
        return pc

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, row):
        return not self.reduce(row)


def _colkey(c):
    # columns may be ints or tuples; keep a deterministic total order
    return (0, c, ()) if isinstance(c, int) else (1, 0, c)


def nullspace_exact(rows, columns):
    """Nullspace basis of the system rows . x = 0 over the given columns.

    rows: iterable of dicts column -> coefficient.  Returns a list of
    integer-primitive dicts, one per free column, in column order.
    """
    columns = list(columns)
    rr = ExactRREF()
    for r in rows:
        rr.add(r)
    pivot_cols = set(rr.pivots)
    basis = []
    for free in columns:
        if free in pivot_cols:
            continue
        vec = {free: Fraction(1)}
        for pc, row in rr.pivots.items():
            c = row.get(free)
            if c:
                vec[pc] = -c
        basis.append(_primitive(vec))
    return basis


def rank_exact(rows):
    rr = ExactRREF()
    for r in rows:
        rr.add(r)
    return rr.rank


class ModRREF:
    """Incremental RREF over F_p."""

    def __init__(self, p):
        self.p = p
        self.pivots = {}

    def reduce(self, row):
        p = self.p
        row = {k: v % p for k, v in row.items() if v % p}
        for col in sorted(row, key=_colkey):
            if col not in self.pivots:
                continue
            c = row.get(col)
            if not c:
                continue
            for k, v in self.pivots[col].items():
                nv = (row.get(k, 0) - c * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        p = self.p
        row = self.reduce(row)
        if not row:
            return None
        pc = min(row, key=_colkey)
        inv = pow(row[pc], p - 2, p)
        row = {k: (v * inv) % p for k, v in row.items()}
        for col, stored in self.pivots.items():
            c = stored.get(pc)
            if c:
                for k, v in row.items():
                    nv = (stored.get(k, 0) - c * v) % p
                    if nv:
                        stored[k] = nv
                    else:
                        stored.pop(k, None)
        self.pivots[pc] = row
        return pc

    @property
    def rank(self):
        return len(self.pivots)


def rank_mod_p(rows, p):
    rr = ModRREF(p)
    for r in rows:
        rr.add(r)
    return rr.rank


def nullspace_mod_p(rows, columns, p):
    """Nullspace basis mod p; returns (pivot_columns, basis vectors)."""
    columns = list(columns)
    rr = ModRREF(p)
    for r in rows:
        rr.add(r)
    pivot_cols = set(rr.pivots)
    basis = []
    for free in columns:
        if free in pivot_cols:
            continue
        vec = {free: 1}
        for pc, row in rr.pivots.items():
            c = row.get(free)
            if c:
                vec[pc] = (-c) % p
        basis.append(vec)
    return tuple(sorted(pivot_cols, key=_colkey)), basis


def crt_pair(r1, m1, r2, m2):
    """Combine residues; moduli must be coprime."""
    t = ((r2 - r1) * pow(m1, -1, m2)) % m2
    return r1 + m1 * t, m1 * m2


def rational_reconstruct(a, m):
    """p/q with p/q = a (mod m), |p|, q <= sqrt(m/2); None if impossible."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if abs(s1) > bound or s1 == 0 or gcd(r1, abs(s1)) != 1:
        return None
    if (s1 * a - r1) % m != 0:
        return None
    return Fraction(r1, s1)


def reconstruct_vector(vec, m):
    """Rational reconstruction of every coordinate; None on failure."""
    out = {}
    for k, v in vec.items():
        r = rational_reconstruct(v % m, m)
        if r is None:
            return None
        if r:
            out[k] = r
    return out


def select_independent_mod_p(vectors, p, expected=None):
    """Greedy maximal subset of vectors independent mod p (indices).

    Vectors independent mod p are independent over Q, so the selection is
    always sound; it may be incomplete for unlucky primes, which callers
    detect against an expected dimension.
    """
    rr = ModRREF(p)
    picked = []
    for idx, v in enumerate(vectors):
        if rr.add(v) is not None:
            picked.append(idx)
            if expected is not None and len(picked) == expected:
                break
    return picked


def modular_nullspace(int_rows, columns, primes=None, verify_rows=None):
    """Nullspace of an integer system via mod-p solves + reconstruction.

    Returns integer-primitive vectors.  Every vector is verified exactly
    against verify_rows (defaults to int_rows); reconstruction failures
    escalate to a larger CRT modulus, pivot-structure mismatches between
    primes drop the lower-rank prime.
    """
    primes = list(primes or DEFAULT_PRIMES)
    if verify_rows is None:
        verify_rows = int_rows
    attempts = []
    for p in primes:
        piv, basis = nullspace_mod_p(int_rows, columns, p)
        attempts.append((p, piv, basis))
        # find an earlier attempt with the same pivot structure
        agree = [a for a in attempts if a[1] == piv]
        if len(agree) < 2:
            continue
        combined = agree[0][2]
        mod = agree[0][0]
        for q, _, qb in agree[1:]:
            new = []
            for v1, v2 in zip(combined, qb):
                keys = set(v1) | set(v2)
                new.append({k: crt_pair(v1.get(k, 0), mod, v2.get(k, 0), q)[0] for k in keys})
            combined = new
            mod *= q
        out = []
        ok = True
        for v in combined:
            rec = reconstruct_vector(v, mod)
            if rec is None:
                ok = False
                break
            iv = _primitive(rec)
            if not _verify_in_kernel(verify_rows, iv):
                ok = False
                break
            out.append(iv)
        if ok:
            return out
    raise ArithmeticError("modular nullspace failed across configured primes")


def _verify_in_kernel(rows, vec):
    for r in rows:
        s = 0
        for k, c in r.items():
            x = vec.get(k)
            if x:
                s += c * x
        if s:
            return False
    return True
