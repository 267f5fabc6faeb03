"""Monomial bases of S^d V and S^k(S^d V), derivatives and polarization.

An ExpVec is a length-n tuple of nonnegative exponents summing to d: the
basis monomial e_1^{a_1}...e_n^{a_n} of S^d V.  A SymMonomial is a tuple
of k ExpVecs sorted descending in graded reverse lexicographic order, the
canonical form of a product of k such monomials.  A SymPoly is a sparse
exact-rational combination of SymMonomials.

The module also carries the gl-invariant symmetric pairing under which
raising and lowering operators are mutually adjoint and differentiation
by e^beta is adjoint to multiplication by e^beta.  Monomials are
orthogonal; the squared norm of a monomial with factor multiplicities
m_beta is  prod_beta m_beta! * (beta!)^{m_beta}.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .budget import BudgetExceededError, get_config


def grevlex_key(a):
    """Sort key: larger key = larger exponent vector in grevlex order."""
    return tuple(-x for x in reversed(a))


def make_monomial(factors):
    """Canonical SymMonomial: factors sorted descending."""
    return tuple(sorted(factors, key=grevlex_key, reverse=True))


def monomial_key(mono):
    """Sort key for whole monomials (factor keys compared in sequence)."""
    return tuple(grevlex_key(f) for f in mono)


def weight_of(mono):
    """Componentwise sum of the factor exponents."""
    if not mono:
        return ()
    n = len(mono[0])
    w = [0] * n
    for f in mono:
        for i, x in enumerate(f):
            w[i] += x
    return tuple(w)


@lru_cache(maxsize=None)
def expvecs(d, n):
    """All exponent vectors of degree d in n variables, descending grevlex."""
    out = []

    def rec(pos, rem, cur):
        if pos == n - 1:
            out.append(tuple(cur + [rem]))
            return
        for v in range(rem, -1, -1):
            rec(pos + 1, rem - v, cur + [v])

    rec(0, d, [])
    out.sort(key=grevlex_key, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _factor_norm(f):
    r = 1
    for x in f:
        r *= factorial(x)
    return r


def monomial_norm(mono) -> int:
    """Squared norm of a monomial under the invariant pairing."""
    r = 1
    run = 1
    for i, f in enumerate(mono):
        r *= _factor_norm(f)
        if i > 0 and mono[i - 1] == f:
            run += 1
        else:
            run = 1
        r *= run
    return r


class SymPoly:
    """Sparse exact polynomial in S^k(S^d C^n).

    terms maps canonical SymMonomials to nonzero int or Fraction
    coefficients.  Instances are treated as immutable values.
    """

    __slots__ = ("terms", "k", "d", "n")

    def __init__(self, k, d, n, terms=None):
        self.k = k
        self.d = d
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    @classmethod
    def monomial(cls, factors, n, coeff=1):
        factors = tuple(tuple(f) for f in factors)
        d = sum(factors[0]) if factors else 0
        return cls(len(factors), d, n, {make_monomial(factors): coeff})

    @classmethod
    def zero(cls, k, d, n):
        return cls(k, d, n)

    def is_zero(self):
        return not self.terms

    def num_terms(self):
        return len(self.terms)

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            nc = t.get(m, 0) + c
            if nc:
                t[m] = nc
            else:
                t.pop(m, None)
        return SymPoly(self.k, self.d, self.n, t)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        if not c:
            return SymPoly(self.k, self.d, self.n)
        return SymPoly(self.k, self.d, self.n, {m: v * c for m, v in self.terms.items()})

    def weight(self):
        for m in self.terms:
            return weight_of(m)
        return (0,) * self.n

    def times_factor(self, beta):
        """Multiply by the S^d V basis element e^beta."""
        beta = tuple(beta)
        t = {}
        for m, c in self.terms.items():
            t[make_monomial(m + (beta,))] = c
        return SymPoly(self.k + 1, self.d, self.n, t)

    def derivative(self, beta):
        """Formal partial derivative, each e^alpha an independent variable."""
        if self.k == 0:
            raise ValueError("cannot differentiate a degree-0 element")
        beta = tuple(beta)
        t = {}
        for m, c in self.terms.items():
            mult = m.count(beta)
            if not mult:
                continue
            idx = m.index(beta)
            nm = m[:idx] + m[idx + 1 :]
            nc = t.get(nm, 0) + c * mult
            if nc:
                t[nm] = nc
            else:
                t.pop(nm, None)
        return SymPoly(self.k - 1, self.d, self.n, t)

    def derivative_multi(self, betas):
        """Iterated derivative by a multiset of basis vectors (no prefactor)."""
        p = self
        for b in betas:
            p = p.derivative(b)
        return p

    def embed(self, n):
        """Reinterpret in n >= self.n variables (append zero exponents)."""
        if n == self.n:
            return self
        if n < self.n:
            raise ValueError("cannot shrink the variable count")
        pad = (0,) * (n - self.n)
        t = {tuple(f + pad for f in m): c for m, c in self.terms.items()}
        return SymPoly(self.k, self.d, n, t)

    def leading_monomial(self):
        return max(self.terms, key=monomial_key)

    def primitive(self):
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        denom = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = {m: int(c * denom) for m, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if g > 1:
            ints = {m: c // g for m, c in ints.items()}
        if ints[max(ints, key=monomial_key)] < 0:
            ints = {m: -c for m, c in ints.items()}
        return SymPoly(self.k, self.d, self.n, ints)

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (
            self.k == other.k
            and self.d == other.d
            and self.n == other.n
            and {m: Fraction(c) for m, c in self.terms.items()}
            == {m: Fraction(c) for m, c in other.terms.items()}
        )

    def __hash__(self):
        return hash((self.k, self.d, self.n, frozenset((m, Fraction(c)) for m, c in self.terms.items())))

    def __repr__(self):
        return f"SymPoly(k={self.k}, d={self.d}, n={self.n}, {self.num_terms()} terms)"

    # -- text / JSON formats ------------------------------------------------

    def to_text(self):
        """Signed sum of terms like 3*(e1^3)^2*(e1*e2^2)*(e2*e3^2)."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)
        parts = []
        for m, c in items:
            cf = Fraction(c)
            mag = abs(cf)
            body = _monomial_text(m)
            if mag == 1 and body:
                txt = body
            else:
                coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
                txt = f"{coeff}*{body}" if body else coeff
            if not parts:
                parts.append(txt if cf > 0 else "-" + txt)
            else:
                parts.append((" + " if cf > 0 else " - ") + txt)
        return "".join(parts)

    def to_json_obj(self):
        items = sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)
        out = []
        for m, c in items:
            cf = Fraction(c)
            coeff = str(cf.numerator) if cf.denominator == 1 else f"{cf.numerator}/{cf.denominator}"
            out.append({"coeff": coeff, "factors": [list(f) for f in m]})
        return out


def _factor_text(f):
    pieces = []
    for i, x in enumerate(f):
        if x == 0:
            continue
        pieces.append(f"e{i + 1}" + (f"^{x}" if x > 1 else ""))
    return "*".join(pieces) if pieces else "1"


def _monomial_text(m):
    pieces = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        mult = j - i
        base = f"({_factor_text(m[i])})"
        pieces.append(base + (f"^{mult}" if mult > 1 else ""))
        i = j
    return "*".join(pieces)


def pair(f: SymPoly, g: SymPoly):
    """Invariant pairing <f, g>; monomials orthogonal with norm weights."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    total = 0
    for m, c in f.terms.items():
        c2 = g.terms.get(m)
        if c2:
            total += c * c2 * monomial_norm(m)
    return total


def enumerate_weight_space(k, d, n, w, cap=None):
    """All canonical SymMonomials of S^k(S^d C^n) with weight w.

    Deterministic descending order (factor sequences compared in the
    monomial order).  Raises BudgetExceededError when the count passes the
    configured weight-space cap.
    """
    w = tuple(w)
    if len(w) != n:
        raise ValueError("weight length must equal n")
    if sum(w) != k * d:
        raise ValueError("weight must sum to k*d")
    if cap is None:
        cap = get_config().weight_cap
    avail = [f for f in expvecs(d, n) if all(f[i] <= w[i] for i in range(n))]
    out = []

    def rec(start, k_left, w_rem):
        if k_left == 0:
            if all(x == 0 for x in w_rem):
                out.append(tuple(chosen))
                if len(out) > cap:
                    raise BudgetExceededError(len(out), cap, f"weight space {w} in S^{k}(S^{d}C^{n})")
            return
        for idx in range(start, len(avail)):
            f = avail[idx]
            ok = True
            nw = list(w_rem)
            for i in range(n):
                nw[i] -= f[i]
                if nw[i] < 0:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(f)
            rec(idx, k_left - 1, nw)
            chosen.pop()

    chosen = []
    rec(0, k, list(w))
    return out


def lowest_derivative_index(f_weight, d):
    """Exponent vector formed by the last d unit entries of the weight.

    Reading the weight (a_1,...,a_n) as the multiset with a_i copies of i,
    the result collects the final d copies; differentiating by it is the
    dominance-lowest possible partial derivative on that weight space.
    """
    w = list(f_weight)
    if sum(w) < d:
        raise ValueError("weight too small")
    alpha = [0] * len(w)
    need = d
    for i in range(len(w) - 1, -1, -1):
        take = min(need, w[i])
        alpha[i] = take
        need -= take
        if need == 0:
            break
    return tuple(alpha)


def _sub_multisets(factors, p):
    """Distinct p-element sub-multisets of a sorted factor tuple."""
    uniq = []
    i = 0
    while i < len(factors):
        j = i
        while j < len(factors) and factors[j] == factors[i]:
            j += 1
        uniq.append((factors[i], j - i))
        i = j
    res = []

    def rec(idx, left, cur):
        if left == 0:
            res.append(tuple(cur))
            return
        if idx == len(uniq):
            return
        f, m = uniq[idx]
        for take in range(min(m, left), -1, -1):
            rec(idx + 1, left - take, cur + [f] * take)

    rec(0, p, [])
    return res


def polarize(f: SymPoly, split):
    """Polarization F_{split}: map from monomial tuples to rationals.

    For split (k1, k2) this is  sum_alpha  (d^p f / d e^alpha) (x) e^alpha
    with alpha running over the degree-k2 monomials in the S^d V basis
    elements, exactly the formula used to characterize prolongations.
    Longer splits iterate the two-slot map on the left factor; all uses
    are kernel or membership tests, which do not depend on normalization.
    """
    split = tuple(split)
    if sum(split) != f.k:
        raise ValueError(f"split {split} must sum to k={f.k}")
    if any(s < 0 for s in split):
        raise ValueError("split parts must be nonnegative")
    if len(split) == 1:
        return {(m,): c for m, c in f.terms.items()}
    p = split[-1]
    # gather d^p f / d e^alpha for every p-element factor multiset alpha
    partials = {}
    for m, c in f.terms.items():
        for alpha in _sub_multisets(m, p):
            coeff = c * _derivative_count(m, alpha)
            rest = _remove_multiset(m, alpha)
            bucket = partials.setdefault(alpha, {})
            nc = bucket.get(rest, 0) + coeff
            if nc:
                bucket[rest] = nc
            else:
                bucket.pop(rest, None)
    out = {}
    for alpha, bucket in partials.items():
        g = SymPoly(f.k - p, f.d, f.n, bucket)
        if g.is_zero():
            continue
        for tup, c in polarize(g, split[:-1]).items():
            key = tup + (alpha,)
            nc = out.get(key, 0) + c
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
    return out


def _derivative_count(m, alpha):
    """Coefficient produced by iterated differentiation of m by alpha."""
    total = 1
    counts = {}
    for b in alpha:
        avail = m.count(b) - counts.get(b, 0)
        total *= avail
        counts[b] = counts.get(b, 0) + 1
    return total


def _remove_multiset(m, alpha):
    lst = list(m)
    for b in alpha:
        lst.remove(b)
    return tuple(lst)
