"""Raising and lowering operators on S^k(S^d V) and highest weight vectors.

E^i_j sends e_j to e_i and acts as a derivation through both levels of
S^k(S^d V).  A highest weight vector is annihilated by the simple raising
operators E^i_{i+1}; killing those kills every E^i_j with i < j.

Highest-weight-space bases are computed two ways:

* weight spaces up to the exact cap: rational nullspace of the stacked
  simple-raising system;
* larger spaces: a Pieri lift.  Each candidate vector is produced from an
  ancestor's highest weight vector one level down by solving a small
  slice-local system modulo a word-sized prime, rationally reconstructed,
  and then verified to be a highest weight vector in exact arithmetic.
  Modular arithmetic only ever proposes vectors; exact verification
  admits them, so results do not depend on the primes.
"""

from fractions import Fraction
from functools import lru_cache

from . import linalg, plethysm
from .budget import get_config
from .partitions import horizontal_strip_predecessors, normalize
from .symalg import (
    SymPoly,
    enumerate_weight_space,
    expvecs,
    make_monomial,
    monomial_key,
    weight_of,
)
from .tableaux import weight_multiplicity_in_irrep


def apply_operator(i, j, f: SymPoly) -> SymPoly:
    """E^i_j acting as a derivation (1-indexed; sends e_j to e_i)."""
    if i == j:
        raise ValueError("E^i_j requires i != j")
    if max(i, j) > f.n:
        raise ValueError("operator index exceeds variable count")
    i -= 1
    j -= 1
    out = {}
    for mono, c in f.terms.items():
        idx = 0
        while idx < len(mono):
            fac = mono[idx]
            run = 1
            while idx + run < len(mono) and mono[idx + run] == fac:
                run += 1
            if fac[j]:
                nf = list(fac)
                nf[j] -= 1
                nf[i] += 1
                nm = make_monomial(mono[:idx] + mono[idx + run :] + (tuple(nf),) * 1 + (fac,) * (run - 1))
                coeff = c * run * fac[j]
                nc = out.get(nm, 0) + coeff
                if nc:
                    out[nm] = nc
                else:
                    out.pop(nm, None)
            idx += run
    return SymPoly(f.k, f.d, f.n, out)


def raising_operators(n):
    """The n-1 simple raising operators as (i, j) pairs."""
    return [(i, i + 1) for i in range(1, n)]


def all_raising_operators(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def is_hwv(f: SymPoly, simple_only=True) -> bool:
    """True when every raising operator annihilates f."""
    if f.is_zero():
        return True
    ops = raising_operators(f.n) if simple_only else all_raising_operators(f.n)
    return all(apply_operator(i, j, f).is_zero() for i, j in ops)


def normalized_lower(alpha, j):
    """Move one unit of alpha from slot j to slot j+1 (1-indexed)."""
    if alpha[j - 1] < 1:
        raise ValueError(f"slot {j} of {alpha} is empty")
    a = list(alpha)
    a[j - 1] -= 1
    a[j] += 1
    return tuple(a)


def commutator_check(f: SymPoly, alpha, j) -> bool:
    """Verify the raising/derivative commutator identity on f.

    d(E f)/d e^alpha - E (df/d e^alpha) = (1 + alpha_{j+1}) df/d e^beta
    where E = E^j_{j+1} and beta is alpha with one unit moved from slot j
    to slot j+1; the right side is zero when slot j is empty.
    """
    alpha = tuple(alpha)
    if sum(alpha) != f.d:
        raise ValueError("alpha must have degree d")
    lhs = apply_operator(j, j + 1, f).derivative(alpha) - apply_operator(j, j + 1, f.derivative(alpha))
    if alpha[j - 1] >= 1:
        beta = normalized_lower(alpha, j)
        rhs = f.derivative(beta).scaled(1 + alpha[j])
    else:
        rhs = SymPoly.zero(f.k - 1, f.d, f.n)
    return lhs == rhs


def hwv_chow2_det(k, n) -> SymPoly:
    """Determinant of the k x k matrix with entries e_i e_j, in S^k(S^2 V)."""
    if n < k:
        raise ValueError("need n >= k")
    from itertools import permutations

    terms = {}
    for perm in permutations(range(k)):
        sign = _perm_sign(perm)
        factors = []
        for i, pi in enumerate(perm):
            f = [0] * n
            f[i] += 1
            f[pi] += 1
            factors.append(tuple(f))
        m = make_monomial(factors)
        nc = terms.get(m, 0) + sign
        if nc:
            terms[m] = nc
        else:
            terms.pop(m, None)
    return SymPoly(k, 2, n, terms)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def hwv_5421():
    """The printed highest weight vector of weight (5,4,2,1) in S^4(S^3 C^4).

    Built from the published degree-3 polynomial h4 by the published
    recipes h3 = -E^1_2 h4, h1 = (1/2) E^1_2 E^1_2 h4, h2 = E^2_3 E^1_2 h4,
    then f = e2^2 e4 h1 + e1 e3 e4 h2 + e1 e2 e4 h3 + e1^2 e4 h4.
    Returns (f, h1, h2, h3, h4).
    """
    n = 4

    def mono(*factors):
        return make_monomial(tuple(tuple(f) for f in factors))

    h4 = SymPoly(
        3,
        3,
        n,
        {
            mono((2, 1, 0, 0), (0, 3, 0, 0), (1, 0, 2, 0)): 1,
            mono((1, 2, 0, 0), (1, 2, 0, 0), (1, 0, 2, 0)): -1,
            mono((2, 1, 0, 0), (1, 1, 1, 0), (0, 2, 1, 0)): -1,
            mono((2, 0, 1, 0), (1, 2, 0, 0), (0, 2, 1, 0)): 1,
            mono((1, 2, 0, 0), (1, 1, 1, 0), (1, 1, 1, 0)): -1,
            mono((2, 0, 1, 0), (1, 1, 1, 0), (0, 3, 0, 0)): -1,
        },
    )
    h3 = apply_operator(1, 2, h4).scaled(-1)
    h1 = apply_operator(1, 2, apply_operator(1, 2, h4)).scaled(Fraction(1, 2))
    h2 = apply_operator(2, 3, apply_operator(1, 2, h4))
    f = (
        h1.times_factor((0, 2, 0, 1))
        + h2.times_factor((1, 0, 1, 1))
        + h3.times_factor((1, 1, 0, 1))
        + h4.times_factor((2, 0, 0, 1))
    )
    return f, h1, h2, h3, h4


# ---------------------------------------------------------------------------
# highest weight space solver


def _raising_rows(k, d, n, w, basis):
    """Rows of the stacked simple-raising system on the given weight basis."""
    index = {m: c for c, m in enumerate(basis)}
    rows = {}
    for op_i in range(1, n):
        if w[op_i] < 1:  # target weight would be negative: operator is zero here
            continue
        for col, mono in enumerate(basis):
            img = apply_operator(op_i, op_i + 1, SymPoly(k, d, n, {mono: 1}))
            for tm, c in img.terms.items():
                rows.setdefault((op_i, tm), {})[col] = c
    return list(rows.values())


class HwvSolver:
    """Cached exact highest-weight-space bases, any level, any weight.

    Bases are integer-primitive SymPolys at n = length(lambda), verified
    against the simple raising operators in exact arithmetic.
    """

    def __init__(self):
        self._basis = {}
        self._slices = {}

    def clear(self):
        self._basis.clear()
        self._slices.clear()

    # -- public ------------------------------------------------------------

    def basis(self, k, d, lam):
        """Exact hwv basis of S_lam V inside S^k(S^d C^len(lam))."""
        lam = normalize(lam)
        key = (k, d, lam)
        if key in self._basis:
            return self._basis[key]
        if sum(lam) != k * d:
            raise ValueError("|lambda| must equal k*d")
        n = len(lam)
        m = plethysm.decompose_at("sym_sym", k, d, n, lam)
        if m == 0:
            res = ()
        else:
            cfg = get_config()
            dim = plethysm.weight_multiplicity("sym_sym", k, d, n, lam)
            if dim <= cfg.exact_cap or k == 1:
                res = self._direct(k, d, lam, m)
            else:
                res = self._lift(k, d, lam, m)
        self._basis[key] = res
        return res

    # -- direct rational solve ----------------------------------------------

    def _direct(self, k, d, lam, m):
        n = len(lam)
        basis = enumerate_weight_space(k, d, n, lam)
        rows = _raising_rows(k, d, n, lam, basis)
        null = linalg.nullspace_exact(rows, range(len(basis)))
        vecs = []
        for v in null:
            poly = SymPoly(k, d, n, {basis[c]: x for c, x in v.items()}).primitive()
            assert is_hwv(poly), "direct solve produced a non-hwv"
            vecs.append(poly)
        assert len(vecs) == m, f"hwv count {len(vecs)} != plethysm multiplicity {m} at {lam}"
        vecs.sort(key=lambda f: monomial_key(f.leading_monomial()), reverse=True)
        return tuple(vecs)

    # -- Pieri lift ----------------------------------------------------------

    def _lift(self, k, d, lam, m):
        n = len(lam)
        found = []
        rr = linalg.ExactRREF()
        ancestors = [
            c
            for c in horizontal_strip_predecessors(lam, d)
            if plethysm.decompose_at("sym_sym", k - 1, d, len(c), c) > 0
        ]
        ancestors.sort(reverse=True)
        for c in ancestors:
            for copy_idx, h in enumerate(self.basis(k - 1, d, c)):
                f = self._pieri_lift_one(h.embed(n), (k - 1, d, c, copy_idx, n), lam)
                if f is None or f.is_zero():
                    continue
                if rr.add(dict(f.terms)) is not None:
                    found.append(f)
                if len(found) == m:
                    return tuple(found)
        raise ArithmeticError(f"Pieri lift span deficient at {lam}: got {len(found)} of {m}")

    def _pieri_lift_one(self, h, hkey, lam):
        """One hwv of weight lam at level k+1 from the copy generated by h.

        Solves for the weight-lam highest weight vector of (copy of S_c)
        tensor S^d V over slice coordinates, then multiplies the two slots
        together; the product is exactly verified before being returned.
        """
        d = h.d
        n = h.n
        lam_w = tuple(lam) + (0,) * (n - len(lam))
        c_part = normalize(h.weight())
        betas = []
        for b in expvecs(d, n):
            w = tuple(lam_w[i] - b[i] for i in range(n))
            if any(x < 0 for x in w):
                continue
            if weight_multiplicity_in_irrep(c_part, w) > 0:
                betas.append(b)
        unknowns = []
        svecs = {}
        for b in betas:
            w = tuple(lam_w[i] - b[i] for i in range(n))
            sl = self.slice_basis(hkey, h, w)
            for t, s in enumerate(sl):
                unknowns.append((b, t))
                svecs[(b, t)] = s
        if not unknowns:
            return None
        for p in get_config().primes:
            f = self._lift_solve(h, lam_w, betas, unknowns, svecs, p)
            if f is not None:
                return f
        return None

    def _lift_solve(self, h, lam_w, betas, unknowns, svecs, p):
        n = h.n
        beta_set = set(betas)
        rows = {}
        for u in unknowns:
            b, t = u
            s = svecs[u]
            for i in range(n - 1):
                # E_i applied to the first slot
                img = apply_operator(i + 1, i + 2, s)
                for mono, cf in img.terms.items():
                    rows.setdefault((i, b, mono), {})[u] = cf % p
                # E_i applied to the second slot e^b
                if b[i + 1] >= 1:
                    delta = list(b)
                    delta[i] += 1
                    delta[i + 1] -= 1
                    delta = tuple(delta)
                    for mono, cf in s.terms.items():
                        r = rows.setdefault((i, delta, mono), {})
                        r[u] = (r.get(u, 0) + cf * b[i + 1]) % p
        _, null = linalg.nullspace_mod_p(rows.values(), unknowns, p)
        for vec in null:
            rec = linalg.reconstruct_vector(vec, p)
            if rec is None:
                continue
            terms = {}
            for (b, t), x in rec.items():
                if not x:
                    continue
                s = svecs[(b, t)]
                for mono, cf in s.terms.items():
                    nm = make_monomial(mono + (b,))
                    nc = terms.get(nm, 0) + x * cf
                    if nc:
                        terms[nm] = nc
                    else:
                        terms.pop(nm, None)
            f = SymPoly(h.k + 1, h.d, n, terms)
            if f.is_zero():
                continue
            if weight_of(f.leading_monomial()) != lam_w:
                continue
            f = f.primitive()
            if is_hwv(f):
                return f
        return None

    # -- weight slices of a single irreducible copy --------------------------

    def slice_basis(self, hkey, h, w):
        """Basis of the weight-w slice of the copy of S_c generated by h.

        Built by descending with simple lowering operators from the top;
        mod-p independence selects the basis (sound: independence mod p
        implies independence over Q) and the slice dimension is checked
        against the Kostka number of the sorted weight.
        """
        w = tuple(w)
        key = (hkey, w)
        if key in self._slices:
            return self._slices[key]
        n = h.n
        c_part = normalize(h.weight())
        expected = weight_multiplicity_in_irrep(c_part, w)
        if expected == 0:
            res = ()
        elif w == tuple(c_part) + (0,) * (n - len(c_part)):
            res = (h,)
        else:
            cands = []
            for j in range(n - 1):
                if w[j + 1] < 1:
                    continue
                wp = list(w)
                wp[j] += 1
                wp[j + 1] -= 1
                wp = tuple(wp)
                if weight_multiplicity_in_irrep(c_part, wp) == 0:
                    continue
                for v in self.slice_basis(hkey, h, wp):
                    img = apply_operator(j + 2, j + 1, v)
                    if not img.is_zero():
                        cands.append(img.primitive())
            res = self._pick_basis(cands, expected, w)
        self._slices[key] = res
        return res

    def _pick_basis(self, cands, expected, w):
        for p in get_config().primes:
            idxs = linalg.select_independent_mod_p([c.terms for c in cands], p, expected)
            if len(idxs) == expected:
                return tuple(cands[i] for i in idxs)
        # certify with an exact elimination before concluding deficiency
        rr = linalg.ExactRREF()
        picked = []
        for i, c in enumerate(cands):
            if rr.add(dict(c.terms)) is not None:
                picked.append(i)
        if len(picked) != expected:
            raise ArithmeticError(f"slice dimension {len(picked)} != Kostka {expected} at weight {w}")
        return tuple(cands[i] for i in picked)


_solver = HwvSolver()


def default_solver() -> HwvSolver:
    return _solver


def clear_caches():
    _solver.clear()


def hwv_space(k, d, n, lam):
    """Basis of highest weight vectors of weight lam in S^k(S^d C^n).

    List length equals the plethysm multiplicity; vectors are integer
    primitive with positive leading coefficient, embedded at the requested
    n (they never involve variables beyond length(lambda)).
    """
    lam = normalize(lam)
    if sum(lam) != k * d:
        raise ValueError("|lambda| must equal k*d")
    if len(lam) > n:
        raise ValueError("length(lambda) exceeds n")
    return [f.embed(n) for f in _solver.basis(k, d, lam)]
