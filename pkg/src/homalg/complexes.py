"""Bounded complexes and the elementary complex calculus.

Grading is homological: differentials drop degree by one.  A complex stores
modules for degrees in [lo, hi] and matrices d_n : C_n -> C_{n-1} for
lo < n <= hi; zero modules at the ends are trimmed so inf/sup reporting is
canonical.  The zero complex has lo = 0, hi = -1.

Sign conventions used throughout:
  shift      (ΣC)_n = C_{n-1}, d_Σ = -d
  cone       cone(f)_n = X_{n-1} ⊕ Y_n, d(x, y) = (-d_X x, f x + d_Y y)
  dual       (X^∨)_n = (X_{-n})^∨, differentials transposed, no sign
"""

import itertools

from . import linalg
from .errors import AlgebraMismatch, NotChainMap, ShapeMismatch
from .module import (Module, ModuleMap, direct_sum_modules, free_module,
                     localize_module, matlis_dual_module, quotient_module,
                     submodule, zero_module)

NEG_INF = float("-inf")
POS_INF = float("inf")


class GradedModule:
    """Homology-style graded object: a Module per degree, bounded."""

    __slots__ = ("algebra", "lo", "hi", "modules")

    def __init__(self, algebra, modules):
        self.algebra = algebra
        degs = [n for n, M in modules.items() if M.dim > 0]
        if not degs:
            self.lo, self.hi = 0, -1
            self.modules = {}
        else:
            self.lo, self.hi = min(degs), max(degs)
            self.modules = {n: modules[n] for n in range(self.lo, self.hi + 1)
                            if n in modules}

    def module(self, n):
        M = self.modules.get(n)
        return M if M is not None else zero_module(self.algebra)

    def dim(self, n):
        return self.module(n).dim

    def is_zero(self):
        return not self.modules or all(M.dim == 0
                                       for M in self.modules.values())

    def inf(self):
        for n in range(self.lo, self.hi + 1):
            if self.dim(n) > 0:
                return n
        return POS_INF

    def sup(self):
        for n in range(self.hi, self.lo - 1, -1):
            if self.dim(n) > 0:
                return n
        return NEG_INF

    def amp(self):
        if self.is_zero():
            return NEG_INF
        return self.sup() - self.inf()

    def total_dim(self):
        return sum(M.dim for M in self.modules.values())

    def __repr__(self):
        if self.is_zero():
            return "GradedModule(0)"
        dims = ", ".join("%d: %d" % (n, self.dim(n))
                         for n in range(self.lo, self.hi + 1))
        return "GradedModule(%s)" % dims


class Complex:

    __slots__ = ("algebra", "lo", "hi", "modules", "diffs", "label")

    def __init__(self, algebra, modules, diffs, label=None, check=True):
        self.algebra = algebra
        self.label = label
        degs = sorted(n for n, M in modules.items() if M.dim > 0)
        if not degs:
            self.lo, self.hi = 0, -1
            self.modules = {}
            self.diffs = {}
            return
        lo, hi = degs[0], degs[-1]
        self.lo, self.hi = lo, hi
        self.modules = {}
        for n in range(lo, hi + 1):
            M = modules.get(n)
            self.modules[n] = M if M is not None else zero_module(algebra)
        self.diffs = {}
        F = algebra.field
        for n in range(lo + 1, hi + 1):
            src = self.modules[n]
            tgt = self.modules[n - 1]
            d = diffs.get(n)
            if d is None or tgt.dim == 0 or src.dim == 0:
                d = linalg.zeros(F, tgt.dim, src.dim)
            if len(d) != tgt.dim or (tgt.dim and src.dim and
                                     any(len(r) != src.dim for r in d)):
                raise ShapeMismatch("differential %d has the wrong shape" % n)
            self.diffs[n] = tuple(tuple(r) for r in d)
        if check:
            self._check()

    def _check(self):
        F = self.algebra.field
        for n in range(self.lo + 1, self.hi + 1):
            ModuleMap(self.modules[n], self.modules[n - 1], self.diffs[n])
            if n + 1 <= self.hi:
                comp = linalg.mat_mul(F, self.diffs[n], self.diffs[n + 1])
                if not linalg.is_zero_mat(F, comp):
                    raise ValueError("d%d after d%d is nonzero" % (n, n + 1))

    def is_zero(self):
        return not self.modules

    def module(self, n):
        M = self.modules.get(n)
        return M if M is not None else zero_module(self.algebra)

    def dim(self, n):
        return self.module(n).dim

    def diff(self, n):
        """d_n : C_n -> C_{n-1}; zero matrix of the right shape off range."""
        d = self.diffs.get(n)
        if d is not None:
            return [list(r) for r in d]
        return linalg.zeros(self.algebra.field, self.dim(n - 1), self.dim(n))

    def diff_map(self, n):
        return ModuleMap(self.module(n), self.module(n - 1), self.diff(n),
                         check=False)

    def total_dim(self):
        return sum(M.dim for M in self.modules.values())

    def __repr__(self):
        if self.label:
            return self.label
        if self.is_zero():
            return "Complex(0)"
        dims = ", ".join("%d: %d" % (n, self.dim(n))
                         for n in range(self.lo, self.hi + 1))
        return "Complex(%s)" % dims


class ChainMap:
    """Degreewise maps commuting with the differentials."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source, target, mats, check=True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("chain map between different algebras")
        self.source = source
        self.target = target
        self.mats = {}
        F = source.algebra.field
        for n, m in mats.items():
            if source.dim(n) == 0 or target.dim(n) == 0:
                continue
            self.mats[n] = tuple(tuple(r) for r in m)
        if check:
            self._check()

    def mat(self, n):
        m = self.mats.get(n)
        if m is not None:
            return [list(r) for r in m]
        return linalg.zeros(self.source.algebra.field,
                            self.target.dim(n), self.source.dim(n))

    def _check(self):
        F = self.source.algebra.field
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        for n in range(lo, hi + 1):
            m = self.mat(n)
            if self.source.dim(n) and self.target.dim(n):
                try:
                    ModuleMap(self.source.module(n), self.target.module(n), m)
                except ValueError:
                    raise NotChainMap("degree %d map is not equivariant" % n)
            lhs = linalg.mat_mul(F, self.target.diff(n), m)
            rhs = linalg.mat_mul(F, self.mat(n - 1), self.source.diff(n))
            if not linalg.mat_eq(F, lhs, rhs):
                raise NotChainMap("square at degree %d does not commute" % n)


def zero_complex(A):
    return Complex(A, {}, {}, check=False)


def module_complex(M, degree=0, label=None):
    return Complex(M.algebra, {degree: M}, {}, label=label, check=False)


def free_complex(A, ranks, diffs_over_A, label=None, check=True):
    """Complex of free modules from ranks {n: r_n} and differentials given
    as matrices over A (r_{n-1} x r_n)."""
    from .module import free_map_matrix
    modules = {n: free_module(A, r) for n, r in ranks.items() if r > 0}
    diffs = {}
    for n, rows in diffs_over_A.items():
        if rows and any(rows):
            diffs[n] = free_map_matrix(A, rows)
    return Complex(A, modules, diffs, label=label, check=check)


def shift(C, n, label=None):
    """Σ^n C: degree i holds C_{i-n}; differentials pick up (-1)^n."""
    if C.is_zero():
        return C
    if n == 0 and label is None:
        return C
    F = C.algebra.field
    modules = {i + n: M for i, M in C.modules.items()}
    sign = F.one() if n % 2 == 0 else F.neg(F.one())
    diffs = {}
    for i, d in C.diffs.items():
        diffs[i + n] = [[F.mul(sign, a) for a in row] for row in d]
    return Complex(C.algebra, modules, diffs, label=label, check=False)


def cone(f, label=None):
    """Mapping cone of a chain map."""
    X, Y = f.source, f.target
    A = X.algebra
    F = A.field
    lo = min(X.lo + 1, Y.lo) if not X.is_zero() else Y.lo
    hi = max(X.hi + 1, Y.hi) if not X.is_zero() else Y.hi
    if X.is_zero() and Y.is_zero():
        return zero_complex(A)
    modules = {}
    for n in range(lo, hi + 1):
        parts = []
        if X.dim(n - 1):
            parts.append(X.module(n - 1))
        if Y.dim(n):
            parts.append(Y.module(n))
        if parts:
            modules[n] = direct_sum_modules(parts) if len(parts) > 1 \
                else parts[0]
    diffs = {}
    for n in range(lo + 1, hi + 1):
        rs = X.dim(n - 1) + Y.dim(n)
        rt = X.dim(n - 2) + Y.dim(n - 1)
        if rs == 0 or rt == 0:
            continue
        m = linalg.zeros(F, rt, rs)
        dx = X.diff(n - 1)
        for i in range(X.dim(n - 2)):
            for j in range(X.dim(n - 1)):
                m[i][j] = F.neg(dx[i][j])
        fm = f.mat(n - 1)
        for i in range(Y.dim(n - 1)):
            for j in range(X.dim(n - 1)):
                m[X.dim(n - 2) + i][j] = fm[i][j]
        dy = Y.diff(n)
        for i in range(Y.dim(n - 1)):
            for j in range(Y.dim(n)):
                m[X.dim(n - 2) + i][X.dim(n - 1) + j] = dy[i][j]
        diffs[n] = m
    return Complex(A, modules, diffs, label=label, check=False)


def koszul(A, elems, label=None):
    """Koszul complex on a list of algebra elements: exterior generators
    e_S for subsets S, d(e_S) = Σ_j (-1)^{pos} x_j e_{S\\j}."""
    g = len(elems)
    F = A.field
    if g == 0:
        return module_complex(free_module(A, 1), 0, label=label)
    subsets = {n: sorted(itertools.combinations(range(g), n))
               for n in range(g + 1)}
    index = {n: {S: i for i, S in enumerate(subsets[n])}
             for n in range(g + 1)}
    modules = {n: free_module(A, len(subsets[n])) for n in range(g + 1)}
    diffs = {}
    d = A.dim
    for n in range(1, g + 1):
        m = linalg.zeros(F, len(subsets[n - 1]) * d, len(subsets[n]) * d)
        for ci, S in enumerate(subsets[n]):
            for pos, j in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                ri = index[n - 1][T]
                x = elems[j] if pos % 2 == 0 else \
                    tuple(F.neg(a) for a in elems[j])
                blk = A.mult_matrix(x)
                for r in range(d):
                    for c in range(d):
                        m[ri * d + r][ci * d + c] = blk[r][c]
        diffs[n] = m
    return Complex(A, modules, diffs, label=label, check=False)


def direct_sum_complexes(comps, label=None):
    comps = [C for C in comps if not C.is_zero()]
    if not comps:
        raise ValueError("empty direct sum needs an algebra")
    A = comps[0].algebra
    F = A.field
    lo = min(C.lo for C in comps)
    hi = max(C.hi for C in comps)
    modules = {}
    diffs = {}
    for n in range(lo, hi + 1):
        parts = [C.module(n) for C in comps if C.dim(n) > 0]
        if parts:
            modules[n] = direct_sum_modules(parts) if len(parts) > 1 \
                else parts[0]
    for n in range(lo + 1, hi + 1):
        rt = sum(C.dim(n - 1) for C in comps)
        rs = sum(C.dim(n) for C in comps)
        if rt == 0 or rs == 0:
            continue
        m = linalg.zeros(F, rt, rs)
        ro = co = 0
        for C in comps:
            dC = C.diff(n)
            for i in range(C.dim(n - 1)):
                for j in range(C.dim(n)):
                    m[ro + i][co + j] = dC[i][j]
            ro += C.dim(n - 1)
            co += C.dim(n)
        diffs[n] = m
    return Complex(A, modules, diffs, label=label, check=False)


def matlis_dual(X, label=None):
    """Degreewise k-linear dual: modules get transposed actions; complexes
    also flip degree n to -n and transpose the differentials."""
    if isinstance(X, Module):
        return matlis_dual_module(X, label=label)
    A = X.algebra
    if X.is_zero():
        return zero_complex(A)
    modules = {-n: matlis_dual_module(M) for n, M in X.modules.items()}
    diffs = {}
    for n in range(X.lo + 1, X.hi + 1):
        # d_n : X_n -> X_{n-1} dualizes to (X^∨)_{-(n-1)} -> (X^∨)_{-n}
        if X.dim(n) and X.dim(n - 1):
            diffs[-(n - 1)] = linalg.transpose(X.diffs[n])
    return Complex(A, modules, diffs, label=label, check=False)


def homology_ranks(C):
    """dim H_n for each degree, by rank counting."""
    if C.is_zero():
        return {}
    F = C.algebra.field
    ranks = {}
    for n in range(C.lo, C.hi + 1):
        ranks[n] = linalg.rank(F, C.diff(n)) if n > C.lo else 0
    out = {}
    for n in range(C.lo, C.hi + 1):
        r_in = ranks.get(n + 1, 0)
        r_out = ranks.get(n, 0)
        out[n] = C.dim(n) - r_in - r_out
    return out


def inf_homology(C):
    hr = homology_ranks(C)
    degs = [n for n, d in hr.items() if d > 0]
    return min(degs) if degs else POS_INF


def sup_homology(C):
    hr = homology_ranks(C)
    degs = [n for n, d in hr.items() if d > 0]
    return max(degs) if degs else NEG_INF


def is_exact(C):
    hr = homology_ranks(C)
    return all(d == 0 for d in hr.values())


def homology(C):
    """Homology as a GradedModule with the induced action."""
    A = C.algebra
    F = A.field
    if C.is_zero():
        return GradedModule(A, {})
    out = {}
    for n in range(C.lo, C.hi + 1):
        Cn = C.module(n)
        if Cn.dim == 0:
            continue
        if n > C.lo:
            rows = linalg.rows_to_dicts(F, C.diff(n))
            zvecs = [linalg.dict_to_vec(F, v, Cn.dim)
                     for v in linalg.sp_kernel(F, rows, Cn.dim)]
        else:
            zvecs = [linalg.dict_to_vec(F, {i: F.one()}, Cn.dim)
                     for i in range(Cn.dim)]
        if not zvecs:
            continue
        Z, incl = submodule(Cn, zvecs)
        # boundaries, written in the cycle submodule's coordinates; the
        # reduced echelon basis is canonical, so this echelon and the one
        # inside submodule() coincide row for row
        bnd = []
        if n + 1 <= C.hi and C.dim(n + 1):
            d1 = C.diff(n + 1)
            zech = linalg.Echelon(F, Cn.dim)
            for v in zvecs:
                zech.insert(linalg.vec_to_dict(F, v))
            for j in range(C.dim(n + 1)):
                col = [d1[i][j] for i in range(Cn.dim)]
                res, cs = zech.reduce_with_coeffs(
                    linalg.vec_to_dict(F, col))
                if res:
                    raise ValueError("boundary is not a cycle")
                bnd.append(cs)
        if bnd:
            Hn, _ = quotient_module(Z, bnd)
        else:
            Hn = Z
        out[n] = Hn
    return GradedModule(A, out)


def localize_complex(C, comp):
    """Component projection e*C over the factor algebra."""
    from .algebra import LocalFactorData, SubProduct
    if isinstance(comp, LocalFactorData):
        factor = comp.factor_algebra
    elif isinstance(comp, SubProduct):
        factor = comp.algebra
    else:
        raise TypeError("component data expected")
    if C.is_zero():
        return zero_complex(factor)
    F = C.algebra.field
    local = {}
    incls = {}
    projs = {}
    for n in range(C.lo, C.hi + 1):
        L, incl, proj = localize_module(C.module(n), comp)
        local[n] = L
        incls[n] = incl
        projs[n] = proj
    diffs = {}
    for n in range(C.lo + 1, C.hi + 1):
        if local[n].dim and local[n - 1].dim:
            diffs[n] = linalg.mat_mul(
                F, projs[n - 1], linalg.mat_mul(F, C.diff(n), incls[n]))
    return Complex(factor, local, diffs, check=False)


def support(X):
    """Components where the localized homology is nonzero."""
    A = X.algebra
    out = []
    if X.is_zero():
        return out
    for i, ld in enumerate(A.local_data()):
        L = localize_complex(X, ld)
        if not is_exact(L):
            out.append(i)
    return out


def truncate_good_below(C, t):
    """τ_{≥t}: degrees above t kept, degree t replaced by the cycles."""
    A = C.algebra
    F = A.field
    if C.is_zero() or t <= C.lo:
        return C
    if t > C.hi:
        return zero_complex(A)
    Ct = C.module(t)
    rows = linalg.rows_to_dicts(F, C.diff(t))
    zvecs = [linalg.dict_to_vec(F, v, Ct.dim)
             for v in linalg.sp_kernel(F, rows, Ct.dim)]
    modules = {n: C.module(n) for n in range(t + 1, C.hi + 1)}
    diffs = {n: C.diff(n) for n in range(t + 2, C.hi + 1)}
    if zvecs:
        Z, incl = submodule(Ct, zvecs)
        modules[t] = Z
        if t + 1 <= C.hi and C.dim(t + 1) and Z.dim:
            # factor d_{t+1} through the cycle submodule
            ech = linalg.Echelon(F, Ct.dim)
            for v in zvecs:
                ech.insert(linalg.vec_to_dict(F, v))
            d1 = C.diff(t + 1)
            m = linalg.zeros(F, Z.dim, C.dim(t + 1))
            for j in range(C.dim(t + 1)):
                col = [d1[i][j] for i in range(Ct.dim)]
                res, cs = ech.reduce_with_coeffs(linalg.vec_to_dict(F, col))
                if res:
                    raise ValueError("boundary is not a cycle")
                for i in range(Z.dim):
                    m[i][j] = cs[i]
            diffs[t + 1] = m
    return Complex(A, modules, diffs, check=False)
