"""Finite-dimensional commutative algebras and their local structure.

An Algebra is a multiplication table over an exact field.  Everything else
here is the idempotent machinery: nilradical, splitting of the semisimple
quotient into one-dimensional blocks, Newton lifting, and the component
(local factor) data that the resolution engine works over.

Algebras whose local factors have residue field bigger than the base field
are rejected at construction; that keeps the residue field literally equal
to k everywhere downstream.
"""

import sympy

from . import linalg, poly
from .errors import (FieldMismatch, IndexOutOfRange, NotIdempotent,
                     NotZeroDimensional, UnsupportedResidueField, ZeroRing)
from .field import Field


class Algebra:
    """Commutative unital algebra given by structure constants.

    mt[i][j] is the coordinate tuple of basis_i * basis_j; unit is the
    coordinate tuple of 1.  gens maps surface-syntax names to elements so
    scripts can write matrix entries as polynomials in the generators.
    """

    __slots__ = ("field", "dim", "basis_labels", "mt", "unit", "gens",
                 "label", "_mult_mats", "_local", "_prims")

    def __init__(self, field, basis_labels, mt, unit, gens=None, label=None,
                 check=True):
        self.field = field
        self.dim = len(basis_labels)
        if self.dim == 0:
            raise ZeroRing("the zero ring is not an algebra here")
        self.basis_labels = list(basis_labels)
        self.mt = tuple(tuple(tuple(v) for v in row) for row in mt)
        self.unit = tuple(unit)
        self.gens = dict(gens or {})
        self.label = label
        self._mult_mats = None
        self._local = None
        self._prims = None
        if check:
            self._check_axioms()
        # eager local analysis; raises UnsupportedResidueField when a factor
        # has a residue extension
        self.local_data()

    # -------------------------------------------------------- element level

    def zero_elem(self):
        return (self.field.zero(),) * self.dim

    def elem_from_coords(self, coords):
        return tuple(coords)

    def elem_add(self, x, y):
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def elem_sub(self, x, y):
        F = self.field
        return tuple(F.sub(a, b) for a, b in zip(x, y))

    def elem_scale(self, c, x):
        F = self.field
        return tuple(F.mul(c, a) for a in x)

    def elem_mul(self, x, y):
        F = self.field
        out = [F.zero()] * self.dim
        for i, a in enumerate(x):
            if F.is_zero(a):
                continue
            row = self.mt[i]
            for j, b in enumerate(y):
                if F.is_zero(b):
                    continue
                c = F.mul(a, b)
                tgt = row[j]
                for l, t in enumerate(tgt):
                    if not F.is_zero(t):
                        out[l] = F.add(out[l], F.mul(c, t))
        return tuple(out)

    def elem_pow(self, x, n):
        out = self.unit
        for _ in range(n):
            out = self.elem_mul(out, x)
        return out

    def is_zero_elem(self, x):
        F = self.field
        return all(F.is_zero(a) for a in x)

    def mult_matrix(self, x):
        """Matrix of left multiplication by x (columns are x * basis_j)."""
        F = self.field
        cols = []
        for j in range(self.dim):
            ej = [F.zero()] * self.dim
            ej[j] = F.one()
            cols.append(self.elem_mul(x, tuple(ej)))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def basis_mult_matrices(self):
        if self._mult_mats is None:
            F = self.field
            mats = []
            for i in range(self.dim):
                e = [F.zero()] * self.dim
                e[i] = F.one()
                mats.append(self.mult_matrix(tuple(e)))
            self._mult_mats = mats
        return self._mult_mats

    def parse_elem(self, text):
        """Element from infix polynomial text in the algebra's generators."""
        names = list(self.gens)
        p = poly.parse_poly(self.field, text, names)
        out = self.zero_elem()
        for mono, coeff in p.items():
            term = self.unit
            for name_i, e in enumerate(mono):
                for _ in range(e):
                    term = self.elem_mul(term, self.gens[names[name_i]])
            out = self.elem_add(out, self.elem_scale(coeff, term))
        return out

    def elem_str(self, x):
        F = self.field
        parts = []
        for a, lbl in zip(x, self.basis_labels):
            if F.is_zero(a):
                continue
            s = F.to_str(a)
            parts.append(lbl if s == "1" and lbl != "1" else
                         (s if lbl == "1" else s + "*" + lbl))
        return " + ".join(parts) if parts else "0"

    # ------------------------------------------------------------ structure

    def _check_axioms(self):
        F = self.field
        n = self.dim
        for i in range(n):
            for j in range(i):
                if self.mt[i][j] != self.mt[j][i]:
                    raise ValueError("multiplication not commutative at "
                                     "(%d, %d)" % (i, j))
        basis = []
        for i in range(n):
            e = [F.zero()] * n
            e[i] = F.one()
            basis.append(tuple(e))
        for i in range(n):
            if self.elem_mul(self.unit, basis[i]) != basis[i]:
                raise ValueError("unit axiom fails on basis %d" % i)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.elem_mul(self.mt[i][j], basis[k])
                    right = self.elem_mul(basis[i], self.mt[j][k])
                    if left != right:
                        raise ValueError("associativity fails at (%d,%d,%d)"
                                         % (i, j, k))

    def check_associativity(self):
        self._check_axioms()
        return True

    def nilradical_basis(self):
        """Echelonized basis of the nilradical.

        char 0: radical of the trace form tr(L_x L_y).
        char p: kernel of an iterated Frobenius, which is F_p-linear.
        """
        F = self.field
        n = self.dim
        if F.p == 0:
            mats = self.basis_mult_matrices()
            T = [[_trace(F, linalg.mat_mul(F, mats[i], mats[j]))
                  for j in range(n)] for i in range(n)]
            ker = linalg.kernel(F, T)
            return [tuple(v) for v in ker]
        frob_cols = []
        for i in range(n):
            e = [F.zero()] * n
            e[i] = F.one()
            frob_cols.append(self.elem_pow(tuple(e), F.p))
        phi = [[frob_cols[j][i] for j in range(n)] for i in range(n)]
        m = 1
        power = phi
        while F.p ** m < n:
            power = linalg.mat_mul(F, power, phi)
            m += 1
        ker = linalg.kernel(F, power)
        return [tuple(v) for v in ker]

    def primitive_idempotents(self):
        """The complete set of orthogonal primitive idempotents, in a
        canonical (coordinate-sorted) order."""
        if self._prims is None:
            self._prims = _compute_primitive_idempotents(self)
        return list(self._prims)

    def local_data(self):
        """LocalFactorData per primitive idempotent, same order."""
        if self._local is None:
            prims = self.primitive_idempotents()
            if len(prims) == 1:
                self._local = [_identity_local_factor(self)]
            else:
                self._local = [_build_local_factor(self, e, i)
                               for i, e in enumerate(prims)]
        return list(self._local)

    def n_components(self):
        return len(self.primitive_idempotents())

    def is_local(self):
        return self.n_components() == 1

    def __repr__(self):
        return self.label or ("Algebra(dim=%d over %r)"
                              % (self.dim, self.field))


def _trace(F, M):
    t = F.zero()
    for i in range(len(M)):
        t = F.add(t, M[i][i])
    return t


class Idempotent:
    """An idempotent element together with the set of components it covers."""

    __slots__ = ("algebra", "coords", "component_mask")

    def __init__(self, algebra, coords, component_mask):
        self.algebra = algebra
        self.coords = tuple(coords)
        self.component_mask = frozenset(component_mask)

    def __repr__(self):
        return "Idempotent(%s)" % self.algebra.elem_str(self.coords)

    def __eq__(self, other):
        return (isinstance(other, Idempotent)
                and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))


class LocalFactorData:
    """One local factor A*e of an algebra: the factor as an algebra of its
    own, the radical, and the maps in and out of the parent."""

    __slots__ = ("parent", "index", "idempotent", "factor_algebra",
                 "radical_basis", "residue_field_dim", "projection",
                 "embedding", "residue_functional")

    def __init__(self, parent, index, idempotent, factor_algebra,
                 radical_basis, projection, embedding, residue_functional):
        self.parent = parent
        self.index = index
        self.idempotent = idempotent
        self.factor_algebra = factor_algebra
        self.radical_basis = radical_basis
        self.residue_field_dim = factor_algebra.dim - len(radical_basis)
        self.projection = projection      # parent coords -> factor coords
        self.embedding = embedding        # factor coords -> parent coords
        self.residue_functional = residue_functional  # factor -> k

    def is_unit(self, x):
        """x in the factor algebra is a unit iff nonzero mod the radical."""
        F = self.factor_algebra.field
        return not F.is_zero(self.residue_value(x))

    def residue_value(self, x):
        F = self.factor_algebra.field
        s = F.zero()
        for a, c in zip(x, self.residue_functional):
            if not F.is_zero(a) and not F.is_zero(c):
                s = F.add(s, F.mul(a, c))
        return s


def _min_poly_coeffs(A, sub_basis, x):
    """Monic minimal polynomial of x inside the span of sub_basis (which is
    a unital subalgebra containing x); returns the coefficient list
    [c_0, ..., c_{k-1}] with x^k = sum c_i x^i."""
    F = A.field
    powers = [sub_basis[0]]  # the sub-unit, supplied first
    cur = sub_basis[0]
    while True:
        cur = A.elem_mul(cur, x)
        rows = [linalg.vec_to_dict(F, [p[i] for p in powers])
                for i in range(A.dim)]
        rhs = linalg.vec_to_dict(F, cur)
        sol = linalg.sp_solve(F, rows, len(powers), rhs)
        if sol is not None:
            return [sol.get(i, F.zero()) for i in range(len(powers))]
        powers.append(cur)


def _factor_roots(F, coeffs):
    """Roots in k of the monic polynomial t^k - sum coeffs_i t^i, via exact
    univariate factorization.  Raises UnsupportedResidueField when an
    irreducible factor of degree > 1 shows up."""
    t = sympy.Symbol("t")
    k = len(coeffs)
    if F.p == 0:
        expr = t**k - sum(sympy.Rational(int(c.numerator), int(c.denominator))
                          * t**i for i, c in enumerate(coeffs))
        fac = sympy.Poly(expr, t, domain="QQ").factor_list()
    else:
        expr = t**k - sum(int(c) * t**i for i, c in enumerate(coeffs))
        fac = sympy.Poly(expr, t, modulus=F.p).factor_list()
    roots = []
    for f, mult in fac[1]:
        if f.degree() > 1:
            raise UnsupportedResidueField(
                "residue field extension of degree %d detected" % f.degree())
        if mult != 1:
            raise ValueError("non-squarefree minimal polynomial in a "
                             "semisimple quotient")
        c1, c0 = f.all_coeffs() if f.degree() == 1 else (1, f.all_coeffs()[0])
        if F.p == 0:
            from gmpy2 import mpq
            root = mpq(-int(sympy.Rational(c0).p) * int(sympy.Rational(c1).q),
                       int(sympy.Rational(c0).q) * int(sympy.Rational(c1).p))
        else:
            root = F.div(F.from_int(-int(c0)), F.from_int(int(c1)))
        roots.append(root)
    return roots


def _compute_primitive_idempotents(A):
    F = A.field
    rad = A.nilradical_basis()
    if not rad:
        semis = A
        lift_needed = False
    else:
        lift_needed = True

    # work in the semisimple quotient: basis of A as rad + complement
    rad_ech = linalg.Echelon(F, A.dim)
    for v in rad:
        rad_ech.insert(linalg.vec_to_dict(F, v))

    # blocks are idempotents of A/rad, represented by elements of A whose
    # products are computed in A and reduced mod rad only when comparing
    def mod_rad(x):
        return rad_ech.reduce(linalg.vec_to_dict(F, x))

    def eq_mod_rad(x, y):
        return mod_rad(A.elem_sub(x, y)) == {}

    blocks = [A.unit]
    done = False
    while not done:
        done = True
        for bi in range(A.dim):
            e_basis = [F.zero()] * A.dim
            e_basis[bi] = F.one()
            b = tuple(e_basis)
            new_blocks = []
            for e in blocks:
                # span of e*A mod rad, with e as sub-unit
                span = [e]
                ech = linalg.Echelon(F, A.dim)
                ech.insert(mod_rad(e))
                for j in range(A.dim):
                    v = [F.zero()] * A.dim
                    v[j] = F.one()
                    w = A.elem_mul(e, tuple(v))
                    r = mod_rad(w)
                    if r and ech.insert(r) is not None:
                        span.append(w)
                if len(span) == 1:
                    new_blocks.append(e)
                    continue
                x = A.elem_mul(e, b)
                coeffs = _min_poly_mod_rad(A, rad_ech, span, e, x)
                roots = _factor_roots(F, coeffs)
                if len(roots) <= 1:
                    new_blocks.append(e)
                    continue
                done = False
                # Lagrange projectors split e
                for lam in sorted(roots, key=F.sort_key):
                    proj = e
                    for mu in roots:
                        if F.eq(mu, lam):
                            continue
                        scale = F.inv(F.sub(lam, mu))
                        proj = A.elem_scale(
                            scale, A.elem_sub(A.elem_mul(proj, x),
                                              A.elem_scale(mu, proj)))
                    new_blocks.append(proj)
            blocks = new_blocks

    # every block must now be one-dimensional mod rad
    for e in blocks:
        ech = linalg.Echelon(F, A.dim)
        ech.insert(mod_rad(e))
        for j in range(A.dim):
            v = [F.zero()] * A.dim
            v[j] = F.one()
            r = mod_rad(A.elem_mul(e, tuple(v)))
            if r:
                ech.insert(r)
        if ech.rank() > 1:
            raise UnsupportedResidueField(
                "local factor has residue dimension %d over the base field"
                % ech.rank())

    if lift_needed:
        blocks = [_newton_lift(A, e) for e in blocks]

    blocks.sort(key=lambda e: tuple(F.sort_key(c) for c in e))
    prims = []
    for i, e in enumerate(blocks):
        prims.append(Idempotent(A, e, frozenset([i])))
    # sanity: orthogonal, sum to one
    total = A.zero_elem()
    for i, ei in enumerate(prims):
        if A.elem_mul(ei.coords, ei.coords) != ei.coords:
            raise ValueError("idempotent lifting failed")
        total = A.elem_add(total, ei.coords)
        for j in range(i):
            if not A.is_zero_elem(A.elem_mul(ei.coords, prims[j].coords)):
                raise ValueError("idempotents not orthogonal")
    if total != A.unit:
        raise ValueError("idempotents do not sum to 1")
    return prims


def _min_poly_mod_rad(A, rad_ech, span, e, x):
    """Minimal polynomial of x acting on span(e*A) modulo the nilradical."""
    F = A.field
    powers = [e]
    cur = e
    while True:
        cur = A.elem_mul(cur, x)
        reduced = [rad_ech.reduce(linalg.vec_to_dict(F, p)) for p in powers]
        rows = []
        for i in range(A.dim):
            row = {}
            for t, rp in enumerate(reduced):
                a = rp.get(i)
                if a is not None and not F.is_zero(a):
                    row[t] = a
            rows.append(row)
        rhs = rad_ech.reduce(linalg.vec_to_dict(F, cur))
        sol = linalg.sp_solve(F, rows, len(powers), rhs)
        if sol is not None:
            return [sol.get(i, F.zero()) for i in range(len(powers))]
        powers.append(cur)


def _newton_lift(A, e):
    """Lift an idempotent mod the nilradical to a genuine idempotent:
    e <- 3e^2 - 2e^3 squares the error ideal each round."""
    F = A.field
    three = F.from_int(3)
    two = F.from_int(2)
    cur = e
    for _ in range(2 * A.dim + 4):
        sq = A.elem_mul(cur, cur)
        if sq == cur:
            return cur
        cube = A.elem_mul(sq, cur)
        cur = A.elem_sub(A.elem_scale(three, sq), A.elem_scale(two, cube))
    raise ValueError("idempotent lifting did not converge")


def _build_local_factor(A, idem, index):
    F = A.field
    e = idem.coords
    # basis of e*A
    ech = linalg.Echelon(F, A.dim)
    basis = []
    for j in range(A.dim):
        v = [F.zero()] * A.dim
        v[j] = F.one()
        w = A.elem_mul(e, tuple(v))
        if ech.insert(linalg.vec_to_dict(F, w)) is not None:
            basis.append(w)
    # use the echelonized vectors themselves for stable coordinates
    eb = [tuple(linalg.dict_to_vec(F, r, A.dim)) for r in ech.rows]
    d = len(eb)

    def to_factor(x):
        res, coeffs = ech.reduce_with_coeffs(linalg.vec_to_dict(F, x))
        if res:
            raise ValueError("element not in the component")
        return tuple(coeffs)

    sub_unit = to_factor(e)
    mt = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(to_factor(A.elem_mul(eb[i], eb[j])))
        mt.append(row)
    labels = ["c%d|%d" % (i, index) for i in range(d)]
    gens = {}
    for name, g in A.gens.items():
        gens[name] = to_factor(A.elem_mul(e, g))
    factor = Algebra(F, labels, mt, sub_unit, gens=gens,
                     label="%r.e%d" % (A, index), check=False)

    projection = [[F.zero()] * A.dim for _ in range(d)]
    for j in range(A.dim):
        v = [F.zero()] * A.dim
        v[j] = F.one()
        col = to_factor(A.elem_mul(e, tuple(v)))
        for i in range(d):
            projection[i][j] = col[i]
    embedding = [[eb[j][i] for j in range(d)] for i in range(A.dim)]

    rad = factor.nilradical_basis()
    if d - len(rad) != 1:
        raise UnsupportedResidueField(
            "component %d has residue dimension %d" % (index, d - len(rad)))
    # functional phi with phi(radical) = 0, phi(unit) = 1; the rows of the
    # system are the radical vectors plus the unit, each row constraining phi
    phi_rows = [linalg.vec_to_dict(F, v) for v in rad]
    phi_rows.append(linalg.vec_to_dict(F, sub_unit))
    phi_rhs = {len(rad): F.one()}
    phi = linalg.sp_solve(F, phi_rows, d, phi_rhs)
    residue_functional = tuple(linalg.dict_to_vec(F, phi, d))

    return LocalFactorData(A, index, idem, factor,
                           [tuple(v) for v in rad],
                           projection, embedding, residue_functional)


def _identity_local_factor(A):
    """Local factor of an algebra that is already local: the algebra itself,
    with identity projection and embedding."""
    F = A.field
    rad = A.nilradical_basis()
    d = A.dim
    if d - len(rad) != 1:
        raise UnsupportedResidueField(
            "local algebra has residue dimension %d over the base field"
            % (d - len(rad)))
    ident = linalg.identity(F, d)
    idem = Idempotent(A, A.unit, frozenset([0]))
    phi_rows = [linalg.vec_to_dict(F, v) for v in rad]
    phi_rows.append(linalg.vec_to_dict(F, A.unit))
    phi_rhs = {len(rad): F.one()}
    phi = linalg.sp_solve(F, phi_rows, d, phi_rhs)
    residue_functional = tuple(linalg.dict_to_vec(F, phi, d))
    return LocalFactorData(A, 0, idem, A, [tuple(v) for v in rad],
                           ident, ident, residue_functional)


# ------------------------------------------------------------- constructors


def quotient_algebra(field, var_names, generator_texts, label=None):
    """Quotient of the polynomial ring by a zero-dimensional ideal; basis is
    the set of standard monomials of the reduced degrevlex Groebner basis."""
    if not isinstance(field, Field):
        raise TypeError("field expected")
    nvars = len(var_names)
    gens = []
    for g in generator_texts:
        if isinstance(g, str):
            gens.append(poly.parse_poly(field, g, list(var_names)))
        else:
            gens.append(g)
    gb = poly.groebner(field, gens, nvars)
    if any(not g for g in gb):
        raise ZeroRing("ideal is the unit ideal")
    if gb and any(poly.mono_deg(poly.leading(field, g)[0]) == 0 for g in gb):
        raise ZeroRing("ideal is the unit ideal")
    if not poly.is_zero_dimensional(field, gb, nvars):
        raise NotZeroDimensional(
            "same variable has no pure power among the leading terms")
    std = poly.standard_monomials(field, gb, nvars)
    index = {m: i for i, m in enumerate(std)}
    lt_basis = [(poly.leading(field, g)[0], g) for g in gb]

    def nf_coords(p):
        r = poly.normal_form(field, p, lt_basis)
        v = [field.zero()] * len(std)
        for m, c in r.items():
            v[index[m]] = c
        return tuple(v)

    mt = []
    for i, mi in enumerate(std):
        row = []
        for mj in std:
            row.append(nf_coords({poly.mono_mul(mi, mj): field.one()}))
        mt.append(row)
    unit = nf_coords(poly.p_const(field, nvars, field.one()))
    labels = [poly.poly_str(field, {m: field.one()}, list(var_names))
              for m in std]
    gen_elems = {}
    for i, name in enumerate(var_names):
        gen_elems[name] = nf_coords(poly.p_var(field, nvars, i))
    return Algebra(field, labels, mt, unit, gens=gen_elems, label=label)


def product_algebra(factors, label=None):
    """Direct product with componentwise multiplication."""
    if not factors:
        raise ZeroRing("empty product")
    F = factors[0].field
    for B in factors[1:]:
        if B.field != F:
            raise FieldMismatch("product factors over different fields")
    dim = sum(A.dim for A in factors)
    offs = []
    o = 0
    for A in factors:
        offs.append(o)
        o += A.dim
    labels = []
    for t, A in enumerate(factors):
        labels.extend("p%d.%s" % (t + 1, lbl) for lbl in A.basis_labels)
    zero = F.zero()

    def emb(t, v):
        out = [zero] * dim
        for i, a in enumerate(v):
            out[offs[t] + i] = a
        return out

    mt = [[None] * dim for _ in range(dim)]
    for t, A in enumerate(factors):
        for i in range(A.dim):
            for j in range(A.dim):
                mt[offs[t] + i][offs[t] + j] = tuple(emb(t, A.mt[i][j]))
    zvec = (zero,) * dim
    for i in range(dim):
        for j in range(dim):
            if mt[i][j] is None:
                mt[i][j] = zvec
    unit = [zero] * dim
    for t, A in enumerate(factors):
        for i, a in enumerate(A.unit):
            unit[offs[t] + i] = a
    gens = {}
    for t, A in enumerate(factors):
        for name, g in A.gens.items():
            gens["f%d_%s" % (t + 1, name)] = tuple(emb(t, g))
        gens["e%d" % (t + 1)] = tuple(emb(t, A.unit))
    return Algebra(F, labels, mt, tuple(unit), gens=gens, label=label,
                   check=False)


def tensor_algebra(A, B, label=None):
    """A (x)_k B with Kronecker structure constants."""
    if A.field != B.field:
        raise FieldMismatch("tensor factors over different fields")
    F = A.field
    da, db = A.dim, B.dim
    dim = da * db

    def emb(i, j):
        return i * db + j

    def tens(u, v):
        out = [F.zero()] * dim
        for i, a in enumerate(u):
            if F.is_zero(a):
                continue
            for j, b in enumerate(v):
                if not F.is_zero(b):
                    out[emb(i, j)] = F.mul(a, b)
        return tuple(out)

    mt = []
    for i in range(da):
        for j in range(db):
            row = []
            for k in range(da):
                for l in range(db):
                    row.append(tens(A.mt[i][k], B.mt[j][l]))
            mt.append(row)
    labels = ["%s(x)%s" % (la, lb)
              for la in A.basis_labels for lb in B.basis_labels]
    unit = tens(A.unit, B.unit)
    gens = {}
    for name, g in A.gens.items():
        gens["l_%s" % name] = tens(g, B.unit)
    for name, g in B.gens.items():
        gens["r_%s" % name] = tens(A.unit, g)
    return Algebra(F, labels, mt, unit, gens=gens, label=label, check=False)


def primitive_idempotents(A):
    return A.primitive_idempotents()


def component(A, e):
    """Component data for an idempotent: LocalFactorData when e is primitive,
    otherwise the sub-product algebra with projection and embedding."""
    if not isinstance(e, Idempotent):
        coords = tuple(e)
        if A.elem_mul(coords, coords) != coords:
            raise NotIdempotent("element is not idempotent")
        mask = _mask_of(A, coords)
        e = Idempotent(A, coords, mask)
    else:
        if A.elem_mul(e.coords, e.coords) != e.coords:
            raise NotIdempotent("element is not idempotent")
    prims = A.primitive_idempotents()
    for i, p in enumerate(prims):
        if p.coords == e.coords:
            return A.local_data()[i]
    return _build_subproduct(A, e)


def _mask_of(A, coords):
    mask = set()
    for i, p in enumerate(A.primitive_idempotents()):
        if not A.is_zero_elem(A.elem_mul(coords, p.coords)):
            mask.add(i)
    return frozenset(mask)


class SubProduct:
    """A*e for a (possibly non-primitive) idempotent e: the subalgebra, the
    projection and embedding, and the covered component mask."""

    __slots__ = ("parent", "idempotent", "algebra", "projection", "embedding")

    def __init__(self, parent, idempotent, algebra, projection, embedding):
        self.parent = parent
        self.idempotent = idempotent
        self.algebra = algebra
        self.projection = projection
        self.embedding = embedding


def _build_subproduct(A, e):
    F = A.field
    if A.is_zero_elem(e.coords):
        raise ZeroRing("zero idempotent has no component algebra")
    ech = linalg.Echelon(F, A.dim)
    for j in range(A.dim):
        v = [F.zero()] * A.dim
        v[j] = F.one()
        ech.insert(linalg.vec_to_dict(F, A.elem_mul(e.coords, tuple(v))))
    eb = [tuple(linalg.dict_to_vec(F, r, A.dim)) for r in ech.rows]
    d = len(eb)

    def to_sub(x):
        res, coeffs = ech.reduce_with_coeffs(linalg.vec_to_dict(F, x))
        if res:
            raise ValueError("element not in the component")
        return tuple(coeffs)

    mt = [[to_sub(A.elem_mul(eb[i], eb[j])) for j in range(d)]
          for i in range(d)]
    gens = {name: to_sub(A.elem_mul(e.coords, g))
            for name, g in A.gens.items()}
    sub = Algebra(F, ["s%d" % i for i in range(d)], mt, to_sub(e.coords),
                  gens=gens, label="%r|mask" % A, check=False)
    projection = [[F.zero()] * A.dim for _ in range(d)]
    for j in range(A.dim):
        v = [F.zero()] * A.dim
        v[j] = F.one()
        col = to_sub(A.elem_mul(e.coords, tuple(v)))
        for i in range(d):
            projection[i][j] = col[i]
    embedding = [[eb[j][i] for j in range(d)] for i in range(A.dim)]
    return SubProduct(A, e, sub, projection, embedding)


def idempotent_from_components(A, subset):
    """Sum of the selected primitive idempotents."""
    prims = A.primitive_idempotents()
    coords = A.zero_elem()
    mask = set()
    for i in subset:
        if not (0 <= i < len(prims)):
            raise IndexOutOfRange("component %d out of range" % i)
        coords = A.elem_add(coords, prims[i].coords)
        mask.add(i)
    return Idempotent(A, coords, frozenset(mask))
