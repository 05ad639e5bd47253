"""Exact linear algebra over a Field.

Two matrix views share one elimination engine:

  * dense matrices: list of row lists, used for module actions and small maps;
  * sparse rows: dict {column: nonzero entry}, used for the large structured
    systems that come out of resolutions and Hom/tensor complexes.

The engine is an incremental reduced echelon form (Echelon) with canonical
pivot choices, so every computed basis is deterministic.
"""


def vec_to_dict(F, v):
    return {j: a for j, a in enumerate(v) if not F.is_zero(a)}


def dict_to_vec(F, d, n):
    v = [F.zero()] * n
    for j, a in d.items():
        v[j] = a
    return v


def rows_to_dicts(F, rows):
    return [vec_to_dict(F, r) for r in rows]


class Echelon:
    """Reduced row echelon basis of a subspace of k^n.

    Rows are kept with unit pivots and fully back-eliminated; pivot columns
    are strictly increasing in insertion-resolved order.  reduce() returns
    the residue of a vector modulo the current row space.
    """

    __slots__ = ("F", "n", "rows", "pivots")

    def __init__(self, F, n):
        self.F = F
        self.n = n
        self.rows = []
        self.pivots = []

    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residue of a dict-vector modulo the row space (new dict)."""
        F = self.F
        v = dict(vec)
        for row, p in zip(self.rows, self.pivots):
            a = v.get(p)
            if a is None or F.is_zero(a):
                continue
            for j, b in row.items():
                c = F.sub(v.get(j, F.zero()), F.mul(a, b))
                if F.is_zero(c):
                    v.pop(j, None)
                else:
                    v[j] = c
        return v

    def reduce_with_coeffs(self, vec):
        """Residue plus the coefficients used on each stored row."""
        F = self.F
        v = dict(vec)
        coeffs = [F.zero()] * len(self.rows)
        for i, (row, p) in enumerate(zip(self.rows, self.pivots)):
            a = v.get(p)
            if a is None or F.is_zero(a):
                continue
            coeffs[i] = a
            for j, b in row.items():
                c = F.sub(v.get(j, F.zero()), F.mul(a, b))
                if F.is_zero(c):
                    v.pop(j, None)
                else:
                    v[j] = c
        return v, coeffs

    def insert(self, vec):
        """Reduce and, if nonzero, add to the basis.  Returns the residue's
        pivot column, or None when vec was already in the row space."""
        F = self.F
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = F.inv(v[p])
        row = {j: F.mul(inv, a) for j, a in v.items()}
        # back-eliminate the new pivot from stored rows
        for i, r in enumerate(self.rows):
            a = r.get(p)
            if a is None:
                continue
            for j, b in row.items():
                c = F.sub(r.get(j, F.zero()), F.mul(a, b))
                if F.is_zero(c):
                    r.pop(j, None)
                else:
                    r[j] = c
        k = 0
        while k < len(self.pivots) and self.pivots[k] < p:
            k += 1
        self.rows.insert(k, row)
        self.pivots.insert(k, p)
        return p

    def contains(self, vec):
        return not self.reduce(vec)


def sp_echelon(F, rows, n):
    ech = Echelon(F, n)
    for r in rows:
        ech.insert(r)
    return ech


def sp_rank(F, rows, n):
    return sp_echelon(F, rows, n).rank()


def sp_kernel_with_free(F, rows, n):
    """Kernel basis of M x = 0 plus the free-column indices.  Basis vector t
    has entry 1 at free column t and 0 at the other free columns, so the
    coordinates of a kernel vector in this basis can be read off directly."""
    ech = sp_echelon(F, rows, n)
    pivset = set(ech.pivots)
    free = []
    basis = []
    one = F.one()
    for j in range(n):
        if j in pivset:
            continue
        v = {j: one}
        for row, p in zip(ech.rows, ech.pivots):
            a = row.get(j)
            if a is not None and not F.is_zero(a):
                v[p] = F.neg(a)
        free.append(j)
        basis.append(v)
    return basis, free


def sp_kernel(F, rows, n):
    """Basis (dict-vectors) of {x in k^n : M x = 0}, M given by its rows."""
    return sp_kernel_with_free(F, rows, n)[0]


def sp_solve_many(F, rows, n, rhs_list):
    """Solve M x = b for each dict-vector b in rhs_list (M given by rows,
    n columns).  Returns a list of dict solutions, None where inconsistent."""
    aug = []
    for i, r in enumerate(rows):
        row = dict(r)
        for t, b in enumerate(rhs_list):
            a = b.get(i)
            if a is not None and not F.is_zero(a):
                row[n + t] = a
        aug.append(row)
    ech = sp_echelon(F, aug, n + len(rhs_list))
    bad = set()
    for p in ech.pivots:
        if p >= n:
            bad.add(p - n)
    sols = []
    for t in range(len(rhs_list)):
        if t in bad:
            sols.append(None)
            continue
        x = {}
        for row, p in zip(ech.rows, ech.pivots):
            if p >= n:
                continue
            a = row.get(n + t)
            if a is not None and not F.is_zero(a):
                x[p] = a
        sols.append(x)
    return sols


def sp_solve(F, rows, n, rhs):
    return sp_solve_many(F, rows, n, [rhs])[0]


# ---------------------------------------------------------------- dense view


def zeros(F, r, c):
    z = F.zero()
    return [[z] * c for _ in range(r)]


def identity(F, n):
    M = zeros(F, n, n)
    one = F.one()
    for i in range(n):
        M[i][i] = one
    return M


def mat_mul(F, A, B):
    ra, ca = len(A), len(A[0]) if A else 0
    cb = len(B[0]) if B else 0
    z = F.zero()
    out = [[z] * cb for _ in range(ra)]
    for i in range(ra):
        Ai = A[i]
        Oi = out[i]
        for k in range(ca):
            a = Ai[k]
            if F.is_zero(a):
                continue
            Bk = B[k]
            for j in range(cb):
                b = Bk[j]
                if not F.is_zero(b):
                    Oi[j] = F.add(Oi[j], F.mul(a, b))
    return out


def mat_vec(F, A, v):
    z = F.zero()
    out = [z] * len(A)
    for i, Ai in enumerate(A):
        s = z
        for j, a in enumerate(Ai):
            if not F.is_zero(a) and not F.is_zero(v[j]):
                s = F.add(s, F.mul(a, v[j]))
        out[i] = s
    return out


def mat_add(F, A, B):
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(F, A, B):
    return [[F.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_neg(F, A):
    return [[F.neg(a) for a in row] for row in A]


def mat_scale(F, c, A):
    return [[F.mul(c, a) for a in row] for row in A]


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_eq(F, A, B):
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if not F.eq(a, b):
                return False
    return True


def is_zero_mat(F, A):
    return all(F.is_zero(a) for row in A for a in row)


def rank(F, A):
    if not A or not A[0]:
        return 0
    return sp_rank(F, rows_to_dicts(F, A), len(A[0]))


def kernel(F, A, ncols=None):
    """Dense kernel basis (list of dense column vectors) of the r x c map A."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    ker = sp_kernel(F, rows_to_dicts(F, A), ncols)
    return [dict_to_vec(F, v, ncols) for v in ker]


def solve(F, A, b, ncols=None):
    """One solution of A x = b, or None."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    x = sp_solve(F, rows_to_dicts(F, A), ncols, vec_to_dict(F, b))
    return None if x is None else dict_to_vec(F, x, ncols)


def solve_matrix(F, A, B, ncols=None):
    """X with A X = B (B dense, columns solved independently), or None."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    nrhs = len(B[0]) if B else 0
    cols = [{i: B[i][t] for i in range(len(B)) if not F.is_zero(B[i][t])}
            for t in range(nrhs)]
    sols = sp_solve_many(F, rows_to_dicts(F, A), ncols, cols)
    if any(s is None for s in sols):
        return None
    X = zeros(F, ncols, nrhs)
    for t, s in enumerate(sols):
        for i, a in s.items():
            X[i][t] = a
    return X


def inverse(F, A):
    n = len(A)
    X = solve_matrix(F, A, identity(F, n), ncols=n)
    return X


def column_space_echelon(F, A):
    """Echelon of the column space (columns inserted left to right)."""
    r = len(A)
    ech = Echelon(F, r)
    for col in transpose(A):
        ech.insert(vec_to_dict(F, col))
    return ech
