"""Multivariate polynomials and Groebner bases under degrevlex.

Monomials are exponent tuples; a polynomial is a dict {monomial: coeff} with
no zero coefficients.  The Buchberger loop is the plain sugar-free variant
with the coprime-lead criterion; it is meant for the small zero-dimensional
ideals that present the algebra corpus, not for general elimination work.
"""


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def degrevlex_key(m):
    # graded order; ties broken by reverse lexicographic comparison with
    # the last variable weighted most negatively
    return (sum(m),) + tuple(-e for e in reversed(m))


def p_normalize(F, p):
    return {m: c for m, c in p.items() if not F.is_zero(c)}


def p_zero():
    return {}


def p_const(F, nvars, c):
    if F.is_zero(c):
        return {}
    return {(0,) * nvars: c}


def p_var(F, nvars, i):
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): F.one()}


def p_add(F, p, q):
    out = dict(p)
    for m, c in q.items():
        s = F.add(out.get(m, F.zero()), c)
        if F.is_zero(s):
            out.pop(m, None)
        else:
            out[m] = s
    return out


def p_sub(F, p, q):
    out = dict(p)
    for m, c in q.items():
        s = F.sub(out.get(m, F.zero()), c)
        if F.is_zero(s):
            out.pop(m, None)
        else:
            out[m] = s
    return out


def p_scale(F, c, p):
    if F.is_zero(c):
        return {}
    return {m: F.mul(c, a) for m, a in p.items()}


def p_mul(F, p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = F.add(out.get(m, F.zero()), F.mul(c1, c2))
            if F.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
    return out


def p_term_mul(F, mono, coeff, p):
    return {mono_mul(mono, m): F.mul(coeff, c) for m, c in p.items()}


def leading(F, p):
    """(monomial, coeff) of the degrevlex-largest term; p must be nonzero."""
    m = max(p, key=degrevlex_key)
    return m, p[m]


def p_monic(F, p):
    if not p:
        return p
    _, c = leading(F, p)
    return p_scale(F, F.inv(c), p)


def normal_form(F, p, basis):
    """Fully reduce p modulo the list of (lead, poly) pairs in `basis`.

    Every term divisible by some lead gets rewritten, largest first, so the
    result is the canonical normal form once `basis` is a Groebner basis.
    """
    out = dict(p)
    while True:
        target = None
        for m in sorted(out, key=degrevlex_key, reverse=True):
            for lead, g in basis:
                if mono_divides(lead, m):
                    target = (m, lead, g)
                    break
            if target:
                break
        if target is None:
            return out
        m, lead, g = target
        c = out[m]
        out = p_sub(F, out, p_term_mul(F, mono_div(m, lead), c, g))


def groebner(F, gens, nvars):
    """Reduced Groebner basis (list of monic polys) under degrevlex."""
    basis = []
    for g in gens:
        g = p_normalize(F, g)
        if g:
            basis.append(p_monic(F, g))
    if not basis:
        return []
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        pairs.sort(key=lambda ij: degrevlex_key(
            mono_lcm(leading(F, basis[ij[0]])[0], leading(F, basis[ij[1]])[0])))
        i, j = pairs.pop(0)
        li, _ = leading(F, basis[i])
        lj, _ = leading(F, basis[j])
        lcm = mono_lcm(li, lj)
        if lcm == mono_mul(li, lj):  # coprime leads reduce to zero
            continue
        s = p_sub(F,
                  p_term_mul(F, mono_div(lcm, li), F.one(), basis[i]),
                  p_term_mul(F, mono_div(lcm, lj), F.one(), basis[j]))
        lt_basis = [(leading(F, g)[0], g) for g in basis]
        r = normal_form(F, s, lt_basis)
        if r:
            r = p_monic(F, r)
            pairs.extend((len(basis), t) for t in range(len(basis)))
            basis.append(r)
    # interreduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = [(leading(F, g)[0], g)
                      for t, g in enumerate(basis) if t != i and g]
            r = normal_form(F, basis[i], others)
            r = p_monic(F, r)
            if r != basis[i]:
                basis[i] = r
                changed = True
        basis = [g for g in basis if g]
    basis.sort(key=lambda g: degrevlex_key(leading(F, g)[0]))
    return basis


def is_zero_dimensional(F, basis, nvars):
    """True when the quotient is finite-dimensional: every variable shows a
    pure power among the leading monomials."""
    if any(not g for g in basis):
        return True
    leads = [leading(F, g)[0] for g in basis]
    if any(mono_deg(m) == 0 for m in leads):
        return True  # unit ideal, zero ring excluded upstream
    for i in range(nvars):
        ok = False
        for m in leads:
            if m[i] > 0 and all(m[t] == 0 for t in range(nvars) if t != i):
                ok = True
                break
        if not ok:
            return False
    return True


def standard_monomials(F, basis, nvars):
    """Monomials outside the leading-term ideal, in degrevlex order."""
    leads = [leading(F, g)[0] for g in basis if g]
    found = set()
    queue = [(0,) * nvars]
    while queue:
        m = queue.pop(0)
        if m in found:
            continue
        if any(mono_divides(l, m) for l in leads):
            continue
        found.add(m)
        for i in range(nvars):
            e = list(m)
            e[i] += 1
            queue.append(tuple(e))
    return sorted(found, key=degrevlex_key)


# ------------------------------------------------------------ input parsing


class PolySyntaxError(ValueError):
    pass


def parse_poly(F, text, var_names):
    """Parse infix polynomial text (integer coefficients, +, -, *, ^, parens,
    implicit multiplication not supported) over the given variables."""
    nvars = len(var_names)
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        t = peek()
        pos[0] += 1
        return t

    def parse_atom():
        t = take()
        if t is None:
            raise PolySyntaxError("unexpected end of polynomial: %r" % text)
        if t == "(":
            p = parse_sum()
            if take() != ")":
                raise PolySyntaxError("missing ) in %r" % text)
        elif t.isdigit():
            p = p_const(F, nvars, F.from_int(int(t)))
        elif t in var_names:
            p = p_var(F, nvars, var_names.index(t))
        else:
            raise PolySyntaxError("unknown token %r in %r" % (t, text))
        if peek() == "^":
            take()
            e = take()
            if e is None or not e.isdigit():
                raise PolySyntaxError("bad exponent in %r" % text)
            q = p_const(F, nvars, F.one())
            for _ in range(int(e)):
                q = p_mul(F, q, p)
            p = q
        return p

    def parse_product():
        p = parse_atom()
        while peek() == "*":
            take()
            p = p_mul(F, p, parse_atom())
        return p

    def parse_sum():
        neg = False
        if peek() in ("+", "-"):
            neg = take() == "-"
        p = parse_product()
        if neg:
            p = p_scale(F, F.neg(F.one()), p)
        while peek() in ("+", "-"):
            op = take()
            q = parse_product()
            p = p_add(F, p, q) if op == "+" else p_sub(F, p, q)
        return p

    p = parse_sum()
    if peek() is not None:
        raise PolySyntaxError("trailing input %r in %r" % (peek(), text))
    return p


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(text[i:j])
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise PolySyntaxError("bad character %r" % ch)
    return out


def poly_str(F, p, var_names):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=degrevlex_key, reverse=True):
        c = p[m]
        factors = []
        for name, e in zip(var_names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        cs = F.to_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if factors and cs == "1":
            term = "*".join(factors)
        elif factors:
            term = cs + "*" + "*".join(factors)
        else:
            term = cs
        if not parts:
            parts.append("-" + term if neg else term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)
