"""Exact scalar arithmetic: the rationals and prime fields.

Elements are plain Python values (gmpy2.mpq over the rationals, ints in
[0, p) over F_p); a Field object bundles the operations so the matrix code
stays generic over the coefficient field.  All arithmetic is exact.
"""

from gmpy2 import mpq


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p == 0) or the prime field F_p (p prime, p < 2**31)."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        p = int(p)
        if p:
            if p >= 2**31:
                raise ValueError("prime out of range: %d" % p)
            if not _is_prime(p):
                raise ValueError("not a prime: %d" % p)
        self.p = p

    @property
    def is_rational(self):
        return self.p == 0

    def zero(self):
        return mpq(0) if self.p == 0 else 0

    def one(self):
        return mpq(1) if self.p == 0 else 1

    def from_int(self, n):
        return mpq(n) if self.p == 0 else int(n) % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if self.p == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def sort_key(self, a):
        # canonical total order on elements, used to make searches deterministic
        if self.p == 0:
            return (int(a.numerator), int(a.denominator))
        return int(a)

    def to_str(self, a):
        return str(a)

    def parse(self, text):
        text = text.strip()
        if self.p == 0:
            if "/" in text:
                num, den = text.split("/")
                return mpq(int(num), int(den))
            return mpq(int(text))
        return int(text) % self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else "GF(%d)" % self.p


QQ = Field(0)


def GF(p):
    return Field(p)
