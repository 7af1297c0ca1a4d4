"""Exact base fields and their towers.

Supported coefficient fields: the rationals QQ, prime fields GF(p), rational
function fields over a prime field such as GF(p)(t), and separable quadratic
extensions of any of these.

A field is a context object whose methods act on *raw* element data:

* ``Rationals``      -- raw data is a ``gmpy2.mpq``,
* ``PrimeField(p)``  -- raw data is an ``int`` in ``[0, p)``,
* ``FractionField``  -- raw data is a pair ``(num, den)`` of coefficient
  tuples over the base field, with the denominator monic and coprime to the
  numerator,
* ``QuadraticExtension`` -- raw data is a pair ``(a0, a1)`` over the base,
  meaning ``a0 + a1*alpha``.

All arithmetic is exact and equality is decidable.  ``Elt`` wraps raw data
with operators for use in generic matrix code.
"""

from __future__ import annotations

import gmpy2
from gmpy2 import mpq

from . import poly


class FieldError(ValueError):
    pass


class Elt:
    """Operator wrapper around raw field data, for generic linear algebra."""

    __slots__ = ("fld", "a")

    def __init__(self, fld, a):
        self.fld = fld
        self.a = a

    def __add__(self, o):
        return Elt(self.fld, self.fld.add(self.a, o.a))

    def __sub__(self, o):
        return Elt(self.fld, self.fld.sub(self.a, o.a))

    def __neg__(self):
        return Elt(self.fld, self.fld.neg(self.a))

    def __mul__(self, o):
        return Elt(self.fld, self.fld.mul(self.a, o.a))

    def __truediv__(self, o):
        return Elt(self.fld, self.fld.div(self.a, o.a))

    def __eq__(self, o):
        return isinstance(o, Elt) and self.fld.eq(self.a, o.a)

    def __hash__(self):
        return hash(self.fld.key(self.a))

    def inv(self):
        return Elt(self.fld, self.fld.inv(self.a))

    def is_zero(self):
        return self.fld.is_zero(self.a)

    def __repr__(self):
        return self.fld.to_str(self.a)


class EltDomain:
    """Domain adapter presenting a base field as a matrix entry domain."""

    def __init__(self, fld):
        self.fld = fld

    def zero(self):
        return Elt(self.fld, self.fld.zero)

    def one(self):
        return Elt(self.fld, self.fld.one)

    def wrap(self, raw):
        return Elt(self.fld, raw)


class Rationals:
    """The field QQ with gmpy2 rationals as raw data."""

    characteristic = 0
    name = "QQ"
    is_finite = False
    direct_ops = True
    rational_ints = True

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == 1

    def from_int(self, n):
        return mpq(n)

    def key(self, a):
        return a

    def to_str(self, a):
        return str(a)

    def rand(self, rng, height=10):
        return mpq(rng.randint(-height, height), rng.randint(1, height))

    def is_square(self, a):
        if a < 0:
            return False
        return gmpy2.is_square(a.numerator) and gmpy2.is_square(a.denominator)

    def sign(self, a):
        return (a > 0) - (a < 0)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) with ints in [0, p) as raw data."""

    is_finite = True

    def __init__(self, p):
        if p < 2 or not gmpy2.is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == self.one

    def from_int(self, n):
        return n % self.p

    def key(self, a):
        return a

    def to_str(self, a):
        return str(a)

    def rand(self, rng, height=None):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def is_square(self, a):
        if a == 0:
            return True
        if self.p == 2:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class FractionField:
    """The field of rational functions base(var).

    Raw data is ``(num, den)``: coefficient tuples over the base field with
    ``den`` monic and ``gcd(num, den) = 1``, so representatives are unique.
    """

    is_finite = False

    def __init__(self, base, var="t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.name = f"{base.name}({var})"
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))

    def make(self, num, den):
        """Canonicalize a numerator/denominator pair of coefficient lists."""
        K = self.base
        num = poly.trim(K, list(num))
        den = poly.trim(K, list(den))
        if not den:
            raise ZeroDivisionError(f"zero denominator in {self.name}")
        if not num:
            return self.zero
        if len(den) == 1:
            c = den[0]
            if K.is_one(c):
                return (tuple(num), (K.one,))
            ci = K.inv(c)
            return (tuple(K.mul(ci, x) for x in num), (K.one,))
        if len(num) > 1:
            g = poly.gcd(K, num, den)
            if poly.deg(g) > 0:
                num = poly.quo(K, num, g)
                den = poly.quo(K, den, g)
        lc = den[-1]
        if not K.is_one(lc):
            c = K.inv(lc)
            num = [K.mul(c, x) for x in num]
            den = [K.mul(c, x) for x in den]
        return (tuple(num), tuple(den))

    def from_poly(self, cs):
        return self.make(cs, [self.base.one])

    def from_base(self, a):
        return self.make([a], [self.base.one])

    def from_int(self, n):
        return self.from_base(self.base.from_int(n))

    def gen(self):
        return self.make([self.base.zero, self.base.one], [self.base.one])

    def add(self, a, b):
        # gcd work on the input denominators, not on products
        K = self.base
        if not a[0]:
            return b
        if not b[0]:
            return a
        da, db = list(a[1]), list(b[1])
        if len(da) == 1:
            n = poly.add(K, list(a[0]) if len(db) == 1 else
                         poly.mul(K, list(a[0]), db), list(b[0]))
            return self.make(n, db)
        if len(db) == 1:
            n = poly.add(K, list(a[0]), poly.mul(K, list(b[0]), da))
            return self.make(n, da)
        g = poly.gcd(K, da, db)
        if poly.deg(g) == 0:
            n = poly.add(K, poly.mul(K, list(a[0]), db),
                         poly.mul(K, list(b[0]), da))
            return self.make2(n, poly.mul(K, da, db))
        da_r = poly.quo(K, da, g)
        db_r = poly.quo(K, db, g)
        n = poly.add(K, poly.mul(K, list(a[0]), db_r),
                     poly.mul(K, list(b[0]), da_r))
        g2 = poly.gcd(K, n, g)
        if poly.deg(g2) > 0:
            n = poly.quo(K, n, g2)
            g = poly.quo(K, g, g2)
        return self.make2(n, poly.mul(K, poly.mul(K, da_r, g), db_r))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        K = self.base
        return (tuple(K.neg(x) for x in a[0]), a[1])

    def mul(self, a, b):
        K = self.base
        if not a[0] or not b[0]:
            return self.zero
        na, da = list(a[0]), list(a[1])
        nb, db = list(b[0]), list(b[1])
        if len(db) > 1 and len(na) > 1:
            g = poly.gcd(K, na, db)
            if poly.deg(g) > 0:
                na = poly.quo(K, na, g)
                db = poly.quo(K, db, g)
        if len(da) > 1 and len(nb) > 1:
            g = poly.gcd(K, nb, da)
            if poly.deg(g) > 0:
                nb = poly.quo(K, nb, g)
                da = poly.quo(K, da, g)
        return self.make2(poly.mul(K, na, nb), poly.mul(K, da, db))

    def make2(self, num, den):
        """Normalize a pair already known to be coprime."""
        K = self.base
        if not num:
            return self.zero
        lc = den[-1]
        if not K.is_one(lc):
            c = K.inv(lc)
            num = [K.mul(c, x) for x in num]
            den = [K.mul(c, x) for x in den]
        return (tuple(num), tuple(den))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return self.make2(list(a[1]), list(a[0]))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        K = self.base
        if len(a[0]) != len(b[0]) or len(a[1]) != len(b[1]):
            return False
        return (all(K.eq(x, y) for x, y in zip(a[0], b[0]))
                and all(K.eq(x, y) for x, y in zip(a[1], b[1])))

    def is_zero(self, a):
        return not a[0]

    def is_one(self, a):
        return self.eq(a, self.one)

    def key(self, a):
        K = self.base
        return (tuple(K.key(x) for x in a[0]), tuple(K.key(x) for x in a[1]))

    def is_polynomial(self, a):
        return len(a[1]) == 1

    def numerator(self, a):
        return list(a[0])

    def denominator(self, a):
        return list(a[1])

    def to_str(self, a):
        ns = poly.to_str(self.base, list(a[0]), self.var)
        if len(a[1]) == 1:
            return ns
        ds = poly.to_str(self.base, list(a[1]), self.var)
        return f"({ns})/({ds})"

    def rand(self, rng, height=10, deg=2):
        K = self.base
        num = [K.rand(rng, height) for _ in range(rng.randint(0, deg) + 1)]
        den = []
        while not den:
            den = poly.trim(K, [K.rand(rng, height)
                                for _ in range(rng.randint(0, deg) + 1)])
        return self.make(num, den)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return (isinstance(other, FractionField) and other.base == self.base
                and other.var == self.var)

    def __hash__(self):
        return hash(("Frac", self.base, self.var))


class QuadraticExtension:
    """A separable quadratic extension base(alpha), alpha^2 = T*alpha - N.

    Raw data is ``(a0, a1)`` over the base, meaning ``a0 + a1*alpha``.  The
    nontrivial automorphism sends ``alpha`` to ``T - alpha`` and fixes
    exactly the base field.
    """

    is_finite = False

    def __init__(self, base, trace, norm, gen_name="w"):
        K = base
        if K.characteristic == 2:
            if K.is_zero(trace):
                raise FieldError(
                    "inseparable quadratic extension: generator has trace 0 "
                    "in characteristic 2")
        else:
            disc = K.sub(K.mul(trace, trace),
                         K.mul(K.from_int(4), norm))
            if K.is_zero(disc):
                raise FieldError("inseparable quadratic extension: "
                                 "zero discriminant")
        self.base = K
        self.trace = trace
        self.norm = norm
        self.gen_name = gen_name
        self.characteristic = K.characteristic
        self.name = f"{K.name}({gen_name})"
        self.is_finite = getattr(K, "is_finite", False)
        self.zero = (K.zero, K.zero)
        self.one = (K.one, K.zero)

    def gen(self):
        return (self.base.zero, self.base.one)

    def from_base(self, a):
        return (a, self.base.zero)

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def add(self, a, b):
        K = self.base
        return (K.add(a[0], b[0]), K.add(a[1], b[1]))

    def sub(self, a, b):
        K = self.base
        return (K.sub(a[0], b[0]), K.sub(a[1], b[1]))

    def neg(self, a):
        K = self.base
        return (K.neg(a[0]), K.neg(a[1]))

    def mul(self, a, b):
        # (a0 + a1 w)(b0 + b1 w) with w^2 = T w - N
        K = self.base
        a0, a1 = a
        b0, b1 = b
        c = K.mul(a1, b1)
        return (K.sub(K.mul(a0, b0), K.mul(self.norm, c)),
                K.add(K.add(K.mul(a0, b1), K.mul(a1, b0)),
                      K.mul(self.trace, c)))

    def conj(self, a):
        K = self.base
        return (K.add(a[0], K.mul(a[1], self.trace)), K.neg(a[1]))

    def elem_norm(self, a):
        return self.mul(a, self.conj(a))[0]

    def elem_trace(self, a):
        K = self.base
        return K.add(K.add(a[0], a[0]), K.mul(a[1], self.trace))

    def inv(self, a):
        K = self.base
        n = self.elem_norm(a)
        if K.is_zero(n):
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        c = K.inv(n)
        ab = self.conj(a)
        return (K.mul(ab[0], c), K.mul(ab[1], c))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        K = self.base
        return K.eq(a[0], b[0]) and K.eq(a[1], b[1])

    def is_zero(self, a):
        K = self.base
        return K.is_zero(a[0]) and K.is_zero(a[1])

    def is_one(self, a):
        return self.eq(a, self.one)

    def in_base(self, a):
        return self.base.is_zero(a[1])

    def key(self, a):
        K = self.base
        return (K.key(a[0]), K.key(a[1]))

    def to_str(self, a):
        K = self.base
        if K.is_zero(a[1]):
            return K.to_str(a[0])
        s1 = f"{K.to_str(a[1])}*{self.gen_name}"
        if K.is_zero(a[0]):
            return s1
        return f"{K.to_str(a[0])} + {s1}"

    def rand(self, rng, height=10):
        K = self.base
        return (K.rand(rng, height), K.rand(rng, height))

    def elements(self):
        for a0 in self.base.elements():
            for a1 in self.base.elements():
                yield (a0, a1)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return (isinstance(other, QuadraticExtension)
                and other.base == self.base
                and self.base.eq(other.trace, self.trace)
                and self.base.eq(other.norm, self.norm))

    def __hash__(self):
        return hash(("Quad", self.base, self.base.key(self.trace),
                     self.base.key(self.norm)))


QQ = Rationals()


def GF(p):
    return PrimeField(p)
