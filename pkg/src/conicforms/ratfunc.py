"""Rational function fields K(u) with the two distinguished valuations.

``val0`` is the u-adic valuation and ``val_inf`` the valuation at u = 1/0,
computed as deg(den) - deg(num).  Two subrings matter throughout:

* ``O_V`` -- Laurent polynomials K[u, 1/u], the elements with denominator a
  power of u,
* ``O_S`` -- the elements f with val0(f) >= 0 and val_inf(f) >= 0, whose
  units are exactly the f with both valuations zero.

The module also provides the canonical factorization of a nonzero f as
(O_S-unit) * (u-1)**k * u**a, and the approximation of any f by a Laurent
polynomial up to an error with val0 >= 0 and val_inf > 0.
"""

from __future__ import annotations

from . import poly


class ZeroInputError(ZeroDivisionError):
    """Raised when a valuation or factorization is asked of 0."""


class RatFunc:
    """An element of K(u) as a reduced fraction of coefficient tuples.

    The denominator is monic and coprime to the numerator, so structural
    equality is semantic equality.
    """

    __slots__ = ("fld", "num", "den")

    def __init__(self, fld, num, den):
        self.fld = fld
        self.num = num
        self.den = den

    def __add__(self, o):
        return self.fld._make(*self.fld.F.add((self.num, self.den),
                                              (o.num, o.den)))

    def __sub__(self, o):
        return self.fld._make(*self.fld.F.sub((self.num, self.den),
                                              (o.num, o.den)))

    def __neg__(self):
        return self.fld._make(*self.fld.F.neg((self.num, self.den)))

    def __mul__(self, o):
        return self.fld._make(*self.fld.F.mul((self.num, self.den),
                                              (o.num, o.den)))

    def __truediv__(self, o):
        return self.fld._make(*self.fld.F.div((self.num, self.den),
                                              (o.num, o.den)))

    def inv(self):
        return self.fld._make(*self.fld.F.inv((self.num, self.den)))

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = self.fld.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        return (isinstance(o, RatFunc) and self.num == o.num
                and self.den == o.den)

    def __hash__(self):
        K = self.fld.K
        return hash((tuple(K.key(c) for c in self.num),
                     tuple(K.key(c) for c in self.den)))

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self == self.fld.one()

    def __repr__(self):
        return self.fld.F.to_str((self.num, self.den))


class SemilinearMap:
    """A semilinear automorphism of K(u): coefficients are mapped by an
    automorphism of K and the variable is sent to const/u.

    Since u goes to const/u the two distinguished valuations are
    exchanged.  Whether the map squares to the identity depends on the
    chosen data; ``is_involution`` checks it on sample inputs.
    """

    __slots__ = ("fld", "coeff_map", "const")

    def __init__(self, fld, coeff_map, const):
        self.fld = fld
        self.coeff_map = coeff_map
        self.const = const

    def __call__(self, f):
        R = self.fld
        K = R.K
        if f.is_zero():
            return f

        def twist(cs):
            # image of a polynomial under coeff conjugation and u -> c/u,
            # cleared by u**deg: sum a_i^c * c**i * u**(deg - i)
            d = len(cs) - 1
            out = []
            power = K.one
            rev = []
            for a in cs:
                rev.append(K.mul(self.coeff_map(a), power))
                power = K.mul(power, self.const)
            return list(reversed(rev)), d

        num_t, dn = twist(list(f.num))
        den_t, dd = twist(list(f.den))
        # f -> (num_t / u**dn) / (den_t / u**dd) = num_t * u**(dd-dn) / den_t
        if dd >= dn:
            return R.from_pair([K.zero] * (dd - dn) + num_t, den_t)
        return R.from_pair(num_t, [K.zero] * (dn - dd) + den_t)

    def is_involution(self, samples):
        return all((self(self(f)) - f).is_zero() for f in samples)


class RationalFunctionField:
    """K(u) together with its valuation and subring structure."""

    def __init__(self, K, var="u"):
        from .basefields import FractionField
        self.K = K
        self.var = var
        self.F = FractionField(K, var)
        self.name = self.F.name

    def _make(self, num, den):
        return RatFunc(self, num, den)

    def from_raw(self, raw):
        return RatFunc(self, raw[0], raw[1])

    def from_pair(self, num, den):
        """Build from numerator/denominator coefficient lists over K."""
        return self.from_raw(self.F.make(num, den))

    def from_poly(self, cs):
        return self.from_raw(self.F.from_poly(list(cs)))

    def from_base(self, a):
        return self.from_raw(self.F.from_base(a))

    def from_int(self, n):
        return self.from_raw(self.F.from_int(n))

    def zero(self):
        return self.from_raw(self.F.zero)

    def one(self):
        return self.from_raw(self.F.one)

    def gen(self):
        return self.from_raw(self.F.gen())

    def u_minus_1(self):
        return self.from_poly([self.K.neg(self.K.one), self.K.one])

    def rand(self, rng, deg=3, height=10, nonzero=False):
        while True:
            f = self.from_raw(self.F.rand(rng, height=height, deg=deg))
            if not (nonzero and f.is_zero()):
                return f

    # -- valuations ----------------------------------------------------

    def val0(self, f):
        """u-adic valuation of a nonzero f."""
        if f.is_zero():
            raise ZeroInputError("val0 of zero")
        K = self.K
        return (poly.x_multiplicity(K, list(f.num))
                - poly.x_multiplicity(K, list(f.den)))

    def val_inf(self, f):
        """Valuation at infinity: deg(den) - deg(num), for nonzero f."""
        if f.is_zero():
            raise ZeroInputError("val_inf of zero")
        return len(f.den) - len(f.num)

    def in_ov(self, f):
        """Membership in K[u, 1/u]: the reduced denominator is a u-power."""
        den = f.den
        return all(self.K.is_zero(c) for c in den[:-1])

    def in_os(self, f):
        return f.is_zero() or (self.val0(f) >= 0 and self.val_inf(f) >= 0)

    def is_unit_os(self, f):
        """Units of O_S: nonzero with both valuations zero."""
        return (not f.is_zero()) and self.val0(f) == 0 and self.val_inf(f) == 0

    def is_unit_ov(self, f):
        """Units of K[u, 1/u]: nonzero scalar multiples of u-powers."""
        return (not f.is_zero()) and len(f.num) - 1 == poly.x_multiplicity(
            self.K, list(f.num)) and self.in_ov(f)

    # -- canonical factorization ---------------------------------------

    def canonical_factor(self, f):
        """Factor nonzero f as p * (u-1)**k * u**a with p a unit of O_S.

        Returns (p, k, a); the exponents are pinned by the two valuations:
        a = val0(f) and k = -val0(f) - val_inf(f).
        """
        if f.is_zero():
            raise ZeroInputError("canonical_factor of zero")
        a = self.val0(f)
        k = -a - self.val_inf(f)
        p = f * self.u_minus_1() ** (-k) * self.gen() ** (-a)
        return p, k, a

    # -- Laurent approximation -----------------------------------------

    def laurent_approximate(self, f):
        """A Laurent polynomial lam with val0(f - lam) >= 0, val_inf > 0.

        The principal part at u = 0 is read off from the power series of f
        there, and the polynomial part at infinity from the series in 1/u,
        so no iterative subtraction is needed.  Returns f itself when f is
        already a Laurent polynomial.
        """
        if f.is_zero():
            return self.zero()
        if self.in_ov(f):
            return f
        K = self.K
        num, den = list(f.num), list(f.den)
        mn = poly.x_multiplicity(K, num)
        md = poly.x_multiplicity(K, den)
        v0 = mn - md
        lam = self.zero()
        g = f
        if v0 < 0:
            # principal part at 0: u**v0 * (series of shifted num/den)
            s = poly.series_div(K, num[mn:], den[md:], -v0)
            lam0 = self.from_raw(self.F.make(s, [K.zero] * (-v0) + [K.one]))
            lam = lam0
            g = f - lam0
        if not g.is_zero():
            num, den = list(g.num), list(g.den)
            e = len(num) - len(den)  # -val_inf
            if e >= 0:
                # polynomial part at infinity from the series in 1/u
                s = poly.series_div(K, num[::-1], den[::-1], e + 1)
                mu = self.from_poly(s[::-1])
                lam = lam + mu
        return lam

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.K == self.K and other.var == self.var)

    def __hash__(self):
        return hash(("RF", self.K, self.var))
