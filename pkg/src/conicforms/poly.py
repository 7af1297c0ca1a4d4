"""Dense univariate polynomial arithmetic over an exact field.

Polynomials are plain lists of raw field elements, constant term first, with
no trailing zeros; ``[]`` is the zero polynomial.  Every function takes the
coefficient field as its first argument and never mutates its inputs.
"""

from __future__ import annotations


def trim(K, cs):
    while cs and K.is_zero(cs[-1]):
        cs.pop()
    return cs


def deg(cs):
    """Degree, with deg(0) = -1."""
    return len(cs) - 1


def is_zero(cs):
    return not cs


def const(K, a):
    return [] if K.is_zero(a) else [a]


def one(K):
    return [K.one]


def x(K):
    return [K.zero, K.one]


def eq(K, a, b):
    return len(a) == len(b) and all(K.eq(x, y) for x, y in zip(a, b))


def _modulus(K, a):
    """Prime modulus when coefficients are plain ints, else None."""
    p = getattr(K, "p", None)
    if p is not None and (not a or type(a[0]) is int):
        return p
    return None


def _direct(K):
    """True when raw coefficients support python operators natively."""
    return getattr(K, "direct_ops", False)


def add(K, a, b):
    p = _modulus(K, a)
    if p is not None:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        while out and not out[-1]:
            out.pop()
        return out
    if _direct(K):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and not out[-1]:
            out.pop()
        return out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = K.add(out[i], c)
    return trim(K, out)


def neg(K, a):
    return [K.neg(c) for c in a]


def sub(K, a, b):
    return add(K, a, neg(K, b))


def scale(K, a, c):
    if K.is_zero(c):
        return []
    return [K.mul(x, c) for x in a]


def mul(K, a, b):
    if not a or not b:
        return []
    p = _modulus(K, a)
    if p is not None:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        out = [c % p for c in out]
        while out and not out[-1]:
            out.pop()
        return out
    if _direct(K):
        out = [K.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        while out and not out[-1]:
            out.pop()
        return out
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if K.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(ai, bj))
    return trim(K, out)


def shift(K, a, k):
    """Multiply by x**k (k >= 0)."""
    if not a:
        return []
    return [K.zero] * k + list(a)


def divmod_(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    p = _modulus(K, b)
    if p is not None:
        a = list(a)
        q = [0] * max(0, len(a) - len(b) + 1)
        inv_lc = pow(b[-1], -1, p)
        nb = len(b)
        for i in range(len(a) - nb, -1, -1):
            c = (a[i + nb - 1] * inv_lc) % p
            if not c:
                continue
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
        while a and not a[-1]:
            a.pop()
        while q and not q[-1]:
            q.pop()
        return q, a
    if _direct(K):
        a = list(a)
        q = [K.zero] * max(0, len(a) - len(b) + 1)
        inv_lc = K.one / b[-1]
        nb = len(b)
        for i in range(len(a) - nb, -1, -1):
            c = a[i + nb - 1] * inv_lc
            if not c:
                continue
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = a[i + j] - c * bj
        while a and not a[-1]:
            a.pop()
        while q and not q[-1]:
            q.pop()
        return q, a
    a = list(a)
    q = [K.zero] * max(0, len(a) - len(b) + 1)
    inv_lc = K.inv(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = K.mul(a[i + len(b) - 1], inv_lc)
        if K.is_zero(c):
            continue
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] = K.sub(a[i + j], K.mul(c, bj))
    return trim(K, q), trim(K, a)


def quo(K, a, b):
    return divmod_(K, a, b)[0]


def mod(K, a, b):
    return divmod_(K, a, b)[1]


def monic(K, a):
    if not a:
        return a
    lc = a[-1]
    if K.is_one(lc):
        return list(a)
    return scale(K, a, K.inv(lc))


def _gcd_qq(a, b):
    """Monic gcd over QQ via primitive integer remainder sequences.

    Kept in plain ints with content stripping at each step, which avoids
    the coefficient blowup of naive rational Euclid.
    """
    import math

    from gmpy2 import mpq

    def to_prim(cs):
        lcm = 1
        for c in cs:
            d = int(c.denominator)
            lcm = lcm * d // math.gcd(lcm, d)
        zs = [int(c.numerator) * (lcm // int(c.denominator)) for c in cs]
        g = 0
        for z in zs:
            g = math.gcd(g, z)
        return [z // g for z in zs] if g else zs

    def prem(f, g):
        # pseudo-remainder of f by g in Z[x]
        f = list(f)
        lg = g[-1]
        while len(f) >= len(g) and f:
            c = f[-1]
            shift = len(f) - len(g)
            f = [x * lg for x in f]
            for j, gj in enumerate(g):
                f[shift + j] -= c * gj
            while f and not f[-1]:
                f.pop()
        return f

    fa, fb = to_prim(a), to_prim(b)
    while fb:
        r = prem(fa, fb)
        if r:
            g = 0
            for z in r:
                g = math.gcd(g, z)
            r = [z // g for z in r]
        fa, fb = fb, r
    lead = mpq(fa[-1])
    return [mpq(z) / lead for z in fa]


def gcd(K, a, b):
    """Monic gcd."""
    if getattr(K, "rational_ints", False) and a and b:
        return _gcd_qq(a, b)
    a, b = list(a), list(b)
    while b:
        a, b = b, mod(K, a, b)
    return monic(K, a)


def gcdex(K, a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = one(K), []
    t0, t1 = [], one(K)
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
        t0, t1 = t1, sub(K, t0, mul(K, q, t1))
    if not r0:
        return [], [], []
    lc = r0[-1]
    if K.is_one(lc):
        return r0, s0, t0
    c = K.inv(lc)
    return scale(K, r0, c), scale(K, s0, c), scale(K, t0, c)


def series_div(K, n, d, m):
    """First m coefficients of the power series n/d; requires d[0] != 0."""
    if m <= 0:
        return []
    p = _modulus(K, d)
    if p is not None:
        inv0 = pow(d[0], -1, p)
        out = []
        for i in range(m):
            acc = n[i] if i < len(n) else 0
            for j in range(1, min(i, len(d) - 1) + 1):
                acc -= d[j] * out[i - j]
            out.append((acc * inv0) % p)
        return out
    inv0 = K.inv(d[0])
    out = []
    for i in range(m):
        acc = n[i] if i < len(n) else K.zero
        for j in range(1, min(i, len(d) - 1) + 1):
            acc = K.sub(acc, K.mul(d[j], out[i - j]))
        out.append(K.mul(acc, inv0))
    return out


def evaluate(K, a, x0):
    acc = K.zero
    for c in reversed(a):
        acc = K.add(K.mul(acc, x0), c)
    return acc


def compose(K, a, b):
    """a(b(x)) by Horner."""
    acc = []
    for c in reversed(a):
        acc = add(K, mul(K, acc, b), const(K, c))
    return acc


def x_multiplicity(K, a):
    """Multiplicity of x dividing a; 0 for the zero polynomial."""
    m = 0
    for c in a:
        if K.is_zero(c):
            m += 1
        else:
            break
    return m if a else 0


def rand(K, rng, degree, height=10, monic_out=False):
    while True:
        cs = trim(K, [K.rand(rng, height) for _ in range(degree + 1)])
        if cs:
            break
    return monic(K, cs) if monic_out else cs


def to_str(K, a, var):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if K.is_zero(c):
            continue
        cs = K.to_str(c)
        if i == 0:
            term = cs
        else:
            xs = var if i == 1 else f"{var}^{i}"
            term = xs if K.is_one(c) else f"{cs}*{xs}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out
