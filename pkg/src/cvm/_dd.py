"""Double-double arithmetic on ``(hi, lo)`` pairs of Python floats.

A pair represents the unevaluated sum ``hi + lo`` with ``|lo| <= ulp(hi)/2``,
about 106 bits of significand.  The building blocks are Knuth's two-sum and
Dekker's split/two-product; each helper is written out flat because call
overhead dominates at the problem sizes this package targets.

Dekker's split overflows above ~1e300.
"""

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(x, y):
    a, b = x[0], y[0]
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    a, b = x[1], y[1]
    t = a + b
    bb = t - a
    f = (a - (t - bb)) + (b - bb)
    e += t
    u = s + e
    e = e - (u - s)
    e += f
    s = u + e
    return s, e - (s - u)


def neg(x):
    return -x[0], -x[1]


def sub(x, y):
    return add(x, (-y[0], -y[1]))


def mul(x, y):
    a, b = x[0], y[0]
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    e += a * y[1] + x[1] * b
    s = p + e
    return s, e - (s - p)


def mul_d(x, d):
    """Pair times a plain double."""
    a = x[0]
    p = a * d
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * d
    dh = c - (c - d)
    dl = d - dh
    e = ((ah * dh - p) + ah * dl + al * dh) + al * dl
    e += x[1] * d
    s = p + e
    return s, e - (s - p)


def div(x, y):
    q1 = x[0] / y[0]
    r = sub(x, mul_d(y, q1))
    q2 = r[0] / y[0]
    r = sub(r, mul_d(y, q2))
    q3 = r[0] / y[0]
    s = q1 + q2
    return add((s, q2 - (s - q1)), (q3, 0.0))


def div_d(x, d):
    """Pair divided by a plain double."""
    q1 = x[0] / d
    p, e = two_prod(q1, d)
    r = (x[0] - p - e) + x[1]
    q2 = r / d
    s = q1 + q2
    return s, q2 - (s - q1)


def to_float(x):
    return x[0] + x[1]
