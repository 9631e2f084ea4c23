"""Integer kernels on homogeneous triples and 3x3 matrices.

Everything here works on plain tuples of Python ints.  Vectors are returned
in canonical form: gcd 1, first nonzero entry positive.  Matrices are flat
row-major 9-tuples.  ``_speedups.pyx`` mirrors this module line for line.
"""

from math import gcd


def canon(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    for x in v:
        if x:
            if x < 0:
                g = -g
            break
    if g == 1:
        return tuple(v)
    return tuple(x // g for x in v)


def canon3(a, b, c):
    g = gcd(gcd(a, b), c)
    if g == 0:
        return (0, 0, 0)
    if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
        g = -g
    if g == 1:
        return (a, b, c)
    return (a // g, b // g, c // g)


def cross(p, q):
    p0, p1, p2 = p
    q0, q1, q2 = q
    return canon3(p1 * q2 - p2 * q1, p2 * q0 - p0 * q2, p0 * q1 - p1 * q0)


def dot(p, q):
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def det3(p, q, r):
    p0, p1, p2 = p
    q0, q1, q2 = q
    r0, r1, r2 = r
    return (p0 * (q1 * r2 - q2 * r1)
            - p1 * (q0 * r2 - q2 * r0)
            + p2 * (q0 * r1 - q1 * r0))


def matdet(m):
    return det3(m[0:3], m[3:6], m[6:9])


def matvec(m, p):
    x, y, w = p
    return canon3(m[0] * x + m[1] * y + m[2] * w,
                  m[3] * x + m[4] * y + m[5] * w,
                  m[6] * x + m[7] * y + m[8] * w)


def rawmatmul(m, n):
    m0, m1, m2, m3, m4, m5, m6, m7, m8 = m
    n0, n1, n2, n3, n4, n5, n6, n7, n8 = n
    return (m0 * n0 + m1 * n3 + m2 * n6,
            m0 * n1 + m1 * n4 + m2 * n7,
            m0 * n2 + m1 * n5 + m2 * n8,
            m3 * n0 + m4 * n3 + m5 * n6,
            m3 * n1 + m4 * n4 + m5 * n7,
            m3 * n2 + m4 * n5 + m5 * n8,
            m6 * n0 + m7 * n3 + m8 * n6,
            m6 * n1 + m7 * n4 + m8 * n7,
            m6 * n2 + m7 * n5 + m8 * n8)


def matmul(m, n):
    return canon(rawmatmul(m, n))


def adjugate(m):
    m0, m1, m2, m3, m4, m5, m6, m7, m8 = m
    return canon((m4 * m8 - m5 * m7, m2 * m7 - m1 * m8, m1 * m5 - m2 * m4,
                  m5 * m6 - m3 * m8, m0 * m8 - m2 * m6, m2 * m3 - m0 * m5,
                  m3 * m7 - m4 * m6, m1 * m6 - m0 * m7, m0 * m4 - m1 * m3))


def transpose(m):
    return (m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8])


def congruence(c, m):
    """Canonical ``m^T c m``."""
    return canon(rawmatmul(transpose(m), rawmatmul(c, m)))


def bilinear(c, p, q):
    q0, q1, q2 = q
    return (p[0] * (c[0] * q0 + c[1] * q1 + c[2] * q2)
            + p[1] * (c[3] * q0 + c[4] * q1 + c[5] * q2)
            + p[2] * (c[6] * q0 + c[7] * q1 + c[8] * q2))


def quad(c, p):
    x, y, w = p
    return (c[0] * x * x + c[4] * y * y + c[8] * w * w
            + 2 * (c[1] * x * y + c[2] * x * w + c[5] * y * w))


def nullspace(rows, ncols):
    """Integer basis of the right null space of an integer matrix.

    Fraction-free (Bareiss) elimination to reduced echelon form; the basis
    vectors are canonical.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[col]
        for i in range(nrows):
            if i == r:
                continue
            ri = a[i]
            f = ri[col]
            if i > r:
                a[i] = [(pv * ri[j] - f * pr[j]) // prev for j in range(ncols)]
            elif f:
                a[i] = [pv * ri[j] - f * pr[j] for j in range(ncols)]
        prev = pv
        pivots.append(col)
        r += 1
    # rows above the pivot may have picked up common factors
    a = [list(canon(row)) for row in a[:r]]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fcol in free:
        # x_free = L, x_pivot_i = -L * a[i][fcol] / a[i][pivot_i]
        lcm = 1
        for i, pc in enumerate(pivots):
            d = a[i][pc]
            lcm = lcm * abs(d) // gcd(lcm, d)
        v = [0] * ncols
        v[fcol] = lcm
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fcol] * lcm // a[i][pc]
        basis.append(canon(v))
    return basis
