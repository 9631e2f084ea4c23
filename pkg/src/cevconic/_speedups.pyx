# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_purekernel``.

Same signatures and results.  Coordinates stay Python ints (unbounded), so
the win comes from dropping interpreter dispatch, not from machine ints.
"""

from math import gcd


cpdef tuple canon(v):
    cdef object g = 0
    cdef object x
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
    return tuple([x // g for x in v])


cpdef tuple canon3(object a, object b, object c):
    cdef object g = gcd(gcd(a, b), c)
    if g == 0:
        return (0, 0, 0)
    if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
        g = -g
    if g == 1:
        return (a, b, c)
    return (a // g, b // g, c // g)


cpdef tuple cross(tuple p, tuple q):
    cdef object p0 = p[0], p1 = p[1], p2 = p[2]
    cdef object q0 = q[0], q1 = q[1], q2 = q[2]
    return canon3(p1 * q2 - p2 * q1, p2 * q0 - p0 * q2, p0 * q1 - p1 * q0)


cpdef object dot(tuple p, tuple q):
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


cpdef object det3(tuple p, tuple q, tuple r):
    cdef object p0 = p[0], p1 = p[1], p2 = p[2]
    cdef object q0 = q[0], q1 = q[1], q2 = q[2]
    cdef object r0 = r[0], r1 = r[1], r2 = r[2]
    return (p0 * (q1 * r2 - q2 * r1)
            - p1 * (q0 * r2 - q2 * r0)
            + p2 * (q0 * r1 - q1 * r0))


cpdef object matdet(tuple m):
    return det3(m[0:3], m[3:6], m[6:9])


cpdef tuple matvec(tuple m, tuple p):
    cdef object x = p[0], y = p[1], w = p[2]
    return canon3(m[0] * x + m[1] * y + m[2] * w,
                  m[3] * x + m[4] * y + m[5] * w,
                  m[6] * x + m[7] * y + m[8] * w)


cpdef tuple rawmatmul(tuple m, tuple n):
    cdef object m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3], m4 = m[4]
    cdef object m5 = m[5], m6 = m[6], m7 = m[7], m8 = m[8]
    cdef object n0 = n[0], n1 = n[1], n2 = n[2], n3 = n[3], n4 = n[4]
    cdef object n5 = n[5], n6 = n[6], n7 = n[7], n8 = n[8]
    return (m0 * n0 + m1 * n3 + m2 * n6,
            m0 * n1 + m1 * n4 + m2 * n7,
            m0 * n2 + m1 * n5 + m2 * n8,
            m3 * n0 + m4 * n3 + m5 * n6,
            m3 * n1 + m4 * n4 + m5 * n7,
            m3 * n2 + m4 * n5 + m5 * n8,
            m6 * n0 + m7 * n3 + m8 * n6,
            m6 * n1 + m7 * n4 + m8 * n7,
            m6 * n2 + m7 * n5 + m8 * n8)


cpdef tuple matmul(tuple m, tuple n):
    return canon(rawmatmul(m, n))


cpdef tuple adjugate(tuple m):
    cdef object m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3], m4 = m[4]
    cdef object m5 = m[5], m6 = m[6], m7 = m[7], m8 = m[8]
    return canon((m4 * m8 - m5 * m7, m2 * m7 - m1 * m8, m1 * m5 - m2 * m4,
                  m5 * m6 - m3 * m8, m0 * m8 - m2 * m6, m2 * m3 - m0 * m5,
                  m3 * m7 - m4 * m6, m1 * m6 - m0 * m7, m0 * m4 - m1 * m3))


cpdef tuple transpose(tuple m):
    return (m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8])


cpdef tuple congruence(tuple c, tuple m):
    return canon(rawmatmul(transpose(m), rawmatmul(c, m)))


cpdef object bilinear(tuple c, tuple p, tuple q):
    cdef object q0 = q[0], q1 = q[1], q2 = q[2]
    return (p[0] * (c[0] * q0 + c[1] * q1 + c[2] * q2)
            + p[1] * (c[3] * q0 + c[4] * q1 + c[5] * q2)
            + p[2] * (c[6] * q0 + c[7] * q1 + c[8] * q2))


cpdef object quad(tuple c, tuple p):
    cdef object x = p[0], y = p[1], w = p[2]
    return (c[0] * x * x + c[4] * y * y + c[8] * w * w
            + 2 * (c[1] * x * y + c[2] * x * w + c[5] * y * w))


cpdef list nullspace(rows, Py_ssize_t ncols):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(a)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, col, i, j, fcol
    cdef object prev = 1, pv, f, lcm, d
    cdef list pr, ri, v, basis, free
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
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
    a = [list(canon(x)) for x in a[:r]]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fcol in free:
        lcm = 1
        for i in range(len(pivots)):
            d = a[i][pivots[i]]
            lcm = lcm * abs(d) // gcd(lcm, d)
        v = [0] * ncols
        v[fcol] = lcm
        for i in range(len(pivots)):
            v[pivots[i]] = -a[i][fcol] * lcm // a[i][pivots[i]]
        basis.append(canon(v))
    return basis
