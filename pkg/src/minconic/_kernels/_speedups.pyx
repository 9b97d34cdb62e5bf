# cython: language_level=3
"""Compiled kernel twin of _py.py; same functions, same contracts."""


cdef inline void c_cross(double a0, double a1, double a2,
                         double b0, double b1, double b2,
                         double* o) noexcept nogil:
    o[0] = a1 * b2 - a2 * b1
    o[1] = a2 * b0 - a0 * b2
    o[2] = a0 * b1 - a1 * b0


def cross(a, b):
    cdef double a0 = a[0], a1 = a[1], a2 = a[2]
    cdef double b0 = b[0], b1 = b[1], b2 = b[2]
    cdef double o[3]
    c_cross(a0, a1, a2, b0, b1, b2, o)
    return (o[0], o[1], o[2])


def dot3(a, b):
    cdef double a0 = a[0], a1 = a[1], a2 = a[2]
    cdef double b0 = b[0], b1 = b[1], b2 = b[2]
    return a0 * b0 + a1 * b1 + a2 * b2


def det3(a, b, c):
    """Determinant of the 3x3 matrix whose columns are a, b, c."""
    cdef double a0 = a[0], a1 = a[1], a2 = a[2]
    cdef double b0 = b[0], b1 = b[1], b2 = b[2]
    cdef double c0 = c[0], c1 = c[1], c2 = c[2]
    return (a0 * (b1 * c2 - b2 * c1)
            - b0 * (a1 * c2 - a2 * c1)
            + c0 * (a1 * b2 - a2 * b1))


def norm3(a):
    cdef double a0 = a[0], a1 = a[1], a2 = a[2]
    return (a0 * a0 + a1 * a1 + a2 * a2) ** 0.5


def solve3(a, b, c, r):
    """Solve [a | b | c] x = r by explicit adjugate; returns (x, det)."""
    cdef double a0 = a[0], a1 = a[1], a2 = a[2]
    cdef double b0 = b[0], b1 = b[1], b2 = b[2]
    cdef double c0 = c[0], c1 = c[1], c2 = c[2]
    cdef double r0 = r[0], r1 = r[1], r2 = r[2]
    cdef double u[3]
    cdef double v[3]
    cdef double w[3]
    c_cross(b0, b1, b2, c0, c1, c2, u)
    c_cross(c0, c1, c2, a0, a1, a2, v)
    c_cross(a0, a1, a2, b0, b1, b2, w)
    cdef double d = u[0] * a0 + u[1] * a1 + u[2] * a2
    if d == 0.0:
        return (0.0, 0.0, 0.0), 0.0
    return (
        (u[0] * r0 + u[1] * r1 + u[2] * r2) / d,
        (v[0] * r0 + v[1] * r1 + v[2] * r2) / d,
        (w[0] * r0 + w[1] * r1 + w[2] * r2) / d,
    ), d


cdef inline double c_max4(double a, double b, double c, double d) noexcept nogil:
    cdef double m = a
    if b > m:
        m = b
    if c > m:
        m = c
    if d > m:
        m = d
    return m


def diag_triangle(x1, x2, x3, x4):
    """Diagonal-triangle vertices plus a cross/det-form deviation alarm."""
    cdef double p1[3]
    cdef double p2[3]
    cdef double p3[3]
    cdef double p4[3]
    cdef int i
    for i in range(3):
        p1[i] = x1[i]
        p2[i] = x2[i]
        p3[i] = x3[i]
        p4[i] = x4[i]
    cdef double s12[3]
    cdef double s34[3]
    cdef double s13[3]
    cdef double s24[3]
    cdef double s14[3]
    cdef double s23[3]
    c_cross(p1[0], p1[1], p1[2], p2[0], p2[1], p2[2], s12)
    c_cross(p3[0], p3[1], p3[2], p4[0], p4[1], p4[2], s34)
    c_cross(p1[0], p1[1], p1[2], p3[0], p3[1], p3[2], s13)
    c_cross(p2[0], p2[1], p2[2], p4[0], p4[1], p4[2], s24)
    c_cross(p1[0], p1[1], p1[2], p4[0], p4[1], p4[2], s14)
    c_cross(p2[0], p2[1], p2[2], p3[0], p3[1], p3[2], s23)
    cdef double xi1[3]
    cdef double xi2[3]
    cdef double xi3[3]
    c_cross(s12[0], s12[1], s12[2], s34[0], s34[1], s34[2], xi1)
    c_cross(s13[0], s13[1], s13[2], s24[0], s24[1], s24[2], xi2)
    c_cross(s14[0], s14[1], s14[2], s23[0], s23[1], s23[2], xi3)

    cdef double d123 = s12[0] * p3[0] + s12[1] * p3[1] + s12[2] * p3[2]
    cdef double d124 = s12[0] * p4[0] + s12[1] * p4[1] + s12[2] * p4[2]
    cdef double d134 = s13[0] * p4[0] + s13[1] * p4[1] + s13[2] * p4[2]

    cdef double dev = 0.0
    cdef double scale, alt, err
    scale = c_max4(abs(xi1[0]), abs(xi1[1]), abs(xi1[2]), 1e-300)
    for i in range(3):
        alt = d124 * p3[i] - d123 * p4[i]
        err = abs(xi1[i] - alt) / scale
        if err > dev:
            dev = err
    scale = c_max4(abs(xi2[0]), abs(xi2[1]), abs(xi2[2]), 1e-300)
    for i in range(3):
        alt = d134 * p2[i] + d123 * p4[i]
        err = abs(xi2[i] - alt) / scale
        if err > dev:
            dev = err
    scale = c_max4(abs(xi3[0]), abs(xi3[1]), abs(xi3[2]), 1e-300)
    for i in range(3):
        alt = d124 * p3[i] - d134 * p2[i]
        err = abs(xi3[i] - alt) / scale
        if err > dev:
            dev = err
    return ((xi1[0], xi1[1], xi1[2]),
            (xi2[0], xi2[1], xi2[2]),
            (xi3[0], xi3[1], xi3[2]), dev)


cdef inline void c_axpy_outer(double* m, double k, double* v) noexcept nogil:
    m[0] += k * v[0] * v[0]
    m[1] += k * v[0] * v[1]
    m[2] += k * v[1] * v[1]
    m[3] += k * v[0] * v[2]
    m[4] += k * v[1] * v[2]
    m[5] += k * v[2] * v[2]


def conic_from_pencil(xi1, xi2, xi3, double s):
    """adj^T Diag(-s, s-1, 1) adj over the diagonal-triangle matrix."""
    cdef double e1[3]
    cdef double e2[3]
    cdef double e3[3]
    cdef int i
    for i in range(3):
        e1[i] = xi1[i]
        e2[i] = xi2[i]
        e3[i] = xi3[i]
    cdef double u[3]
    cdef double v[3]
    cdef double w[3]
    c_cross(e2[0], e2[1], e2[2], e3[0], e3[1], e3[2], u)
    c_cross(e3[0], e3[1], e3[2], e1[0], e1[1], e1[2], v)
    c_cross(e1[0], e1[1], e1[2], e2[0], e2[1], e2[2], w)
    cdef double m[6]
    for i in range(6):
        m[i] = 0.0
    c_axpy_outer(m, -s, u)
    c_axpy_outer(m, s - 1.0, v)
    c_axpy_outer(m, 1.0, w)
    return (m[0], m[1], m[2], m[3], m[4], m[5])


def conic_from_five_points(x1, x2, x3, x4, x5):
    """Unique conic through five points; returns (sym6, beta)."""
    xi1, xi2, xi3, _ = diag_triangle(x1, x2, x3, x4)
    cdef double e1[3]
    cdef double e2[3]
    cdef double e3[3]
    cdef double p5[3]
    cdef int i
    for i in range(3):
        e1[i] = xi1[i]
        e2[i] = xi2[i]
        e3[i] = xi3[i]
        p5[i] = x5[i]
    cdef double u[3]
    cdef double v[3]
    cdef double w[3]
    c_cross(e2[0], e2[1], e2[2], e3[0], e3[1], e3[2], u)
    c_cross(e3[0], e3[1], e3[2], e1[0], e1[1], e1[2], v)
    c_cross(e1[0], e1[1], e1[2], e2[0], e2[1], e2[2], w)
    cdef double d = u[0] * e1[0] + u[1] * e1[1] + u[2] * e1[2]
    cdef double b1 = (u[0] * p5[0] + u[1] * p5[1] + u[2] * p5[2]) / d
    cdef double b2 = (v[0] * p5[0] + v[1] * p5[1] + v[2] * p5[2]) / d
    cdef double b3 = (w[0] * p5[0] + w[1] * p5[1] + w[2] * p5[2]) / d
    cdef double m[6]
    for i in range(6):
        m[i] = 0.0
    c_axpy_outer(m, b3 * b3 - b2 * b2, u)
    c_axpy_outer(m, b1 * b1 - b3 * b3, v)
    c_axpy_outer(m, b2 * b2 - b1 * b1, w)
    return (m[0], m[1], m[2], m[3], m[4], m[5]), (b1, b2, b3)


def sym_adjugate(m):
    cdef double m11 = m[0], m12 = m[1], m22 = m[2]
    cdef double m13 = m[3], m23 = m[4], m33 = m[5]
    return (
        m22 * m33 - m23 * m23,
        m13 * m23 - m12 * m33,
        m11 * m33 - m13 * m13,
        m12 * m23 - m22 * m13,
        m12 * m13 - m11 * m23,
        m11 * m22 - m12 * m12,
    )


def sym_det(m):
    cdef double m11 = m[0], m12 = m[1], m22 = m[2]
    cdef double m13 = m[3], m23 = m[4], m33 = m[5]
    return (m11 * (m22 * m33 - m23 * m23)
            - m12 * (m12 * m33 - m23 * m13)
            + m13 * (m12 * m23 - m22 * m13))


def sym_eval(m, v):
    """Quadratic form v^T M v for a sym6 matrix."""
    cdef double m11 = m[0], m12 = m[1], m22 = m[2]
    cdef double m13 = m[3], m23 = m[4], m33 = m[5]
    cdef double v1 = v[0], v2 = v[1], v3 = v[2]
    return (m11 * v1 * v1 + m22 * v2 * v2 + m33 * v3 * v3
            + 2.0 * (m12 * v1 * v2 + m13 * v1 * v3 + m23 * v2 * v3))
