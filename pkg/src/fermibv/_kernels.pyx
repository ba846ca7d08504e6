# cython: language_level=3
"""Compiled kernels for the one-mode operator algebra.

Same contract as :mod:`fermibv._kernels_py`; see there for the product
table.  These are the hot inner loops of batch verification, so they run
on C ``double complex`` scalars.
"""


cpdef tuple product4(double complex x0, double complex x1,
                     double complex x2, double complex x3,
                     double complex y0, double complex y1,
                     double complex y2, double complex y3):
    """Product of two operators given by standard-basis coefficients."""
    return (
        x0 * y0 + x1 * y2,
        x0 * y1 + x1 * (y0 + y3),
        (x0 + x3) * y2 + x2 * y0,
        x0 * y3 + x3 * (y0 + y3) + x2 * y1 - x1 * y2,
    )


cpdef tuple sandwich4(double complex u0, double complex u1,
                      double complex u2, double complex u3,
                      double complex x0, double complex x1,
                      double complex x2, double complex x3):
    """Conjugation u·x·u† with the adjoint formed coefficient-wise."""
    cdef double complex t0 = u0 * x0 + u1 * x2
    cdef double complex t1 = u0 * x1 + u1 * (x0 + x3)
    cdef double complex t2 = (u0 + u3) * x2 + u2 * x0
    cdef double complex t3 = u0 * x3 + u3 * (x0 + x3) + u2 * x1 - u1 * x2
    # adjoint(u) swaps the a and a† slots and conjugates
    cdef double complex d0 = u0.conjugate()
    cdef double complex d1 = u2.conjugate()
    cdef double complex d2 = u1.conjugate()
    cdef double complex d3 = u3.conjugate()
    return (
        t0 * d0 + t1 * d2,
        t0 * d1 + t1 * (d0 + d3),
        (t0 + t3) * d2 + t2 * d0,
        t0 * d3 + t3 * (d0 + d3) + t2 * d1 - t1 * d2,
    )


cpdef tuple canonicity_residuals(double complex l00, double complex l01,
                                 double complex l10, double complex l11):
    """Absolute residuals of the four canonicity constraints.

    In order: 2|l00|² + |l10|² + |l01|² = 1, l00² + l10·l01 = 0,
    2·l00 + l11 = 0, and the derived |l10| + |l01| = 1.
    """
    cdef double m00 = abs(l00)
    cdef double m01 = abs(l01)
    cdef double m10 = abs(l10)
    return (
        abs(2.0 * m00 * m00 + m10 * m10 + m01 * m01 - 1.0),
        abs(l00 * l00 + l10 * l01),
        abs(2.0 * l00 + l11),
        abs(m10 + m01 - 1.0),
    )
