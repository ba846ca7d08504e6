"""Pure-Python kernels for the one-mode operator algebra.

Fallback for :mod:`fermibv._kernels` (the Cython build of the same three
functions); :mod:`fermibv._backend` picks whichever is importable.  Both
implementations must stay coefficient-for-coefficient identical, which
``tests/test_kernels.py`` enforces.

Coefficients are ordered over the basis (1, a, a†, a†a).  The product
table is generated by the canonical anticommutation relations
a·a† = 1 − a†a and a² = (a†)² = 0:

      ·    |  1  |  a      |  a†     |  a†a
      1    |  1  |  a      |  a†     |  a†a
      a    |  a  |  0      | 1 − a†a |  a
      a†   |  a† |  a†a    |  0      |  0
      a†a  | a†a |  0      |  a†     |  a†a
"""


def product4(x0, x1, x2, x3, y0, y1, y2, y3):
    """Product of two operators given by standard-basis coefficients."""
    return (
        x0 * y0 + x1 * y2,
        x0 * y1 + x1 * (y0 + y3),
        (x0 + x3) * y2 + x2 * y0,
        x0 * y3 + x3 * (y0 + y3) + x2 * y1 - x1 * y2,
    )


def sandwich4(u0, u1, u2, u3, x0, x1, x2, x3):
    """Conjugation u·x·u† with the adjoint formed coefficient-wise."""
    t0, t1, t2, t3 = product4(u0, u1, u2, u3, x0, x1, x2, x3)
    # adjoint(u) swaps the a and a† slots and conjugates
    return product4(
        t0, t1, t2, t3,
        u0.conjugate(), u2.conjugate(), u1.conjugate(), u3.conjugate(),
    )


def canonicity_residuals(l00, l01, l10, l11):
    """Absolute residuals of the four canonicity constraints.

    In order: 2|l00|² + |l10|² + |l01|² = 1, l00² + l10·l01 = 0,
    2·l00 + l11 = 0, and the derived |l10| + |l01| = 1.
    """
    m00 = abs(l00)
    m01 = abs(l01)
    m10 = abs(l10)
    return (
        abs(2.0 * m00 * m00 + m10 * m10 + m01 * m01 - 1.0),
        abs(l00 * l00 + l10 * l01),
        abs(2.0 * l00 + l11),
        abs(m10 + m01 - 1.0),
    )
