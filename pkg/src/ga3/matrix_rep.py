"""The spectral-basis isomorphism between the algebra and 2x2 complex matrices.

The spectral basis {u+, e1 u+, e1 u-, u-} built on u+- = (1 +- e3)/2 turns
every element into a 2x2 matrix whose entries live in the center; the images
of e1, e2, e3 are the Pauli matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    E1,
    EQ_TOL,
    U_MINUS,
    U_PLUS,
    ComplexScalar,
    Multivector,
    as_multivector,
)

E1_U_PLUS = E1 * U_PLUS
E1_U_MINUS = E1 * U_MINUS

_I = ComplexScalar(0.0, 1.0)


def _cs(x) -> ComplexScalar:
    if isinstance(x, ComplexScalar):
        return x
    if isinstance(x, complex):
        return ComplexScalar(x.real, x.imag)
    return ComplexScalar(float(x))


@dataclass(frozen=True)
class Matrix2C:
    """2x2 matrix with entries in the center span{1, e123}."""

    m00: ComplexScalar
    m01: ComplexScalar
    m10: ComplexScalar
    m11: ComplexScalar

    @classmethod
    def from_rows(cls, rows) -> "Matrix2C":
        (a, b), (c, d) = rows
        return cls(_cs(a), _cs(b), _cs(c), _cs(d))

    @classmethod
    def identity(cls) -> "Matrix2C":
        return cls.from_rows([[1, 0], [0, 1]])

    def entry(self, r: int, c: int) -> ComplexScalar:
        return ((self.m00, self.m01), (self.m10, self.m11))[r][c]

    def as_array(self) -> np.ndarray:
        return np.array(
            [
                [self.m00.as_complex, self.m01.as_complex],
                [self.m10.as_complex, self.m11.as_complex],
            ]
        )

    @classmethod
    def from_array(cls, arr) -> "Matrix2C":
        a = np.asarray(arr, dtype=complex)
        return cls.from_rows([[a[0, 0], a[0, 1]], [a[1, 0], a[1, 1]]])

    def __add__(self, other: "Matrix2C") -> "Matrix2C":
        return Matrix2C(
            self.m00 + other.m00,
            self.m01 + other.m01,
            self.m10 + other.m10,
            self.m11 + other.m11,
        )

    def __sub__(self, other: "Matrix2C") -> "Matrix2C":
        return Matrix2C(
            self.m00 - other.m00,
            self.m01 - other.m01,
            self.m10 - other.m10,
            self.m11 - other.m11,
        )

    def __neg__(self) -> "Matrix2C":
        return Matrix2C(-self.m00, -self.m01, -self.m10, -self.m11)

    def __matmul__(self, other: "Matrix2C") -> "Matrix2C":
        return Matrix2C(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def scale(self, z) -> "Matrix2C":
        zc = _cs(z)
        return Matrix2C(zc * self.m00, zc * self.m01, zc * self.m10, zc * self.m11)

    def det(self) -> ComplexScalar:
        return self.m00 * self.m11 - self.m01 * self.m10

    def conjugate_transpose(self) -> "Matrix2C":
        return Matrix2C(
            self.m00.conjugate(),
            self.m10.conjugate(),
            self.m01.conjugate(),
            self.m11.conjugate(),
        )

    def is_hermitian(self, tol: float = EQ_TOL) -> bool:
        return self.approx_eq(self.conjugate_transpose(), tol)

    def approx_eq(self, other: "Matrix2C", tol: float = EQ_TOL) -> bool:
        diff = self.as_array() - other.as_array()
        d = float(np.max(np.abs(diff)))
        scale = max(
            float(np.max(np.abs(self.as_array()))),
            float(np.max(np.abs(other.as_array()))),
        )
        return d <= tol or d <= tol * scale

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.as_array())))


def to_matrix(g) -> Matrix2C:
    """Matrix [g] of an element in the spectral basis (an algebra isomorphism)."""
    c = [float(v) for v in as_multivector(g).coefficients]
    a0 = ComplexScalar(c[0], c[7])
    a1 = ComplexScalar(c[1], c[4])
    a2 = ComplexScalar(c[2], -c[5])
    a3 = ComplexScalar(c[3], c[6])
    return Matrix2C(
        a0 + a3,
        a1 - _I * a2,
        a1 + _I * a2,
        a0 - a3,
    )


def from_matrix(m: Matrix2C) -> Multivector:
    """Inverse of to_matrix via the spectral expansion.

    g = m00 u+ + m01 e1 u- + m10 e1 u+ + m11 u-.
    """
    return (
        m.m00 * U_PLUS
        + m.m01 * E1_U_MINUS
        + m.m10 * E1_U_PLUS
        + m.m11 * U_MINUS
    )


def conjugate_transpose(m: Matrix2C) -> Matrix2C:
    return m.conjugate_transpose()


def basis_change_table() -> tuple[tuple[ComplexScalar, ...], ...]:
    """Rows expressing {1, e1, e2, e3} over the spectral column.

    The column order is (u+, e1 u+, e1 u-, u-); multiplying each row into
    that column reproduces the corresponding standard basis element.
    """
    one = ComplexScalar(1.0)
    zero = ComplexScalar(0.0)
    return (
        (one, zero, zero, one),
        (zero, one, one, zero),
        (zero, _I, -_I, zero),
        (one, zero, zero, -one),
    )


def spectral_column() -> tuple[Multivector, Multivector, Multivector, Multivector]:
    """The spectral basis elements (u+, e1 u+, e1 u-, u-)."""
    return (U_PLUS, E1_U_PLUS, E1_U_MINUS, U_MINUS)
