"""Arithmetic in the geometric algebra of Euclidean 3-space.

Elements are real linear combinations of the eight basis blades
``[1, e1, e2, e3, e23, e13, e12, e123]``.  The unit trivector ``e123``
squares to -1 and commutes with everything, so the center of the algebra
behaves as the complex numbers; :class:`ComplexScalar` is that center.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

from . import _kernels
from ._tables import BASIS_LABELS, GRADE_SLOTS
from .errors import ConvergenceError, NonInvertible

EQ_TOL = 1e-12

# sign flips per slot for the three conjugations
_REVERSE_SIGNS = np.array([1, 1, 1, 1, -1, -1, -1, -1], dtype=float)
_INVOLUTION_SIGNS = np.array([1, -1, -1, -1, 1, 1, 1, -1], dtype=float)
_CLIFFORD_SIGNS = _REVERSE_SIGNS * _INVOLUTION_SIGNS


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class Multivector:
    """Immutable element of the 8-dimensional algebra."""

    __slots__ = ("_c",)

    def __init__(self, coefficients):
        c = np.asarray(coefficients, dtype=float)
        if c.shape != (8,):
            raise ValueError("a multivector needs exactly 8 coefficients")
        self._c = _freeze(c.copy())

    @classmethod
    def _raw(cls, arr: np.ndarray) -> "Multivector":
        mv = object.__new__(cls)
        mv._c = _freeze(arr)
        return mv

    @classmethod
    def scalar(cls, value: float) -> "Multivector":
        arr = np.zeros(8)
        arr[0] = value
        return cls._raw(arr)

    @property
    def coefficients(self) -> np.ndarray:
        """Read-only coefficient view in slot order [1,e1,e2,e3,e23,e13,e12,e123]."""
        return self._c

    # -- grade structure ---------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        if not isinstance(k, int) or not 0 <= k <= 3:
            raise ValueError(f"grade index must be an integer in 0..3, got {k!r}")
        arr = np.zeros(8)
        slots = GRADE_SLOTS[k]
        arr[list(slots)] = self._c[list(slots)]
        return Multivector._raw(arr)

    @property
    def scalar_part(self) -> float:
        return float(self._c[0])

    @property
    def center_part(self) -> "ComplexScalar":
        """Projection onto span{1, e123}."""
        return ComplexScalar(float(self._c[0]), float(self._c[7]))

    @property
    def vector_part(self) -> "Vector3":
        return Vector3(float(self._c[1]), float(self._c[2]), float(self._c[3]))

    @property
    def bivector_dual(self) -> "Vector3":
        """Vector w with grade-2 part equal to i*w."""
        return Vector3(float(self._c[4]), -float(self._c[5]), float(self._c[6]))

    # -- conjugations ------------------------------------------------------

    def reverse(self) -> "Multivector":
        return Multivector._raw(self._c * _REVERSE_SIGNS)

    def grade_involution(self) -> "Multivector":
        return Multivector._raw(self._c * _INVOLUTION_SIGNS)

    def clifford_conjugation(self) -> "Multivector":
        return Multivector._raw(self._c * _CLIFFORD_SIGNS)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Multivector._raw(self._c + o._c)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Multivector._raw(self._c - o._c)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Multivector._raw(o._c - self._c)

    def __neg__(self) -> "Multivector":
        return Multivector._raw(-self._c)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Multivector._raw(self._c * float(other))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        out = np.empty(8)
        _kernels.gp(self._c, o._c, out)
        return Multivector._raw(out)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return Multivector._raw(self._c * float(other))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        out = np.empty(8)
        _kernels.gp(o._c, self._c, out)
        return Multivector._raw(out)

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Multivector._raw(self._c / float(other))
        if isinstance(other, ComplexScalar):
            return self * other.reciprocal()
        if isinstance(other, (Multivector, Vector3)):
            return self * inverse(_coerce(other))
        return NotImplemented

    def __pow__(self, n: int) -> "Multivector":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    # -- comparison --------------------------------------------------------

    def max_norm(self) -> float:
        return float(np.max(np.abs(self._c)))

    def approx_eq(self, other, tol: float = EQ_TOL) -> bool:
        o = _coerce(other)
        if o is None:
            return False
        diff = float(np.max(np.abs(self._c - o._c)))
        return diff <= tol or diff <= tol * max(self.max_norm(), o.max_norm())

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.approx_eq(o)

    __hash__ = None  # tolerance-based equality is not hashable

    # -- formatting ----------------------------------------------------------

    def pretty(self) -> str:
        """Human-readable form like ``1 + 2e12``."""
        parts: list[tuple[str, str]] = []
        for k in range(8):
            v = float(self._c[k])
            if v == 0.0:
                continue
            mag = _format_real(abs(v))
            if k == 0:
                term = mag
            elif mag == "1":
                term = BASIS_LABELS[k]
            else:
                term = f"{mag}{BASIS_LABELS[k]}"
            parts.append(("-" if v < 0 else "+", term))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"Multivector({self._c.tolist()})"


def _format_real(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return f"{x:.12g}"


@dataclass(frozen=True)
class ComplexScalar:
    """Element re + im*e123 of the center; the 'formally complex' scalars."""

    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexScalar":
        return cls(z.real, z.imag)

    @property
    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    def embed(self) -> Multivector:
        arr = np.zeros(8)
        arr[0] = self.re
        arr[7] = self.im
        return Multivector._raw(arr)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def reciprocal(self) -> "ComplexScalar":
        return ComplexScalar.from_complex(1.0 / self.as_complex)

    def __abs__(self) -> float:
        return abs(self.as_complex)

    def __add__(self, other):
        z = _as_complex(other)
        if z is None:
            return NotImplemented
        return ComplexScalar.from_complex(self.as_complex + z)

    __radd__ = __add__

    def __sub__(self, other):
        z = _as_complex(other)
        if z is None:
            return NotImplemented
        return ComplexScalar.from_complex(self.as_complex - z)

    def __rsub__(self, other):
        z = _as_complex(other)
        if z is None:
            return NotImplemented
        return ComplexScalar.from_complex(z - self.as_complex)

    def __mul__(self, other):
        if isinstance(other, (Multivector, Vector3)):
            return self.embed() * other
        z = _as_complex(other)
        if z is None:
            return NotImplemented
        return ComplexScalar.from_complex(self.as_complex * z)

    def __rmul__(self, other):
        z = _as_complex(other)
        if z is None:
            return NotImplemented
        return ComplexScalar.from_complex(z * self.as_complex)

    def __truediv__(self, other):
        z = _as_complex(other)
        if z is None:
            return NotImplemented
        return ComplexScalar.from_complex(self.as_complex / z)

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def approx_eq(self, other, tol: float = EQ_TOL) -> bool:
        z = _as_complex(other)
        return z is not None and abs(self.as_complex - z) <= tol * max(1.0, abs(self))


def _as_complex(x) -> complex | None:
    if isinstance(x, ComplexScalar):
        return x.as_complex
    if isinstance(x, Real):
        return complex(float(x))
    if isinstance(x, complex):
        return x
    return None


@dataclass(frozen=True)
class Vector3:
    """Grade-1 element x*e1 + y*e2 + z*e3."""

    x: float
    y: float
    z: float

    @classmethod
    def zero(cls) -> "Vector3":
        return cls(0.0, 0.0, 0.0)

    @classmethod
    def from_multivector(cls, mv: Multivector) -> "Vector3":
        return mv.vector_part

    def embed(self) -> Multivector:
        arr = np.zeros(8)
        arr[1], arr[2], arr[3] = self.x, self.y, self.z
        return Multivector._raw(arr)

    def dot(self, other: "Vector3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vector3") -> "Vector3":
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def normalized(self) -> "Vector3":
        n = self.norm()
        if n == 0.0:
            raise ZeroDivisionError("cannot normalize the zero vector")
        return Vector3(self.x / n, self.y / n, self.z / n)

    def __add__(self, other):
        if isinstance(other, Vector3):
            return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)
        return self.embed() + other

    def __radd__(self, other):
        return self.embed() + other

    def __sub__(self, other):
        if isinstance(other, Vector3):
            return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)
        return self.embed() - other

    def __rsub__(self, other):
        return other - self.embed()

    def __neg__(self) -> "Vector3":
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Real):
            s = float(other)
            return Vector3(self.x * s, self.y * s, self.z * s)
        return self.embed() * other

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self.__mul__(other)
        return other * self.embed()

    def __truediv__(self, other):
        if isinstance(other, Real):
            return self * (1.0 / float(other))
        return self.embed() / other

    def approx_eq(self, other: "Vector3", tol: float = EQ_TOL) -> bool:
        d = max(abs(self.x - other.x), abs(self.y - other.y), abs(self.z - other.z))
        scale = max(self.norm(), other.norm())
        return d <= tol or d <= tol * scale


def _coerce(x) -> Multivector | None:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, Real):
        return Multivector.scalar(float(x))
    if isinstance(x, ComplexScalar):
        return x.embed()
    if isinstance(x, Vector3):
        return x.embed()
    return None


def as_multivector(x) -> Multivector:
    mv = _coerce(x)
    if mv is None:
        raise TypeError(f"cannot interpret {type(x).__name__} as a multivector")
    return mv


# -- named basis elements --------------------------------------------------

def _basis(slot: int) -> Multivector:
    arr = np.zeros(8)
    arr[slot] = 1.0
    return Multivector._raw(arr)


ZERO = Multivector.scalar(0.0)
ONE = _basis(0)
E1 = _basis(1)
E2 = _basis(2)
E3 = _basis(3)
E23 = _basis(4)
E13 = _basis(5)
E12 = _basis(6)
E123 = _basis(7)
I = E123
U_PLUS = 0.5 * (ONE + E3)
U_MINUS = 0.5 * (ONE - E3)

EX = Vector3(1.0, 0.0, 0.0)
EY = Vector3(0.0, 1.0, 0.0)
EZ = Vector3(0.0, 0.0, 1.0)


# -- products and maps -------------------------------------------------------

def geometric_product(a, b) -> Multivector:
    return as_multivector(a) * as_multivector(b)


def grade(a: Multivector, k: int) -> Multivector:
    return as_multivector(a).grade(k)


def reverse(a: Multivector) -> Multivector:
    return as_multivector(a).reverse()


def grade_involution(a: Multivector) -> Multivector:
    return as_multivector(a).grade_involution()


def clifford_conjugation(a: Multivector) -> Multivector:
    return as_multivector(a).clifford_conjugation()


def inner(a: Vector3, b: Vector3) -> float:
    """Symmetric inner product of vectors: the scalar part of (ab + ba)/2."""
    return a.x * b.x + a.y * b.y + a.z * b.z


def outer(a: Vector3, b: Vector3) -> Multivector:
    """Antisymmetric outer product a ^ b = i (a x b), a grade-2 element."""
    arr = np.zeros(8)
    arr[6] = a.x * b.y - a.y * b.x  # e12
    arr[5] = a.x * b.z - a.z * b.x  # e13
    arr[4] = a.y * b.z - a.z * b.y  # e23
    return Multivector._raw(arr)


def cross(a: Vector3, b: Vector3) -> Vector3:
    return a.cross(b)


def triple_wedge(a: Vector3, b: Vector3, c: Vector3) -> Multivector:
    """a ^ b ^ c, the grade-3 element (a . (b x c)) i."""
    bc = outer(b, c)
    amv = a.embed()
    return 0.5 * (amv * bc + bc * amv)


def exp(a, tol: float = 1e-14, max_terms: int = 200) -> Multivector:
    """Exponential sum(a^n / n!).

    A closed form is used when the argument is a center multiple of a unit
    vector or bivector (the Euler / hyperbolic Euler identities); otherwise
    the series is summed until a term's max-norm drops below tol.
    """
    mv = as_multivector(a)
    c = mv.center_part
    x_arr = mv.coefficients.copy()
    x_arr[0] = 0.0
    x_arr[7] = 0.0
    blade = Multivector._raw(x_arr)

    central = ComplexScalar.from_complex(cmath.exp(c.as_complex))
    if blade.max_norm() == 0.0:
        return central.embed()

    v = blade.vector_part
    w = blade.bivector_dual
    axis = v if v.norm() >= w.norm() else w
    u_hat = axis.normalized()
    z = complex(v.dot(u_hat), w.dot(u_hat))
    # shortcut applies when blade == z * u_hat, i.e. v and w are parallel
    residual = (blade - ComplexScalar.from_complex(z) * u_hat).max_norm()
    if residual <= 1e-14 * blade.max_norm():
        ch = ComplexScalar.from_complex(cmath.cosh(z))
        sh = ComplexScalar.from_complex(cmath.sinh(z))
        return central * (ch.embed() + sh * u_hat)

    term = ONE
    acc = ONE
    for n in range(1, max_terms + 1):
        term = term * mv / n
        acc = acc + term
        if term.max_norm() < tol:
            return acc
    raise ConvergenceError(
        f"exponential series did not reach tol={tol} within {max_terms} terms"
    )


def inverse(a, tol: float = 1e-12) -> Multivector:
    """Inverse via Clifford conjugation: a^-1 = a* / (a a*).

    The product a a* always lies in the center; it must have complex modulus
    above tol or NonInvertible is raised (idempotents and null vectors are
    zero divisors).
    """
    mv = as_multivector(a)
    conj = mv.clifford_conjugation()
    det = (mv * conj).center_part
    if abs(det) <= tol:
        raise NonInvertible(f"center norm {abs(det):.3e} is below tol={tol}")
    return conj * det.reciprocal()
