"""Idempotents, ket-spinors, canonical forms, and the Riemann-sphere geometry.

A general idempotent is (1 + m + i n)/2 with m^2 - n^2 = 1 and m . n = 0.
Ket-spinors are the elements sqrt(2) (a0 + a1 e1) u+ of the minimal left
ideal; they project to points of the unit sphere through a_hat = m_hat e3
m_hat, which is simultaneously a stereographic projection of z = a1/a0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .algebra import (
    E3,
    EZ,
    I,
    ONE,
    U_PLUS,
    ComplexScalar,
    Multivector,
    Vector3,
    exp,
)
from .errors import (
    ConstraintViolated,
    DegenerateX,
    NotNormalized,
    NotUnit,
    SouthPole,
    ZeroAlpha0,
    ZeroSpinor,
)

CONSTRAINT_TOL = 1e-10
SQRT2 = math.sqrt(2.0)


def _clamp(x: float) -> float:
    return min(1.0, max(-1.0, x))


# -- idempotents -------------------------------------------------------------

@dataclass(frozen=True)
class Idempotent:
    """The element (1 + m + i n)/2; constraints are checked by make_idempotent."""

    m: Vector3
    n: Vector3

    def embed(self) -> Multivector:
        return 0.5 * (ONE + self.m.embed() + I * self.n.embed())


def make_idempotent(m: Vector3, n: Vector3, tol: float = CONSTRAINT_TOL) -> Idempotent:
    r_square = abs(m.dot(m) - n.dot(n) - 1.0)
    r_ortho = abs(m.dot(n))
    if r_square > tol or r_ortho > tol:
        raise ConstraintViolated(
            "need m^2 - n^2 = 1 and m . n = 0", max(r_square, r_ortho)
        )
    return Idempotent(m, n)


def simple_idempotent(a_hat: Vector3, tol: float = CONSTRAINT_TOL) -> Idempotent:
    """(1 + a_hat)/2 for a unit vector."""
    if abs(a_hat.norm() - 1.0) > tol:
        raise NotUnit(f"|a| = {a_hat.norm():.12g} is not 1")
    return Idempotent(a_hat, Vector3.zero())


def factor_idempotent(s: Idempotent) -> tuple[float, Vector3, Vector3]:
    """Split s into msq * a_hat_+ * b_hat_+ with a_hat = m_hat b_hat m_hat.

    Returns (msq, a_hat, b_hat) where msq = m^2 = 2 / (1 + a_hat . b_hat).
    """
    msq = s.m.dot(s.m)
    mnorm = math.sqrt(msq)
    m_hat = s.m / mnorm
    mxn = m_hat.cross(s.n)
    # i (m_hat n) = -(m_hat x n) since m and n are orthogonal
    b_hat = (m_hat - mxn) / mnorm
    a_hat = (m_hat + mxn) / mnorm
    return msq, a_hat, b_hat


@dataclass(frozen=True)
class BoostDecomposition:
    """m + i n as a boost of m_hat with rapidity phi in the i m_hat n_hat plane."""

    phi: float
    m_hat: Vector3
    n_hat: Vector3
    degenerate: bool = False

    @property
    def spin_velocity(self) -> Vector3:
        return -self.m_hat.cross(self.n_hat) * math.tanh(self.phi)


def _any_perpendicular(v: Vector3) -> Vector3:
    cand = v.cross(Vector3(1.0, 0.0, 0.0))
    if cand.norm() < 1e-8:
        cand = v.cross(Vector3(0.0, 1.0, 0.0))
    return cand.normalized()


def boost_decomposition(s: Idempotent, tol: float = CONSTRAINT_TOL) -> BoostDecomposition:
    """cosh(phi) = |m|, sinh(phi) = |n|; degenerate when n = 0 (then phi = 0)."""
    m_norm = s.m.norm()
    n_norm = s.n.norm()
    m_hat = s.m / m_norm
    if n_norm <= tol:
        return BoostDecomposition(0.0, m_hat, _any_perpendicular(m_hat), degenerate=True)
    phi = math.acosh(max(1.0, m_norm))
    return BoostDecomposition(phi, m_hat, s.n / n_norm)


# -- ket-spinors --------------------------------------------------------------

@dataclass(frozen=True)
class KetSpinor:
    """The ideal element sqrt(2) (a0 + a1 e1) u+ stored as its Pauli column."""

    a0: ComplexScalar
    a1: ComplexScalar

    def embed(self) -> Multivector:
        return SQRT2 * ((self.a0.embed() + self.a1 * _E1_MV) * U_PLUS)

    def norm(self) -> float:
        return math.sqrt(abs(self.a0) ** 2 + abs(self.a1) ** 2)

    def normalized(self, tol: float = 1e-12) -> "KetSpinor":
        n = self.norm()
        if n <= tol:
            raise ZeroSpinor("cannot normalize a zero ket-spinor")
        inv = ComplexScalar(1.0 / n)
        return KetSpinor(inv * self.a0, inv * self.a1)

    def scale(self, z) -> "KetSpinor":
        zc = z if isinstance(z, ComplexScalar) else ComplexScalar.from_complex(complex(z))
        return KetSpinor(zc * self.a0, zc * self.a1)

    def __neg__(self) -> "KetSpinor":
        return KetSpinor(-self.a0, -self.a1)

    def as_column(self) -> tuple[complex, complex]:
        return self.a0.as_complex, self.a1.as_complex

    def approx_eq(self, other: "KetSpinor", tol: float = 1e-12) -> bool:
        d = max(
            abs(self.a0.as_complex - other.a0.as_complex),
            abs(self.a1.as_complex - other.a1.as_complex),
        )
        return d <= tol or d <= tol * max(self.norm(), other.norm())


from .algebra import E1 as _E1_MV  # noqa: E402  (after KetSpinor for readability)


def ket_from_complex(a0, a1) -> KetSpinor:
    def conv(x) -> ComplexScalar:
        if isinstance(x, ComplexScalar):
            return x
        return ComplexScalar.from_complex(complex(x))

    return KetSpinor(conv(a0), conv(a1))


def ket_from_multivector(g) -> KetSpinor:
    """The ket of sqrt(2) g u+ (first column of [g])."""
    from .matrix_rep import to_matrix

    m = to_matrix(g)
    return KetSpinor(m.m00, m.m10)


KET_ZERO = ket_from_complex(1.0, 0.0)
KET_ONE = ket_from_complex(0.0, 1.0)


def inner_product(a: KetSpinor, b: KetSpinor) -> ComplexScalar:
    """Sesquilinear bra-ket <a|b> = conj(a0) b0 + conj(a1) b1."""
    return a.a0.conjugate() * b.a0 + a.a1.conjugate() * b.a1


def norm(a: KetSpinor) -> float:
    return a.norm()


def idempotent_from_ket(k: KetSpinor, tol: float = 1e-12) -> Idempotent:
    """The idempotent (1 + z e1) u+ with z = a1/a0; needs a0 != 0."""
    if abs(k.a0) <= tol:
        raise ZeroAlpha0("idempotent undefined for a0 = 0")
    z = (k.a1 / k.a0).as_complex
    m = Vector3(z.real, z.imag, 1.0)
    n = Vector3(z.imag, -z.real, 0.0)
    return Idempotent(m, n)


def a_hat_from_ket(k: KetSpinor, tol: float = 1e-12) -> Vector3:
    """Unit vector m_hat e3 m_hat on the sphere, computed from the column."""
    a0, a1 = k.a0.as_complex, k.a1.as_complex
    den = abs(a0) ** 2 + abs(a1) ** 2
    if den <= tol * tol:
        raise ZeroSpinor("a_hat undefined for the zero ket-spinor")
    c01 = a0.conjugate() * a1
    return Vector3(
        2.0 * c01.real / den,
        2.0 * c01.imag / den,
        (abs(a0) ** 2 - abs(a1) ** 2) / den,
    )


def stereographic_project(m: Vector3) -> tuple[float, float]:
    """Drop m = x e1 + y e2 + e3 to the xy-plane."""
    return m.x, m.y


def inverse_stereographic(a_hat: Vector3, tol: float = 1e-12) -> ComplexScalar:
    """z = (a1 + i a2)/(1 + a3), the point of the plane under a_hat."""
    den = 1.0 + a_hat.z
    if den <= tol:
        raise SouthPole("projection undefined at -e3")
    return ComplexScalar(a_hat.x / den, a_hat.y / den)


def perp_vector(m: Vector3, tol: float = 1e-12) -> Vector3:
    """m_perp = -x/|x|^2 + e3 for m = x + e3, the 90-degree rotation on the great circle."""
    if abs(m.z - 1.0) > CONSTRAINT_TOL:
        raise ValueError("perp_vector needs m = x + e3 with x in the e1 e2 plane")
    r2 = m.x * m.x + m.y * m.y
    if math.sqrt(r2) <= tol:
        raise DegenerateX("m = e3 has no distinguished perpendicular")
    return Vector3(-m.x / r2, -m.y / r2, 1.0)


def ket_bra(k: KetSpinor, tol: float = CONSTRAINT_TOL) -> Multivector:
    """|a><a| / 2 = (1 + a_hat)/2 for a normalized ket."""
    if abs(k.norm() - 1.0) >= tol:
        raise NotNormalized(f"norm {k.norm():.12g} is not 1")
    emb = k.embed()
    return 0.5 * (emb * emb.reverse())


# -- canonical form -----------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Parameters (rho, theta, m_hat, a_hat, phi, v_hat, omega, c_hat) of a ket.

    Reconstructions: |a> equals each of
      sqrt(2) rho e^{i theta} m_hat u+
      sqrt(2) rho e^{i(theta + v_hat phi)} u+
      sqrt(2) rho e^{i v_hat phi} e^{i e3 theta} u+
      sqrt(2) rho e^{i c_hat omega} u+
    """

    rho: float
    theta: float
    m_hat: Vector3
    a_hat: Vector3
    phi: float
    v_hat: Vector3
    omega: float
    c_hat: Vector3
    alpha0_degenerate: bool = False
    v_hat_degenerate: bool = False
    c_hat_degenerate: bool = False

    def reconstructions(self) -> tuple[Multivector, Multivector, Multivector, Multivector]:
        scale = SQRT2 * self.rho
        phase = ComplexScalar(math.cos(self.theta), math.sin(self.theta))
        f1 = scale * (phase * (self.m_hat.embed() * U_PLUS))
        arg2 = self.theta * I + self.phi * (I * self.v_hat.embed())
        f2 = scale * (exp(arg2) * U_PLUS)
        f3 = scale * (
            exp(self.phi * (I * self.v_hat.embed()))
            * exp(self.theta * (I * E3))
            * U_PLUS
        )
        f4 = scale * (exp(self.omega * (I * self.c_hat.embed())) * U_PLUS)
        return f1, f2, f3, f4


def canonical_form(k: KetSpinor, tol: float = 1e-12) -> CanonicalForm:
    """Extract every canonical parameter of a non-zero ket-spinor.

    Angle conventions: 0 <= theta < 2 pi, 0 <= phi <= pi/2, 0 <= omega <= pi.
    Degenerate directions are flagged rather than fatal: theta = 0 when
    a0 = 0 (with m_hat taken in the equatorial limit), c_hat = e3 when
    sin(omega) = 0, v_hat = e2 when m_hat = e3.
    """
    rho = k.norm()
    if rho <= tol:
        raise ZeroSpinor("canonical form undefined for the zero ket-spinor")
    a0 = k.a0.as_complex / rho
    a1 = k.a1.as_complex / rho
    x0, y0 = a0.real, a0.imag
    x1, y1 = a1.real, a1.imag
    r0 = math.hypot(x0, y0)

    a_hat = a_hat_from_ket(k)

    alpha0_degenerate = r0 <= tol
    if alpha0_degenerate:
        theta = 0.0
        gamma = math.atan2(y1, x1)
        m_hat = Vector3(math.cos(gamma), math.sin(gamma), 0.0)
    else:
        theta = math.atan2(y0, x0) % (2.0 * math.pi)
        m_hat = Vector3((x0 * x1 + y0 * y1) / r0, (x0 * y1 - x1 * y0) / r0, r0)

    phi = math.acos(_clamp(r0))
    m_cross_e3 = m_hat.cross(EZ)
    sin_phi = m_cross_e3.norm()
    v_hat_degenerate = sin_phi <= tol
    v_hat = Vector3(0.0, 1.0, 0.0) if v_hat_degenerate else m_cross_e3 / sin_phi

    sin_omega_sq = 1.0 - x0 * x0
    omega = math.acos(_clamp(x0))
    c_hat_degenerate = sin_omega_sq <= tol
    if c_hat_degenerate:
        c_hat = EZ
    else:
        s = math.sqrt(sin_omega_sq)
        c_hat = Vector3(y1 / s, -x1 / s, y0 / s)

    return CanonicalForm(
        rho=rho,
        theta=theta,
        m_hat=m_hat,
        a_hat=a_hat,
        phi=phi,
        v_hat=v_hat,
        omega=omega,
        c_hat=c_hat,
        alpha0_degenerate=alpha0_degenerate,
        v_hat_degenerate=v_hat_degenerate,
        c_hat_degenerate=c_hat_degenerate,
    )
