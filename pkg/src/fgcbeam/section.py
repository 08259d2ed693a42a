"""Cross-sectional rigidities of the graded beam section.

The kinematics use a quintic parabolic shear function

    f(z) = z (1 - (3/2)(z/h)^2 + (2/5)(z/h)^4),   g(z) = f'(z),

whose derivative vanishes at z = +-h/2, so the transverse shear stress
satisfies the traction-free surface condition without a shear
correction factor.

``compute_rigidities`` integrates the graded stiffness against the
moments {1, z, z^2, f, z f, f^2} (axial) and g^2 (shear) layer by
layer.  Within every layer the modulus is E_m + (E_c - E_m) * s**p with
s an affine function of z running 0 -> 1, so the integral splits into a
polynomial part (Gauss-Legendre) and a weighted part with weight s**p
(Gauss-Jacobi).  Both rules are exact for the polynomial factors
involved (degree <= 10), for every real p >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

from .materials import Layup, LayupKind, MaterialPair

# Highest polynomial moment degree is 10 (f^2); n points integrate
# degree 2n-1 exactly, 8 leaves margin.
_NPOINTS = 8

# scipy's Jacobi weight normalization carries a 2**(p+1) factor that
# overflows float64 near p ~ 1020; beyond this cap a graded layer is
# numerically pure metal outside a skin of relative thickness 1/p.
_P_MAX = 800.0


def f_shear(z, h):
    """Shear shape function f(z); odd, zero slope at both surfaces."""
    zh = np.asarray(z) / h
    return np.asarray(z) * (1.0 - 1.5 * zh * zh + 0.4 * zh ** 4)


def g_shear(z, h):
    """g(z) = f'(z) = 1 - (9/2)(z/h)^2 + 2(z/h)^4; exactly 0 at z = +-h/2."""
    zh = np.asarray(z) / h
    return 1.0 - 4.5 * zh * zh + 2.0 * zh ** 4


@dataclass(frozen=True)
class SectionRigidities:
    """Thickness-integrated stiffness moments, per unit width.

    A11 (N/m): membrane;  B11 (N): membrane-bending;  D11 (N m): bending;
    B11s (N), D11s (N m), H11s (N m): couplings with the shear function;
    A55s (N/m): transverse shear rigidity (integral of C55 g^2).
    """

    A11: float
    B11: float
    D11: float
    B11s: float
    D11s: float
    H11s: float
    A55s: float

    def gram_matrix(self) -> np.ndarray:
        """Gram matrix of {1, z, f} under the weight C11(z); PSD."""
        return np.array([
            [self.A11, self.B11, self.B11s],
            [self.B11, self.D11, self.D11s],
            [self.B11s, self.D11s, self.H11s],
        ])

    def resultant_matrix(self) -> np.ndarray:
        """4x4 map from generalized strains to (Nx, Mx, Sx, Qxz)."""
        return np.array([
            [self.A11, self.B11, self.B11s, 0.0],
            [self.B11, self.D11, self.D11s, 0.0],
            [self.B11s, self.D11s, self.H11s, 0.0],
            [0.0, 0.0, 0.0, self.A55s],
        ])


@lru_cache(maxsize=128)
def _jacobi_rule(p: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes s in (0,1) and weights for integral of s**p * phi(s) ds."""
    x, w = roots_jacobi(_NPOINTS, 0.0, p)
    return 0.5 * (x + 1.0), w * 0.5 ** (p + 1.0)


@lru_cache(maxsize=8)
def _legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _modulus_nodes(mat: MaterialPair, layup: Layup) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature nodes z_i and coefficients c_i with
    sum_i c_i * m(z_i) = integral of E(z) * m(z) dz (exact for
    polynomial m up to degree 2 * _NPOINTS - 1).

    Per layer the ceramic fraction is either constant (0 or 1) or s**p
    with s running 0 -> 1 across the layer (direction given by
    ``orient``); the constant part of E uses Gauss-Legendre and the
    graded part Gauss-Jacobi with weight s**p.
    """
    if layup.p > _P_MAX:
        raise ValueError(
            f"power-law index p = {layup.p:g} exceeds the section quadrature cap "
            f"({_P_MAX:g}); such a section is pure metal to machine precision")
    h1, h2, h3, h4 = layup.interfaces
    dE = mat.E_c - mat.E_m
    if layup.kind is LayupKind.A:
        layers = [(h1, h4, "up")]
    elif layup.kind is LayupKind.B:
        layers = [(h1, h2, "up"), (h2, h3, 1.0), (h3, h4, "down")]
    else:
        layers = [(h1, h2, 0.0), (h2, h3, "up"), (h3, h4, 1.0)]

    zs, cs = [], []
    s_gl, w_gl = _legendre_rule(_NPOINTS)
    for lo, hi, grade in layers:
        t = hi - lo
        if t <= 0:
            continue
        z_gl = lo + t * s_gl
        if grade == "up" or grade == "down":
            # constant metal baseline
            zs.append(z_gl)
            cs.append(t * w_gl * mat.E_m)
            # graded ceramic excess, weight s**p
            s_gj, w_gj = _jacobi_rule(layup.p)
            zs.append(lo + t * s_gj if grade == "up" else hi - t * s_gj)
            cs.append(t * w_gj * dE)
        else:
            E = mat.E_m + dE * grade
            zs.append(z_gl)
            cs.append(t * w_gl * E)
    return np.concatenate(zs), np.concatenate(cs)


def compute_rigidities(mat: MaterialPair, layup: Layup) -> SectionRigidities:
    """Integrate the seven rigidities over the section (unit width).

    Zero-thickness layers contribute nothing.  The result is linear in
    (E_m, E_c) and the (A11, B11, B11s; B11, D11, D11s; B11s, D11s,
    H11s) block is positive semi-definite by construction.
    """
    z, c11 = _modulus_nodes(mat, layup)
    c55 = c11 / (2.0 * (1.0 + mat.nu))
    f = f_shear(z, layup.h)
    g = g_shear(z, layup.h)
    return SectionRigidities(
        A11=float(np.sum(c11)),
        B11=float(np.sum(c11 * z)),
        D11=float(np.sum(c11 * z * z)),
        B11s=float(np.sum(c11 * f)),
        D11s=float(np.sum(c11 * z * f)),
        H11s=float(np.sum(c11 * f * f)),
        A55s=float(np.sum(c55 * g * g)),
    )
