"""Two-node curved beam element: 4 DOFs per node [u0, w0, w0,x, phi_x].

Axial displacement and shear rotation are interpolated with linear
Lagrange functions, the deflection with C1 Hermite cubics.  The element
DOF vector is node-interleaved:

    [u0_1, w0_1, w0,x_1, phi_1, u0_2, w0_2, w0,x_2, phi_2]

Generalized strains (membrane eps0 = u0' + w0/R, bending
eps1 = -w0'', shear-warp eps2 = phi', shear gamma0 = phi) map from the
DOFs through the four strain-displacement rows built here.  All
integrands are polynomials of degree <= 6, so a fixed 4-point Gauss
rule (exact to degree 7) integrates the stiffness and loads exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .section import SectionRigidities

_GAUSS_X, _GAUSS_W = leggauss(4)


@dataclass(frozen=True)
class ElementGeometry:
    """Arc length Le and curvature inv_R = 1/R (0 for a straight beam)."""

    Le: float
    inv_R: float = 0.0

    def __post_init__(self):
        if self.Le <= 0:
            raise ValueError("element length must be positive")
        if self.inv_R < 0:
            raise ValueError("curvature 1/R must be nonnegative")


@dataclass(frozen=True)
class GeneralizedStrains:
    """Section strains: eps0 (-), eps1 (1/m), eps2 (1/m), gamma0 (rad)."""

    eps0: float
    eps1: float
    eps2: float
    gamma0: float

    def as_array(self) -> np.ndarray:
        return np.array([self.eps0, self.eps1, self.eps2, self.gamma0])


def lagrange_shape(xi: float, Le: float) -> tuple[np.ndarray, np.ndarray]:
    """Linear shape functions N = [1 - x/Le, x/Le] and dN/dx at xi."""
    N = np.array([1.0 - xi / Le, xi / Le])
    dN = np.array([-1.0 / Le, 1.0 / Le])
    return N, dN


def hermite_shape(xi: float, Le: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hermite cubics on [0, Le] and their first two derivatives.

    Ordering [translation_1, slope_1, translation_2, slope_2] with the
    nodal properties N1(0) = 1, N2'(0) = 1, N3(Le) = 1, N4'(Le) = 1.
    """
    x, L = xi, Le
    N = np.array([
        1.0 - 3.0 * x**2 / L**2 + 2.0 * x**3 / L**3,
        x - 2.0 * x**2 / L + x**3 / L**2,
        3.0 * x**2 / L**2 - 2.0 * x**3 / L**3,
        -(x**2) / L + x**3 / L**2,
    ])
    dN = np.array([
        -6.0 * x / L**2 + 6.0 * x**2 / L**3,
        1.0 - 4.0 * x / L + 3.0 * x**2 / L**2,
        6.0 * x / L**2 - 6.0 * x**2 / L**3,
        -2.0 * x / L + 3.0 * x**2 / L**2,
    ])
    d2N = np.array([
        -6.0 / L**2 + 12.0 * x / L**3,
        -4.0 / L + 6.0 * x / L**2,
        6.0 / L**2 - 12.0 * x / L**3,
        -2.0 / L + 6.0 * x / L**2,
    ])
    return N, dN, d2N


def strain_displacement(xi: float, geom: ElementGeometry
                        ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Rows (B0, B1, B2, Bs) mapping element DOFs to generalized strains."""
    N, dN = lagrange_shape(xi, geom.Le)
    Nb, _, d2Nb = hermite_shape(xi, geom.Le)
    r = geom.inv_R
    B0 = np.array([dN[0], r * Nb[0], r * Nb[1], 0.0,
                   dN[1], r * Nb[2], r * Nb[3], 0.0])
    B1 = np.array([0.0, -d2Nb[0], -d2Nb[1], 0.0,
                   0.0, -d2Nb[2], -d2Nb[3], 0.0])
    B2 = np.array([0.0, 0.0, 0.0, dN[0], 0.0, 0.0, 0.0, dN[1]])
    Bs = np.array([0.0, 0.0, 0.0, N[0], 0.0, 0.0, 0.0, N[1]])
    return B0, B1, B2, Bs


def element_stiffness(rig: SectionRigidities, geom: ElementGeometry) -> np.ndarray:
    """8x8 symmetric element stiffness by 4-point Gauss integration."""
    K = np.zeros((8, 8))
    for x, w in zip(_GAUSS_X, _GAUSS_W):
        xi = 0.5 * geom.Le * (x + 1.0)
        wi = 0.5 * geom.Le * w
        B0, B1, B2, Bs = strain_displacement(xi, geom)
        K += wi * (
            rig.A11 * np.outer(B0, B0)
            + rig.B11 * (np.outer(B0, B1) + np.outer(B1, B0))
            + rig.B11s * (np.outer(B0, B2) + np.outer(B2, B0))
            + rig.D11 * np.outer(B1, B1)
            + rig.D11s * (np.outer(B1, B2) + np.outer(B2, B1))
            + rig.H11s * np.outer(B2, B2)
            + rig.A55s * np.outer(Bs, Bs)
        )
    return K


def element_load_udl(q: float, Le: float) -> np.ndarray:
    """Work-equivalent nodal loads of a uniform transverse load q (N/m)."""
    return np.array([0.0, q * Le / 2.0, q * Le**2 / 12.0, 0.0,
                     0.0, q * Le / 2.0, -q * Le**2 / 12.0, 0.0])


def element_load_point(F: float, node: int) -> np.ndarray:
    """Transverse point force on node 1 or 2 of the element."""
    if node not in (1, 2):
        raise ValueError(f"node must be 1 or 2, got {node}")
    f = np.zeros(8)
    f[1 if node == 1 else 5] = F
    return f
