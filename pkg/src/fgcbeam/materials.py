"""Power-law graded material models for FG sandwich beam sections.

Three through-thickness layouts are supported:

* Type A: a single layer graded from metal (bottom) to ceramic (top),
  with ceramic volume fraction V(z) = ((z + h/2)/h)**p.
* Type B: graded face sheets over a fully ceramic core.  Each face is
  graded from metal at the outer surface to ceramic at the core
  interface.
* Type C: homogeneous face sheets (metal bottom, ceramic top) with a
  core graded from metal to ceramic.

Effective properties follow the rule of mixtures
P(z) = P_m + (P_c - P_m) * V(z), with Poisson's ratio held constant.
All functions here are pure and safe to call concurrently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class LayupKind(enum.Enum):
    """Section layout family: single graded layer or sandwich variant."""

    A = "A"  # single FG layer
    B = "B"  # FG faces, ceramic core
    C = "C"  # homogeneous faces, FG core


@dataclass(frozen=True)
class MaterialPair:
    """Metal/ceramic phase pair with a shared Poisson's ratio.

    E_m, E_c : Young's moduli of the metal and ceramic phases (Pa)
    nu       : Poisson's ratio, assumed constant through the thickness
    """

    E_m: float
    E_c: float
    nu: float

    def __post_init__(self):
        if self.E_m <= 0 or self.E_c <= 0:
            raise ValueError("phase moduli must be positive")
        if not (0.0 <= self.nu < 0.5):
            raise ValueError("Poisson's ratio must satisfy 0 <= nu < 0.5")


#: Al / alumina pair used by the embedded benchmark tables (E in Pa).
DEFAULT_MATERIAL = MaterialPair(E_m=70e9, E_c=380e9, nu=0.3)


@dataclass(frozen=True)
class Layup:
    """Thickness layout of the section.

    kind   : LayupKind (A, B or C)
    scheme : bottom-face : core : top-face thickness ratios, e.g. (1, 8, 1).
             Ignored for Type A.
    p      : power-law index controlling the gradation (p >= 0)
    h      : total thickness (m)

    The derived ``interfaces`` tuple holds (h1, h2, h3, h4) with
    h1 = -h/2 and h4 = +h/2.  For Type A the inner interfaces collapse
    onto the surfaces (h2 = h1, h3 = h4).
    """

    kind: LayupKind
    scheme: tuple[float, float, float]
    p: float
    h: float
    interfaces: tuple[float, float, float, float] = field(init=False)

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("thickness h must be positive")
        if self.p < 0:
            raise ValueError("power-law index p must be nonnegative")
        if self.kind is LayupKind.A:
            hh = (-self.h / 2, -self.h / 2, self.h / 2, self.h / 2)
        else:
            a, b, c = self.scheme
            if min(a, b, c) < 0 or a + b + c <= 0:
                raise ValueError("scheme ratios must be nonnegative with positive sum")
            total = a + b + c
            h1 = -self.h / 2
            h2 = h1 + self.h * a / total
            h3 = h2 + self.h * b / total
            hh = (h1, h2, h3, self.h / 2)
        object.__setattr__(self, "interfaces", hh)

    @staticmethod
    def single_layer(p: float, h: float) -> "Layup":
        """Type A layup (scheme is irrelevant and stored as zeros)."""
        return Layup(LayupKind.A, (0.0, 0.0, 0.0), p, h)

    @staticmethod
    def fg_faces(scheme: tuple[float, float, float], p: float, h: float) -> "Layup":
        """Type B layup: FG faces over a ceramic core."""
        return Layup(LayupKind.B, scheme, p, h)

    @staticmethod
    def fg_core(scheme: tuple[float, float, float], p: float, h: float) -> "Layup":
        """Type C layup: homogeneous faces around an FG core."""
        return Layup(LayupKind.C, scheme, p, h)

    def layer_index(self, z: float, side: str | None = None) -> int:
        """Layer (0, 1 or 2) containing z.

        Layers are the half-open intervals [h_n, h_{n+1}) with the top
        layer closed at +h/2, so a coordinate landing exactly on an
        interface deterministically belongs to the layer above it.
        ``side="below"`` / ``side="above"`` force the choice at an
        interface (used when sampling a stress jump from both sides).
        """
        h1, h2, h3, h4 = self.interfaces
        eps = 1e-12 * self.h
        if z < h1 - eps or z > h4 + eps:
            raise ValueError(f"z = {z} outside the section [{h1}, {h4}]")
        z = min(max(z, h1), h4)
        # Degenerate (zero thickness) layers are skipped when a side is forced.
        if side == "below":
            if abs(z - h2) <= eps:
                return 0 if h2 > h1 else 1
            if abs(z - h3) <= eps:
                return 1 if h3 > h2 else 0
        elif side == "above":
            if abs(z - h2) <= eps:
                return 1 if h3 > h2 else 2
            if abs(z - h3) <= eps:
                return 2
        elif side is not None:
            raise ValueError(f"side must be 'below', 'above' or None, got {side!r}")
        if z < h2:
            return 0
        if z < h3:
            return 1
        return 2


def volume_fraction(layup: Layup, z: float, side: str | None = None) -> float:
    """Ceramic volume fraction V(z) in [0, 1].

    Type A uses the single power law across the whole thickness; Types
    B and C are piecewise with the layer picked by ``layup.layer_index``
    (optionally forced with ``side`` at an interface).
    """
    h1, h2, h3, h4 = layup.interfaces
    eps = 1e-12 * layup.h
    if z < h1 - eps or z > h4 + eps:
        raise ValueError(f"z = {z} outside the section [{h1}, {h4}]")
    z = min(max(z, h1), h4)
    p = layup.p
    if layup.kind is LayupKind.A:
        return ((z - h1) / (h4 - h1)) ** p
    layer = layup.layer_index(z, side=side)
    if layup.kind is LayupKind.B:
        if layer == 0:
            return ((z - h1) / (h2 - h1)) ** p
        if layer == 1:
            return 1.0
        return ((h4 - z) / (h4 - h3)) ** p
    # Type C
    if layer == 0:
        return 0.0
    if layer == 1:
        return ((z - h2) / (h3 - h2)) ** p
    return 1.0


def effective_modulus(mat: MaterialPair, layup: Layup, z: float,
                      side: str | None = None) -> float:
    """Young's modulus E(z) by the rule of mixtures (Pa)."""
    return mat.E_m + (mat.E_c - mat.E_m) * volume_fraction(layup, z, side=side)


def stiffness_coeffs(E: float, nu: float) -> tuple[float, float]:
    """Plane stiffness coefficients (C11, C55) of an isotropic point.

    C11 = E couples axial stress to axial strain; C55 = E / (2(1 + nu))
    is the shear modulus coupling transverse shear stress and strain.
    """
    if E <= 0:
        raise ValueError("modulus must be positive")
    if not (0.0 <= nu < 0.5):
        raise ValueError("Poisson's ratio must satisfy 0 <= nu < 0.5")
    return E, E / (2.0 * (1.0 + nu))
