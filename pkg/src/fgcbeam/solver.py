"""Mesh, assembly, boundary conditions and the linear static solve.

Uniform meshes of the two-node element are assembled into a dense
symmetric global stiffness (half-bandwidth <= 8; systems here are at
most a few hundred DOFs, so dense Cholesky is the simplest exact
route).  Constraints are applied by row/column elimination, which keeps
the reduced operator symmetric positive definite.

Supported boundary conditions (left end x = 0, right end x = L):

    SS : w0 pinned at both ends (plus the axial anchor below)
    CC : all four DOFs clamped at both ends
    CF : all four DOFs clamped at x = 0, free at x = L

A uniform axial translation u0 = const is strain free (the membrane
strain is u0' + w0/R), so the literal SS constraint set is singular.
The solver therefore anchors u0 at the first node for SS; the mode
carries no generalized force, and displacements relative to it, hence
all strains and stresses, are unaffected.

Solves share no mutable state; distinct inputs may be solved from any
number of threads concurrently.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .element import ElementGeometry, element_load_udl, element_stiffness
from .section import SectionRigidities

#: Names of the four nodal DOFs, in interleaved storage order.
DOF_NAMES = ("u0", "w0", "w0_x", "phi_x")


class SingularSystemError(RuntimeError):
    """Reduced stiffness is not positive definite (BC/mesh misconfiguration)."""


@dataclass(frozen=True)
class Mesh:
    """Uniform 1D mesh along the beam arc.

    L     : total arc length (m)
    ne    : number of elements
    inv_R : curvature 1/R shared by all elements (0 = straight)
    """

    L: float
    ne: int
    inv_R: float = 0.0

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError("beam length must be positive")
        if self.ne < 1:
            raise ValueError("need at least one element")
        if self.inv_R < 0:
            raise ValueError("curvature 1/R must be nonnegative")

    @property
    def n_nodes(self) -> int:
        return self.ne + 1

    @property
    def ndof(self) -> int:
        return 4 * self.n_nodes

    @property
    def Le(self) -> float:
        return self.L / self.ne

    def node_coords(self) -> np.ndarray:
        return np.linspace(0.0, self.L, self.n_nodes)

    def element_geometry(self) -> ElementGeometry:
        return ElementGeometry(Le=self.Le, inv_R=self.inv_R)

    def element_dofs(self, e: int) -> slice:
        return slice(4 * e, 4 * e + 8)


class BoundaryCondition(enum.Enum):
    SS = "SS"
    CC = "CC"
    CF = "CF"

    def constrained_dofs(self, mesh: Mesh) -> list[int]:
        """Global DOF indices eliminated for this support set."""
        last = 4 * mesh.ne
        if self is BoundaryCondition.SS:
            # w0 at both ends + the axial anchor u0 at node 0
            return [0, 1, last + 1]
        if self is BoundaryCondition.CC:
            return [0, 1, 2, 3, last, last + 1, last + 2, last + 3]
        return [0, 1, 2, 3]  # CF


@dataclass(frozen=True)
class LoadCase:
    """One active load: uniform q (N/m) or a transverse point force (N).

    kind is 'udl', 'point_end' or 'point_mid'; magnitude is q or F.
    """

    kind: str
    magnitude: float

    _KINDS = ("udl", "point_end", "point_mid")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"load kind must be one of {self._KINDS}, got {self.kind!r}")

    @staticmethod
    def udl(q: float) -> "LoadCase":
        return LoadCase("udl", q)

    @staticmethod
    def point_end(F: float) -> "LoadCase":
        return LoadCase("point_end", F)

    @staticmethod
    def point_mid(F: float) -> "LoadCase":
        return LoadCase("point_mid", F)


@dataclass(frozen=True)
class Solution:
    """Solved global DOF vector plus the inputs that produced it."""

    d: np.ndarray
    mesh: Mesh
    bc: BoundaryCondition
    load: LoadCase

    def nodal(self, node: int) -> np.ndarray:
        """(u0, w0, w0,x, phi_x) at a node."""
        return self.d[4 * node: 4 * node + 4]


def assemble(mesh: Mesh, rig: SectionRigidities) -> np.ndarray:
    """Direct-stiffness assembly of the global matrix (dense symmetric)."""
    K = np.zeros((mesh.ndof, mesh.ndof))
    Ke = element_stiffness(rig, mesh.element_geometry())
    for e in range(mesh.ne):
        idx = mesh.element_dofs(e)
        K[idx, idx] += Ke
    return K


def assemble_load(mesh: Mesh, load: LoadCase) -> np.ndarray:
    """Global force vector for the load case.

    Point loads land on the w0 DOF of the end node or the mid-span
    node; the latter requires an even element count so that x = L/2 is
    a node.
    """
    F = np.zeros(mesh.ndof)
    if load.kind == "udl":
        fe = element_load_udl(load.magnitude, mesh.Le)
        for e in range(mesh.ne):
            F[mesh.element_dofs(e)] += fe
    elif load.kind == "point_end":
        F[4 * mesh.ne + 1] = load.magnitude
    else:  # point_mid
        if mesh.ne % 2 != 0:
            raise ValueError(
                f"mid-span point load needs an even element count, got ne = {mesh.ne}")
        F[4 * (mesh.ne // 2) + 1] = load.magnitude
    return F


def apply_bcs(K: np.ndarray, F: np.ndarray, bc: BoundaryCondition, mesh: Mesh
              ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Eliminate constrained rows/columns.

    Returns (K_red, F_red, free) where ``free`` maps reduced indices
    back to full DOF indices.
    """
    fixed = set(bc.constrained_dofs(mesh))
    free = np.array([i for i in range(mesh.ndof) if i not in fixed], dtype=int)
    return K[np.ix_(free, free)], F[free], free


def _dof_label(idx: int) -> str:
    return f"node {idx // 4}, dof {DOF_NAMES[idx % 4]}"


def _factor_solve(K_red: np.ndarray, F_red: np.ndarray, free: np.ndarray) -> np.ndarray:
    """Cholesky solve; on failure name the offending DOF."""
    if K_red.shape[0] == 0:
        return np.zeros(0)
    try:
        c = scipy.linalg.cho_factor(K_red, lower=False, check_finite=False)
    except scipy.linalg.LinAlgError as err:
        m = re.search(r"(\d+)-th leading minor", str(err))
        if m:
            bad = free[int(m.group(1)) - 1]
            raise SingularSystemError(
                f"reduced stiffness is not positive definite at {_dof_label(bad)}; "
                "check boundary conditions and mesh") from err
        raise SingularSystemError(
            "reduced stiffness is not positive definite; "
            "check boundary conditions and mesh") from err
    return scipy.linalg.cho_solve(c, F_red, check_finite=False)


def solve_static(mesh: Mesh, rig: SectionRigidities, bc: BoundaryCondition,
                 load: LoadCase) -> Solution:
    """Assemble, constrain and solve K d = F for the static response.

    The returned vector carries exact zeros at constrained DOFs.  The
    reduced residual is verified against a 1e-10 relative bound.
    """
    K = assemble(mesh, rig)
    F = assemble_load(mesh, load)
    K_red, F_red, free = apply_bcs(K, F, bc, mesh)
    d_red = _factor_solve(K_red, F_red, free)
    residual = np.linalg.norm(K_red @ d_red - F_red)
    bound = 1e-10 * np.linalg.norm(F_red)
    if residual > bound and bound > 0:
        raise SingularSystemError(
            f"solver residual {residual:.3e} exceeds 1e-10 * |F| = {bound:.3e}")
    d = np.zeros(mesh.ndof)
    d[free] = d_red
    return Solution(d=d, mesh=mesh, bc=bc, load=load)
