"""Finite element bending analysis of functionally graded sandwich beams.

Two-node, 8-DOF shear-deformable beam element for straight and curved
FG sandwich sections under static transverse loading, with benchmark
fixtures and a config-driven CLI (see ``fgcbeam.cli``).
"""

from .config import CaseConfig, ConfigError, parse_config
from .materials import (
    DEFAULT_MATERIAL,
    Layup,
    LayupKind,
    MaterialPair,
    effective_modulus,
    stiffness_coeffs,
    volume_fraction,
)
from .postproc import (
    StressResultants,
    StressSample,
    deflection_point,
    displacement_at,
    nondimensionalize,
    resultants_at,
    strains_at,
    stress_at,
    thickness_profile,
)
from .section import SectionRigidities, compute_rigidities, f_shear, g_shear
from .solver import (
    BoundaryCondition,
    LoadCase,
    Mesh,
    SingularSystemError,
    Solution,
    apply_bcs,
    assemble,
    assemble_load,
    solve_static,
)
from .studies import CaseResults, convergence_study, evaluate_case, sweep

__all__ = [
    "CaseConfig", "ConfigError", "parse_config",
    "DEFAULT_MATERIAL", "Layup", "LayupKind", "MaterialPair",
    "effective_modulus", "stiffness_coeffs", "volume_fraction",
    "StressResultants", "StressSample", "deflection_point", "displacement_at",
    "nondimensionalize", "resultants_at", "strains_at", "stress_at",
    "thickness_profile",
    "SectionRigidities", "compute_rigidities", "f_shear", "g_shear",
    "BoundaryCondition", "LoadCase", "Mesh", "SingularSystemError", "Solution",
    "apply_bcs", "assemble", "assemble_load", "solve_static",
    "CaseResults", "convergence_study", "evaluate_case", "sweep",
]

__version__ = "0.1.0"
