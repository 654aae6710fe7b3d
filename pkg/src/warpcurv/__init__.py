"""Numerical verification toolkit for curvature identities and
inequalities of hypersurfaces in warped product manifolds.

Submodules:
  symfunc     elementary symmetric functions, Newton tensors, cones
  kronecker   brute-force generalized-delta oracles
  gaussbonnet intrinsic even/odd curvature combinations and inequalities
  models      warped ambient spaces (space forms, black-hole family)
  surfaces    rotationally symmetric hypersurfaces and quadrature
  integrals   integral identities, inequalities, rigidity scans
  sampling    randomized cone sampling, sweeps, equality atlases
  registry    named check registry driving the CLI
"""

from . import gaussbonnet, integrals, kronecker, models, registry, sampling, surfaces, symfunc
from .integrals import CurvatureCombo
from .models import WarpedModel, euclidean, hyperbolic, schwarzschild, sphere
from .reports import CheckReport
from .sampling import SamplerSpec
from .surfaces import ProfileCurve, offset_sphere, perturbed_sphere, slice_profile

__version__ = "0.1.0"

__all__ = [
    "gaussbonnet", "integrals", "kronecker", "models", "registry",
    "sampling", "surfaces", "symfunc",
    "CurvatureCombo", "WarpedModel", "euclidean", "hyperbolic",
    "schwarzschild", "sphere", "CheckReport", "SamplerSpec",
    "ProfileCurve", "offset_sphere", "perturbed_sphere", "slice_profile",
]
