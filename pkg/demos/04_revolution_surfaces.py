"""Rotationally symmetric hypersurfaces: principal curvatures, support
function and quadrature.

Run with: python3 demos/04_revolution_surfaces.py
"""

import numpy as np

from warpcurv import models, surfaces

H4 = models.hyperbolic(4)

# A slice {r = r0} is umbilical with both principal curvatures equal to
# lambda'(r0)/lambda(r0).
geom = surfaces.geometry_batch(H4, surfaces.slice_profile(0.8),
                               np.linspace(0.2, np.pi - 0.2, 5))
print("slice curvatures:", geom.kappa_profile, geom.kappa_rot)
print("lambda'/lambda  =", np.cosh(0.8) / np.sinh(0.8))

# An off-center geodesic sphere is still umbilical; its curvature only
# depends on the geodesic radius.
off = surfaces.offset_sphere(-1, 0.5, 0.9)
geom = surfaces.geometry_batch(H4, off, np.linspace(0.2, np.pi - 0.2, 5))
print("\noffset sphere curvatures:", geom.kappa_profile[:3])
print("coth(0.9)               =", 1 / np.tanh(0.9))

# Fourier perturbations of a slice break umbilicity in a controlled way;
# they are the workhorse for the rigidity oscillation scans.
pert = surfaces.perturbed_sphere(H4, 1.0, 0.1, mode=3)
geom = surfaces.geometry_batch(H4, pert, np.linspace(0.2, np.pi - 0.2, 7))
print("\nperturbed curvature spread:",
      np.max(geom.kappa_profile) - np.min(geom.kappa_profile))

# Surface integrals use Gauss-Legendre nodes in the polar angle; closed
# forms converge to machine precision quickly.
area = surfaces.integrate(models.euclidean(3), surfaces.slice_profile(1.0),
                          lambda g: 1.0, nodes=64)
print("\nunit sphere area:", area, " expected:", 4 * np.pi)
