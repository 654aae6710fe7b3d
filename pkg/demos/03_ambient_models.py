"""Warped ambient models: warping functions, structure conditions and
radial Ricci curvature.

Run with: python3 demos/03_ambient_models.py
"""

import numpy as np

from warpcurv import models
from warpcurv.models import TangentVector

# The library bundles the three space forms plus several static
# (Schwarzschild-type) warping functions.
for model in models.model_library(4):
    print(f"{model.name:22s} n={model.n}  r in [{model.r_min:.2f}, "
          f"{model.r_max if np.isfinite(model.r_max) else np.inf:.2f}]  "
          f"space form: {model.is_space_form}")

# Structure conditions on a radial window: (C1) lambda' > 0,
# (C2) the second fundamental quantity lambda''/lambda + (K - lambda'^2)/lambda^2 >= 0,
# (C3) lambda'' >= 0, (C4) a Ricci bound used for the support-function
# inequality.  Space forms sit exactly on the (C2) boundary.
ads = models.schwarzschild(4, 1.0, kappa_amb=1.0)
for model, lo, hi in ((models.euclidean(4), 0.5, 3.0),
                      (models.sphere(4), 0.3, 1.2),
                      (ads, 1.5, 4.0)):
    cond = models.check_conditions(model, lo, hi)
    print(f"\n{model.name}: c1={cond.c1} c2={cond.c2} c3={cond.c3} "
          f"c4={cond.c4}  c2 margin={cond.c2_margin:+.3e}")

# Ricci curvature of the ambient metric evaluated on tangent vectors;
# for a space form it is a constant multiple of the metric.
u = TangentVector(1.0, (0.3, -0.2))
print("\nhyperbolic Ricci(u, u) =", models.ricci(models.hyperbolic(4), 0.9, u, u))
print("expected -(n-1) |u|^2  =", -3.0 * u.dot(u))
