"""Warped-product ambient spaces [0, r_max) x_lambda N(K).

A model carries the warping function lambda together with analytic first
and second derivatives; nothing downstream ever differentiates lambda
numerically.  The black-hole family is built from the first-order relation

    lambda'(r)^2 = 1 + kappa_amb * lambda^2 - m * lambda^(2-n)
                     + q^2 * lambda^(4-2n)

with r measured from the horizon (largest zero of the right-hand side),
so lambda itself is obtained by integrating dr = dlambda / lambda' and
both derivatives come from the defining relation, not from interpolation.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

__all__ = [
    "WarpedModel",
    "TangentVector",
    "ConditionReport",
    "euclidean",
    "sphere",
    "hyperbolic",
    "schwarzschild",
    "model_library",
    "get_model",
    "check_conditions",
    "ricci",
]

GRID_POINTS = 10_001  # dense lambda(r) grid for the black-hole family


@dataclass(frozen=True)
class WarpedModel:
    """Ambient metric dr^2 + lambda(r)^2 g_N with fiber curvature K."""

    name: str
    n: int
    K: float
    r_max: float
    lam: callable
    dlam: callable
    d2lam: callable
    space_form_eps: int | None = None  # -1 / 0 / +1 for H^n, R^n, S^n
    r_min: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def is_space_form(self):
        return self.space_form_eps is not None

    def V(self, r):
        """Weight V(r) = lambda'(r)."""
        return self.dlam(r)


@dataclass(frozen=True)
class TangentVector:
    """Tangent vector in the (radial, fiber) splitting.

    Fiber components are given in a metric-orthonormal fiber frame, so the
    ambient inner product is radial*radial + fiber.fiber.
    """

    radial: float
    fiber: tuple = ()

    def dot(self, other):
        fa = np.asarray(self.fiber, dtype=np.float64)
        fb = np.asarray(other.fiber, dtype=np.float64)
        m = min(fa.size, fb.size)
        return self.radial * other.radial + float(fa[:m] @ fb[:m])


@dataclass
class ConditionReport:
    """Worst margins of the growth conditions over a sampled radial grid.

    c1: lambda' > 0;  c2: lambda''/lambda + (K - lambda'^2)/lambda^2 > 0;
    c3: lambda'' >= 0;  c4: lambda'(0) = 0, lambda''(0) > 0 and
    2 lambda''/lambda - (n-2)(K - lambda'^2)/lambda^2 non-decreasing.
    Margins are minima over the grid (for c4 the minimum forward
    difference of the monotone quantity); a condition holds iff its
    margin is nonnegative (strictly positive where the condition is
    strict).
    """

    model: str
    c1_margin: float
    c2_margin: float
    c3_margin: float
    c4_origin_ok: bool
    c4_margin: float
    grid_size: int

    @property
    def c1(self):
        return self.c1_margin > 0

    @property
    def c2(self):
        return self.c2_margin > 0

    @property
    def c3(self):
        return self.c3_margin >= 0

    @property
    def c4(self):
        # Forward differences of the monotone quantity sit at roundoff
        # scale on a 10^3-point grid; allow that much slop.
        return self.c4_origin_ok and self.c4_margin >= -1e-10

    def to_dict(self):
        return {
            "model": self.model,
            "C1": {"holds": bool(self.c1), "margin": self.c1_margin},
            "C2": {"holds": bool(self.c2), "margin": self.c2_margin},
            "C3": {"holds": bool(self.c3), "margin": self.c3_margin},
            "C4": {"holds": bool(self.c4), "margin": self.c4_margin,
                   "origin_ok": bool(self.c4_origin_ok)},
            "grid_size": self.grid_size,
        }


# ---------------------------------------------------------------------------
# Space forms (K = 1 fiber, closed-form warping)
# ---------------------------------------------------------------------------

def euclidean(n):
    """R^n in polar coordinates: lambda = r, V = 1."""
    return WarpedModel(
        "euclidean", n, 1.0, np.inf,
        lam=lambda r: np.asarray(r, dtype=np.float64),
        dlam=lambda r: np.ones_like(np.asarray(r, dtype=np.float64)),
        d2lam=lambda r: np.zeros_like(np.asarray(r, dtype=np.float64)),
        space_form_eps=0,
    )


def sphere(n):
    """Round unit sphere S^n: lambda = sin r on [0, pi); hemisphere r < pi/2."""
    return WarpedModel(
        "sphere", n, 1.0, np.pi,
        lam=np.sin, dlam=np.cos,
        d2lam=lambda r: -np.sin(r),
        space_form_eps=1,
    )


def hyperbolic(n):
    """Hyperbolic space H^n: lambda = sinh r, V = cosh r."""
    return WarpedModel(
        "hyperbolic", n, 1.0, np.inf,
        lam=np.sinh, dlam=np.cosh, d2lam=np.sinh,
        space_form_eps=-1,
    )


# ---------------------------------------------------------------------------
# Black-hole family
# ---------------------------------------------------------------------------

def _bh_profile(m, kappa_amb, q, n):
    """lambda'(lambda)^2 and its lambda-derivative for the black-hole family."""

    def f2(lam):
        return (1.0 + kappa_amb * lam ** 2 - m * lam ** (2 - n)
                + q ** 2 * lam ** (4 - 2 * n))

    def df2(lam):
        return (2.0 * kappa_amb * lam - (2 - n) * m * lam ** (1 - n)
                + (4 - 2 * n) * q ** 2 * lam ** (3 - 2 * n))

    def d2f2(lam):
        return (2.0 * kappa_amb - (2 - n) * (1 - n) * m * lam ** (-n)
                + (4 - 2 * n) * (3 - 2 * n) * q ** 2 * lam ** (2 - 2 * n))

    return f2, df2, d2f2


def schwarzschild(n, m, kappa_amb=0.0, q=0.0, r_cap=5.0, name=None):
    """Schwarzschild / (A)dS-Schwarzschild / Reissner-Nordstrom model.

    m > 0 is the mass, kappa_amb the asymptotic curvature parameter
    (+1 gives the AdS-Schwarzschild warped product, 0 the Schwarzschild
    one), q the charge.  The radial coordinate starts at the horizon.
    """
    if m <= 0:
        raise ValueError("mass m must be positive")
    f2, df2, d2f2 = _bh_profile(m, kappa_amb, q, n)

    # Horizon: largest zero of f2.  Bracket by scanning outward.
    lam_hi = 1.0
    while f2(lam_hi) <= 0:
        lam_hi *= 2.0
        if lam_hi > 1e12:
            raise ValueError("no horizon found: f2 never becomes positive")
    lam_lo = lam_hi
    while f2(lam_lo) > 0:
        lam_lo /= 2.0
        if lam_lo < 1e-12:
            raise ValueError("no horizon found: f2 positive down to 0")
    lam0 = brentq(f2, lam_lo, lam_hi, xtol=1e-15, rtol=1e-15)
    if df2(lam0) <= 0:
        raise ValueError("degenerate horizon: f2'(lambda0) <= 0")

    # Integrate dr = dlambda / sqrt(f2) with the square-root singularity
    # at the horizon removed by lambda = lambda0 + u^2:
    # dr/du = 2u / sqrt(f2(lam0 + u^2)) = 2 / sqrt(g(u)), g -> f2'(lam0).
    def g_of_u(u):
        if u < 1e-5:
            return df2(lam0) + 0.5 * d2f2(lam0) * u * u
        return f2(lam0 + u * u) / (u * u)

    def rhs(u, _r):
        return 2.0 / np.sqrt(g_of_u(u))

    # Estimate the u-range needed to cover r in [0, r_cap].
    u_hi = 1.0
    while True:
        sol = solve_ivp(rhs, (0.0, u_hi), [0.0], rtol=1e-12, atol=1e-14,
                        method="DOP853")
        if sol.y[0, -1] >= r_cap * 1.05:
            break
        u_hi *= 1.6
        if u_hi > 1e8:
            raise ValueError("r_cap unreachable")

    us = np.linspace(0.0, u_hi, GRID_POINTS)
    sol = solve_ivp(rhs, (us[0], us[-1]), [0.0], t_eval=us,
                    rtol=1e-12, atol=1e-14, method="DOP853")
    rs = sol.y[0]
    lams = lam0 + us ** 2
    lam_of_r = CubicSpline(rs, lams)

    def lam(r):
        return lam_of_r(np.asarray(r, dtype=np.float64))

    def dlam(r):
        return np.sqrt(f2(lam(r)))

    def d2lam(r):
        # lambda'' = (1/2) d(lambda'^2)/dlambda, from the defining relation.
        return 0.5 * df2(lam(r))

    if name is None:
        if q != 0:
            name = "reissner-nordstrom"
        elif kappa_amb > 0:
            name = "ads-schwarzschild"
        elif kappa_amb < 0:
            name = "ds-schwarzschild"
        else:
            name = "schwarzschild"
    return WarpedModel(
        name, n, 1.0, float(rs[-1]), lam, dlam, d2lam,
        params={"m": m, "kappa_amb": kappa_amb, "q": q,
                "horizon": lam0, "r_cap": r_cap},
    )


def model_library(n=4, r_cap=5.0):
    """The bundled models: three space forms plus a black-hole example."""
    return [
        euclidean(n),
        sphere(n),
        hyperbolic(n),
        schwarzschild(n, m=2.0, kappa_amb=1.0, q=0.0, r_cap=r_cap,
                      name="ads-schwarzschild"),
    ]


def get_model(name, n, **params):
    """Resolve a model by tag (used by the config layer)."""
    if name == "euclidean":
        return euclidean(n)
    if name == "sphere":
        return sphere(n)
    if name == "hyperbolic":
        return hyperbolic(n)
    if name in ("schwarzschild", "ads-schwarzschild", "ds-schwarzschild",
                "reissner-nordstrom"):
        defaults = {"m": 2.0, "q": 0.0, "r_cap": 5.0}
        if name == "ads-schwarzschild":
            defaults["kappa_amb"] = 1.0
        elif name == "ds-schwarzschild":
            defaults["kappa_amb"] = -0.1
        else:
            defaults["kappa_amb"] = 0.0
        if name == "reissner-nordstrom":
            defaults["q"] = 0.5
        defaults.update(params)
        return schwarzschild(n, name=name, **defaults)
    raise KeyError(f"unknown model name: {name!r}")


# ---------------------------------------------------------------------------
# Condition checker and Ricci curvature
# ---------------------------------------------------------------------------

def _c2_quantity(model, r):
    lam, dl, d2l = model.lam(r), model.dlam(r), model.d2lam(r)
    return d2l / lam + (model.K - dl ** 2) / lam ** 2


def check_conditions(model, r_lo=None, r_hi=None, grid=2000):
    """Margins of the four growth conditions over a sampled radial grid."""
    if grid < 1000:
        raise ValueError("grid must have at least 1000 points")
    if r_lo is None:
        r_lo = model.r_min + 1e-3
    if r_hi is None:
        r_hi = min(model.r_max, 5.0) - 1e-3
    r = np.linspace(r_lo, r_hi, grid)
    lam, dl, d2l = model.lam(r), model.dlam(r), model.d2lam(r)

    c1 = float(np.min(dl))
    c2 = float(np.min(d2l / lam + (model.K - dl ** 2) / lam ** 2))
    c3 = float(np.min(d2l))

    eps0 = 1e-6
    dl0 = float(model.dlam(model.r_min + eps0))
    d2l0 = float(model.d2lam(model.r_min + eps0))
    c4_origin = abs(dl0) < 1e-3 and d2l0 > 0
    w = 2.0 * d2l / lam - (model.n - 2) * (model.K - dl ** 2) / lam ** 2
    c4 = float(np.min(np.diff(w)))
    return ConditionReport(model.name, c1, c2, c3, c4_origin, c4, grid)


def ricci(model, r, u, v):
    """Ricci curvature Ric(u, v) of the ambient metric at radius r.

    Ric = -(lambda''/lambda - (n-2)(K - lambda'^2)/lambda^2) g
          - (n-2)(lambda''/lambda + (K - lambda'^2)/lambda^2) dr x dr
    """
    if not model.r_min < r < model.r_max:
        raise ValueError(f"radius {r} outside ({model.r_min}, {model.r_max})")
    lam, dl, d2l = model.lam(r), model.dlam(r), model.d2lam(r)
    a = d2l / lam - (model.n - 2) * (model.K - dl ** 2) / lam ** 2
    b = (model.n - 2) * (d2l / lam + (model.K - dl ** 2) / lam ** 2)
    return -a * u.dot(v) - b * u.radial * v.radial
