"""Rotationally symmetric hypersurfaces in a warped product.

A hypersurface is generated by a profile curve (r(t), theta(t)) in the
half-plane with metric dr^2 + lambda(r)^2 dtheta^2; rotating it through
the remaining fiber sphere S^(n-2) gives a hypersurface with principal
spectrum (kappa_profile, kappa_rot, .., kappa_rot).  All pointwise
geometry is closed form; surface integrals use Gauss-Legendre nodes in t.
"""

from dataclasses import dataclass

import numpy as np
import sympy as sp
from scipy.special import gamma

from .symfunc import normalized_h_batch

__all__ = [
    "ProfileCurve",
    "SurfaceGeometry",
    "slice_profile",
    "fourier_graph",
    "perturbed_sphere",
    "offset_sphere",
    "geometry_at",
    "geometry_batch",
    "integrate",
    "a_term",
    "surface_spectra",
    "sphere_area",
]

AXIS_TOL = 1e-8  # sin(theta) below this counts as an axis point


@dataclass(frozen=True)
class ProfileCurve:
    """Profile (r(t), theta(t)) on [0, T] with analytic derivatives.

    All six callables are vectorized over t.  ``closed`` marks profiles
    whose endpoints meet the rotation axis (theta in {0, pi}) so that the
    revolved hypersurface is a closed topological sphere.
    """

    name: str
    T: float
    r: callable
    rd: callable
    rdd: callable
    th: callable
    thd: callable
    thdd: callable
    closed: bool = True


@dataclass
class SurfaceGeometry:
    """Pointwise geometry of the revolved hypersurface (scalar or batched)."""

    t: np.ndarray
    r: np.ndarray
    theta: np.ndarray
    lam: np.ndarray
    V: np.ndarray
    kappa_profile: np.ndarray
    kappa_rot: np.ndarray
    nu_r: np.ndarray
    nu_theta: np.ndarray
    x_dot_nu: np.ndarray
    x_dot_e1: np.ndarray
    rdot_over_speed: np.ndarray
    speed: np.ndarray
    area_density: np.ndarray

    @property
    def star_shaped(self):
        return np.all(self.nu_r >= -1e-12)


# ---------------------------------------------------------------------------
# Profile constructors
# ---------------------------------------------------------------------------

def slice_profile(r0):
    """The slice {r0} x N: t = theta on [0, pi], constant radius."""
    return ProfileCurve(
        f"slice(r0={r0})", np.pi,
        r=lambda t: np.full_like(np.asarray(t, dtype=np.float64), r0),
        rd=lambda t: np.zeros_like(np.asarray(t, dtype=np.float64)),
        rdd=lambda t: np.zeros_like(np.asarray(t, dtype=np.float64)),
        th=lambda t: np.asarray(t, dtype=np.float64),
        thd=lambda t: np.ones_like(np.asarray(t, dtype=np.float64)),
        thdd=lambda t: np.zeros_like(np.asarray(t, dtype=np.float64)),
    )


def fourier_graph(r0, modes):
    """Graph r(theta) = r0 + sum_m eps_m cos(m theta), t = theta on [0, pi].

    Integer modes meet the axis orthogonally (dr/dtheta vanishes at 0, pi).
    """
    modes = {int(m): float(e) for m, e in modes.items()}
    if any(m < 0 for m in modes):
        raise ValueError("modes must be nonnegative integers")

    def r(t):
        t = np.asarray(t, dtype=np.float64)
        out = np.full_like(t, r0)
        for m, e in modes.items():
            out = out + e * np.cos(m * t)
        return out

    def rd(t):
        t = np.asarray(t, dtype=np.float64)
        out = np.zeros_like(t)
        for m, e in modes.items():
            out = out - e * m * np.sin(m * t)
        return out

    def rdd(t):
        t = np.asarray(t, dtype=np.float64)
        out = np.zeros_like(t)
        for m, e in modes.items():
            out = out - e * m * m * np.cos(m * t)
        return out

    label = "+".join(f"{e}cos({m}t)" for m, e in modes.items())
    return ProfileCurve(
        f"graph(r0={r0},{label})", np.pi, r, rd, rdd,
        th=lambda t: np.asarray(t, dtype=np.float64),
        thd=lambda t: np.ones_like(np.asarray(t, dtype=np.float64)),
        thdd=lambda t: np.zeros_like(np.asarray(t, dtype=np.float64)),
    )


def perturbed_sphere(model, r0, eps, mode):
    """Slice perturbed by a single Fourier mode: r(theta) = r0 + eps cos(m theta)."""
    lo, hi = r0 - abs(eps), r0 + abs(eps)
    if not (model.r_min < lo and hi < model.r_max):
        raise ValueError(
            f"perturbed radius range [{lo}, {hi}] leaves the model domain "
            f"({model.r_min}, {model.r_max})")
    if eps == 0.0:
        return slice_profile(r0)
    return fourier_graph(r0, {mode: eps})


def _sympy_curve(name, r_expr, th_expr, t_sym, T):
    """Compile symbolic r(t), theta(t) (and derivatives) to a ProfileCurve."""
    funcs = []
    for expr in (r_expr, sp.diff(r_expr, t_sym), sp.diff(r_expr, t_sym, 2),
                 th_expr, sp.diff(th_expr, t_sym), sp.diff(th_expr, t_sym, 2)):
        f = sp.lambdify(t_sym, sp.simplify(expr), modules="numpy")
        funcs.append(lambda t, f=f: np.broadcast_to(
            np.asarray(f(np.asarray(t, dtype=np.float64)), dtype=np.float64),
            np.shape(t)).copy() if np.ndim(t) else float(f(float(t))))
    return ProfileCurve(name, T, *funcs)


def offset_sphere(eps, d, a):
    """Geodesic sphere of radius ``a`` centered at distance ``d`` on the axis.

    ``eps`` selects the space form (-1 hyperbolic, 0 Euclidean, +1 round
    sphere).  Umbilical by construction, with principal curvature coth(a),
    1/a or cot(a) respectively; non-centered (d > 0) profiles exercise the
    integral identities away from slices.
    """
    if a <= 0 or d < 0:
        raise ValueError("need a > 0 and d >= 0")
    t = sp.symbols("t", real=True)
    if eps == 0:
        r_expr = sp.sqrt(d ** 2 + a ** 2 + 2 * d * a * sp.cos(t))
        th_expr = sp.atan2(a * sp.sin(t), d + a * sp.cos(t))
    elif eps == -1:
        x0 = sp.cosh(a) * sp.cosh(d) + sp.sinh(a) * sp.sinh(d) * sp.cos(t)
        axial = sp.cosh(a) * sp.sinh(d) + sp.sinh(a) * sp.cosh(d) * sp.cos(t)
        perp = sp.sinh(a) * sp.sin(t)
        r_expr = sp.acosh(x0)
        th_expr = sp.atan2(perp, axial)
    elif eps == 1:
        if d + a >= np.pi / 2:
            raise ValueError("offset sphere must stay inside the hemisphere")
        axial = sp.cos(a) * sp.sin(d) + sp.sin(a) * sp.cos(d) * sp.cos(t)
        perp = sp.sin(a) * sp.sin(t)
        r_expr = sp.acos(sp.cos(a) * sp.cos(d) - sp.sin(a) * sp.sin(d) * sp.cos(t))
        th_expr = sp.atan2(perp, axial)
    else:
        raise ValueError("eps must be -1, 0 or +1")
    return _sympy_curve(f"offset-sphere(eps={eps},d={d},a={a})",
                        r_expr, th_expr, t, np.pi)


# ---------------------------------------------------------------------------
# Pointwise geometry
# ---------------------------------------------------------------------------

def geometry_batch(model, curve, ts):
    """Geometry of the revolved hypersurface at an array of parameters."""
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    r = curve.r(ts)
    th = curve.th(ts)
    rd, rdd = curve.rd(ts), curve.rdd(ts)
    thd, thdd = curve.thd(ts), curve.thdd(ts)
    lam, dl = model.lam(r), model.dlam(r)

    sin_th = np.sin(th)
    interior = sin_th > AXIS_TOL
    if not np.all(interior) and not curve.closed:
        raise ValueError("axis-point evaluation on a non-closed profile")
    if np.any(sin_th <= AXIS_TOL):
        raise ValueError(
            "quadrature node fell on the rotation axis; evaluate at "
            "interior parameters only")

    speed = np.sqrt(rd ** 2 + (lam * thd) ** 2)
    nu_r = lam * thd / speed
    nu_th = -rd / (lam * speed)

    # Rotational curvature: radial derivative of the orbit radius
    # rho = lambda sin(theta) along the outward normal, divided by rho.
    kappa_rot = (nu_r * dl * sin_th + nu_th * lam * np.cos(th)) / (lam * sin_th)

    # Profile curvature: geodesic curvature in the (r, theta) half-plane
    # with respect to -nu (slices then curve positively, at lambda'/lambda).
    acc_r = rdd - lam * dl * thd ** 2
    acc_th = thdd + 2.0 * (dl / lam) * rd * thd
    kappa_prof = -(acc_r * nu_r + lam ** 2 * acc_th * nu_th) / speed ** 2

    rho = lam * sin_th
    return SurfaceGeometry(
        t=ts, r=r, theta=th, lam=lam, V=dl,
        kappa_profile=kappa_prof, kappa_rot=kappa_rot,
        nu_r=nu_r, nu_theta=nu_th,
        x_dot_nu=lam * nu_r, x_dot_e1=lam * rd / speed,
        rdot_over_speed=rd / speed, speed=speed,
        area_density=rho ** (model.n - 2) * speed,
    )


def geometry_at(model, curve, t):
    """Geometry at a single parameter value."""
    return geometry_batch(model, curve, np.asarray([t], dtype=np.float64))


def surface_spectra(model, geom):
    """Principal spectra at each point: column 0 the profile curvature,
    the remaining n-2 columns the rotational one.  Shape (count, n-1)."""
    count = geom.t.size
    spectra = np.empty((count, model.n - 1))
    spectra[:, 0] = geom.kappa_profile
    spectra[:, 1:] = geom.kappa_rot[:, None]
    return spectra


def a_term(model, geom):
    """Diagonal correction A_11 of the warped Minkowski identity.

    A_11 = (1/(n-1)) (lambda''/lambda + (K - lambda'^2)/lambda^2)
           <X, e_1>^2 <X, nu> / lambda^2

    with e_1 the unit profile tangent; the rotational diagonal entries
    vanish by symmetry.  Nonnegative on star-shaped surfaces whenever the
    radial Ricci condition holds.
    """
    lam = geom.lam
    d2l = model.d2lam(geom.r)
    bracket = d2l / lam + (model.K - geom.V ** 2) / lam ** 2
    return (bracket / (model.n - 1)) * geom.x_dot_e1 ** 2 * geom.x_dot_nu / lam ** 2


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

def sphere_area(m):
    """Surface area of the unit m-sphere."""
    return 2.0 * np.pi ** ((m + 1) / 2.0) / gamma((m + 1) / 2.0)


def quadrature_nodes(curve, nodes):
    """Gauss-Legendre nodes and weights on [0, T]."""
    if nodes < 16:
        raise ValueError("need at least 16 quadrature nodes")
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * curve.T
    return half * (x + 1.0), half * w


def integrate(model, curve, f, nodes=2048):
    """Surface integral of a pointwise function over the revolved hypersurface.

    ``f`` maps a batched SurfaceGeometry to an array of values per node;
    pass ``lambda g: 1.0`` (or any scalar broadcast) for the area.
    """
    ts, w = quadrature_nodes(curve, nodes)
    geom = geometry_batch(model, curve, ts)
    vals = np.broadcast_to(np.asarray(f(geom), dtype=np.float64), ts.shape)
    integrand = vals * geom.area_density
    if not np.all(np.isfinite(integrand)):
        raise ValueError("non-finite integrand on the quadrature grid")
    return sphere_area(model.n - 2) * float(w @ integrand)
