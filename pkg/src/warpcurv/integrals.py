"""Integral identities, integral inequalities and rigidity residual scans.

Every routine evaluates surface integrals on a rotationally symmetric
hypersurface by Gauss-Legendre quadrature and returns a CheckReport.  The
rigidity statements (constant curvature function forces a slice) are
verified in contrapositive form: the scanned function has zero
oscillation on slices and centered spheres, strictly positive
oscillation on perturbed ones.
"""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .gaussbonnet import tilde_l_batch, tilde_n_batch
from .reports import CheckReport
from .surfaces import geometry_batch, quadrature_nodes, sphere_area, surface_spectra, a_term
from .symfunc import cone_membership_batch, elementary_symmetric_batch, horoconvex, normalized_h_batch

__all__ = [
    "CurvatureCombo",
    "minkowski_spaceform",
    "minkowski_warped",
    "minkowski_weighted",
    "heintze_karcher",
    "lk_minkowski",
    "rigidity_residual",
    "check_quotient_monotone",
    "check_pointwise_bracket",
    "check_combo_slack",
    "convergence_study",
]

DEFAULT_NODES = 2048
UMBILICAL_TOL = 1e-8


@dataclass(frozen=True)
class CurvatureCombo:
    """A linear combination hypothesis  sum a_i F_i = sum b_j F_j.

    ``a`` holds coefficients for orders 0..l-1 and ``b`` for orders l..k
    of the selected curvature family: "H" (mean curvatures, the b side
    weighted by V when ``weighted``), "L"/"N" (normalized even/odd
    intrinsic combinations, space forms only) or "quotient" (the single
    ratio F_k/F_l; coefficients unused).
    """

    l: int
    k: int
    a: tuple = ()
    b: tuple = ()
    family: str = "H"
    weighted: bool = False

    def __post_init__(self):
        if self.family not in ("H", "L", "N", "quotient"):
            raise ValueError(f"unknown combo family {self.family!r}")
        if not 0 <= self.l < self.k:
            raise ValueError("need 0 <= l < k")
        if self.family == "quotient":
            return
        a = np.asarray(self.a, dtype=np.float64)
        b = np.asarray(self.b, dtype=np.float64)
        if a.size != self.l or b.size != self.k - self.l + 1:
            raise ValueError("coefficient lengths must be l and k-l+1")
        if np.any(a < 0) or np.any(b < 0):
            raise ValueError("coefficients must be nonnegative")
        if not (np.any(a > 0) or np.any(b > 0)):
            raise ValueError("at least one coefficient must be positive")


def _geom_and_h(model, curve, nodes):
    ts, w = quadrature_nodes(curve, nodes)
    geom = geometry_batch(model, curve, ts)
    H = normalized_h_batch(surface_spectra(model, geom))
    return w, geom, H


def _surface_integral(model, w, geom, values):
    return sphere_area(model.n - 2) * float(w @ (values * geom.area_density))


def _correction_density(model, geom, k):
    """Pointwise (k-1)/C(n-2,k-2) * sum_ij A_ij (T_{k-2})_ij.

    Only the profile diagonal entry of A survives and the rotational
    block of the spectrum is isotropic, so sigma_{k-2} of the deleted
    spectrum is C(n-2, k-2) kappa_rot^(k-2) in closed form.
    """
    if k < 2:
        return np.zeros_like(geom.t)
    m = k - 2
    sig = comb(model.n - 2, m) * geom.kappa_rot ** m
    return (k - 1) / comb(model.n - 2, k - 2) * a_term(model, geom) * sig


def _is_umbilical(model, geom):
    return bool(np.max(np.abs(geom.kappa_profile - geom.kappa_rot)) < UMBILICAL_TOL)


def minkowski_spaceform(model, curve, k, nodes=DEFAULT_NODES, tolerance=1e-8):
    """Space-form Minkowski identity: int <X,nu> H_k = int V H_{k-1}."""
    if not model.is_space_form:
        raise ValueError(
            f"model {model.name!r} is not a space form; use minkowski_warped")
    if not 1 <= k <= model.n - 1:
        raise ValueError(f"order {k} outside [1, {model.n - 1}]")
    w, geom, H = _geom_and_h(model, curve, nodes)
    lhs = _surface_integral(model, w, geom, geom.x_dot_nu * H[:, k])
    rhs = _surface_integral(model, w, geom, geom.V * H[:, k - 1])
    return CheckReport.identity(
        f"minkowski-spaceform[k={k}]", lhs, rhs, tolerance,
        model=model.name, surface=curve.name, k=k, nodes=nodes)


def minkowski_warped(model, curve, k, nodes=DEFAULT_NODES, tolerance=1e-6):
    """Warped Minkowski identity with the Newton-tensor correction term.

    int <X,nu> H_k = int V H_{k-1}
                     + (k-1)/C(n-2,k-2) int sum_ij A_ij (T_{k-2})_ij
    """
    if not 1 <= k <= model.n - 1:
        raise ValueError(f"order {k} outside [1, {model.n - 1}]")
    w, geom, H = _geom_and_h(model, curve, nodes)
    corr = _correction_density(model, geom, k)
    lhs = _surface_integral(model, w, geom, geom.x_dot_nu * H[:, k])
    rhs = (_surface_integral(model, w, geom, geom.V * H[:, k - 1])
           + _surface_integral(model, w, geom, corr))
    return CheckReport.identity(
        f"minkowski-warped[k={k}]", lhs, rhs, tolerance,
        model=model.name, surface=curve.name, k=k, nodes=nodes,
        correction_min=float(np.min(corr)) if k >= 2 else 0.0,
        star_shaped=bool(geom.star_shaped))


def minkowski_weighted(model, curve, k, nodes=DEFAULT_NODES, tolerance=1e-6):
    """Weighted Minkowski identity (weight V) plus its inequality form.

    int <X,nu> V H_k = int V^2 H_{k-1}
                       + (k-1)/C(n-2,k-2) int sum_ij V A_ij (T_{k-2})_ij
                       + 1/(k C(n-1,k)) int lambda lambda'' |grad r|^2
                                             sigma_{k-1} of the deleted spectrum

    The report carries the inequality slack obtained by dropping the
    gradient term, which is nonnegative for k-convex surfaces in models
    with lambda'' >= 0, tight exactly on slices.
    """
    if not 1 <= k <= model.n - 1:
        raise ValueError(f"order {k} outside [1, {model.n - 1}]")
    w, geom, H = _geom_and_h(model, curve, nodes)
    d2l = model.d2lam(geom.r)
    sig_km1 = comb(model.n - 2, k - 1) * geom.kappa_rot ** (k - 1)
    grad = (geom.lam * d2l * geom.rdot_over_speed ** 2 * sig_km1
            / (k * comb(model.n - 1, k)))
    lhs = _surface_integral(model, w, geom, geom.x_dot_nu * geom.V * H[:, k])
    base = (_surface_integral(model, w, geom, geom.V ** 2 * H[:, k - 1])
            + _surface_integral(model, w, geom,
                                geom.V * _correction_density(model, geom, k)))
    grad_int = _surface_integral(model, w, geom, grad)
    report = CheckReport.identity(
        f"minkowski-weighted[k={k}]", lhs, base + grad_int, tolerance,
        model=model.name, surface=curve.name, k=k, nodes=nodes)
    report.metadata["inequality_slack"] = lhs - base
    report.metadata["umbilical"] = _is_umbilical(model, geom)
    return report


def heintze_karcher(model, curve, nodes=DEFAULT_NODES, tolerance=1e-9):
    """Mean-convex support-function bound: int <X,nu> <= int V/H_1."""
    w, geom, H = _geom_and_h(model, curve, nodes)
    if np.any(H[:, 1] <= 0.0):
        raise ValueError("mean curvature H_1 must be positive at every node")
    lhs = _surface_integral(model, w, geom, geom.V / H[:, 1])
    rhs = _surface_integral(model, w, geom, geom.x_dot_nu)
    report = CheckReport.inequality(
        "heintze-karcher", lhs - rhs, tolerance,
        model=model.name, surface=curve.name, nodes=nodes,
        umbilical=_is_umbilical(model, geom))
    report.lhs, report.rhs = lhs, rhs
    return report


def lk_minkowski(model, curve, k, nodes=DEFAULT_NODES, tolerance=1e-8):
    """Space-form identity between the even and odd intrinsic combinations:

    int V Ltilde_k = int <X,nu> Ntilde_k     (2k+1 <= n-1).
    """
    if not model.is_space_form:
        raise ValueError(f"model {model.name!r} is not a space form")
    if not 0 <= k or 2 * k + 1 > model.n - 1:
        raise ValueError(f"order {k} needs 2k+1 <= {model.n - 1}")
    w, geom, H = _geom_and_h(model, curve, nodes)
    eps = model.space_form_eps
    lt = tilde_l_batch(H, eps, k)
    nt = tilde_n_batch(H, eps, k)
    lhs = _surface_integral(model, w, geom, geom.V * lt)
    rhs = _surface_integral(model, w, geom, geom.x_dot_nu * nt)
    return CheckReport.identity(
        f"ln-minkowski[k={k}]", lhs, rhs, tolerance,
        model=model.name, surface=curve.name, k=k, nodes=nodes)


# ---------------------------------------------------------------------------
# Rigidity residual scans (contrapositive form)
# ---------------------------------------------------------------------------

def _combo_sides(model, geom, H, combo):
    """Pointwise arrays (sum a_i F_i, sum b_j F_j) for the combo family."""
    n = model.n
    if combo.family == "H":
        orders = H
        weight = geom.V if combo.weighted else 1.0
    elif combo.family in ("L", "N"):
        if not model.is_space_form:
            raise ValueError("L/N combos require a space-form model")
        fn = tilde_l_batch if combo.family == "L" else tilde_n_batch
        orders = np.column_stack(
            [fn(H, model.space_form_eps, m) for m in range(combo.k + 1)])
        weight = 1.0
    else:
        raise ValueError("quotient combos have no sides")
    lhs = np.zeros(geom.t.size)
    for i, ai in enumerate(combo.a):
        lhs = lhs + ai * orders[:, i]
    rhs = np.zeros(geom.t.size)
    for off, bj in enumerate(combo.b):
        rhs = rhs + bj * weight * orders[:, combo.l + off]
    return lhs, rhs


def _require_cone(model, spectra, combo):
    """Enforce the convexity hypothesis the rigidity statement assumes."""
    if combo.family == "quotient" or combo.family == "H":
        order = combo.k
    elif combo.family == "L":
        if model.space_form_eps == -1:
            if not all(horoconvex(row) for row in spectra):
                raise ValueError("hyperbolic L-combo scan needs a horoconvex surface")
            return
        order = 2 * combo.k
    else:  # N family
        order = 2 * combo.k + 1
    ok = cone_membership_batch(spectra, min(order, model.n - 1), strict=False)
    if not np.all(ok):
        raise ValueError(
            f"surface leaves the closed order-{order} positive cone "
            f"required by the combo hypothesis")


def rigidity_residual(model, curve, combo, nodes=1024, tolerance=1e-10):
    """Oscillation (sup - inf over the surface) of the combo's function.

    For quotients the function is F_k/F_l; for combinations it is
    sum a_i F_i - c sum b_j F_j with c fixed so the two sides have equal
    surface integrals (realizing the constancy hypothesis on average).
    Zero oscillation on slices and centered spheres, strictly positive on
    perturbed surfaces: the numerical contrapositive of rigidity.
    """
    if combo.family in ("quotient", "H"):
        top = combo.k
    elif combo.family == "L":
        top = 2 * combo.k
    else:
        top = 2 * combo.k + 1
    if top > model.n - 1:
        raise ValueError(
            f"combo order {combo.k} inadmissible in dimension n={model.n}")
    w, geom, H = _geom_and_h(model, curve, nodes)
    spectra = surface_spectra(model, geom)
    _require_cone(model, spectra, combo)
    if combo.family == "quotient":
        denom = H[:, combo.l]
        if np.any(np.abs(denom) < 1e-13):
            raise ValueError(f"H_{combo.l} vanishes on the surface")
        values = H[:, combo.k] / denom
        label = f"H{combo.k}/H{combo.l}"
    else:
        lhs, rhs = _combo_sides(model, geom, H, combo)
        int_l = _surface_integral(model, w, geom, lhs)
        int_r = _surface_integral(model, w, geom, rhs)
        if np.all(np.asarray(combo.a) == 0.0) or abs(int_l) < 1e-13:
            values = rhs
        else:
            values = lhs - (int_l / int_r) * rhs
        tag = "V" if combo.weighted else ""
        label = f"{combo.family}{tag}-combo[l={combo.l},k={combo.k}]"
    osc = float(np.max(values) - np.min(values))
    report = CheckReport.identity(
        f"rigidity-oscillation[{label}]", osc, 0.0, tolerance,
        model=model.name, surface=curve.name, nodes=nodes,
        family=combo.family, l=combo.l, k=combo.k, weighted=combo.weighted)
    return report


# ---------------------------------------------------------------------------
# Pointwise inequality checks on surfaces
# ---------------------------------------------------------------------------

def _deleted_h(spectra, j, m):
    """Normalized H_m of each spectrum with entry j removed."""
    reduced = np.delete(spectra, j, axis=1)
    d = reduced.shape[1]
    if m < 0 or m > d:
        return np.zeros(spectra.shape[0])
    return elementary_symmetric_batch(reduced)[:, m] / comb(d, m)


def check_quotient_monotone(model, curve, k, l, nodes=1024, tolerance=1e-10):
    """Pointwise H_{k-1} H_l >= H_k H_{l-1} at every node (k-convex)."""
    w, geom, H = _geom_and_h(model, curve, nodes)
    spectra = surface_spectra(model, geom)
    if not np.all(cone_membership_batch(spectra, k, strict=False)):
        raise ValueError("surface is not k-convex")
    slack = H[:, k - 1] * H[:, l] - H[:, k] * (H[:, l - 1] if l >= 1 else 0.0)
    return CheckReport.inequality(
        f"quotient-monotone[k={k},l={l}]", float(np.min(slack)), tolerance,
        model=model.name, surface=curve.name, k=k, l=l, nodes=nodes)


def check_pointwise_bracket(model, curve, k, l, nodes=256, tolerance=1e-10):
    """The strict pointwise bound used by the quotient rigidity proof:

    (k-1) H_{k-2}(spec minus j) H_{l-1} - (l-1) H_{k-1} H_{l-2}(spec minus j) > 0

    for every deleted index j, on k-convex spectra with 2 <= l < k.
    """
    if not 2 <= l < k:
        raise ValueError("bracket bound needs 2 <= l < k")
    w, geom, H = _geom_and_h(model, curve, nodes)
    spectra = surface_spectra(model, geom)
    if not np.all(cone_membership_batch(spectra, k, strict=False)):
        raise ValueError("surface is not k-convex")
    worst = np.inf
    for j in range(spectra.shape[1]):
        term = ((k - 1) * _deleted_h(spectra, j, k - 2) * H[:, l - 1]
                - (l - 1) * H[:, k - 1] * _deleted_h(spectra, j, l - 2))
        worst = min(worst, float(np.min(term)))
    return CheckReport.inequality(
        f"pointwise-bracket[k={k},l={l}]", worst, tolerance,
        model=model.name, surface=curve.name, k=k, l=l, nodes=nodes)


def check_combo_slack(model, curve, combo, nodes=1024, tolerance=1e-10):
    """Summed Maclaurin bound: sum b_j H_{j-1} >= sum a_i H_{i-1} after
    normalizing b by c = (sum a_i H_i)/(sum b_j H_j) at each node."""
    if combo.family != "H" or combo.weighted:
        raise ValueError("combo slack check applies to unweighted H combos")
    w, geom, H = _geom_and_h(model, curve, nodes)
    spectra = surface_spectra(model, geom)
    if not np.all(cone_membership_batch(spectra, combo.k, strict=False)):
        raise ValueError("surface is not k-convex")
    lhs, rhs = _combo_sides(model, geom, H, combo)
    if np.any(rhs <= 0.0):
        raise ValueError("b-side of the combo must be positive for the bound")
    c = lhs / rhs
    down_b = np.zeros(geom.t.size)
    for off, bj in enumerate(combo.b):
        down_b = down_b + bj * H[:, combo.l + off - 1]
    down_a = np.zeros(geom.t.size)
    for i, ai in enumerate(combo.a):
        down_a = down_a + ai * (H[:, i - 1] if i >= 1 else 0.0)
    slack = c * down_b - down_a
    return CheckReport.inequality(
        f"combo-slack[l={combo.l},k={combo.k}]", float(np.min(slack)),
        tolerance, model=model.name, surface=curve.name, nodes=nodes)


def convergence_study(model, curve, identity, node_counts, **kwargs):
    """Residual of an identity check at increasing node counts.

    ``identity`` is one of the report-producing functions above taking
    (model, curve, .., nodes=..); returns the list of |residual| values.
    """
    return [abs(identity(model, curve, nodes=nodes, **kwargs).residual)
            for nodes in node_counts]
