"""Named registry of every verification check the CLI can run.

Each entry bundles a stable name, the anchor of the statement it
verifies, the suite it belongs to, and a runner mapping a parameter dict
(seed, count, nodes, tolerance overrides) to a list of CheckReport.
Registry order is fixed so listings and reports are stable across runs.
"""

from dataclasses import dataclass

import numpy as np

from . import gaussbonnet as gb
from . import integrals, models, sampling, surfaces
from .integrals import CurvatureCombo
from .kronecker import lk_from_riemann, newton_tensor_delta
from .reports import CheckReport
from .sampling import SamplerSpec
from .symfunc import maclaurin_residuals, newton_tensor, nm_residuals

__all__ = ["Check", "REGISTRY", "suites", "get_suite", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    suite: str
    runner: callable


def _params(overrides, **defaults):
    merged = dict(defaults)
    merged.update({k: v for k, v in overrides.items() if k in defaults})
    return merged


def _rng(params):
    return np.random.Generator(np.random.Philox(key=[params["seed"], 0]))


# -- oracle suite -----------------------------------------------------------

def _run_newton_oracle(overrides):
    p = _params(overrides, seed=1001, count=10, tolerance=1e-12)
    rng = _rng(p)
    out = []
    for d in (3, 4, 5):
        for k in (1, 2, 3):
            worst = 0.0
            for _ in range(p["count"]):
                B = rng.standard_normal((d, d))
                B = 0.5 * (B + B.T)
                ref = newton_tensor_delta(B, k)
                got = newton_tensor(B, k)
                scale = max(1.0, float(np.max(np.abs(ref))))
                worst = max(worst, float(np.max(np.abs(got - ref))) / scale)
            out.append(CheckReport.identity(
                f"newton-tensor-oracle[d={d},k={k}]", worst, 0.0,
                p["tolerance"], d=d, k=k, samples=p["count"]))
    return out


def _run_gauss_bonnet_oracle(overrides):
    p = _params(overrides, seed=1002, count=5, tolerance=1e-9)
    rng = _rng(p)
    out = []
    for d in (4, 5, 6):
        for k in (1, 2):
            for eps in (-1, 0, 1):
                worst = 0.0
                for _ in range(p["count"]):
                    kappa = rng.standard_normal(d) + 1.5
                    direct = gb.lk_from_h(kappa, eps, k)
                    R = gb.gauss_riemann(np.diag(kappa), eps)
                    literal = lk_from_riemann(R, k)
                    scale = max(1.0, abs(direct))
                    worst = max(worst, abs(direct - literal) / scale)
                out.append(CheckReport.identity(
                    f"gauss-bonnet-oracle[d={d},k={k},eps={eps}]", worst,
                    0.0, p["tolerance"], d=d, k=k, eps=eps))
    return out


# -- inequality sweep suite -------------------------------------------------

def _sweep_reports(name, spec, checks, tolerance):
    summary, violations = sampling.sweep(spec, checks, tolerance)
    out = []
    for key, info in summary.items():
        out.append(CheckReport.inequality(
            f"{name}[{key}]", info["min_residual"], tolerance,
            cone=spec.cone, n=spec.n, count=info["count"],
            violations=info["violations"], seed=spec.seed))
    return out


def _run_newton_maclaurin(overrides):
    p = _params(overrides, seed=2001, count=20_000, tolerance=1e-10)
    out = []
    for n in (5, 8, 11):
        for k in (2, 3):
            spec = SamplerSpec("garding", n, p["count"], p["seed"], k=k)
            out.extend(_sweep_reports(
                f"newton-maclaurin[n={n},k={k}]", spec,
                {"product": lambda sp, k=k: nm_residuals(sp, k),
                 "power": lambda sp, k=k: maclaurin_residuals(sp, k)},
                p["tolerance"]))
    return out


def _run_refined_nm(overrides):
    p = _params(overrides, seed=2002, count=20_000, tolerance=1e-10)
    out = []
    for n in (6, 9, 11):
        for k in range(1, (n - 1) // 2 + 1):
            spec = SamplerSpec("horoconvex", n, p["count"], p["seed"])
            out.extend(_sweep_reports(
                f"refined-nm[n={n},k={k}]", spec,
                {"slack": lambda sp, k=k: gb.refined_nm_residuals(sp, k)},
                p["tolerance"]))
    return out


def _run_quotient_nm(overrides):
    p = _params(overrides, seed=2003, count=20_000, tolerance=1e-10)
    out = []
    for n in (6, 9, 11):
        for k in range(2, (n - 1) // 2 + 1):
            spec = SamplerSpec("horoconvex", n, p["count"], p["seed"])
            out.extend(_sweep_reports(
                f"quotient-nm[n={n},k={k}]", spec,
                {"slack": lambda sp, k=k: gb.quotient_nm_residuals(sp, k)},
                p["tolerance"]))
    return out


def _run_log_concavity(overrides):
    p = _params(overrides, seed=2004, count=20_000, tolerance=1e-10)
    out = []
    spec = SamplerSpec("nonneg", 9, p["count"], p["seed"])
    checks = {}
    for s in range(1, 7):
        for t in range(0, 5):
            checks[f"s={s},t={t}"] = (
                lambda sp, s=s, t=t: gb.logconcave_residuals(sp, s, t))
    out.extend(_sweep_reports("x-log-concavity", spec, checks, p["tolerance"]))
    return out


def _run_spherical_ineq(overrides):
    p = _params(overrides, seed=2005, count=20_000, tolerance=1e-10)
    out = []
    # The instance the rigidity argument uses: s=1, t=k-1 on 2k-convex
    # spectra.
    for n, k in ((7, 2), (9, 3)):
        spec = SamplerSpec("convex-even", n, p["count"], p["seed"], k=k)
        out.extend(_sweep_reports(
            f"spherical-x[n={n}]", spec,
            {f"s=1,t={k - 1}":
             lambda sp, t=k - 1: gb.spherical_ineq_residuals(sp, 1, t)},
            p["tolerance"]))
    # General (s,t): every mean curvature appearing must come from the
    # positive cone of order s+2t+2, otherwise the product bound can fail.
    for n in (7, 9):
        for s in range(1, 4):
            for t in range(0, 3):
                order = min(s + 2 * t + 2, n - 1)
                spec = SamplerSpec("garding", n, p["count"], p["seed"], k=order)
                out.extend(_sweep_reports(
                    f"spherical-x-general[n={n}]", spec,
                    {f"s={s},t={t}":
                     lambda sp, s=s, t=t: gb.spherical_ineq_residuals(sp, s, t)},
                    p["tolerance"]))
    return out


def _run_permutation_sum(overrides):
    p = _params(overrides, seed=2006, count=50, tolerance=1e-8)
    rng = _rng(p)
    out = []
    for d, k in ((5, 1), (7, 1), (6, 2)):
        ratios = []
        sign_ok = True
        for _ in range(p["count"]):
            kappa = 1.0 + np.abs(rng.standard_normal(d))
            rep = gb.check_permutation_sum(kappa, k, tol=p["tolerance"])
            sign_ok = sign_ok and rep.passed
            ratios.append(rep.metadata["ratio"])
        spread = float(np.max(ratios) - np.min(ratios))
        rel = spread / max(1.0, abs(float(np.mean(ratios))))
        report = CheckReport.identity(
            f"permutation-sum[d={d},k={k}]", rel, 0.0, p["tolerance"],
            d=d, k=k, samples=p["count"], ratio_mean=float(np.mean(ratios)))
        report.passed = report.passed and sign_ok
        out.append(report)
    return out


def _run_equality_atlas(overrides):
    p = _params(overrides, seed=2007, tolerance=1e-12)
    out = []
    for label, fn in (
            ("refined-nm", lambda sp: gb.refined_nm_residuals(sp, 2)),
            ("quotient-nm", lambda sp: gb.quotient_nm_residuals(sp, 2))):
        atlas = sampling.equality_atlas(fn, 8)
        eq_res = max(atlas["isotropic_max"], atlas["one_spike_max"])
        report = CheckReport.identity(
            f"equality-atlas[{label}]", eq_res, 0.0, p["tolerance"], **atlas)
        report.passed = report.passed and atlas["strict_on_two_spike"]
        out.append(report)
    return out


# -- integral suite ---------------------------------------------------------

def _spaceform_cases():
    E5, H5, S5 = models.euclidean(5), models.hyperbolic(5), models.sphere(5)
    return [
        (E5, surfaces.slice_profile(1.0), 2),
        (E5, surfaces.offset_sphere(0, 0.7, 1.3), 3),
        (E5, surfaces.perturbed_sphere(E5, 1.0, 0.1, 3), 3),
        (H5, surfaces.offset_sphere(-1, 0.4, 0.8), 1),
        (H5, surfaces.perturbed_sphere(H5, 1.0, 0.05, 2), 2),
        (S5, surfaces.offset_sphere(1, 0.3, 0.5), 2),
        (S5, surfaces.perturbed_sphere(S5, 0.8, 0.05, 2), 1),
    ]


def _run_minkowski_spaceform(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-8)
    return [integrals.minkowski_spaceform(m, c, k, p["nodes"], p["tolerance"])
            for m, c, k in _spaceform_cases()]


def _ads(n=5):
    return models.schwarzschild(n, 1.0, kappa_amb=1.0)


def _run_minkowski_warped(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-6)
    ads = _ads()
    out = []
    for k in (1, 2):
        for curve in (surfaces.slice_profile(2.0),
                      surfaces.perturbed_sphere(ads, 2.0, 0.05, 2)):
            out.append(integrals.minkowski_warped(
                ads, curve, k, p["nodes"], p["tolerance"]))
    return out


def _run_minkowski_weighted(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-6)
    ads = _ads()
    H5 = models.hyperbolic(5)
    cases = [
        (H5, surfaces.perturbed_sphere(H5, 1.0, 0.05, 2), 2),
        (ads, surfaces.perturbed_sphere(ads, 2.0, 0.05, 2), 2),
        (models.euclidean(5),
         surfaces.perturbed_sphere(models.euclidean(5), 1.0, 0.1, 3), 1),
    ]
    out = []
    for m, c, k in cases:
        rep = integrals.minkowski_weighted(m, c, k, p["nodes"], p["tolerance"])
        rep.passed = rep.passed and rep.metadata["inequality_slack"] >= -p["tolerance"]
        out.append(rep)
    return out


def _run_heintze_karcher(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-9)
    E4, H4 = models.euclidean(4), models.hyperbolic(4)
    cases = [
        (E4, surfaces.slice_profile(1.0), True),
        (H4, surfaces.offset_sphere(-1, 0.4, 0.8), True),
        (E4, surfaces.perturbed_sphere(E4, 1.0, 0.1, 2), False),
    ]
    out = []
    for m, c, umb in cases:
        rep = integrals.heintze_karcher(m, c, p["nodes"], p["tolerance"])
        if umb:
            rep.passed = rep.passed and abs(rep.residual) <= 1e-8
        out.append(rep)
    return out


def _run_ln_minkowski(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-8)
    E5, H5, S5 = models.euclidean(5), models.hyperbolic(5), models.sphere(5)
    cases = [
        (H5, surfaces.slice_profile(1.0), 1),
        (H5, surfaces.perturbed_sphere(H5, 1.2, 0.05, 3), 0),
        (S5, surfaces.perturbed_sphere(S5, 0.8, 0.05, 2), 1),
        (E5, surfaces.offset_sphere(0, 0.5, 1.0), 1),
    ]
    return [integrals.lk_minkowski(m, c, k, p["nodes"], p["tolerance"])
            for m, c, k in cases]


# -- rigidity suite ---------------------------------------------------------

def _scan(model, r0, combo, eps, mode, nodes, tolerance):
    """Slice oscillation must vanish; the perturbed one must not."""
    base = integrals.rigidity_residual(
        model, surfaces.slice_profile(r0), combo, nodes, tolerance)
    pert = integrals.rigidity_residual(
        model, surfaces.perturbed_sphere(model, r0, eps, mode), combo,
        nodes, tolerance)
    report = CheckReport.identity(
        pert.name, base.lhs, 0.0, tolerance,
        model=model.name, perturbed_oscillation=pert.lhs, eps=eps, mode=mode,
        family=combo.family, l=combo.l, k=combo.k, weighted=combo.weighted)
    report.passed = report.passed and pert.lhs > 10.0 * tolerance
    return report


def _run_rigidity_quotient(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-10, eps=1e-2)
    H4 = models.hyperbolic(4)
    return [_scan(H4, 1.2, CurvatureCombo(1, 2, family="quotient"),
                  p["eps"], 2, p["nodes"], p["tolerance"])]


def _run_rigidity_combo(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-10, eps=1e-2)
    E5 = models.euclidean(5)
    return [
        _scan(E5, 1.2, CurvatureCombo(2, 3, a=(0.0, 1.0), b=(0.5, 0.5)),
              p["eps"], 2, p["nodes"], p["tolerance"]),
        _scan(E5, 1.2, CurvatureCombo(1, 3, a=(1.0,), b=(0.4, 0.3, 0.3)),
              p["eps"], 2, p["nodes"], p["tolerance"]),
    ]


def _run_rigidity_weighted(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-10, eps=1e-2)
    ads = _ads()
    combos = [
        CurvatureCombo(0, 2, a=(), b=(0.0, 0.0, 1.0), weighted=True),
        CurvatureCombo(2, 3, a=(0.0, 1.0), b=(0.5, 0.5), weighted=True),
        CurvatureCombo(1, 3, a=(1.0,), b=(0.4, 0.3, 0.3), weighted=True),
    ]
    return [_scan(ads, 2.0, co, p["eps"], 2, p["nodes"], p["tolerance"])
            for co in combos]


def _run_rigidity_spaceform(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-10, eps=1e-2)
    H5 = models.hyperbolic(5)
    return [
        _scan(H5, 1.2, CurvatureCombo(2, 3, a=(0.0, 1.0), b=(0.5, 0.5)),
              p["eps"], 2, p["nodes"], p["tolerance"]),
        _scan(H5, 1.2, CurvatureCombo(1, 3, a=(1.0,), b=(0.4, 0.3, 0.3)),
              p["eps"], 2, p["nodes"], p["tolerance"]),
    ]


def _run_rigidity_gauss_bonnet(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-10, eps=1e-2)
    H5, S5 = models.hyperbolic(5), models.sphere(5)
    combo = CurvatureCombo(1, 2, a=(1.0,), b=(0.3, 0.7), family="L")
    return [
        _scan(H5, 1.2, combo, p["eps"], 2, p["nodes"], p["tolerance"]),
        _scan(S5, 0.7, combo, p["eps"], 2, p["nodes"], p["tolerance"]),
    ]


def _run_rigidity_odd(overrides):
    p = _params(overrides, nodes=512, tolerance=1e-10, eps=1e-2)
    H7 = models.hyperbolic(7)
    combo = CurvatureCombo(1, 2, a=(1.0,), b=(0.3, 0.7), family="N")
    return [_scan(H7, 1.2, combo, p["eps"], 2, p["nodes"], p["tolerance"])]


# -- model suite ------------------------------------------------------------

def _run_model_conditions(overrides):
    p = _params(overrides, tolerance=1e-10)
    # Expected condition profile per model: space forms sit on the (C2)
    # boundary (margin 0) and the round sphere genuinely fails (C3).
    cases = (
        (models.euclidean(4), 0.5, 3.0, {"c1": True, "c3": True}),
        (models.sphere(4), 0.3, 1.2, {"c1": True, "c3": False}),
        (models.hyperbolic(4), 0.5, 3.0, {"c1": True, "c3": True}),
        (_ads(4), 1.5, 4.0, {"c1": True, "c2": True, "c3": True}),
    )
    out = []
    for model, lo, hi, expected in cases:
        cond = models.check_conditions(model, lo, hi)
        observed = {name: getattr(cond, name) for name in expected}
        report = CheckReport.inequality(
            f"model-conditions[{model.name}]", cond.c1_margin,
            p["tolerance"], expected=expected, observed=observed,
            **cond.to_dict())
        report.passed = observed == expected
        out.append(report)
    return out


REGISTRY = (
    Check("newton-tensor-oracle", "Eq. (2.1)/(2.3)", "oracles", _run_newton_oracle),
    Check("gauss-bonnet-oracle", "Lemma 4.1", "oracles", _run_gauss_bonnet_oracle),
    Check("newton-maclaurin", "Lemma 2.1", "inequalities", _run_newton_maclaurin),
    Check("refined-nm", "Prop. 4.3", "inequalities", _run_refined_nm),
    Check("quotient-nm", "Prop. 4.5", "inequalities", _run_quotient_nm),
    Check("x-log-concavity", "Lemma 4.6", "inequalities", _run_log_concavity),
    Check("spherical-x", "Eq. (4.17)", "inequalities", _run_spherical_ineq),
    Check("permutation-sum", "Eq. (4.9)", "inequalities", _run_permutation_sum),
    Check("equality-atlas", "Props. 4.3/4.5", "inequalities", _run_equality_atlas),
    Check("minkowski-spaceform", "Eq. (3.17)", "integrals", _run_minkowski_spaceform),
    Check("minkowski-warped", "Prop. 2.2", "integrals", _run_minkowski_warped),
    Check("minkowski-weighted", "Prop. 2.3", "integrals", _run_minkowski_weighted),
    Check("heintze-karcher", "Prop. 2.4", "integrals", _run_heintze_karcher),
    Check("ln-minkowski", "Eq. (4.14)", "integrals", _run_ln_minkowski),
    Check("rigidity-quotient", "Thm. 1.1", "rigidity", _run_rigidity_quotient),
    Check("rigidity-combo", "Thm. 1.2", "rigidity", _run_rigidity_combo),
    Check("rigidity-weighted", "Thm. 1.5", "rigidity", _run_rigidity_weighted),
    Check("rigidity-spaceform", "Thm. 3.1", "rigidity", _run_rigidity_spaceform),
    Check("rigidity-gauss-bonnet", "Thms. 1.6/1.7", "rigidity", _run_rigidity_gauss_bonnet),
    Check("rigidity-odd", "Thm. 4.7", "rigidity", _run_rigidity_odd),
    Check("model-conditions", "Conditions (C1)-(C4)", "models", _run_model_conditions),
)


def suites():
    """Suite names in registry order, without duplicates."""
    seen = []
    for check in REGISTRY:
        if check.suite not in seen:
            seen.append(check.suite)
    return seen


def get_suite(name):
    found = [c for c in REGISTRY if c.suite == name]
    if not found:
        raise KeyError(f"unknown suite {name!r}; available: {suites()}")
    return found


def run_suite(name, overrides=None):
    """Run every check of a suite; returns {check name: [CheckReport]}."""
    overrides = overrides or {}
    return {check.name: check.runner(overrides) for check in get_suite(name)}
