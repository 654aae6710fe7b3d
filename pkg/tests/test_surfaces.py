"""Rotationally symmetric hypersurfaces: curvature, normals, quadrature."""

import numpy as np
import pytest

from warpcurv import models, surfaces


E4 = models.euclidean(4)
H4 = models.hyperbolic(4)
S4 = models.sphere(4)


def test_slice_is_isotropic():
    for model, r0, expect in ((E4, 1.5, 1 / 1.5),
                              (H4, 0.8, np.cosh(0.8) / np.sinh(0.8)),
                              (S4, 0.6, np.cos(0.6) / np.sin(0.6))):
        geom = surfaces.geometry_batch(model, surfaces.slice_profile(r0),
                                       np.linspace(0.1, np.pi - 0.1, 21))
        np.testing.assert_allclose(geom.kappa_profile, expect, rtol=1e-12)
        np.testing.assert_allclose(geom.kappa_rot, expect, rtol=1e-12)


def test_offset_spheres_are_umbilical():
    cases = [
        (E4, surfaces.offset_sphere(0, 0.7, 1.3), 1 / 1.3),
        (H4, surfaces.offset_sphere(-1, 0.5, 0.9), 1 / np.tanh(0.9)),
        (S4, surfaces.offset_sphere(1, 0.3, 0.6), 1 / np.tan(0.6)),
    ]
    ts = np.linspace(0.05, np.pi - 0.05, 37)
    for model, curve, expect in cases:
        geom = surfaces.geometry_batch(model, curve, ts)
        np.testing.assert_allclose(geom.kappa_profile, expect, atol=1e-10)
        np.testing.assert_allclose(geom.kappa_rot, expect, atol=1e-10)


def test_normal_is_unit_and_tangent():
    curve = surfaces.fourier_graph(1.0, {2: 0.1, 3: 0.05})
    ts = np.linspace(0.05, np.pi - 0.05, 101)
    geom = surfaces.geometry_batch(H4, curve, ts)
    unit = geom.nu_r ** 2 + geom.lam ** 2 * geom.nu_theta ** 2
    np.testing.assert_allclose(unit, 1.0, atol=1e-12)
    # <nu, gamma'>_g = nu_r rdot + lam^2 nu_theta thetadot
    rdot = curve.rd(ts)
    thdot = curve.thd(ts)
    tangency = geom.nu_r * rdot + geom.lam ** 2 * geom.nu_theta * thdot
    np.testing.assert_allclose(tangency, 0.0, atol=1e-12)


def test_finite_difference_curvature_oracle_flat():
    # embed in Cartesian coordinates (x, z) = (r sin, r cos) and compare
    # both principal curvatures against finite differences of the
    # embedding alone
    rng = np.random.default_rng(41)
    curve = surfaces.fourier_graph(1.3, {2: 0.15, 4: 0.04})
    ts = np.linspace(0.3, np.pi - 0.3, 9)
    geom = surfaces.geometry_batch(E4, curve, ts)
    h = 1e-4  # balances truncation against second-difference roundoff

    def xz(t):
        r, th = curve.r(t), curve.th(t)
        return r * np.sin(th), r * np.cos(th)

    x0, z0 = xz(ts)
    xp, zp = xz(ts + h)
    xm, zm = xz(ts - h)
    dx, dz = (xp - xm) / (2 * h), (zp - zm) / (2 * h)
    ddx, ddz = (xp - 2 * x0 + xm) / h ** 2, (zp - 2 * z0 + zm) / h ** 2
    v2 = dx ** 2 + dz ** 2
    # outward normal from the library's nu, rotated to Cartesian
    sin, cos = np.sin(geom.theta), np.cos(geom.theta)
    nx = geom.nu_r * sin + geom.r * geom.nu_theta * cos
    nz = geom.nu_r * cos - geom.r * geom.nu_theta * sin
    kappa_m = -(ddx * nx + ddz * nz) / v2
    kappa_p = nx / x0
    np.testing.assert_allclose(geom.kappa_profile, kappa_m, atol=1e-6)
    np.testing.assert_allclose(geom.kappa_rot, kappa_p, atol=1e-10)


def test_star_shaped_flag():
    geom = surfaces.geometry_batch(
        E4, surfaces.fourier_graph(1.0, {2: 0.1}),
        np.linspace(0.1, np.pi - 0.1, 51))
    assert geom.star_shaped
    # an offset sphere far from the origin is not star-shaped
    geom = surfaces.geometry_batch(
        E4, surfaces.offset_sphere(0, 2.0, 0.5),
        np.linspace(0.3, np.pi - 0.3, 51))
    assert not geom.star_shaped


def test_axis_evaluation_rejected():
    with pytest.raises(ValueError):
        surfaces.geometry_batch(E4, surfaces.slice_profile(1.0),
                                np.array([0.0, 0.5]))


def test_area_closed_forms():
    # unit sphere in R^3
    m3 = models.euclidean(3)
    area = surfaces.integrate(m3, surfaces.slice_profile(1.0),
                              lambda g: 1.0, nodes=256)
    assert area == pytest.approx(4 * np.pi, rel=1e-12)
    # slice r0 in H^3
    h3 = models.hyperbolic(3)
    area = surfaces.integrate(h3, surfaces.slice_profile(0.7),
                              lambda g: 1.0, nodes=256)
    assert area == pytest.approx(4 * np.pi * np.sinh(0.7) ** 2, rel=1e-12)
    # geodesic sphere of radius a in H^4, centered off the origin
    area = surfaces.integrate(H4, surfaces.offset_sphere(-1, 0.5, 0.9),
                              lambda g: 1.0, nodes=1024)
    assert area == pytest.approx(2 * np.pi ** 2 * np.sinh(0.9) ** 3, rel=1e-9)


def test_quadrature_convergence():
    curve = surfaces.fourier_graph(1.0, {3: 0.2})
    exact = surfaces.integrate(E4, curve, lambda g: g.r ** 2, nodes=2048)
    errs = [abs(surfaces.integrate(E4, curve, lambda g: g.r ** 2, nodes=n)
                - exact) for n in (16, 32, 64)]
    assert errs[1] <= errs[0] / 4 or errs[1] < 1e-11
    assert errs[2] <= errs[1] / 4 or errs[2] < 1e-11


def test_integrate_node_floor():
    with pytest.raises(ValueError):
        surfaces.integrate(E4, surfaces.slice_profile(1.0), lambda g: 1.0,
                           nodes=8)


def test_a_term_zero_on_slices_and_space_forms():
    geom = surfaces.geometry_batch(H4, surfaces.offset_sphere(-1, 0.5, 0.9),
                                   np.linspace(0.1, 3.0, 11))
    np.testing.assert_allclose(surfaces.a_term(H4, geom), 0.0, atol=1e-14)
    ads = models.schwarzschild(4, 1.0, kappa_amb=1.0)
    geom = surfaces.geometry_batch(ads, surfaces.slice_profile(2.0),
                                   np.linspace(0.1, 3.0, 11))
    np.testing.assert_allclose(surfaces.a_term(ads, geom), 0.0, atol=1e-14)


def test_a_term_positive_off_slice_in_c2_model():
    ads = models.schwarzschild(4, 1.0, kappa_amb=1.0)
    curve = surfaces.perturbed_sphere(ads, 2.0, 0.1, 2)
    ts = np.linspace(0.3, np.pi / 2 - 0.1, 11)  # rdot != 0 here
    geom = surfaces.geometry_batch(ads, curve, ts)
    vals = surfaces.a_term(ads, geom)
    assert np.all(vals > 0.0)


def test_perturbed_sphere_domain_check():
    with pytest.raises(ValueError):
        surfaces.perturbed_sphere(S4, 1.5, 2.0, 2)
    assert surfaces.perturbed_sphere(E4, 1.0, 0.0, 2).name.startswith("slice")


def test_offset_sphere_validation():
    with pytest.raises(ValueError):
        surfaces.offset_sphere(0, -0.1, 1.0)
    with pytest.raises(ValueError):
        surfaces.offset_sphere(1, 1.0, 1.0)  # leaves the hemisphere
    with pytest.raises(ValueError):
        surfaces.offset_sphere(2, 0.1, 1.0)
