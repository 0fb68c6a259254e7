import numpy as np
import pytest

from s3harmonics import (
    ChartDomainError,
    DomainError,
    FdConfig,
    HopfPoint,
    ModeIndex,
    d_scalar,
    fd_d_scalar,
    fd_delta,
    fd_directional,
    fd_laplace,
    fd_partial,
    fd_scalar_laplacian,
    fd_star_d,
    killing_coordinate_closure,
    killing_point,
    mode,
    mode_coordinate_closure,
    mode_point,
    mode_value,
    point_form,
    sample_interior_points,
    scalar_mode_closure,
    scalar_mode_jet,
    spectral_data,
    star_d_jet,
    enumerate_scalar,
)


def test_config_validation():
    with pytest.raises(DomainError):
        FdConfig(step_alpha=0.0)
    with pytest.raises(DomainError):
        FdConfig(scheme="forward")
    cfg = FdConfig()
    assert cfg.step(0) == cfg.step(1) == cfg.step(2) == 1e-4


def test_partial_guards(points):
    f = scalar_mode_closure(ModeIndex(2, 0, 0))
    with pytest.raises(DomainError):
        fd_partial(f, points, 3, 1)
    with pytest.raises(DomainError):
        fd_partial(f, points, 0, 3)
    edge = HopfPoint(1e-6, 0.0, 0.0)
    with pytest.raises(ChartDomainError):
        fd_partial(f, edge, 0, 1)


def test_alpha_partial_of_cos_two_alpha():
    p = HopfPoint(np.pi / 4, 0.2, 0.4)

    def f(alpha, theta, phi):
        return np.cos(2 * alpha) + 0j * theta

    cfg = FdConfig(step_alpha=1e-5)
    val = fd_partial(f, p, 0, 1, cfg)
    assert np.max(np.abs(val + 2.0)) <= 1e-9


def test_angular_partials_give_the_windings(points):
    # first derivative in phi brings down iS, second in theta brings -D^2
    i = ModeIndex(2, 2, -2)  # S = 2, D = 0
    f = scalar_mode_closure(i)
    val = mode_value(i, points)
    d_phi = fd_partial(f, points, 2, 1)
    assert np.max(np.abs(d_phi - 2j * val)) <= 1e-7 * np.max(np.abs(val))
    j = ModeIndex(2, 2, 2)  # S = 0, D = 2
    g = scalar_mode_closure(j)
    val_j = mode_value(j, points)
    dd_theta = fd_partial(g, points, 1, 2)
    assert np.max(np.abs(dd_theta + 4.0 * val_j)) <= 1e-5 * np.max(np.abs(val_j))


def test_gradient_matches_analytic_differential(rng):
    p = sample_interior_points(20, rng)
    i = ModeIndex(2, 2, 0)
    grad = fd_d_scalar(scalar_mode_closure(i), p).components
    ana = d_scalar(scalar_mode_jet(i, p, 1), p).components
    assert np.max(np.abs(grad - ana)) <= 1e-7


def test_directional_derivatives_give_mu_and_nu(rng):
    p = sample_interior_points(30, rng)
    for i in (ModeIndex(2, 2, 0), ModeIndex(3, 1, -1), ModeIndex(4, 0, 2)):
        f = scalar_mode_closure(i)
        val = mode_value(i, p)
        sd = spectral_data(i)
        scale = np.max(np.abs(val))
        along_xi = fd_directional(f, p, 1.0, 1.0)
        assert np.max(np.abs(along_xi - sd.mu * val)) <= 1e-7 * scale
        along_xip = fd_directional(f, p, -1.0, 1.0)
        assert np.max(np.abs(along_xip - sd.nu * val)) <= 1e-7 * scale


def test_scalar_laplacian_reproduces_the_eigenvalue(rng):
    # residual relative to the compared quantity lam Phi, step 1e-4
    p = sample_interior_points(50, rng)
    for L in range(1, 7):
        lam = float(-L * (L + 2))
        for i in enumerate_scalar(L):
            f = scalar_mode_closure(i)
            ref = lam * mode_value(i, p)
            lap = fd_scalar_laplacian(f, p)
            assert np.max(np.abs(lap - ref)) <= 1e-5 * np.max(np.abs(ref)), i


def test_star_d_of_killing_forms(rng):
    p = sample_interior_points(25, rng)
    for which, sign in (("xi", -2.0), ("xiprime", 2.0)):
        w = killing_coordinate_closure(which)
        sd = fd_star_d(w, p).components
        val = killing_point(which, p).components
        assert np.max(np.abs(sd - sign * val)) <= 1e-6


def test_star_d_and_delta_match_analytic_operators_for_every_family(rng):
    # every family, every L <= 4, 50 random points, step 1e-4, tolerance 1e-5
    from s3harmonics import codifferential, mode_is_null

    p = sample_interior_points(50, rng)
    for L in range(1, 5):
        for i in enumerate_scalar(L):
            for tag in ("A", "B", "Bprime", "C", "Cprime", "E", "Eprime", "F"):
                if mode_is_null(tag, i):
                    continue
                closure = mode_coordinate_closure(tag, i)
                ana = point_form(star_d_jet(mode(tag, i, p, 1), p), p).components
                scale = max(np.max(np.abs(ana)), 1.0)
                fd_val = fd_star_d(closure, p).components
                assert np.max(np.abs(fd_val - ana)) <= 1e-5 * scale, (tag, i)
                ana_delta = codifferential(mode(tag, i, p, 1), p).components[0]
                scale = max(np.max(np.abs(mode_point(tag, i, p).components)), 1.0)
                fd_val = fd_delta(closure, p)
                assert np.max(np.abs(fd_val - ana_delta)) <= 1e-5 * scale, (tag, i)


def test_codifferential_vanishes_on_coexact_families(rng):
    p = sample_interior_points(15, rng)
    i = ModeIndex(3, 1, -1)
    for tag in ("B", "C", "E", "Eprime"):
        w = mode_coordinate_closure(tag, i)
        scale = np.max(np.abs(mode_point(tag, i, p).components))
        assert np.max(np.abs(fd_delta(w, p))) <= 1e-6 * max(scale, 1.0), tag
    # and on A it reproduces -lam Phi
    lam = float(spectral_data(i).lam)
    val = fd_delta(mode_coordinate_closure("A", i), p)
    ref = -lam * mode_value(i, p)
    assert np.max(np.abs(val - ref)) <= 1e-6 * np.max(np.abs(ref))


def test_laplacian_on_a_coexact_mode(rng):
    p = sample_interior_points(8, rng)
    i = ModeIndex(3, 1, 1)
    w = mode_coordinate_closure("E", i)
    fd_val = fd_laplace(w, p).components
    ref = -9.0 * mode_point("E", i, p).components
    assert np.max(np.abs(fd_val - ref)) <= 1e-4 * np.max(np.abs(ref))


def test_second_order_convergence(rng):
    p = sample_interior_points(8, rng)
    i = ModeIndex(3, 1, 1)
    w = mode_coordinate_closure("B", i)
    ana = point_form(star_d_jet(mode("B", i, p, 1), p), p).components
    errs = []
    for h in (1e-3, 5e-4):
        cfg = FdConfig(step_alpha=h, step_theta=h, step_phi=h)
        errs.append(np.max(np.abs(fd_star_d(w, p, cfg).components - ana)))
    ratio = errs[0] / errs[1]
    assert 3.5 <= ratio <= 4.5


def test_central4_is_more_accurate(rng):
    p = sample_interior_points(10, rng)
    i = ModeIndex(4, 2, 0)
    f = scalar_mode_closure(i)
    val = mode_value(i, p)
    h = 1e-2
    err2 = np.max(np.abs(
        fd_partial(f, p, 0, 1, FdConfig(step_alpha=h, step_theta=h, step_phi=h))
        - fd_partial(f, p, 0, 1, FdConfig(step_alpha=1e-5, step_theta=h, step_phi=h))
    ))
    err4 = np.max(np.abs(
        fd_partial(f, p, 0, 1, FdConfig(step_alpha=h, step_theta=h, step_phi=h,
                                        scheme="central4"))
        - fd_partial(f, p, 0, 1, FdConfig(step_alpha=1e-5, step_theta=h, step_phi=h))
    ))
    assert err4 < err2 / 50.0
    assert np.max(np.abs(val)) > 0  # the mode is not trivially zero here
