import numpy as np
import pytest

from s3harmonics import (
    DomainError,
    HopfPoint,
    InvalidModeError,
    ModeIndex,
    as_mode_index,
    enumerate_scalar,
    laplace_scalar_jet,
    mode_value,
    mode_value_naive,
    sample_interior_points,
    scalar_field,
    scalar_mode_closure,
    scalar_mode_jet,
    spectral_data,
)


def test_mode_index_validation():
    i = ModeIndex(3, 1, -1)
    assert (i.S, i.D) == (1, 0)
    with pytest.raises(InvalidModeError):
        ModeIndex(2, 3, 0)  # |two_mp| > L
    with pytest.raises(InvalidModeError):
        ModeIndex(1, 0, 1)  # parity of two_mp
    with pytest.raises(InvalidModeError):
        ModeIndex(-1, 0, 0)
    j = as_mode_index(3, "1/2", "-1/2")
    assert (j.two_mp, j.two_mm) == (1, -1)
    with pytest.raises(InvalidModeError):
        as_mode_index(2, "1/3", 0)


def test_enumeration_is_lexicographic_and_complete():
    for L in range(6):
        modes = enumerate_scalar(L)
        assert len(modes) == (L + 1) ** 2
        pairs = [(i.two_mp, i.two_mm) for i in modes]
        assert pairs == sorted(pairs)
    assert enumerate_scalar(1) == [
        ModeIndex(1, -1, -1),
        ModeIndex(1, -1, 1),
        ModeIndex(1, 1, -1),
        ModeIndex(1, 1, 1),
    ]


def test_spectral_data_values():
    sd = spectral_data(ModeIndex(4, 2, -2))
    assert sd.lam == -24 and isinstance(sd.lam, int)
    assert sd.mu == 2j
    assert sd.nu == 2j
    sd0 = spectral_data(ModeIndex(0, 0, 0))
    assert (sd0.lam, sd0.mu, sd0.nu) == (0, 0j, 0j)


def test_frozen_low_modes(points):
    a, t, f = points.alpha, points.theta, points.phi

    val = mode_value(ModeIndex(0, 0, 0), points)
    assert np.max(np.abs(val - 1.0 / (np.sqrt(2.0) * np.pi))) <= 1e-16

    val = mode_value(ModeIndex(1, 1, 1), points)
    ref = np.cos(a) * np.exp(1j * t) / np.pi
    assert np.max(np.abs(val - ref)) <= 1e-15

    val = mode_value(ModeIndex(1, 1, -1), points)
    ref = np.sin(a) * np.exp(1j * f) / np.pi
    assert np.max(np.abs(val - ref)) <= 1e-15

    val = mode_value(ModeIndex(2, 0, 0), points)
    ref = np.sqrt(1.5) / np.pi * np.cos(2 * a)
    assert np.max(np.abs(val - ref)) <= 1e-15

    val = mode_value(ModeIndex(2, 2, 2), points)
    ref = np.sqrt(1.5) / np.pi * np.cos(a) ** 2 * np.exp(2j * t)
    assert np.max(np.abs(val - ref)) <= 1e-15

    val = mode_value(ModeIndex(2, 2, -2), points)
    ref = np.sqrt(1.5) / np.pi * np.sin(a) ** 2 * np.exp(2j * f)
    assert np.max(np.abs(val - ref)) <= 1e-15

    val = mode_value(ModeIndex(2, 2, 0), points)
    ref = np.sqrt(3.0) / np.pi * np.sin(a) * np.cos(a) * np.exp(1j * (t + f))
    assert np.max(np.abs(val - ref)) <= 1e-15

    val = mode_value(ModeIndex(2, -2, 0), points)
    ref = -np.sqrt(3.0) / np.pi * np.sin(a) * np.cos(a) * np.exp(-1j * (t + f))
    assert np.max(np.abs(val - ref)) <= 1e-15


def test_factorial_sum_agrees_with_weighted_polynomial_route(points):
    # second construction: weight times a degree-n polynomial in cos(2 alpha)
    for i in (
        ModeIndex(2, 0, 0),
        ModeIndex(3, 1, -1),
        ModeIndex(4, 2, 0),
        ModeIndex(5, 1, 1),
        ModeIndex(6, 2, -2),
    ):
        direct = mode_value(i, points)
        ref = mode_value_naive(i, points)
        assert np.max(np.abs(direct - ref)) <= 1e-13 * np.max(np.abs(ref)), i


def test_weighted_polynomial_route_requires_nonnegative_windings(points):
    with pytest.raises(DomainError):
        mode_value_naive(ModeIndex(2, -2, 0), points)


def test_windings_are_the_phase_charges(points):
    # d/dtheta multiplies by iD, d/dphi by iS, termwise in the jet
    for i in (ModeIndex(2, 2, 0), ModeIndex(3, -1, 1), ModeIndex(4, 0, 2)):
        jet = scalar_mode_jet(i, points, 1)
        val = jet.value
        assert np.max(np.abs(jet.partial(0, 1, 0) - 1j * i.D * val)) <= 1e-14
        assert np.max(np.abs(jet.partial(0, 0, 1) - 1j * i.S * val)) <= 1e-14


def test_conjugation_flips_both_labels(points):
    for i in (ModeIndex(2, 2, 0), ModeIndex(3, 1, -1), ModeIndex(4, 2, 2)):
        mirrored = ModeIndex(i.L, -i.two_mp, -i.two_mm)
        lhs = np.conj(mode_value(i, points))
        rhs = (-1.0) ** i.S * mode_value(mirrored, points)
        assert np.max(np.abs(lhs - rhs)) <= 1e-14 * np.max(np.abs(rhs))


def test_jet_laplacian_gives_the_eigenvalue(points):
    for L in range(7):
        lam = -L * (L + 2)
        for i in enumerate_scalar(L):
            jet = scalar_mode_jet(i, points, 3)
            lap = laplace_scalar_jet(jet, points)
            scale = max(np.max(np.abs(jet.value)), 1e-30)
            assert np.max(np.abs(lap.value - lam * jet.value)) <= 1e-10 * scale, i


def test_jet_order_cap():
    p = HopfPoint(0.5, 0.0, 0.0)
    jet = scalar_mode_jet(ModeIndex(2, 0, 0), p, 3)
    assert jet.order == 3
    with pytest.raises(DomainError):
        scalar_mode_jet(ModeIndex(2, 0, 0), p, 4)


def test_closure_and_field_agree(rng):
    p = sample_interior_points(10, rng)
    i = ModeIndex(3, 1, 1)
    closure = scalar_mode_closure(i)
    field = scalar_field(i)
    assert np.array_equal(closure(p.alpha, p.theta, p.phi), field(p))
    assert np.array_equal(field(p), mode_value(i, p))
