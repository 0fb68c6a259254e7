import numpy as np
import pytest

from s3harmonics import (
    DomainError,
    ScalarJet,
    constant_jet,
    cos_alpha_jet,
    multi_indices,
    sin_alpha_jet,
)


def test_multi_indices_graded_order():
    idx = multi_indices(2)
    assert idx[0] == (0, 0, 0)
    assert set(idx[1:4]) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert all(sum(k) <= 2 for k in idx)
    assert len(idx) == 10


def test_trig_jets_reproduce_derivative_cycle(rng):
    alpha = rng.uniform(0.2, 1.3, size=7)
    s = sin_alpha_jet(alpha, 3)
    c = cos_alpha_jet(alpha, 3)
    assert np.allclose(s.value, np.sin(alpha), atol=1e-15)
    assert np.allclose(s.partial(1, 0, 0), np.cos(alpha), atol=1e-15)
    assert np.allclose(s.partial(2, 0, 0), -np.sin(alpha), atol=1e-15)
    assert np.allclose(s.partial(3, 0, 0), -np.cos(alpha), atol=1e-15)
    assert np.allclose(c.partial(1, 0, 0), -np.sin(alpha), atol=1e-15)
    assert np.all(s.partial(0, 1, 0) == 0.0)
    assert np.all(c.partial(0, 0, 1) == 0.0)


def test_product_rule(rng):
    alpha = rng.uniform(0.2, 1.3, size=5)
    s = sin_alpha_jet(alpha, 2)
    c = cos_alpha_jet(alpha, 2)
    sc = s * c
    # d/da (sin cos) = cos^2 - sin^2, second derivative -4 sin cos
    assert np.allclose(sc.value, np.sin(alpha) * np.cos(alpha), atol=1e-15)
    assert np.allclose(
        sc.partial(1, 0, 0), np.cos(alpha) ** 2 - np.sin(alpha) ** 2, atol=1e-14
    )
    assert np.allclose(
        sc.partial(2, 0, 0), -4.0 * np.sin(alpha) * np.cos(alpha), atol=1e-14
    )


def test_linear_operations(rng):
    alpha = rng.uniform(0.2, 1.3, size=5)
    s = sin_alpha_jet(alpha, 2)
    c = cos_alpha_jet(alpha, 2)
    combo = 2.0 * s + c * (-1j)
    assert np.allclose(combo.value, 2 * np.sin(alpha) - 1j * np.cos(alpha), atol=1e-15)
    diff = combo - combo
    assert np.max(np.abs(diff.value)) == 0.0
    neg = -s
    assert np.all(neg.value == -np.sin(alpha))


def test_reciprocal(rng):
    alpha = rng.uniform(0.2, 1.3, size=5)
    s = sin_alpha_jet(alpha, 3)
    inv = s.reciprocal()
    one = s * inv
    assert np.allclose(one.value, 1.0, atol=1e-14)
    for key in ((1, 0, 0), (2, 0, 0), (3, 0, 0)):
        assert np.max(np.abs(one.partial(*key))) <= 1e-12
    # d/da (1/sin) = -cos/sin^2
    assert np.allclose(
        inv.partial(1, 0, 0), -np.cos(alpha) / np.sin(alpha) ** 2, atol=1e-12
    )


def test_derivative_shifts_orders(rng):
    alpha = rng.uniform(0.2, 1.3, size=4)
    s = sin_alpha_jet(alpha, 2)
    ds = s.derivative(0)
    assert ds.order == 1
    assert np.allclose(ds.value, np.cos(alpha), atol=1e-15)
    with pytest.raises(DomainError):
        ds.derivative(0).derivative(0)


def test_partial_beyond_order_raises():
    jet = constant_jet(2.0, 1, shape=(3,))
    with pytest.raises(DomainError):
        jet.partial(2, 0, 0)
    assert np.all(jet.partial(0, 1, 0) == 0.0)


def test_truncated():
    jet = constant_jet(1.5, 3, shape=())
    low = jet.truncated(1)
    assert low.order == 1
    assert low.value == 1.5


def test_numpy_operands_defer_to_jet_arithmetic(rng):
    # ndarray * jet must fall through to the jet's reflected multiply
    # instead of numpy absorbing the jet into an object array
    alpha = rng.uniform(0.2, 1.3, size=3)
    s = sin_alpha_jet(alpha, 1)
    for factor in (2.0, np.float64(2.0), np.array(2.0), np.full(3, 2.0)):
        out = factor * s
        assert isinstance(out, ScalarJet)
        assert np.allclose(out.value, 2.0 * np.sin(alpha), atol=1e-15)
