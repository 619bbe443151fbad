"""Laplacian discretizations, generator residuals, and the integral identity."""

import numpy as np
import pytest

from gausspoisson import (
    LaplacianMethod,
    Method,
    SpaceSpec,
    classical_residual,
    difference_quotient_residual,
    discrete_laplacian,
    generator_residuals,
    interior_slices,
    make_grid,
    mild_identity_residual,
    pair,
    sample,
    time_integral,
    trajectory,
)
from gausspoisson import test_function as make_test_function

GRID = make_grid(1, 12.0, 1025)
GAUSSIAN = sample(GRID, lambda p: np.exp(-p[..., 0] ** 2))


def test_laplacian_of_gaussian_closed_form():
    # Delta exp(-x^2) = (4x^2 - 2) exp(-x^2)
    expect = sample(GRID, lambda p: (4 * p[..., 0] ** 2 - 2) * np.exp(-p[..., 0] ** 2))
    spec = discrete_laplacian(GAUSSIAN, LaplacianMethod.SPECTRAL)
    assert np.max(np.abs(spec.values - expect.values)) < 1e-9
    fd = discrete_laplacian(GAUSSIAN, LaplacianMethod.FINITE_DIFFERENCE)
    inner = interior_slices(GRID, 0.1)
    assert np.max(np.abs(fd.values[inner] - expect.values[inner])) < 1e-3


def test_finite_difference_stencil_exact_on_quadratics():
    # the central stencil is exact for polynomials of degree <= 3
    g = make_grid(1, 2.0, 9)
    f = sample(g, lambda p: p[..., 0] ** 2)
    lap = discrete_laplacian(f, LaplacianMethod.FINITE_DIFFERENCE)
    inner = slice(1, 8)
    np.testing.assert_allclose(lap.values[inner, 0].real, 2.0, rtol=1e-12)


def test_finite_difference_refines_at_second_order():
    def err(N):
        g = make_grid(1, 12.0, N)
        f = sample(g, lambda p: np.exp(-p[..., 0] ** 2))
        expect = sample(g, lambda p: (4 * p[..., 0] ** 2 - 2) * np.exp(-p[..., 0] ** 2))
        lap = discrete_laplacian(f, LaplacianMethod.FINITE_DIFFERENCE)
        sl = interior_slices(g, 0.25)
        return np.max(np.abs(lap.values[sl] - expect.values[sl]))

    assert err(513) / err(1025) == pytest.approx(4.0, rel=0.1)


def test_laplacian_two_dimensional():
    g = make_grid(2, 8.0, 129)
    f = sample(g, lambda p: np.exp(-np.sum(p**2, axis=-1)))
    expect = sample(
        g, lambda p: (4 * np.sum(p**2, axis=-1) - 4) * np.exp(-np.sum(p**2, axis=-1))
    )
    spec = discrete_laplacian(f)
    assert np.max(np.abs(spec.values - expect.values)) < 1e-8


def test_laplacian_validation():
    g = make_grid(1, 1.0, 2)
    f = sample(g, lambda p: np.zeros(p.shape[:-1]))
    with pytest.raises(ValueError):
        discrete_laplacian(f, LaplacianMethod.FINITE_DIFFERENCE)


def test_laplacian_self_adjoint_for_pairing():
    # summation by parts: <Delta f, phi> = <f, Delta phi> for interior support
    g = make_grid(1, 6.0, 121)
    bump = lambda c: lambda p: np.where(
        np.abs(p[..., 0] - c) < 1.0, np.cos(np.pi * (p[..., 0] - c) / 2.0) ** 4, 0.0
    )
    f = make_test_function(g, bump(-1.0))
    phi = make_test_function(g, bump(1.5))
    for method in LaplacianMethod:
        left = pair(discrete_laplacian(f, method), phi)
        right = pair(f, discrete_laplacian(phi, method))
        assert abs(left[0] - right[0]) < 1e-10


def test_generator_residuals_small_for_gaussian():
    r = generator_residuals(GAUSSIAN, 0.5, 1e-3)
    assert r.r1 < 1e-5
    assert r.r2 < 1e-10  # same discretization on both sides
    assert r.r3 < 1e-5
    assert r.max() == max(r.r1, r.r2, r.r3)


def test_generator_residuals_shrink_with_dt():
    # the central difference carries an O(dt^2) bias
    r_coarse = generator_residuals(GAUSSIAN, 0.5, 1e-2).r1
    r_fine = generator_residuals(GAUSSIAN, 0.5, 5e-3).r1
    assert r_coarse / r_fine == pytest.approx(4.0, rel=0.1)


def test_generator_residuals_validation():
    with pytest.raises(ValueError):
        generator_residuals(GAUSSIAN, 0.0, 1e-3)
    with pytest.raises(ValueError):
        generator_residuals(GAUSSIAN, 0.5, 0.6)  # dt >= t


def test_difference_quotient_first_order():
    r1 = difference_quotient_residual(GAUSSIAN, 1e-2)
    r2 = difference_quotient_residual(GAUSSIAN, 5e-3)
    assert 1.5 <= r1 / r2 <= 2.5
    # leading error is (h/2) Delta^2 f, about 0.03 here
    assert r2 < 0.05
    with pytest.raises(ValueError):
        difference_quotient_residual(GAUSSIAN, 0.0)


def test_time_integral_of_constant_is_linear():
    # G(s) fixes constants, and trapezoid weights sum to the interval length
    g = make_grid(1, 4.0, 65)
    one = sample(g, lambda p: np.ones(p.shape[:-1]))
    out = time_integral(one, 0.75, method=Method.SPECTRAL)
    np.testing.assert_allclose(out.values, 0.75 * one.values, rtol=1e-12)
    assert out.meta["t"] == 0.75
    assert out.meta["nodes"] > 256


def test_time_integral_matches_pointwise_quadrature():
    # at the origin the evolved Gaussian is (1+4s)^{-1/2}, whose integral
    # over [0, t] is (sqrt(1+4t) - 1)/2
    t = 1.0
    out = time_integral(GAUSSIAN, t, steps=512)
    center = out.values[GRID.N // 2, 0].real
    expect = (np.sqrt(1.0 + 4.0 * t) - 1.0) / 2.0
    assert abs(center - expect) < 1e-5


def test_time_integral_validation():
    with pytest.raises(ValueError):
        time_integral(GAUSSIAN, 0.0)
    with pytest.raises(ValueError):
        time_integral(GAUSSIAN, 1.0, eps=1.5)
    with pytest.raises(ValueError):
        time_integral(GAUSSIAN, 1.0, steps=1)


def test_mild_identity_holds_and_refines():
    coarse = mild_identity_residual(GAUSSIAN, 1.0, steps=256)
    fine = mild_identity_residual(GAUSSIAN, 1.0, steps=512)
    assert coarse < 1e-4
    assert coarse / fine >= 2.0


def test_mild_identity_with_positive_lower_limit():
    res = mild_identity_residual(GAUSSIAN, 1.0, steps=256, eps=0.25)
    assert res < 1e-5  # smooth integrand, no grading needed


def test_classical_residual_small_and_refines():
    def residual(dt, N):
        g = make_grid(1, 12.0, N)
        f = sample(g, lambda p: np.exp(-p[..., 0] ** 2))
        traj = trajectory(f, [0.5 - dt, 0.5, 0.5 + dt])
        return classical_residual(traj)

    coarse = residual(1e-2, 1025)
    fine = residual(5e-3, 2049)
    assert coarse < 1e-3
    assert coarse / fine >= 3.0


def test_classical_residual_validation():
    traj2 = trajectory(GAUSSIAN, [0.4, 0.5])
    with pytest.raises(ValueError):
        classical_residual(traj2)
    uneven = trajectory(GAUSSIAN, [0.1, 0.2, 0.4])
    with pytest.raises(ValueError):
        classical_residual(uneven)
    # a leading zero time is ignored by the uniform-spacing rule
    ok = trajectory(GAUSSIAN, [0.0, 0.4, 0.5, 0.6])
    assert classical_residual(ok) < 1e-2


def test_residuals_respect_weighted_space():
    s = SpaceSpec.make(2)
    r = generator_residuals(GAUSSIAN, 0.5, 1e-3, space=s)
    assert r.max() < 1e-4
