"""Gaussian mixtures with exact evolution, and the named field rules."""

import numpy as np
import pytest

from gausspoisson import (
    GaussianMixture,
    Method,
    apply,
    boundary_max,
    field_rule,
    make_grid,
    random_gaussian_mixture,
    sample,
)


def test_mixture_evaluates_sum_of_terms():
    mix = GaussianMixture(
        amplitudes=[[1.0], [2.0j]], widths=[1.0, 0.5], centers=[[0.0], [1.0]]
    )
    assert mix.terms == 2 and mix.n == 1 and mix.m == 1
    x = np.array([[0.5]])
    expect = np.exp(-0.25) + 2.0j * np.exp(-0.5 * 0.25)
    assert np.isclose(mix(x)[0, 0], expect)


def test_mixture_validation():
    with pytest.raises(ValueError):
        GaussianMixture([[1.0]], [-1.0], [[0.0]])  # width must have Re > 0
    with pytest.raises(ValueError):
        GaussianMixture([[1.0], [1.0]], [1.0], [[0.0]])  # term count mismatch


def test_mixture_evolution_closed_form_real_time():
    # c e^{-a x^2} evolves to c (1+4at)^{-1/2} e^{-a x^2/(1+4at)}
    mix = GaussianMixture([[1.0]], [2.0], [[0.0]])
    t = 0.3
    out = mix.evolved(t)
    d = 1.0 + 4.0 * 2.0 * t
    assert np.isclose(out.amplitudes[0, 0], d**-0.5)
    assert np.isclose(out.widths[0], 2.0 / d)
    np.testing.assert_allclose(out.centers, mix.centers)


def test_mixture_evolution_matches_operator():
    g = make_grid(1, 12.0, 1025)
    mix = GaussianMixture(
        amplitudes=[[1.0 + 0.3j], [0.5]], widths=[1.5, 0.7 + 0.2j], centers=[[0.5], [-1.0]]
    )
    f = mix.sampled(g)
    for zeta in (0.4, 0.3 + 0.3j):
        exact = mix.evolved(zeta).sampled(g)
        got = apply(zeta, f, method=Method.QUADRATURE)
        assert np.max(np.abs(got.values - exact.values)) < 1e-10


def test_mixture_evolution_composes():
    # evolving twice equals evolving by the sum, exactly in closed form
    mix = GaussianMixture([[1.0]], [1.0], [[0.0]])
    a = mix.evolved(0.2 + 0.1j).evolved(0.3 - 0.05j)
    b = mix.evolved(0.5 + 0.05j)
    assert np.allclose(a.amplitudes, b.amplitudes)
    assert np.allclose(a.widths, b.widths)


def test_mixture_two_dimensional_vector_valued():
    g = make_grid(2, 8.0, 65)
    mix = GaussianMixture(
        amplitudes=[[1.0, 2.0j]], widths=[1.0], centers=[[0.5, -0.5]]
    )
    assert mix.m == 2
    f = mix.sampled(g)
    assert f.m == 2
    exact = mix.evolved(0.25).sampled(g)
    got = apply(0.25, f, method=Method.QUADRATURE)
    assert np.max(np.abs(got.values - exact.values)) < 1e-10


def test_random_mixture_reproducible_and_decaying():
    a = random_gaussian_mixture(1, rng=np.random.default_rng(9))
    b = random_gaussian_mixture(1, rng=np.random.default_rng(9))
    assert np.array_equal(a.amplitudes, b.amplitudes)
    assert np.array_equal(a.centers, b.centers)
    g = make_grid(1, 12.0, 257)
    assert boundary_max(a.sampled(g)) < 1e-10


def test_random_mixture_shapes():
    mix = random_gaussian_mixture(2, m=3, terms=5, rng=np.random.default_rng(0))
    assert mix.amplitudes.shape == (5, 3)
    assert mix.widths.shape == (5,)
    assert mix.centers.shape == (5, 2)


def test_boundary_max_reads_outermost_layer():
    g = make_grid(1, 4.0, 9)
    vals = np.zeros(9)
    vals[0] = 3.0
    f = sample(g, lambda p: np.zeros(p.shape[:-1])).with_values(vals)
    assert boundary_max(f) == 3.0


def test_named_field_rules():
    g = make_grid(1, 12.0, 1025)
    gaussian = sample(g, field_rule("gaussian"))
    assert np.isclose(gaussian.values[g.N // 2, 0], 1.0)
    wide = sample(g, field_rule("wide_gaussian"))
    # wider profile decays slower
    assert abs(wide.values[g.N // 4, 0]) > abs(gaussian.values[g.N // 4, 0])
    const = sample(g, field_rule("constant"))
    assert np.all(const.values == 1.0)
    cosine = sample(g, field_rule("cosine"))
    assert np.isclose(cosine.values[g.N // 2, 0], 1.0)
    modulated = sample(g, field_rule("modulated_gaussian"))
    assert np.isclose(modulated.values[g.N // 2, 0], 1.0)


def test_field_rule_unknown_name_lists_choices():
    with pytest.raises(ValueError, match="gaussian"):
        field_rule("nope")
