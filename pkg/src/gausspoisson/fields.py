"""Analytic test fields: named rules, Gaussian mixtures, random generators.

Gaussian mixtures are the workhorse: they evolve in closed form (a Gaussian
stays a Gaussian; the width parameter moves by a Moebius map), so every
evolution result can be compared against an exact expression.  The evolved
width is complex in general; any ``Re a > 0`` keeps the term integrable and
the family closed under further evolution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid_field import Field, Grid, sample
from .kernel import as_time

__all__ = [
    "GaussianMixture",
    "random_gaussian_mixture",
    "boundary_max",
    "field_rule",
    "FIELD_RULES",
]


@dataclass(frozen=True)
class GaussianMixture:
    """A finite sum of vector-amplitude Gaussians ``sum_t c_t e^{-a_t |x - mu_t|^2}``.

    ``amplitudes`` has shape (terms, m) complex, ``widths`` shape (terms,)
    with ``Re a_t > 0``, ``centers`` shape (terms, n) real.  Instances are
    callable point rules, directly usable with :func:`~gausspoisson.grid_field.sample`.
    """

    amplitudes: np.ndarray
    widths: np.ndarray
    centers: np.ndarray

    def __post_init__(self):
        amp = np.atleast_2d(np.asarray(self.amplitudes, dtype=complex))
        wid = np.atleast_1d(np.asarray(self.widths, dtype=complex))
        cen = np.atleast_2d(np.asarray(self.centers, dtype=float))
        if not (amp.shape[0] == wid.shape[0] == cen.shape[0] >= 1):
            raise ValueError(
                f"term counts disagree: {amp.shape[0]} amplitudes, "
                f"{wid.shape[0]} widths, {cen.shape[0]} centers"
            )
        if np.any(wid.real <= 0):
            raise ValueError("every width must have positive real part")
        for arr in (amp, wid, cen):
            arr.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)
        object.__setattr__(self, "widths", wid)
        object.__setattr__(self, "centers", cen)

    @property
    def terms(self) -> int:
        return self.widths.shape[0]

    @property
    def n(self) -> int:
        return self.centers.shape[1]

    @property
    def m(self) -> int:
        return self.amplitudes.shape[1]

    def __call__(self, points) -> np.ndarray:
        x = np.asarray(points, dtype=float)
        out = np.zeros(x.shape[:-1] + (self.m,), dtype=complex)
        for c, a, mu in zip(self.amplitudes, self.widths, self.centers):
            sq = np.sum((x - mu) ** 2, axis=-1)
            out = out + np.exp(-a * sq)[..., np.newaxis] * c
        return out

    def evolved(self, zeta) -> "GaussianMixture":
        """The exact evolution of the mixture at time ``zeta``.

        Convolving the kernel with ``c e^{-a |x-mu|^2}`` gives
        ``c (1+4 a zeta)^{-n/2} e^{-a |x-mu|^2 / (1+4 a zeta)}`` (principal
        branch; ``1+4 a zeta`` never meets the closed negative real axis when
        both ``a`` and ``zeta`` lie in the right half-plane).
        """
        ct = as_time(zeta)
        if ct.is_zero:
            return self
        denom = 1.0 + 4.0 * self.widths * ct.value
        amp = self.amplitudes * (denom ** (-self.n / 2.0))[:, np.newaxis]
        return GaussianMixture(amp, self.widths / denom, self.centers)

    def sampled(self, grid: Grid) -> Field:
        if grid.n != self.n:
            raise ValueError(f"mixture is {self.n}-dimensional, grid is {grid.n}-dimensional")
        return sample(grid, self)


def random_gaussian_mixture(
    n: int,
    m: int = 1,
    terms: int = 3,
    rng=None,
    center_box: float = 2.0,
    width_range: tuple = (1.0, 2.0),
) -> GaussianMixture:
    """Draw a seeded random mixture that decays fast away from the origin.

    Centers are uniform in ``[-center_box, center_box]^n`` and widths uniform
    in ``width_range``, so with the defaults every term is below 1e-12 within
    distance 6 of the centers; amplitudes are standard complex Gaussians.
    Pass an integer or a generator as ``rng`` for reproducibility.
    """
    rng = np.random.default_rng(rng)
    if terms < 1:
        raise ValueError(f"need at least one term, got {terms}")
    amp = (rng.standard_normal((terms, m)) + 1j * rng.standard_normal((terms, m))) / np.sqrt(2.0)
    wid = rng.uniform(width_range[0], width_range[1], size=terms)
    cen = rng.uniform(-center_box, center_box, size=(terms, n))
    return GaussianMixture(amp.astype(complex), wid.astype(complex), cen)


def boundary_max(f: Field) -> float:
    """Largest pointwise magnitude on the outermost lattice layer.

    Fields meant for interior-window comparisons should keep this below
    about 1e-12 so zero-fill and periodic wrap artifacts stay negligible.
    """
    g = f.grid
    mask = np.ones(g.shape, dtype=bool)
    mask[(slice(1, g.N - 1),) * g.n] = False
    mag = np.sqrt(np.sum(np.abs(f.values) ** 2, axis=-1))
    return float(mag[mask].max())


def _sqnorm(points: np.ndarray) -> np.ndarray:
    return np.sum(np.asarray(points, dtype=float) ** 2, axis=-1)


# named analytic rules for configuration files and the command line; each maps
# a point array (..., n) to scalar values (...)
FIELD_RULES = {
    "constant": lambda X: np.ones(np.asarray(X).shape[:-1], dtype=complex),
    "gaussian": lambda X: np.exp(-_sqnorm(X)),
    "wide_gaussian": lambda X: np.exp(-_sqnorm(X) / 4.0),
    "modulated_gaussian": lambda X: np.cos(3.0 * np.asarray(X, float)[..., 0]) * np.exp(-_sqnorm(X)),
    "cosine": lambda X: np.cos(np.asarray(X, float)[..., 0]),
}


def field_rule(name: str):
    """Look up a named analytic field rule."""
    try:
        return FIELD_RULES[name]
    except KeyError:
        known = ", ".join(sorted(FIELD_RULES))
        raise ValueError(f"unknown field rule {name!r}; known rules: {known}") from None
