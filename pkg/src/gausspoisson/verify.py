"""Property suites: residual checks with anchors, tolerances, and reports.

Each check turns one identity of the underlying theory into a nonnegative
residual and compares it against a configured tolerance.  A report is a
deterministic list of check results (fixed registration order, seeded
randomness), serializable as CSV and as readable text.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernel as kernelmod
from .fields import GaussianMixture, field_rule, random_gaussian_mixture
from .generator import (
    classical_residual,
    difference_quotient_residual,
    generator_residuals,
    mild_identity_residual,
)
from .grid_field import Field, Grid, make_grid, sample
from .kernel import as_time
from .semigroup import Method, apply, apply_dzeta, operator_bound, trajectory
from .weights import SpaceSpec, weight_inequality_check, weighted_norm

__all__ = [
    "parse_complex",
    "format_complex",
    "SuiteConfig",
    "CheckResult",
    "VerificationReport",
    "ContinuityEntry",
    "HolomorphyResiduals",
    "semigroup_law_residual",
    "continuity_scan",
    "holomorphy_residuals",
    "contour_residual",
    "run_suite",
    "CHECK_GROUPS",
]


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi`` or ``a-bi`` (no spaces, trailing ``i``)."""
    s = text.strip()
    if not s or any(c.isspace() for c in s):
        raise ValueError(f"malformed complex number {text!r}")
    try:
        return complex(s.replace("i", "j")) if s.endswith("i") else complex(float(s))
    except ValueError:
        raise ValueError(f"malformed complex number {text!r}") from None


def format_complex(z: complex) -> str:
    """Inverse of :func:`parse_complex`, round-trip exact; real numbers print
    without an imaginary part."""
    z = complex(z)
    if z.imag == 0:
        return format(z.real, ".17g")
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _float_list(text: str) -> tuple:
    return tuple(float(part) for part in text.split(",") if part.strip())


def _complex_list(text: str) -> tuple:
    return tuple(parse_complex(part) for part in text.split(",") if part.strip())


DEFAULT_ZETAS = (
    0.25,
    1.0,
    4.0,
    complex(np.exp(1j * np.pi / 4)),
    complex(np.exp(-1j * np.pi / 4)),
    complex(0.5 * np.exp(1j * np.pi / 3)),
)

DEFAULT_LAW_PAIRS = (
    (0.3, 0.7),
    (complex(0.5 * np.exp(1j * np.pi / 4)), complex(0.5 * np.exp(-1j * np.pi / 4))),
    (complex(0.2 * np.exp(1j * np.pi / 6)), 0.5),
)

DEFAULT_TOLERANCES = {
    "weights": 1e-12,
    "kernel_mass_real": 1e-8,
    "kernel_mass_complex": 1e-6,
    "fourier_symbol": 1e-4,
    "semigroup_law": 1e-5,
    "path_agreement": 1e-5,
    "gaussian_closed_form": 1e-6,
    "kernel_reproduction": 1e-6,
    "continuity_final": 1e-3,
    "continuity_monotone": 1e-9,
    "holomorphy_ratio": 0.5,
    "contour": 1e-8,
    "generator": 1e-4,
    "quotient_order": 1e-9,
    "mild": 1e-4,
    "mild_refinement": 1e-9,
    "operator_bound": 1e-10,
    "classical_refinement": 1e-9,
}

CHECK_GROUPS = (
    "weights",
    "kernel-mass",
    "fourier-symbol",
    "semigroup-law",
    "path-agreement",
    "gaussian-closed-form",
    "kernel-reproduction",
    "continuity",
    "holomorphy",
    "contour",
    "generator",
    "quotient-order",
    "mild",
    "operator-bound",
    "classical",
)


@dataclass(frozen=True)
class SuiteConfig:
    """Full configuration of a verification run.

    ``checks`` is either None (run everything) or a tuple of group names from
    :data:`CHECK_GROUPS`; an empty tuple yields an empty (passing) report.
    ``tolerances`` overrides entries of the documented defaults.
    """

    n: int = 1
    L: float = 12.0
    N: int = 1025
    space: SpaceSpec = SpaceSpec.make(0)
    alpha: float = 2.0 * math.pi / 5
    margin: float = 0.25
    seed: int = 7
    zetas: tuple = DEFAULT_ZETAS
    law_pairs: tuple = DEFAULT_LAW_PAIRS
    rays: tuple = (-math.pi / 4, 0.0, math.pi / 4)
    radii: tuple = tuple(2.0**-j for j in range(1, 11))
    rule: str = "gaussian"
    continuity_rule: str = "wide_gaussian"
    tolerances: dict = dc_field(default_factory=dict)
    checks: tuple | None = None

    def __post_init__(self):
        if not 0 < self.alpha < math.pi / 2:
            raise ValueError(f"sector angle must lie in (0, pi/2), got {self.alpha}")
        for z in self.zetas:
            ct = as_time(z)
            if not ct.is_zero and ct.value.imag != 0 and not ct.in_sector(self.alpha):
                raise ValueError(f"zeta sample {z} lies outside the sector of angle {self.alpha}")
        if self.checks is not None:
            unknown = [c for c in self.checks if c not in CHECK_GROUPS]
            if unknown:
                raise ValueError(f"unknown check groups {unknown}; known: {list(CHECK_GROUPS)}")
        unknown_tols = [key for key in self.tolerances if key not in DEFAULT_TOLERANCES]
        if unknown_tols:
            raise ValueError(
                f"unknown tolerance names {unknown_tols}; known: {sorted(DEFAULT_TOLERANCES)}"
            )

    @property
    def grid(self) -> Grid:
        return make_grid(self.n, self.L, self.N)

    def tol(self, name: str) -> float:
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))

    @staticmethod
    def from_mapping(mapping: dict) -> "SuiteConfig":
        """Build a config from flat string key-value pairs.

        Recognized keys: ``grid.n``, ``grid.L``, ``grid.N``, ``space.k``,
        ``space.kind``, ``space.p``, ``sector.alpha``, ``seed``, ``margin``,
        ``rule``, ``continuity.rule``, ``zetas``, ``rays``, ``radii``,
        ``checks``, and ``tol.<name>``.  Keys under ``evolve.`` / ``table.`` /
        ``out`` belong to the command-line layer and are ignored here;
        anything else is an error.
        """
        kwargs = {}
        space_kw = {"k": 0.0, "kind": "BUC", "p": None}
        tolerances = {}
        for key, raw in mapping.items():
            value = raw.strip()
            if key.startswith(("evolve.", "table.")) or key == "out":
                continue
            if key == "grid.n":
                kwargs["n"] = int(value)
            elif key == "grid.L":
                kwargs["L"] = float(value)
            elif key == "grid.N":
                kwargs["N"] = int(value)
            elif key == "space.k":
                space_kw["k"] = float(value)
            elif key == "space.kind":
                space_kw["kind"] = value
            elif key == "space.p":
                space_kw["p"] = None if value.lower() in ("", "none") else float(value)
            elif key == "sector.alpha":
                kwargs["alpha"] = float(value)
            elif key == "seed":
                kwargs["seed"] = int(value)
            elif key == "margin":
                kwargs["margin"] = float(value)
            elif key == "rule":
                kwargs["rule"] = value
            elif key == "continuity.rule":
                kwargs["continuity_rule"] = value
            elif key == "zetas":
                kwargs["zetas"] = _complex_list(value)
            elif key == "rays":
                kwargs["rays"] = _float_list(value)
            elif key == "radii":
                kwargs["radii"] = _float_list(value)
            elif key == "checks":
                kwargs["checks"] = tuple(c.strip() for c in value.split(",") if c.strip())
            elif key.startswith("tol."):
                tolerances[key[len("tol.") :]] = float(value)
            else:
                raise ValueError(f"unknown configuration key {key!r}")
        if tolerances:
            kwargs["tolerances"] = tolerances
        kwargs["space"] = SpaceSpec.make(space_kw["k"], space_kw["kind"], space_kw["p"])
        return SuiteConfig(**kwargs)

    def to_mapping(self) -> dict:
        """Serialize back to the flat key-value form (inverse of from_mapping)."""
        out = {
            "grid.n": str(self.n),
            "grid.L": format(self.L, ".17g"),
            "grid.N": str(self.N),
            "space.k": format(self.space.k, ".17g"),
            "space.kind": self.space.kind.value,
            "sector.alpha": format(self.alpha, ".17g"),
            "seed": str(self.seed),
            "margin": format(self.margin, ".17g"),
            "rule": self.rule,
            "continuity.rule": self.continuity_rule,
            "zetas": ",".join(format_complex(z) for z in self.zetas),
            "rays": ",".join(format(r, ".17g") for r in self.rays),
            "radii": ",".join(format(r, ".17g") for r in self.radii),
        }
        if self.space.p is not None:
            out["space.p"] = format(self.space.p, ".17g")
        if self.checks is not None:
            out["checks"] = ",".join(self.checks)
        for name, value in sorted(self.tolerances.items()):
            out[f"tol.{name}"] = format(value, ".17g")
        return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    residual: float
    tolerance: float
    passed: bool
    meta: dict = dc_field(default_factory=dict, compare=False, repr=False)


@dataclass(frozen=True)
class VerificationReport:
    results: tuple

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_csv_text(self) -> str:
        lines = ["check,anchor,residual,tolerance,pass"]
        for r in self.results:
            lines.append(
                f"{r.name},{r.anchor},{format(r.residual, '.17g')},"
                f"{format(r.tolerance, '.17g')},{'true' if r.passed else 'false'}"
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        if not self.results:
            return "no checks enabled\n"
        width = max(len(r.name) for r in self.results)
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{status}  {r.name:<{width}}  residual {r.residual:.6e}"
                f"  tol {r.tolerance:.6e}  [{r.anchor}]"
            )
        n_pass = sum(1 for r in self.results if r.passed)
        lines.append(f"{n_pass}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(self.to_csv_text())

    def write_text(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(self.to_text())


# -- check operations ----------------------------------------------------------


def _diff_norm(a: Field, b: Field, s: SpaceSpec, margin: float) -> float:
    return weighted_norm(a.with_values(a.values - b.values), s, margin=margin)


def semigroup_law_residual(zeta1, zeta2, f: Field, s: SpaceSpec, margin: float = 0.25, method=None) -> float:
    """Interior-window weighted-norm residual of the composition law:
    evolving by ``zeta1 + zeta2`` in one step versus two."""
    z1, z2 = as_time(zeta1), as_time(zeta2)
    one_step = apply(z1.value + z2.value, f, method=method)
    two_step = apply(z1, apply(z2, f, method=method), method=method)
    return _diff_norm(one_step, two_step, s, margin)


@dataclass(frozen=True)
class ContinuityEntry:
    ray: float
    radius: float
    residual: float


def continuity_scan(f: Field, s: SpaceSpec, alpha: float, rays, radii, margin: float = 0.25, method=None) -> list:
    """Residuals of ``G(r e^{i ray}) f - f`` for each ray and shrinking radius.

    Rows are ordered by (ray, radius in the given order); every ray must lie
    strictly inside the sector of angle ``alpha``.  Strong continuity at zero
    time predicts the residuals to fall to 0 along every ray.
    """
    if not 0 < alpha < math.pi / 2:
        raise ValueError(f"sector angle must lie in (0, pi/2), got {alpha}")
    radii = tuple(float(r) for r in radii)
    if not radii or any(r <= 0 for r in radii):
        raise ValueError("radii must be positive")
    if any(b >= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly decreasing")
    entries = []
    for ray in rays:
        if not abs(ray) < alpha:
            raise ValueError(f"ray angle {ray} is outside the sector of angle {alpha}")
        for r in radii:
            zeta = r * complex(math.cos(ray), math.sin(ray))
            residual = _diff_norm(apply(zeta, f, method=method), f, s, margin)
            entries.append(ContinuityEntry(float(ray), r, residual))
    return entries


@dataclass(frozen=True)
class HolomorphyResiduals:
    """Discrete complex-differentiability measures of ``zeta -> G(zeta)f``.

    ``cauchy_riemann``: weighted norm of the central-difference approximation
    of the conjugate-derivative (must vanish for a holomorphic map).
    ``derivative_match``: distance of the real-direction difference quotient
    from the closed-form derivative operator.
    """

    cauchy_riemann: float
    derivative_match: float


def holomorphy_residuals(
    f: Field,
    zeta,
    h: float,
    s: SpaceSpec,
    margin: float = 0.25,
    method=Method.QUADRATURE,
) -> HolomorphyResiduals:
    ct = as_time(zeta)
    if ct.is_zero:
        raise ValueError("holomorphy residuals need Re zeta > 0")
    if not 0 < h < ct.value.real:
        raise ValueError(f"step must satisfy 0 < h < Re zeta, got h={h}, zeta={ct.value}")
    z = ct.value
    u_re_plus = apply(z + h, f, method=method)
    u_re_minus = apply(z - h, f, method=method)
    u_im_plus = apply(z + 1j * h, f, method=method)
    u_im_minus = apply(z - 1j * h, f, method=method)
    d_re = (u_re_plus.values - u_re_minus.values) / (2.0 * h)
    d_im = (u_im_plus.values - u_im_minus.values) / (2.0 * h)
    conjugate = f.with_values(0.5 * (d_re + 1j * d_im))
    zero = f.with_values(np.zeros_like(f.values))
    deriv = apply_dzeta(z, f)
    quotient = f.with_values(d_re)
    return HolomorphyResiduals(
        cauchy_riemann=_diff_norm(conjugate, zero, s, margin),
        derivative_match=_diff_norm(quotient, deriv, s, margin),
    )


def contour_residual(
    f: Field,
    center,
    radius: float,
    m: int,
    s: SpaceSpec,
    margin: float = 0.25,
    method=Method.QUADRATURE,
) -> float:
    """Weighted norm of the trapezoid closed-contour integral of ``G(zeta)f``.

    The circle must stay inside the right half-plane.  Holomorphy makes the
    exact integral vanish; the trapezoid rule on an analytic periodic
    integrand converges spectrally in ``m``, so this residual falls to
    rounding level already at moderate node counts.
    """
    c = complex(center.value if hasattr(center, "value") else center)
    if m < 8:
        raise ValueError(f"need at least 8 contour nodes, got {m}")
    if not radius > 0 or c.real - radius <= 0:
        raise ValueError(f"disk of radius {radius} around {c} leaves the right half-plane")
    acc = np.zeros_like(f.values)
    for j in range(m):
        theta = 2.0 * math.pi * j / m
        direction = complex(math.cos(theta), math.sin(theta))
        u = apply(c + radius * direction, f, method=method)
        acc = acc + u.values * (1j * radius * direction)
    acc = acc * (2.0 * math.pi / m)
    return weighted_norm(f.with_values(acc), s, margin=margin)


# -- the aggregated suite --------------------------------------------------------


def _fmt_zeta(z) -> str:
    return format_complex(complex(z))


def _relative(residual: float, scale: float) -> float:
    return residual / scale if scale > 0 else residual


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Run the configured check groups and assemble the deterministic report.

    Checks run in fixed registration order with seeded randomness, so two
    runs from identical configurations produce byte-identical reports.  A
    crashing check is recorded as failed (residual ``inf``, error message in
    the metadata) and the suite continues.
    """
    grid = cfg.grid
    s = cfg.space
    margin = cfg.margin
    registry = []

    def register(group: str, name: str, anchor: str, tol: float, thunk) -> None:
        if cfg.checks is None or group in cfg.checks:
            registry.append((name, anchor, tol, thunk))

    # weight inequalities over a seeded point cloud
    def weights_check():
        rng = np.random.default_rng([cfg.seed, 0])
        worst = math.inf
        for k in (0.0, 1.0, 2.0, 3.5):
            for _ in range(200):
                x = rng.normal(0.0, 3.0, size=cfg.n)
                y = rng.normal(0.0, 3.0, size=cfg.n)
                worst = min(worst, weight_inequality_check(k, x, y).min())
        return max(0.0, -worst), {"pairs": 800}

    register(
        "weights",
        "weights[pointwise]",
        "pointwise weight inequalities",
        cfg.tol("weights"),
        weights_check,
    )

    # kernel mass on per-time grids sized from the tail bound
    for z in cfg.zetas:
        zc = complex(z)
        real = zc.imag == 0
        tol = cfg.tol("kernel_mass_real" if real else "kernel_mass_complex")

        def mass_check(zc=zc):
            g = kernelmod.grid_for_time(zc, cfg.n)
            mass = kernelmod.kernel_mass(zc, g)
            return abs(mass - 1.0), {"grid": (g.n, g.L, g.N)}

        register(
            "kernel-mass",
            f"kernel-mass[zeta={_fmt_zeta(zc)}]",
            "kernel unit mass",
            tol,
            mass_check,
        )

    # DFT of the sampled kernel against the symbol, low-frequency window
    for zc in (1.0, 1.0 + 1.0j):

        def fourier_check(zc=zc):
            return kernelmod.fourier_symbol_residual(zc, grid), {}

        register(
            "fourier-symbol",
            f"fourier-symbol[zeta={_fmt_zeta(zc)}]",
            "kernel Fourier symbol",
            cfg.tol("fourier_symbol"),
            fourier_check,
        )

    mixture = random_gaussian_mixture(cfg.n, m=1, terms=3, rng=np.random.default_rng([cfg.seed, 1]))
    mixture_field = mixture.sampled(grid)
    rule_field = sample(grid, field_rule(cfg.rule))

    # composition law, relative to the field norm
    for z1, z2 in cfg.law_pairs:
        for label, f in (("rule", rule_field), ("mixture", mixture_field)):

            def law_check(z1=z1, z2=z2, f=f):
                residual = semigroup_law_residual(z1, z2, f, s, margin=margin)
                return _relative(residual, weighted_norm(f, s, margin=margin)), {}

            register(
                "semigroup-law",
                f"semigroup-law[{_fmt_zeta(z1)};{_fmt_zeta(z2)};{label}]",
                "semigroup composition law",
                cfg.tol("semigroup_law"),
                law_check,
            )

    # quadrature vs spectral on the interior half-window
    for z in cfg.zetas:
        zc = complex(z)

        def path_check(zc=zc):
            a = apply(zc, mixture_field, method=Method.QUADRATURE)
            b = apply(zc, mixture_field, method=Method.SPECTRAL)
            residual = _diff_norm(a, b, s, 0.25)
            return _relative(residual, weighted_norm(mixture_field, s, margin=0.25)), {}

        register(
            "path-agreement",
            f"path-agreement[zeta={_fmt_zeta(zc)}]",
            "quadrature/spectral path agreement",
            cfg.tol("path_agreement"),
            path_check,
        )

    # closed-form Gaussian evolution
    unit_gaussian = GaussianMixture([[1.0]], [1.0], [[0.0] * cfg.n])
    gaussian_field = unit_gaussian.sampled(grid)
    for t in (0.1, 1.0, 5.0):

        def gaussian_check(t=t):
            evolved = apply(t, gaussian_field)
            exact = unit_gaussian.evolved(t).sampled(grid)
            return _diff_norm(evolved, exact, SpaceSpec.make(0), margin), {}

        register(
            "gaussian-closed-form",
            f"gaussian-closed-form[t={t:g}]",
            "closed-form Gaussian evolution",
            cfg.tol("gaussian_closed_form"),
            gaussian_check,
        )

    # evolving the kernel reproduces the kernel at the summed time
    def reproduction_check():
        f = kernelmod.sample_kernel(0.5, grid)
        evolved = apply(0.5, f)
        exact = kernelmod.sample_kernel(1.0, grid)
        return _diff_norm(evolved, exact, SpaceSpec.make(0), margin), {}

    register(
        "kernel-reproduction",
        "kernel-reproduction[s=0.5;t=0.5]",
        "kernel reproduces itself under evolution",
        cfg.tol("kernel_reproduction"),
        reproduction_check,
    )

    # strong continuity along sector rays
    continuity_field = sample(grid, field_rule(cfg.continuity_rule))

    def continuity_rows(ray):
        entries = continuity_scan(
            continuity_field, s, cfg.alpha, [ray], cfg.radii, margin=margin
        )
        return [e.residual for e in entries]

    for ray in cfg.rays:

        def final_check(ray=ray):
            residuals = continuity_rows(ray)
            return residuals[-1], {"radii": len(cfg.radii)}

        def monotone_check(ray=ray):
            residuals = continuity_rows(ray)
            worst = 0.0
            for earlier, later in zip(residuals, residuals[1:]):
                worst = max(worst, later - earlier)
            return max(0.0, worst), {}

        register(
            "continuity",
            f"continuity-final[ray={ray:g}]",
            "strong continuity at zero time",
            cfg.tol("continuity_final"),
            final_check,
        )
        register(
            "continuity",
            f"continuity-monotone[ray={ray:g}]",
            "strong continuity at zero time",
            cfg.tol("continuity_monotone"),
            monotone_check,
        )

    # holomorphy: second-order shrink of both residuals, vanishing contour
    def holomorphy_ratio(attr):
        coarse = holomorphy_residuals(gaussian_field, 1.0, 1e-2, s, margin=margin)
        fine = holomorphy_residuals(gaussian_field, 1.0, 5e-3, s, margin=margin)
        num, den = getattr(coarse, attr), getattr(fine, attr)
        ratio = num / den if den > 0 else 4.0
        return abs(ratio - 4.0), {"coarse": num, "fine": den}

    register(
        "holomorphy",
        "holomorphy-ratio[cauchy-riemann]",
        "holomorphy in the time parameter",
        cfg.tol("holomorphy_ratio"),
        lambda: holomorphy_ratio("cauchy_riemann"),
    )
    register(
        "holomorphy",
        "holomorphy-ratio[derivative]",
        "holomorphy in the time parameter",
        cfg.tol("holomorphy_ratio"),
        lambda: holomorphy_ratio("derivative_match"),
    )

    def contour_check():
        return contour_residual(gaussian_field, 1.0, 0.25, 64, s, margin=margin), {}

    register(
        "contour",
        "contour[center=1;radius=0.25;m=64]",
        "vanishing contour integral",
        cfg.tol("contour"),
        contour_check,
    )

    # generator identities at t = 0.5
    def generator_check(attr):
        res = generator_residuals(gaussian_field, 0.5, 1e-3, space=s, margin=margin)
        return getattr(res, attr), {}

    for attr in ("r1", "r2", "r3"):
        register(
            "generator",
            f"generator[{attr}]",
            "generator equals the Laplacian",
            cfg.tol("generator"),
            lambda attr=attr: generator_check(attr),
        )

    # first-order convergence of the difference quotient (ratio window)
    def quotient_check():
        steps = (1e-2, 5e-3, 2.5e-3)
        residuals = [
            difference_quotient_residual(gaussian_field, h, space=s, margin=margin)
            for h in steps
        ]
        violation = 0.0
        for a, b in zip(residuals, residuals[1:]):
            ratio = a / b if b > 0 else 2.0
            violation = max(violation, 1.5 - ratio, ratio - 2.5)
        return max(0.0, violation), {"residuals": residuals}

    register(
        "quotient-order",
        "quotient-order[h=1e-2..2.5e-3]",
        "difference quotient converges to the Laplacian",
        cfg.tol("quotient_order"),
        quotient_check,
    )

    # mild identity and its refinement behavior
    def mild_check():
        return mild_identity_residual(gaussian_field, 1.0, steps=256, space=s, margin=margin), {}

    def mild_refinement_check():
        coarse = mild_identity_residual(gaussian_field, 1.0, steps=256, space=s, margin=margin)
        fine = mild_identity_residual(gaussian_field, 1.0, steps=512, space=s, margin=margin)
        ratio = coarse / fine if fine > 0 else 2.0
        return max(0.0, 2.0 - ratio), {"coarse": coarse, "fine": fine}

    register(
        "mild",
        "mild[t=1;steps=256]",
        "mild solution identity",
        cfg.tol("mild"),
        mild_check,
    )
    register(
        "mild",
        "mild-refinement[steps=256->512]",
        "mild solution identity",
        cfg.tol("mild_refinement"),
        mild_refinement_check,
    )

    # weighted operator norm bound over seeded random fields
    for k in (0.0, 1.0, 2.0):
        for zc in (1.0, complex(np.exp(1j * np.pi / 4))):

            def bound_check(k=k, zc=zc):
                space_k = SpaceSpec.make(k, s.kind.value, s.p)
                bound = operator_bound(zc, k, grid)
                rng = np.random.default_rng([cfg.seed, 2, int(k), int(zc.imag != 0)])
                violation = 0.0
                for _ in range(100):
                    mix = random_gaussian_mixture(cfg.n, m=1, terms=3, rng=rng)
                    f = mix.sampled(grid)
                    lhs = weighted_norm(apply(zc, f, method=Method.QUADRATURE), space_k)
                    rhs = bound * weighted_norm(f, space_k) * (1.0 + 1e-8)
                    violation = max(violation, lhs - rhs)
                return max(0.0, violation), {"bound": bound}

            register(
                "operator-bound",
                f"operator-bound[k={k:g};zeta={_fmt_zeta(zc)}]",
                "weighted operator norm bound",
                cfg.tol("operator_bound"),
                bound_check,
            )

    # classical solutions: pointwise heat equation, refinement gain
    def classical_check():
        def residual(n_points, dt):
            g = make_grid(cfg.n, cfg.L, n_points)
            f = unit_gaussian.sampled(g)
            times = np.arange(0.5, 1.5 + dt / 2, dt)
            return classical_residual(trajectory(f, times), margin=margin)

        coarse = residual(cfg.N, 1e-2)
        fine = residual(2 * cfg.N - 1, 5e-3)
        ratio = coarse / fine if fine > 0 else 3.0
        return max(0.0, 3.0 - ratio), {"coarse": coarse, "fine": fine}

    register(
        "classical",
        "classical[gaussian;dt=1e-2]",
        "pointwise heat equation along trajectories",
        cfg.tol("classical_refinement"),
        classical_check,
    )

    results = []
    for name, anchor, tol, thunk in registry:
        try:
            residual, meta = thunk()
            residual = float(residual)
            passed = math.isfinite(residual) and residual <= tol
        except Exception as exc:  # a crashing check is a failed row, not a crashed suite
            residual = math.inf
            passed = False
            meta = {"error": repr(exc)}
        results.append(CheckResult(name, anchor, residual, tol, passed, meta))
    return VerificationReport(tuple(results))
