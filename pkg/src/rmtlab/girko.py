"""Distribution of solutions of random linear systems B z = b - X u.

For a rotationally invariant joint ensemble over the coefficients and the
inhomogeneity, the solution vector z follows an m-dimensional Cauchy law of
width beta = sqrt(1 + u^T u), independently of the radial profile.  For
systems with i.i.d. stable entries (the classical setting), the single
component law is available by quadrature; only the closed-form exponents
alpha = 1 (Cauchy entries) and alpha = 2 (normal entries) are supported,
and they bracket the rotationally invariant result with exact oracles.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from . import densities, ensembles, matcore

QUAD_ABS_TOL = 1e-10
QUAD_ERR_CAP = 1e-8


class QuadratureFailure(RuntimeError):
    """Adaptive quadrature did not reach the requested accuracy."""


@dataclass(frozen=True)
class LinearSystemSpec:
    """An ensemble of m linear equations in m unknowns with n parameters.

    The joint law of (A, b) is radial in tr A^T A + b^T b; u holds the n
    fixed parameter values multiplying the non-unknown columns.
    """

    m: int
    n: int
    u: tuple[float, ...]
    radial: ensembles.RadialLaw = ensembles.GaussianEntries()

    def __init__(self, m, n, u=(), radial=ensembles.GaussianEntries()):
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "u", tuple(float(x) for x in u))
        object.__setattr__(self, "radial", radial)
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if len(self.u) != self.n:
            raise ValueError(f"u has {len(self.u)} entries, expected n = {self.n}")


@dataclass(frozen=True)
class StableLaw:
    """Symmetric stable law with characteristic function exp(-c |t|^alpha).

    Only the closed-form members are accepted: alpha = 2 is the normal law
    of variance 2c and alpha = 1 the Cauchy law of scale c.  The default
    scale c = 1/2 makes the alpha = 2 entries unit variance.
    """

    alpha: int
    c: float = 0.5

    def __post_init__(self):
        if self.alpha not in (1, 2):
            raise ValueError(f"only alpha in {{1, 2}} has a closed-form density, got {self.alpha}")
        if not self.c > 0:
            raise ValueError(f"scale must be positive, got {self.c}")

    def pdf(self, x: float) -> float:
        if self.alpha == 2:
            var = 2.0 * self.c
            return math.exp(-x * x / (2.0 * var)) / math.sqrt(2.0 * math.pi * var)
        return self.c / (math.pi * (x * x + self.c * self.c))

    def cdf(self, x: float) -> float:
        if self.alpha == 2:
            return 0.5 * math.erfc(-x / math.sqrt(4.0 * self.c))
        return 0.5 + math.atan2(x, self.c) / math.pi

    def sample(self, size, rng: np.random.Generator) -> np.ndarray:
        if self.alpha == 2:
            return rng.standard_normal(size) * math.sqrt(2.0 * self.c)
        return self.c * np.tan(math.pi * (rng.random(size) - 0.5))


def beta_euclidean(u) -> float:
    """Width of the solution law over a rotationally invariant ensemble."""
    u = np.asarray(u, dtype=float)
    return math.sqrt(1.0 + float(u @ u))


def beta_alpha(u, alpha: float) -> float:
    """Width (1 + sum |u_p|^alpha)^(1/alpha) for i.i.d. stable entries."""
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"alpha must lie in (0, 2], got {alpha}")
    u = np.asarray(u, dtype=float)
    return float((1.0 + np.sum(np.abs(u) ** alpha)) ** (1.0 / alpha))


def girko_logdensity(z, u) -> float:
    """Log density of the solution vector z given the parameter vector u.

    This is the m-dimensional Cauchy law of width beta_euclidean(u); it
    depends on z and u only through z^T z and u^T u.
    """
    return densities.log_mdim_cauchy(z, beta_euclidean(u))


def ratio_logdensity(r: float) -> float:
    """Log density of a ratio z_i / z_j of two solution components."""
    return -math.log(math.pi) - math.log1p(r * r)


def sample_solution(
    spec: LinearSystemSpec,
    rng: np.random.Generator,
    max_rejects: int = 100,
) -> tuple[np.ndarray, int]:
    """Draw one solution z of B z = b - X u for a fresh (A, b) draw.

    Near-singular B draws are rejected and redrawn, as in sample_z; the
    rejection count is returned.
    """
    u = np.asarray(spec.u, dtype=float)
    rejects = 0
    while True:
        A, b = ensembles.sample_system(spec.m, spec.n, spec.radial, rng)
        B = A[:, : spec.m]
        X = A[:, spec.m:]
        rhs = b - X @ u
        try:
            factors = matcore.lu_factor(B)
        except matcore.SingularMatrix:
            factors = None
        if factors is not None and not factors.near_singular:
            return matcore.solve_multi(B, rhs, factors=factors), rejects
        rejects += 1
        if rejects >= max_rejects:
            raise ensembles.ResampleLimit(f"{rejects} consecutive near-singular draws")


def sample_stable_system(
    m: int,
    n: int,
    u,
    law: StableLaw,
    rng: np.random.Generator,
    max_rejects: int = 100,
) -> tuple[np.ndarray, int]:
    """Draw one solution z of B z = b - X u with i.i.d. stable entries."""
    u = np.asarray(u, dtype=float)
    if u.size != n:
        raise ValueError(f"u has {u.size} entries, expected n = {n}")
    rejects = 0
    while True:
        A = law.sample((m, m + n), rng)
        b = law.sample(m, rng)
        B = A[:, :m]
        rhs = b - A[:, m:] @ u
        try:
            factors = matcore.lu_factor(B)
        except matcore.SingularMatrix:
            factors = None
        if factors is not None and not factors.near_singular:
            return matcore.solve_multi(B, rhs, factors=factors), rejects
        rejects += 1
        if rejects >= max_rejects:
            raise ensembles.ResampleLimit(f"{rejects} consecutive near-singular draws")


def _quad_checked(f, lo, hi, what: str, points=None) -> float:
    with warnings.catch_warnings():
        # the error estimate is checked explicitly below
        warnings.simplefilter("ignore", IntegrationWarning)
        value, err = quad(f, lo, hi, epsabs=QUAD_ABS_TOL, limit=500, points=points)
    if not math.isfinite(value) or err > QUAD_ERR_CAP:
        raise QuadratureFailure(f"{what}: estimated error {err:.2e}")
    return value


def _feature_points(zeta: float, beta: float) -> list[float]:
    # the integrand varies fastest where r*|zeta|/beta ~ 1; hand those
    # scales to the adaptive subdivision as explicit breakpoints
    pts = {math.atan(1.0)}
    if zeta != 0.0:
        pts.add(math.atan(beta / abs(zeta)))
        pts.add(math.atan(abs(zeta) / beta))
    return sorted(pts)


def girko_stable_density(zeta: float, law: StableLaw, beta: float) -> float:
    """Density of one solution component for i.i.d. stable entries.

    p(zeta; alpha, beta) = (2/beta) * int_0^inf r rho(r zeta / beta) rho(r) dr
    with rho the entry density, evaluated by adaptive quadrature after the
    compactifying substitution r = tan(theta).  For alpha = 1 the density
    has an integrable logarithmic singularity at zeta = 0, where the
    integral itself diverges and QuadratureFailure is raised.
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")

    def integrand(theta: float) -> float:
        r = math.tan(theta)
        sec2 = 1.0 + r * r
        return sec2 * r * law.pdf(r * zeta / beta) * law.pdf(r)

    value = _quad_checked(integrand, 0.0, 0.5 * math.pi, f"stable density at {zeta}",
                          points=_feature_points(zeta, beta))
    return 2.0 / beta * value


def girko_stable_cdf(zeta: float, law: StableLaw, beta: float) -> float:
    """CDF matching girko_stable_density, as a single quadrature.

    Integrating the defining double integral in the other order gives
    CDF(zeta) = 2 int_0^inf rho(r) F(r zeta / beta) dr with F the entry
    CDF; unlike the density this is smooth in zeta everywhere.
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")

    def integrand(theta: float) -> float:
        r = math.tan(theta)
        sec2 = 1.0 + r * r
        return sec2 * law.pdf(r) * law.cdf(r * zeta / beta)

    value = _quad_checked(integrand, 0.0, 0.5 * math.pi, f"stable cdf at {zeta}",
                          points=_feature_points(zeta, beta))
    return min(1.0, max(0.0, 2.0 * value))
