"""Samplers for rotationally invariant matrix ensembles.

A density of the form f(tr A A^T) is realized exactly by the radial-angular
construction: draw a radius r from the law induced by f in the total real
dimension d, draw an independent direction uniformly on the unit sphere
S^{d-1}, and set A = r * direction reshaped to m x (m+n).  Choosing the
radius law is therefore the only degree of freedom, which makes universality
experiments (same statistic under wildly different radial profiles) trivial
to configure.

Four radial laws are provided, deliberately dissimilar: a point mass on a
shell, the uniform ball, the law that reproduces i.i.d. standard normal
entries, and a bimodal two-shell mixture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import matcore

_MASK64 = (1 << 64) - 1


class InvalidLaw(ValueError):
    """Radial law parameters do not define a probability law."""


class BadPartition(ValueError):
    """Column partition indices are duplicated or out of range."""


class ResampleLimit(RuntimeError):
    """Too many consecutive near-singular draws; the ensemble is degenerate."""


@dataclass(frozen=True)
class GaussianEntries:
    """Radius law making all matrix entries i.i.d. standard normal."""


@dataclass(frozen=True)
class FixedShell:
    """Point mass: the sampled matrix always has Frobenius norm r0."""

    r0: float

    def __post_init__(self):
        if not self.r0 > 0:
            raise InvalidLaw(f"shell radius must be positive, got {self.r0}")


@dataclass(frozen=True)
class UniformBall:
    """Matrix uniform in the Frobenius ball of radius R."""

    R: float

    def __post_init__(self):
        if not self.R > 0:
            raise InvalidLaw(f"ball radius must be positive, got {self.R}")


@dataclass(frozen=True)
class TwoShellMixture:
    """Radius r1 with probability w, else r2."""

    r1: float
    r2: float
    w: float

    def __post_init__(self):
        if not (self.r1 > 0 and self.r2 > 0):
            raise InvalidLaw("shell radii must be positive")
        if not 0.0 < self.w < 1.0:
            raise InvalidLaw(f"mixture weight must lie in (0,1), got {self.w}")


RadialLaw = GaussianEntries | FixedShell | UniformBall | TwoShellMixture


@dataclass(frozen=True)
class EnsembleSpec:
    """Dimensions, number field, and radial profile of the parent ensemble."""

    m: int
    n: int
    field: str = "real"
    radial: RadialLaw = GaussianEntries()

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.field not in ("real", "complex"):
            raise ValueError(f"field must be 'real' or 'complex', got {self.field!r}")

    @property
    def dim(self) -> int:
        """Total real dimension of the flattened matrix."""
        d = self.m * (self.m + self.n)
        return 2 * d if self.field == "complex" else d


@dataclass(frozen=True)
class PartitionSpec:
    """Which columns (1-based) of A form the square block B.

    The remaining columns form X in ascending order.
    """

    b_columns: tuple[int, ...]

    def __init__(self, b_columns):
        object.__setattr__(self, "b_columns", tuple(int(c) for c in b_columns))

    @staticmethod
    def leading(m: int) -> "PartitionSpec":
        return PartitionSpec(range(1, m + 1))


@dataclass(frozen=True)
class RngStream:
    """Reproducible, splittable random stream.

    The (seed, stream_id) pair keys a counter-based Philox generator, so
    identical pairs reproduce identical sequences and distinct stream_ids
    give statistically independent streams without any coordination.
    """

    seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        key = np.array([self.seed & _MASK64, self.stream_id & _MASK64], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


def sample_unit_direction(d: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform point on the unit sphere in d dimensions."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    while True:
        v = rng.standard_normal(d)
        norm = np.sqrt(v @ v)
        if norm > 0.0:  # probability-zero guard
            return v / norm


def sample_radius(law: RadialLaw, d: int, rng: np.random.Generator) -> float:
    """Draw the Frobenius radius for the given law in total dimension d."""
    if isinstance(law, GaussianEntries):
        return float(np.sqrt(rng.chisquare(d)))
    if isinstance(law, FixedShell):
        return law.r0
    if isinstance(law, UniformBall):
        return float(law.R * rng.random() ** (1.0 / d))
    if isinstance(law, TwoShellMixture):
        return law.r1 if rng.random() < law.w else law.r2
    raise InvalidLaw(f"unknown radial law {law!r}")


def sample_matrix(spec: EnsembleSpec, rng: np.random.Generator) -> np.ndarray:
    """Draw A = radius * direction, reshaped to m x (m+n).

    For the complex field the direction lives on the sphere of dimension
    2m(m+n) and consecutive coordinates become real and imaginary parts.
    """
    d = spec.dim
    r = sample_radius(spec.radial, d, rng)
    while True:
        v = rng.standard_normal(d)
        norm = math.sqrt(v @ v)
        if norm > 0.0:
            break
    v *= r / norm
    if spec.field == "complex":
        v = v[0::2] + 1j * v[1::2]
    return v.reshape(spec.m, spec.m + spec.n)


@lru_cache(maxsize=None)
def _partition_indices(cols: tuple[int, ...], m: int, total: int) -> tuple[np.ndarray, np.ndarray]:
    if len(cols) != m:
        raise BadPartition(f"need {m} B-columns, got {len(cols)}")
    if len(set(cols)) != len(cols):
        raise BadPartition(f"duplicate column index in {cols}")
    if any(c < 1 or c > total for c in cols):
        raise BadPartition(f"column index out of range 1..{total} in {cols}")
    chosen = set(cols)
    b_idx = np.array([c - 1 for c in cols])
    x_idx = np.array([j for j in range(total) if j + 1 not in chosen], dtype=int)
    return b_idx, x_idx


def partition(A, p: PartitionSpec) -> tuple[np.ndarray, np.ndarray]:
    """Split the columns of A into (B, X) according to p.

    B collects p.b_columns in the given order; X collects the remaining
    columns in ascending order.  Raises BadPartition on duplicate or
    out-of-range indices, or when the count differs from the row count.
    """
    A = np.asarray(A)
    m, total = A.shape
    b_idx, x_idx = _partition_indices(p.b_columns, m, total)
    return A[:, b_idx], A[:, x_idx]


def sample_z(
    spec: EnsembleSpec,
    p: PartitionSpec | None = None,
    rng: np.random.Generator | None = None,
    max_rejects: int = 100,
) -> tuple[np.ndarray, int]:
    """Draw Z solving B @ Z = X for one ensemble draw A -> (B, X).

    Draws whose B block is numerically singular (per the matcore pivot
    threshold) are rejected and redrawn; the number of rejections is
    returned alongside Z.  Raises ResampleLimit after max_rejects
    consecutive rejections.
    """
    if spec.n < 1:
        raise ValueError("sample_z needs n >= 1")
    if p is None:
        p = PartitionSpec.leading(spec.m)
    if rng is None:
        raise ValueError("an explicit numpy Generator is required")
    rejects = 0
    while True:
        A = sample_matrix(spec, rng)
        B, X = partition(A, p)
        try:
            factors = matcore.lu_factor(B)
        except matcore.SingularMatrix:
            factors = None
        if factors is not None and not factors.near_singular:
            return matcore.solve_multi(B, X, factors=factors), rejects
        rejects += 1
        if rejects >= max_rejects:
            raise ResampleLimit(f"{rejects} consecutive near-singular draws")


def sample_system(
    m: int,
    n: int,
    radial: RadialLaw,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """Draw the coefficient matrix and inhomogeneity (A, b) jointly.

    The concatenated vector (A, b) is radius times a uniform direction in
    dimension m*(m+n+1), so the radial law applies to tr A^T A + b^T b.
    Real field only.
    """
    d = m * (m + n + 1)
    r = sample_radius(radial, d, rng)
    v = r * sample_unit_direction(d, rng)
    A = v[: m * (m + n)].reshape(m, m + n)
    b = v[m * (m + n):]
    return A, b
