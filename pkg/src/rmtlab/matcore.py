"""Dense linear algebra kernels for small real and complex matrices.

The factorizations are written out explicitly instead of delegating to
LAPACK: matrices here are tiny (m up to ~50), the rejection samplers need
direct access to pivot magnitudes for their near-singularity test, and all
determinant work happens in log-domain where naive products would overflow
for moderate dimensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Relative pivot-ratio threshold below which a factorization is flagged as
# numerically singular.  Exact singularity has probability zero for the
# ensembles sampled here; the flag only guards degenerate draws.
NEAR_SINGULAR_RATIO = 1e-12


class SingularMatrix(ValueError):
    """An exact zero pivot column was met during elimination."""


class NotPositiveDefinite(ValueError):
    """A Cholesky pivot was not strictly positive."""


class ConvergenceFailure(RuntimeError):
    """An iterative kernel hit its sweep cap before reaching tolerance."""


def _as_matrix(a, name: str = "matrix") -> np.ndarray:
    m = np.asarray(a)
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} contains non-finite entries")
    dtype = np.complex128 if np.iscomplexobj(m) else np.float64
    return m.astype(dtype, copy=True)


def _as_square(a, name: str = "matrix") -> np.ndarray:
    m = _as_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class LuFactors:
    """Row-pivoted LU factorization: input[perm] == lower @ upper.

    Both triangles live packed in one matrix (unit diagonal of the lower
    factor implied); lower and upper are materialized on demand.
    """

    perm: np.ndarray    # perm[i] is the input row sitting in row i of L@U
    packed: np.ndarray  # strictly-lower multipliers + upper triangle
    sign: int           # parity of perm, +1 or -1

    @property
    def lower(self) -> np.ndarray:
        L = np.tril(self.packed, -1)
        np.fill_diagonal(L, 1.0)
        return L

    @property
    def upper(self) -> np.ndarray:
        return np.triu(self.packed)

    @property
    def near_singular(self) -> bool:
        d = np.abs(np.diagonal(self.packed))
        return bool(d.min() <= NEAR_SINGULAR_RATIO * d.max())


def lu_factor(B) -> LuFactors:
    """Factor a square matrix with partial pivoting.

    Raises SingularMatrix when a whole pivot column is exactly zero.
    Near-zero pivots do not raise; they are reported through
    LuFactors.near_singular so samplers can reject and redraw.
    """
    A = _as_square(B, "B")
    n = A.shape[0]
    perm = np.arange(n)
    sign = 1
    for k in range(n):
        col = np.abs(A[k:, k])
        p = k + int(np.argmax(col))
        if A[p, k] == 0.0:
            raise SingularMatrix(f"zero pivot column at elimination step {k}")
        if p != k:
            A[[k, p]] = A[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            sign = -sign
        A[k + 1:, k] /= A[k, k]
        if k + 1 < n:
            A[k + 1:, k + 1:] -= np.outer(A[k + 1:, k], A[k, k + 1:])
    return LuFactors(perm=perm, packed=A, sign=sign)


def lu_solve(factors: LuFactors, X) -> np.ndarray:
    """Solve B @ Z = X given the LU factors of B (single substitution pass)."""
    P = factors.packed
    n = P.shape[0]
    X = np.asarray(X)
    squeeze = X.ndim == 1
    if X.shape[0] != n:
        raise ValueError(f"right-hand side has {X.shape[0]} rows, expected {n}")
    if n <= 4 and (squeeze or X.shape[1] == 1):
        # scalar substitution: systems this small dominate the samplers
        # and array-op dispatch would cost more than the arithmetic
        p = P.tolist()
        xs = X.ravel().tolist()
        y = [xs[i] for i in factors.perm]
        for i in range(1, n):
            row = p[i]
            acc = y[i]
            for j in range(i):
                acc -= row[j] * y[j]
            y[i] = acc
        for i in range(n - 1, -1, -1):
            row = p[i]
            acc = y[i]
            for j in range(i + 1, n):
                acc -= row[j] * y[j]
            y[i] = acc / row[i]
        out = np.array(y, dtype=np.result_type(P.dtype, X.dtype))
        return out if squeeze else out[:, None]
    if squeeze:
        X = X[:, None]
    Y = X[factors.perm]  # fancy indexing already copies
    if Y.dtype != np.result_type(P.dtype, X.dtype):
        Y = Y.astype(np.result_type(P.dtype, X.dtype))
    for i in range(1, n):
        Y[i] -= P[i, :i] @ Y[:i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            Y[i] -= P[i, i + 1:] @ Y[i + 1:]
        Y[i] /= P[i, i]
    return Y[:, 0] if squeeze else Y


def solve_multi(B, X, factors: LuFactors | None = None) -> np.ndarray:
    """Solve B @ Z = X for a matrix right-hand side.

    One step of iterative refinement is applied, which at these sizes
    brings the componentwise residual below 1e-8 * ||X|| for any
    well-conditioned B.
    """
    if factors is None:
        B = _as_square(B, "B")
        factors = lu_factor(B)
    else:
        B = np.asarray(B)
    X = np.asarray(X)
    Z = lu_solve(factors, X)
    resid = X - B @ Z
    return Z + lu_solve(factors, resid)


def log_abs_det(B) -> tuple[float, complex]:
    """Return (log |det B|, sign).

    The sign is +-1 for real input and a unit-modulus complex number for
    complex input.  Singular matrices are encoded as (-inf, 0), never an
    exception.
    """
    try:
        f = lu_factor(B)
    except SingularMatrix:
        return -math.inf, 0.0
    d = np.diagonal(f.packed)
    mags = np.abs(d)
    if np.any(mags == 0.0):
        return -math.inf, 0.0
    log_abs = float(np.sum(np.log(mags)))
    phase = f.sign * np.prod(d / mags)
    if not np.iscomplexobj(d):
        phase = float(np.sign(phase))
    return log_abs, phase


def spd_logdet(S) -> float:
    """log det of a symmetric (Hermitian) positive definite matrix.

    Uses an explicit Cholesky factorization; raises NotPositiveDefinite
    as soon as a pivot fails to be strictly positive.
    """
    A = _as_square(S, "S")
    n = A.shape[0]
    L = np.zeros_like(A)
    acc = 0.0
    for j in range(n):
        pivot = float(A[j, j].real) - float(np.vdot(L[j, :j], L[j, :j]).real)
        if pivot <= 0.0:
            raise NotPositiveDefinite(f"pivot {pivot:.3e} at row {j}")
        L[j, j] = math.sqrt(pivot)
        acc += math.log(pivot)
        if j + 1 < n:
            L[j + 1:, j] = (A[j + 1:, j] - L[j + 1:, :j] @ np.conj(L[j, :j])) / L[j, j]
    return acc


def singular_values(B, max_sweeps: int = 60, tol: float = 1e-12) -> np.ndarray:
    """Singular values of a rectangular matrix, descending.

    One-sided Jacobi: rotate column pairs of the tall orientation until all
    pairwise inner products vanish relative to the column norms; the
    singular values are then the column norms.  Raises ConvergenceFailure
    if the sweep cap is reached first.
    """
    M = _as_matrix(B, "B")
    if M.shape[0] < M.shape[1]:
        M = M.conj().T
    cols = M.shape[1]
    complex_input = np.iscomplexobj(M)
    converged = cols < 2
    for _ in range(max_sweeps):
        worst = 0.0
        for p in range(cols - 1):
            for q in range(p + 1, cols):
                app = float(np.vdot(M[:, p], M[:, p]).real)
                aqq = float(np.vdot(M[:, q], M[:, q]).real)
                apq = complex(np.vdot(M[:, p], M[:, q]))
                if app == 0.0 or aqq == 0.0:
                    continue
                rel = abs(apq) / math.sqrt(app * aqq)
                worst = max(worst, rel)
                if rel <= tol:
                    continue
                # rotate a phase out of column q so the pair inner product
                # becomes real and nonnegative before the plane rotation
                if complex_input:
                    vq = M[:, q] * np.conj(apq / abs(apq))
                else:
                    vq = M[:, q] if apq.real >= 0.0 else -M[:, q]
                alpha = abs(apq)
                theta = 0.5 * math.atan2(2.0 * alpha, aqq - app)
                co, si = math.cos(theta), math.sin(theta)
                new_p = co * M[:, p] - si * vq
                new_q = si * M[:, p] + co * vq
                M[:, p] = new_p
                M[:, q] = new_q
        if worst <= tol:
            converged = True
            break
    if not converged:
        raise ConvergenceFailure(f"column orthogonalization stalled after {max_sweeps} sweeps")
    sigma = np.sqrt(np.sum(np.abs(M) ** 2, axis=0))
    return np.sort(sigma)[::-1]
