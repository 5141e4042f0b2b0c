"""Reproducing kernels, canonical tight frames, and the Lax-Milgram operator.

The inverse-Gramian kernel K(s,t) = l(s)^T G^+ l(t) turns the span of a
frame system into a reproducing kernel Hilbert space on the grid: evaluation
at a grid point is represented by the matching kernel column under the
weighted inner product.  For systems that span only a strict subspace, the
pseudo-inverse restricts every construction to the span.

Operator conventions on a weighted grid: kernel-style value tables (K, L)
are elementwise symmetric and act on a function f as K (w * f).  Adjoints
and projectors are therefore taken in the weighted inner product; on
unit-weight grids they coincide with plain transposes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ZeroSpan
from .frames import (
    FrameSystem,
    Grid,
    analysis,
    build_gramian,
    weighted_inner,
    _grid_function,
)
from .spectral import DEFAULT_RANK_TOL, SymMatrix, inv_sqrt, pinv, sym_eig


@dataclass(frozen=True)
class KernelMatrix:
    """Positive semidefinite table values[s][t] = K(t_s, t_t) over grid pairs."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.size, self.grid.size):
            raise DimensionMismatch(
                f"kernel values {v.shape} for a grid of {self.grid.size} points"
            )
        v = 0.5 * (v + v.T)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def section(self, t_index: int) -> np.ndarray:
        """Kernel section K_t, the column at grid index t."""
        return self.values[:, t_index].copy()


@dataclass(frozen=True)
class CanonicalTightFrame:
    """Parseval frame for the span; row n holds the samples of psi_n."""

    grid: Grid
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    def as_frame_system(self) -> FrameSystem:
        return FrameSystem(grid=self.grid, vectors=self.vectors)


@dataclass(frozen=True)
class LaxMilgramOperator:
    """Inverse of the frame operator on the span, as a kernel-style table.

    Application to a grid function f is matrix @ (w * f); composed with the
    frame operator it acts as the identity on the span.
    """

    grid: Grid
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        m = 0.5 * (m + m.T)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def apply(self, f) -> np.ndarray:
        f = _grid_function(self.grid, f)
        return self.matrix @ (self.grid.weights * f)


def naive_kernel(fs: FrameSystem) -> KernelMatrix:
    """Plain vector-sum kernel K(s,t) = sum_n phi_n(s) phi_n(t).

    Reproduces only when the system is Parseval; kept as the comparison
    point for the inverse-Gramian kernel.
    """
    return KernelMatrix(grid=fs.grid, values=fs.vectors.T @ fs.vectors)


def rk_kernel(fs: FrameSystem, rank_tol: float = DEFAULT_RANK_TOL) -> KernelMatrix:
    """Inverse-Gramian reproducing kernel K(s,t) = l(s)^T G^+ l(t)."""
    gram = build_gramian(fs)
    eig = sym_eig(gram.matrix)
    if eig.retained_rank(rank_tol) == 0:
        raise ZeroSpan("frame system spans only the zero subspace")
    ginv = pinv(eig, rank_tol)
    return KernelMatrix(
        grid=fs.grid, values=fs.vectors.T @ ginv.entries @ fs.vectors
    )


def canonical_tight(
    fs: FrameSystem, rank_tol: float = DEFAULT_RANK_TOL
) -> CanonicalTightFrame:
    """Canonical tight frame psi_n, column t = G^{-1/2} l(t).

    The resulting system is Parseval on the span of the original frame:
    every f in the span satisfies f = sum_n <psi_n, f> psi_n.
    """
    gram = build_gramian(fs)
    eig = sym_eig(gram.matrix)
    if eig.retained_rank(rank_tol) == 0:
        raise ZeroSpan("frame system spans only the zero subspace")
    half = inv_sqrt(eig, rank_tol)
    return CanonicalTightFrame(grid=fs.grid, vectors=half.entries @ fs.vectors)


def kernel_from_tight(ctf: CanonicalTightFrame) -> KernelMatrix:
    """Kernel reassembled from the tight frame: sum_n psi_n(s) psi_n(t).

    Agrees with rk_kernel of the originating system.
    """
    return KernelMatrix(grid=ctf.grid, values=ctf.vectors.T @ ctf.vectors)


def verify_reproducing(fs: FrameSystem, k: KernelMatrix, f) -> float:
    """Max residual of the reproducing identity f(t) = <K_t, f>.

    Contracts to ~0 for f in the span when k = rk_kernel(fs).  For f with a
    component outside the span, <K_t, f> evaluates the span-projection of f,
    so the residual equals the sup norm of the out-of-span component.
    """
    f = _grid_function(fs.grid, f)
    if k.grid.size != fs.grid.size:
        raise DimensionMismatch("kernel grid does not match frame grid")
    reproduced = k.values @ (fs.grid.weights * f)
    return float(np.max(np.abs(f - reproduced)))


def lax_milgram(
    fs: FrameSystem, rank_tol: float = DEFAULT_RANK_TOL
) -> LaxMilgramOperator:
    """Pseudo-inverse of the frame operator in the weighted geometry."""
    s_hat, root_w = _frame_operator_hat(fs)
    eig = sym_eig(s_hat)
    if eig.retained_rank(rank_tol) == 0:
        raise ZeroSpan("frame system spans only the zero subspace")
    p = pinv(eig, rank_tol).entries
    return LaxMilgramOperator(grid=fs.grid, matrix=(p / root_w) / root_w[:, None])


def verify_lax_identity(fs: FrameSystem, op: LaxMilgramOperator, f, g) -> float:
    """Residual of sum_n <f, phi_n> <phi_n, L g> = <f, g> (f, g in span)."""
    f = _grid_function(fs.grid, f)
    g = _grid_function(fs.grid, g)
    lhs = float(np.dot(analysis(fs, f), analysis(fs, op.apply(g))))
    return abs(lhs - weighted_inner(fs.grid, f, g))


def isometry_check(fs: FrameSystem, c) -> tuple[float, float]:
    """Both sides of the synthesis isometry ||sum c_n phi_n||^2 = c^T G c."""
    c = np.asarray(c, dtype=float)
    if c.ndim != 1 or c.size != fs.n_vectors:
        raise DimensionMismatch(
            f"coefficient sequence of length {c.size} for {fs.n_vectors} vectors"
        )
    combined = fs.vectors.T @ c
    lhs = weighted_inner(fs.grid, combined, combined)
    rhs = float(c @ build_gramian(fs).matrix.entries @ c)
    return lhs, rhs


def polar_unitary(fs: FrameSystem, rank_tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Partial isometry U = T S^{-1/2} from the polar factorization of T.

    Returned as the N x M coordinate matrix of the map from grid functions
    to coefficient sequences.  U composed with S^{1/2} reproduces T on the
    span, and U* U (adjoint in the weighted inner product) is the projector
    onto the span; eigenvector sign ambiguity means only such sign-invariant
    identities are promised.
    """
    s_hat, root_w = _frame_operator_hat(fs)
    eig = sym_eig(s_hat)
    if eig.retained_rank(rank_tol) == 0:
        raise ZeroSpan("frame system spans only the zero subspace")
    half = inv_sqrt(eig, rank_tol).entries
    b = fs.vectors * root_w
    return (b @ half) * root_w


def _frame_operator_hat(fs: FrameSystem):
    # Frame operator conjugated into the unit-weight picture:
    # S_hat = W^{1/2} Phi^T Phi W^{1/2}, symmetric PSD with the same spectrum
    # as the frame operator on the span.
    root_w = np.sqrt(fs.grid.weights)
    b = fs.vectors * root_w
    return SymMatrix(b.T @ b), root_w
