"""Independent reference implementations used to cross-check the library.

Nothing here calls into framekit's linear algebra: eigenvalue estimates come
from power iteration, subspace kernels from weighted Gram-Schmidt, and
positive-definiteness certificates from a hand-rolled Cholesky.
"""

import math

import numpy as np

from framekit import rng


def power_iteration(a, steps=10_000):
    """Rayleigh-quotient estimate of the top eigenvalue of symmetric PSD a."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    v = np.ones(n) / math.sqrt(n)
    lam = 0.0
    for _ in range(steps):
        w = a @ v
        lam = float(v @ w)
        nrm = float(np.sqrt(w @ w))
        if nrm == 0.0:
            return 0.0
        v = w / nrm
    return lam


def weighted_gram_schmidt(vectors, weights, rel_tol=1e-8):
    """Orthonormal basis of the row span under <f,g> = sum w f g.

    Modified Gram-Schmidt with one reorthogonalization pass; rows whose
    remainder is below rel_tol times their original norm are dropped.
    """
    vectors = np.asarray(vectors, dtype=float)
    weights = np.asarray(weights, dtype=float)
    basis = []
    for row in vectors:
        original = math.sqrt(float(np.sum(weights * row * row)))
        v = row.copy()
        for _ in range(2):
            for e in basis:
                v = v - float(np.sum(weights * e * v)) * e
        nrm = math.sqrt(float(np.sum(weights * v * v)))
        if original > 0.0 and nrm > rel_tol * original:
            basis.append(v / nrm)
    return np.array(basis) if basis else np.zeros((0, vectors.shape[1]))


def gram_schmidt_kernel(vectors, weights, rel_tol=1e-8):
    """Subspace reproducing kernel sum_k e_k(s) e_k(t) from an explicit ONB."""
    basis = weighted_gram_schmidt(vectors, weights, rel_tol)
    return basis.T @ basis


def cholesky_succeeds(a):
    """True iff the hand-rolled Cholesky of ``a`` completes with positive pivots.

    Failure certifies that the matrix is not positive definite, i.e. its
    smallest eigenvalue is below zero (or below s if a - s*I was passed).
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    lower = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            acc = a[i, j] - float(np.dot(lower[i, :j], lower[j, :j]))
            if i == j:
                if acc <= 0.0 or math.isnan(acc):
                    return False
                lower[i, i] = math.sqrt(acc)
            else:
                lower[i, j] = acc / lower[j, j]
    return True


def orthonormal_rows(n_rows, n_cols, weights, seed, stream=0):
    """n_rows vectors orthonormal under the weighted inner product.

    Draws seeded normals and Gram-Schmidts them; requires n_rows <= n_cols.
    """
    assert n_rows <= n_cols
    for attempt in range(100):
        raw = rng.seeded_normals(seed, stream * 100 + attempt, n_rows * n_cols)
        basis = weighted_gram_schmidt(raw.reshape(n_rows, n_cols), weights)
        if basis.shape[0] == n_rows:
            return basis
    raise AssertionError("could not draw a full-rank system")
