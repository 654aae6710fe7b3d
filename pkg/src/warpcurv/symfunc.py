"""Elementary symmetric functions, Newton tensors and curvature cones.

A principal-curvature spectrum is represented as a 1-D numpy array of
length n-1 (ambient dimension n implied).  Batched routines take a 2-D
array of shape (count, n-1) and evaluate column-recurrences so that the
property sweeps stay vectorized.
"""

from math import comb

import numpy as np

from .kronecker import newton_tensor_delta  # noqa: F401  (re-exported oracle)

__all__ = [
    "elementary_symmetric",
    "elementary_symmetric_batch",
    "sigma",
    "normalized_h",
    "normalized_h_batch",
    "sigma_deleted",
    "newton_tensor",
    "newton_tensor_delta",
    "cone_membership",
    "cone_membership_batch",
    "nm_residuals",
    "maclaurin_residuals",
    "horoconvex",
]


def _as_spectrum(kappa):
    kappa = np.asarray(kappa, dtype=np.float64)
    if kappa.ndim != 1 or kappa.size < 2:
        raise ValueError("spectrum must be a 1-D array of length >= 2")
    if not np.all(np.isfinite(kappa)):
        raise ValueError("spectrum entries must be finite")
    return kappa


def elementary_symmetric(kappa):
    """All sigma_0..sigma_d of a spectrum, via the prefix-product recurrence.

    Stable O(d^2) coefficient update: after absorbing entry x the partial
    vector e satisfies e_k <- e_k + x * e_{k-1}.
    """
    kappa = _as_spectrum(kappa)
    d = kappa.size
    e = np.zeros(d + 1)
    e[0] = 1.0
    for i, x in enumerate(kappa):
        e[1 : i + 2] = e[1 : i + 2] + x * e[0 : i + 1]
    return e


def elementary_symmetric_batch(spectra):
    """sigma_0..sigma_d for each row of a (count, d) array; shape (count, d+1)."""
    spectra = np.asarray(spectra, dtype=np.float64)
    if spectra.ndim != 2:
        raise ValueError("expected a 2-D batch of spectra")
    count, d = spectra.shape
    e = np.zeros((count, d + 1))
    e[:, 0] = 1.0
    for i in range(d):
        x = spectra[:, i : i + 1]
        e[:, 1 : i + 2] = e[:, 1 : i + 2] + x * e[:, 0 : i + 1]
    return e


def sigma(kappa, k):
    """k-th elementary symmetric function; 0 outside 0 <= k <= d."""
    kappa = _as_spectrum(kappa)
    if k < 0 or k > kappa.size:
        return 0.0
    return float(elementary_symmetric(kappa)[k])


def normalized_h(kappa, k):
    """Normalized mean curvature H_k = sigma_k / C(d, k); H_0 = 1, H_{-1} = 0."""
    kappa = _as_spectrum(kappa)
    d = kappa.size
    if k < 0 or k > d:
        return 0.0
    return float(elementary_symmetric(kappa)[k]) / comb(d, k)


def normalized_h_batch(spectra):
    """H_0..H_d for each row of a (count, d) batch; shape (count, d+1)."""
    e = elementary_symmetric_batch(np.asarray(spectra, dtype=np.float64))
    d = e.shape[1] - 1
    binom = np.array([comb(d, k) for k in range(d + 1)], dtype=np.float64)
    return e / binom


def sigma_deleted(kappa, k, j):
    """sigma_k of the spectrum with entry ``j`` removed (0-based index)."""
    kappa = _as_spectrum(kappa)
    if not 0 <= j < kappa.size:
        raise IndexError(f"deleted index {j} out of range for length {kappa.size}")
    reduced = np.delete(kappa, j)
    if k < 0 or k > reduced.size:
        return 0.0
    return float(elementary_symmetric(reduced)[k])


def newton_tensor(B, k):
    """k-th Newton transformation via T_k = sigma_k(B) Id - B T_{k-1}.

    T_0 = Id and T_{-1} = 0 by convention.  Agrees with the literal
    delta-expansion ``newton_tensor_delta`` (a test, not an assumption).
    """
    B = np.asarray(B, dtype=np.float64)
    d = B.shape[0]
    if B.shape != (d, d):
        raise ValueError("B must be square")
    if k < 0:
        return np.zeros((d, d))
    eigs = np.linalg.eigvalsh(0.5 * (B + B.T))
    e = elementary_symmetric(eigs)
    T = np.eye(d)
    for m in range(1, k + 1):
        sig_m = e[m] if m <= d else 0.0
        T = sig_m * np.eye(d) - B @ T
    return T


def cone_membership(kappa, k, strict=True):
    """Membership of the spectrum in the order-k positive cone (or its closure).

    True iff sigma_j > 0 (strict) or sigma_j >= 0 (closure) for all j <= k.
    """
    kappa = _as_spectrum(kappa)
    if not 1 <= k <= kappa.size:
        raise ValueError(f"cone order {k} outside [1, {kappa.size}]")
    e = elementary_symmetric(kappa)
    if strict:
        return bool(np.all(e[1 : k + 1] > 0.0))
    return bool(np.all(e[1 : k + 1] >= 0.0))


def cone_membership_batch(spectra, k, strict=True):
    """Vectorized cone test for a (count, d) batch; returns a boolean mask."""
    e = elementary_symmetric_batch(spectra)
    if strict:
        return np.all(e[:, 1 : k + 1] > 0.0, axis=1)
    return np.all(e[:, 1 : k + 1] >= 0.0, axis=1)


def nm_residuals(spectra, k):
    """Worst slack of H_{j-1} H_l - H_j H_{l-1} over 1 <= l < j <= k.

    Nonnegative on the closed order-k positive cone; shape (count,).
    """
    if k < 2:
        raise ValueError("need k >= 2 for a nontrivial pair")
    H = normalized_h_batch(spectra)
    worst = np.full(H.shape[0], np.inf)
    for j in range(2, k + 1):
        for l in range(1, j):
            slack = H[:, j - 1] * H[:, l] - H[:, j] * H[:, l - 1]
            worst = np.minimum(worst, slack)
    return worst


def maclaurin_residuals(spectra, k):
    """Worst slack of H_l - H_k^(l/k) over 1 <= l < k (order-k cone)."""
    if k < 2:
        raise ValueError("need k >= 2 for a nontrivial pair")
    H = normalized_h_batch(spectra)
    if np.any(H[:, k] < 0.0):
        raise ValueError("H_k must be nonnegative on the closed cone")
    worst = np.full(H.shape[0], np.inf)
    for l in range(1, k):
        worst = np.minimum(worst, H[:, l] - H[:, k] ** (l / k))
    return worst


def horoconvex(kappa, tol=0.0):
    """True iff every principal curvature is >= 1 - tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    kappa = _as_spectrum(kappa)
    return bool(np.min(kappa) >= 1.0 - tol)
