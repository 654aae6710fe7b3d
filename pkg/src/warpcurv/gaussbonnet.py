"""Gauss-Bonnet curvature invariants of hypersurfaces in space forms.

The intrinsic scalar L_k (L_1 = scalar curvature) and its odd companion
N_k are linear combinations of the normalized mean curvatures H_m with
coefficients depending on the ambient curvature sign eps in {-1, 0, +1}.
The normalized variants Lt_k = L_k / (C(n-1,2k) (2k)!) and Nt_k likewise.

Two auxiliary two-parameter families X_{s,t} (one for the hyperbolic
hat-substitution kappa = 1 + kappa_hat, one for the spherical case) carry
the product-type inequalities between consecutive Lt/Nt; the checks at the
bottom of the module certify those inequalities sample by sample.
"""

from itertools import permutations
from math import comb, factorial

import numpy as np

from .kronecker import lk_from_riemann
from .reports import CheckReport
from .symfunc import (
    _as_spectrum,
    horoconvex,
    normalized_h_batch,
)

__all__ = [
    "gauss_riemann",
    "lk_from_riemann",
    "lk_from_h",
    "nk_from_h",
    "tilde_l",
    "tilde_n",
    "tilde_l_hat",
    "tilde_n_hat",
    "x_st",
    "x_st_spherical",
    "classify_equality",
    "check_refined_nm",
    "check_quotient_nm",
    "check_logconcave",
    "check_spherical_ineq",
    "check_permutation_sum",
    "permutation_sum",
]

# Thresholds for the equality-case classifier (well separated from
# double-precision noise).
ISOTROPY_SPREAD = 1e-8
SPIKE_MARGIN = 1e-8


# ---------------------------------------------------------------------------
# Curvature tensors and L_k
# ---------------------------------------------------------------------------

def gauss_riemann(h, eps):
    """Riemann tensor of a hypersurface with shape matrix ``h`` in a space form.

    R_{ij}^{kl} = (h_i^k h_j^l - h_i^l h_j^k)
                  + eps (d_i^k d_j^l - d_i^l d_j^k)

    ``h`` may be a symmetric matrix or a 1-D principal spectrum (taken as
    the diagonal matrix).  Orthonormal frame assumed throughout.
    """
    h = np.asarray(h, dtype=np.float64)
    if h.ndim == 1:
        h = np.diag(h)
    if eps not in (-1, 0, 1):
        raise ValueError("eps must be -1, 0 or +1")
    d = h.shape[0]
    eye = np.eye(d)
    R = (np.einsum("ik,jl->ijkl", h, h) - np.einsum("il,jk->ijkl", h, h))
    R += eps * (np.einsum("ik,jl->ijkl", eye, eye)
                - np.einsum("il,jk->ijkl", eye, eye))
    return R


def _h_col(H, m):
    """Column H_m of a batched (count, d+1) mean-curvature table; 0 off-range."""
    d = H.shape[1] - 1
    if m < 0 or m > d:
        return np.zeros(H.shape[0])
    return H[:, m]


def _h_table(kappa):
    """H_0..H_d of a single spectrum as a (1, d+1) table."""
    kappa = _as_spectrum(kappa)
    return normalized_h_batch(kappa[None, :])


def tilde_l_batch(H, eps, k):
    """Normalized Lt_k from a batched mean-curvature table."""
    out = np.zeros(H.shape[0])
    for i in range(k + 1):
        out += comb(k, i) * (eps ** i) * _h_col(H, 2 * k - 2 * i)
    return out


def tilde_n_batch(H, eps, k):
    """Normalized Nt_k from a batched mean-curvature table."""
    out = np.zeros(H.shape[0])
    for i in range(k + 1):
        out += comb(k, i) * (eps ** i) * _h_col(H, 2 * k - 2 * i + 1)
    return out


def tilde_l(kappa, eps, k):
    """Lt_k = sum_i C(k,i) eps^i H_{2k-2i} (H_m = 0 beyond the top order)."""
    return float(tilde_l_batch(_h_table(kappa), eps, k)[0])


def tilde_n(kappa, eps, k):
    """Nt_k = sum_i C(k,i) eps^i H_{2k-2i+1}."""
    return float(tilde_n_batch(_h_table(kappa), eps, k)[0])


def lk_from_h(kappa, eps, k):
    """Gauss-Bonnet curvature L_k = C(n-1,2k) (2k)! * Lt_k.

    Requires 2k <= n-1 so that the leading normalization is nonzero.
    """
    kappa = _as_spectrum(kappa)
    if not 0 <= 2 * k <= kappa.size:
        raise ValueError(f"need 0 <= 2k <= {kappa.size}")
    return comb(kappa.size, 2 * k) * factorial(2 * k) * tilde_l(kappa, eps, k)


def nk_from_h(kappa, eps, k):
    """Odd companion N_k = C(n-1,2k) (2k)! * Nt_k; requires 2k+1 <= n-1."""
    kappa = _as_spectrum(kappa)
    if not 0 <= 2 * k + 1 <= kappa.size:
        raise ValueError(f"need 0 <= 2k+1 <= {kappa.size}")
    return comb(kappa.size, 2 * k) * factorial(2 * k) * tilde_n(kappa, eps, k)


# ---------------------------------------------------------------------------
# Hat substitution (hyperbolic) and the X_{s,t} families
# ---------------------------------------------------------------------------

def _hat_table(kappa_hat):
    kappa_hat = _as_spectrum(kappa_hat)
    if np.min(kappa_hat) < 0:
        raise ValueError("hat spectrum must be entrywise nonnegative")
    return normalized_h_batch(kappa_hat[None, :])


def x_st_batch(Hhat, s, t):
    """Hyperbolic family X_{s,t} = sum_i 2^i C(t,i) Hh_{s+t-i} (batched)."""
    out = np.zeros(Hhat.shape[0])
    for i in range(t + 1):
        out += (2.0 ** i) * comb(t, i) * _h_col(Hhat, s + t - i)
    return out


def x_st(kappa_hat, s, t):
    """Hyperbolic X_{s,t} of a nonnegative hat spectrum."""
    if s < 0 or t < 0:
        raise ValueError("s and t must be nonnegative")
    return float(x_st_batch(_hat_table(kappa_hat), s, t)[0])


def tilde_l_hat(kappa_hat, k):
    """Lt_k in the hyperbolic hat form: sum_i 2^i C(k,i) Hh_{2k-i}.

    Equals X_{k+1,k-1} + 2 X_{k,k-1} for k >= 1.
    """
    return x_st(kappa_hat, k, k)


def tilde_n_hat(kappa_hat, k):
    """Nt_k in the hyperbolic hat form.

    Direct expansion of the alternating sum through kappa = 1 + kappa_hat
    gives Nt_k = sum_i 2^i C(k,i) (Hh_{2k+1-i} + Hh_{2k-i}), i.e.
    X_{k+1,k} + X_{k,k} = X_{k+1,k} + Lt_k.
    """
    return x_st(kappa_hat, k + 1, k) + x_st(kappa_hat, k, k)


def x_st_spherical_batch(H, s, t):
    """Spherical family X_{s,t} = sum_i C(t,i) H_{s+2t-2i} (batched)."""
    out = np.zeros(H.shape[0])
    for i in range(t + 1):
        out += comb(t, i) * _h_col(H, s + 2 * t - 2 * i)
    return out


def x_st_spherical(kappa, s, t):
    """Spherical X_{s,t} of a principal spectrum."""
    if s < 0 or t < 0:
        raise ValueError("s and t must be nonnegative")
    return float(x_st_spherical_batch(_h_table(kappa), s, t)[0])


# ---------------------------------------------------------------------------
# Equality-case classification
# ---------------------------------------------------------------------------

def classify_equality(kappa):
    """Detect the two equality configurations of the refined inequalities.

    Returns "isotropic" when all entries agree to within the spread
    threshold, "one-spike" when exactly one entry exceeds 1 and the rest
    equal 1 (to within the margin), else None.
    """
    kappa = _as_spectrum(kappa)
    if np.max(kappa) - np.min(kappa) < ISOTROPY_SPREAD:
        return "isotropic"
    above = np.abs(kappa - 1.0) > SPIKE_MARGIN
    if np.count_nonzero(above) == 1 and kappa[above][0] > 1.0:
        return "one-spike"
    return None


# ---------------------------------------------------------------------------
# Inequality checks (single-spectrum reports; batch residuals for sweeps)
# ---------------------------------------------------------------------------

def refined_nm_residuals(spectra, k):
    """Batched slack H_1 Lt_k - Nt_k (hyperbolic, >= 0 on horoconvex input).

    Evaluated in hat variables kappa_hat = kappa - 1: Lt_k = X_{k,k},
    Nt_k = X_{k+1,k} + X_{k,k}, H_1 = 1 + Hh_1.  For 2k+1 <= n-1 this
    agrees with the alternating sums in H; beyond that order it is the
    natural polynomial continuation (Hh_m vanishes identically above n-1).
    """
    spectra = np.asarray(spectra, dtype=np.float64)
    Hhat = normalized_h_batch(spectra - 1.0)
    lt = x_st_batch(Hhat, k, k)
    nt = x_st_batch(Hhat, k + 1, k) + lt
    return (1.0 + Hhat[:, 1]) * lt - nt


def check_refined_nm(kappa, tol=1e-10):
    """Refined Newton-Maclaurin check: Nt_k - H_1 Lt_k <= 0 for horoconvex input.

    One report covering every admissible order k; the residual is the
    worst slack.  Raises on non-horoconvex spectra.
    """
    kappa = _as_spectrum(kappa)
    if not horoconvex(kappa, tol=1e-12):
        raise ValueError("spectrum is not horoconvex (some entry < 1)")
    d = kappa.size
    ks = list(range(1, d // 2 + 1))
    slacks = {k: float(refined_nm_residuals(kappa[None, :], k)[0]) for k in ks}
    worst = min(slacks.values())
    return CheckReport.inequality(
        "refined-newton-maclaurin", worst, tol,
        per_order=slacks, equality_case=classify_equality(kappa),
    )


def quotient_nm_residuals(spectra, k):
    """Batched slack Nt_{k-1} Lt_k - Nt_k Lt_{k-1} (hyperbolic, horoconvex).

    Hat-variable evaluation, same convention as refined_nm_residuals.
    """
    spectra = np.asarray(spectra, dtype=np.float64)
    Hhat = normalized_h_batch(spectra - 1.0)
    lt_k = x_st_batch(Hhat, k, k)
    lt_km1 = x_st_batch(Hhat, k - 1, k - 1)
    nt_k = x_st_batch(Hhat, k + 1, k) + lt_k
    nt_km1 = x_st_batch(Hhat, k, k - 1) + lt_km1
    return nt_km1 * lt_k - nt_k * lt_km1


def check_quotient_nm(kappa, tol=1e-10):
    """Consecutive-order product check: Nt_{k-1} Lt_k >= Nt_k Lt_{k-1}."""
    kappa = _as_spectrum(kappa)
    if not horoconvex(kappa, tol=1e-12):
        raise ValueError("spectrum is not horoconvex (some entry < 1)")
    d = kappa.size
    ks = list(range(1, d // 2 + 1))
    slacks = {k: float(quotient_nm_residuals(kappa[None, :], k)[0]) for k in ks}
    worst = min(slacks.values())
    return CheckReport.inequality(
        "quotient-newton-maclaurin", worst, tol,
        per_order=slacks, equality_case=classify_equality(kappa),
    )


def logconcave_residuals(hats, s, t):
    """Batched slack X_{s,t}^2 - X_{s+1,t} X_{s-1,t} for nonnegative hats."""
    Hhat = normalized_h_batch(np.asarray(hats, dtype=np.float64))
    return (x_st_batch(Hhat, s, t) ** 2
            - x_st_batch(Hhat, s + 1, t) * x_st_batch(Hhat, s - 1, t))


def check_logconcave(kappa_hat, s, t, tol=1e-10):
    """Log-concavity of s -> X_{s,t} at fixed t (hyperbolic family)."""
    if s < 1 or t < 0:
        raise ValueError("need s >= 1 and t >= 0")
    kappa_hat = _as_spectrum(kappa_hat)
    if np.min(kappa_hat) < 0:
        raise ValueError("hat spectrum must be entrywise nonnegative")
    slack = float(logconcave_residuals(kappa_hat[None, :], s, t)[0])
    return CheckReport.inequality("x-family-log-concavity", slack, tol, s=s, t=t)


def spherical_ineq_residuals(spectra, s, t):
    """Batched slack X_{s,t} X_{s+1,t} - X_{s-1,t} X_{s+2,t} (spherical)."""
    H = normalized_h_batch(np.asarray(spectra, dtype=np.float64))
    return (x_st_spherical_batch(H, s, t) * x_st_spherical_batch(H, s + 1, t)
            - x_st_spherical_batch(H, s - 1, t) * x_st_spherical_batch(H, s + 2, t))


def check_spherical_ineq(kappa, s, t, tol=1e-10):
    """Spherical product inequality X_{s,t} X_{s+1,t} >= X_{s-1,t} X_{s+2,t}."""
    if s < 1 or t < 0:
        raise ValueError("need s >= 1 and t >= 0")
    kappa = _as_spectrum(kappa)
    slack = float(spherical_ineq_residuals(kappa[None, :], s, t)[0])
    return CheckReport.inequality("spherical-x-inequality", slack, tol, s=s, t=t)


# ---------------------------------------------------------------------------
# Permutation-sum form of the refined inequality (brute-force oracle)
# ---------------------------------------------------------------------------

MAX_PERM_DIM = 9
MAX_PERM_ORDER = 2


def _perm_index_array(d, k):
    """(count, 2k+1) array of all injective index tuples from range(d)."""
    tuples = list(permutations(range(d), 2 * k + 1))
    return np.array(tuples, dtype=np.intp)


def permutation_sum(kappa, k):
    """Literal sum over injective (2k+1)-tuples:

    sum kappa_{i1} (kappa_{i2} kappa_{i3} - 1) .. (kappa_{i_{2k-2}} kappa_{i_{2k-1}} - 1)
        (kappa_{i_{2k}} - kappa_{i_{2k+1}})^2
    """
    kappa = _as_spectrum(kappa)
    d = kappa.size
    if d > MAX_PERM_DIM or k > MAX_PERM_ORDER or k < 1:
        raise ValueError("permutation sum limited to n-1 <= 9 and 1 <= k <= 2")
    if 2 * k + 1 > d:
        raise ValueError("tuple length exceeds spectrum length")
    idx = _perm_index_array(d, k)
    vals = kappa[idx]
    terms = vals[:, 0].copy()
    for m in range(1, 2 * k - 2, 2):
        terms *= vals[:, m] * vals[:, m + 1] - 1.0
    terms *= (vals[:, -2] - vals[:, -1]) ** 2
    return float(terms.sum())


def check_permutation_sum(kappa, k, tol=1e-10):
    """Brute-force permutation sum vs the refined-inequality slack.

    Reports the nonnegativity of the sum on horoconvex input and the ratio
    of the sum to H_1 Lt_k - Nt_k (the constant is measured, not assumed).
    """
    kappa = _as_spectrum(kappa)
    total = permutation_sum(kappa, k)
    slack = float(refined_nm_residuals(kappa[None, :], k)[0])
    ratio = total / slack if abs(slack) > 1e-300 else None
    return CheckReport.inequality(
        "permutation-sum", total, tol, k=k, nm_slack=slack, ratio=ratio,
    )
