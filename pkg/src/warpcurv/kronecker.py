"""Generalized Kronecker delta and the factorial-cost tensor contractions.

Everything in this module is deliberately brute force: it enumerates index
subsets and permutations literally, so it serves as an independent oracle
for the fast recurrence-based routines elsewhere in the package.  Size
limits are enforced because the cost grows factorially.
"""

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

__all__ = [
    "gen_delta",
    "newton_tensor_delta",
    "lk_from_riemann",
]

# Hard limits for the factorial-cost oracles.
MAX_DELTA_ORDER = 4
MAX_DELTA_DIM = 8
MAX_LK_ORDER = 3
MAX_LK_DIM = 8


@lru_cache(maxsize=None)
def _perm_signs(p):
    """All permutations of range(p) with their signs, as (array, signs)."""
    perms = list(permutations(range(p)))
    signs = np.empty(len(perms), dtype=np.float64)
    for m, perm in enumerate(perms):
        signs[m] = _perm_sign(perm)
    return np.array(perms, dtype=np.intp), signs


def _perm_sign(perm):
    """Sign of a permutation of range(len(perm)) given as a tuple."""
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle_len = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            cycle_len += 1
        if cycle_len % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def gen_delta(upper, lower):
    """Generalized Kronecker delta of two index tuples.

    Equals det(delta^{upper_b}_{lower_a}): zero unless both tuples consist
    of distinct indices forming the same set, in which case it is the sign
    of the permutation taking ``lower`` to ``upper``.
    """
    if len(upper) != len(lower):
        raise ValueError("index tuples must have equal length")
    if len(set(upper)) != len(upper) or set(upper) != set(lower):
        return 0
    pos = {idx: a for a, idx in enumerate(upper)}
    return _perm_sign(tuple(pos[idx] for idx in lower))


def newton_tensor_delta(B, k):
    """Newton transformation of order ``k`` by literal delta contraction.

    (T_k)^i_j = (1/k!) delta^{i i_1 .. i_k}_{j j_1 .. j_k}
                B_{i_1}^{j_1} .. B_{i_k}^{j_k}

    Factorial-cost oracle for the recurrence implementation; restricted to
    k <= 4 and matrices of size <= 8.
    """
    B = np.asarray(B, dtype=np.float64)
    d = B.shape[0]
    if B.shape != (d, d):
        raise ValueError("B must be square")
    if not 0 <= k <= MAX_DELTA_ORDER:
        raise ValueError(f"k={k} outside oracle range [0, {MAX_DELTA_ORDER}]")
    if d > MAX_DELTA_DIM:
        raise ValueError(f"matrix size {d} exceeds oracle limit {MAX_DELTA_DIM}")
    if k == 0:
        return np.eye(d)

    T = np.zeros((d, d))
    fact_k = float(np.prod(range(1, k + 1)))
    indices = range(d)
    for i in indices:
        for j in indices:
            total = 0.0
            # Nonzero delta needs {i, i_1..i_k} = {j, j_1..j_k} distinct.
            rest_pool = [a for a in indices if a != i]
            for I in permutations(rest_pool, k):
                upper = (i,) + I
                for J in permutations(upper):
                    if J[0] != j:
                        continue
                    sign = gen_delta(upper, J)
                    prod = 1.0
                    for a, b in zip(I, J[1:]):
                        prod *= B[a, b]
                    total += sign * prod
            T[i, j] = total / fact_k
    return T


def lk_from_riemann(R, k):
    """Full delta contraction of ``k`` curvature factors.

    L_k = (1/2^k) delta^{i_1..i_2k}_{j_1..j_2k}
          R_{i_1 i_2}^{j_1 j_2} .. R_{i_{2k-1} i_{2k}}^{j_{2k-1} j_{2k}}

    Evaluated subset by subset: for a fixed set S of 2k indices the upper
    and lower tuples run over permutations of S and the delta reduces to a
    product of permutation signs.  L_0 = 1 by convention.
    """
    R = np.asarray(R, dtype=np.float64)
    d = R.shape[0]
    if R.shape != (d, d, d, d):
        raise ValueError("R must be a rank-4 tensor with equal dimensions")
    if not 0 <= k <= MAX_LK_ORDER:
        raise ValueError(f"k={k} outside oracle range [0, {MAX_LK_ORDER}]")
    if d > MAX_LK_DIM:
        raise ValueError(f"dimension {d} exceeds oracle limit {MAX_LK_DIM}")
    if k == 0:
        return 1.0
    if 2 * k > d:
        return 0.0

    p = 2 * k
    perms, signs = _perm_signs(p)
    # Slot m of a permutation contributes the (2m-1, 2m) index pair.
    odd = perms[:, 0::2]
    even = perms[:, 1::2]

    total = 0.0
    for subset in combinations(range(d), p):
        S = np.asarray(subset, dtype=np.intp)
        a1, a2 = S[odd], S[even]          # upper pairs, per permutation
        b1, b2 = S[odd], S[even]          # lower pairs, per permutation
        prod = np.ones((len(perms), len(perms)))
        for m in range(k):
            prod *= R[
                a1[:, m][:, None], a2[:, m][:, None],
                b1[None, :, m], b2[None, :, m],
            ]
        total += signs @ prod @ signs
    return total / 2.0**k
