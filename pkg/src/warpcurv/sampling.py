"""Randomized spectrum sampling, inequality sweeps and equality atlases.

Samples are drawn from a counter-based generator (Philox) with one
substream per fixed-size block, so a run is deterministic for a given
seed no matter how blocks are scheduled.  Sweeps evaluate vectorized
residual functions over the sample stream, shrink any violation toward
the isotropic point, and report the worst slack per check.
"""

from dataclasses import dataclass, field

import numpy as np

from .symfunc import cone_membership_batch

__all__ = [
    "SamplerSpec",
    "ViolationRecord",
    "sample",
    "sweep",
    "equality_atlas",
]

BLOCK = 4096
BOUNDARY_FRACTION = 0.1
BOUNDARY_PUSH = 1e-6
STRICT_FLOOR = 1e-12  # residuals above this count as strict inequality

CONES = ("horoconvex", "garding", "convex-even", "nonneg")


@dataclass(frozen=True)
class SamplerSpec:
    """What to sample: cone, dimension, budget, seed and spread."""

    cone: str
    n: int
    count: int
    seed: int
    k: int = 0
    scale: float = 1.0

    def __post_init__(self):
        if self.cone not in CONES:
            raise ValueError(f"unknown cone {self.cone!r}; choose from {CONES}")
        if self.n - 1 < 2:
            raise ValueError("need spectrum length n-1 >= 2")
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.cone in ("garding", "convex-even") and self.k < 1:
            raise ValueError(f"{self.cone} sampling needs a cone order k >= 1")


@dataclass
class ViolationRecord:
    """A sample that violated a check, with its shrunk witness."""

    check: str
    spectrum: np.ndarray
    residual: float
    shrunk: np.ndarray
    shrunk_residual: float


def _block_rng(seed, index):
    return np.random.Generator(np.random.Philox(key=[seed, index]))


def _cone_order(spec):
    return spec.k if spec.cone == "garding" else 2 * spec.k


def _raw_block(spec, rng, size):
    d = spec.n - 1
    if spec.cone == "horoconvex":
        return 1.0 + np.abs(rng.standard_normal((size, d))) * spec.scale
    if spec.cone == "nonneg":
        return np.abs(rng.standard_normal((size, d))) * spec.scale
    # Positive-dominant proposals for the Garding cones, filtered by the
    # membership oracle.
    order = _cone_order(spec)
    out = np.empty((size, d))
    have, drawn = 0, 0
    while have < size:
        cand = rng.standard_normal((2 * size, d)) * spec.scale + spec.scale
        drawn += cand.shape[0]
        keep = cand[cone_membership_batch(cand, min(order, d))]
        take = min(size - have, keep.shape[0])
        out[have : have + take] = keep[:take]
        have += take
        if drawn > 1_000_000 and have < drawn / 1000:
            raise RuntimeError(
                f"rejection rate above 99.9% sampling {spec.cone}(k={spec.k}) "
                f"in dimension {d}; cone region unreachable at this scale")
    return out


def _push_to_boundary(spec, rng, block):
    """Move a sample toward the active constraint of its cone."""
    size, d = block.shape
    idx = rng.integers(0, d, size)
    rows = np.arange(size)
    if spec.cone == "horoconvex":
        block[rows, idx] = 1.0 + BOUNDARY_PUSH * np.abs(rng.standard_normal(size))
        return block
    if spec.cone == "nonneg":
        block[rows, idx] = BOUNDARY_PUSH * np.abs(rng.standard_normal(size))
        return block
    # Garding cones: contract one entry downward while membership survives,
    # keeping the last member found.
    order = min(_cone_order(spec), d)
    for _ in range(40):
        trial = block.copy()
        trial[rows, idx] = trial[rows, idx] - np.abs(trial[rows, idx]) * 0.5 - 0.05
        ok = cone_membership_batch(trial, order)
        block[ok] = trial[ok]
        if not np.any(ok):
            break
    return block


def sample(spec):
    """Draw the full (count, n-1) batch of spectra for a sampler spec."""
    blocks = []
    remaining = spec.count
    index = 0
    while remaining > 0:
        size = min(BLOCK, remaining)
        rng = _block_rng(spec.seed, index)
        block = _raw_block(spec, rng, size)
        nb = int(size * BOUNDARY_FRACTION)
        if nb > 0:
            block[size - nb :] = _push_to_boundary(spec, rng, block[size - nb :])
        blocks.append(block)
        remaining -= size
        index += 1
    return np.vstack(blocks)


def _shrink(spectrum, residual_fn, tolerance):
    """Contract a violating spectrum toward its isotropic mean while the
    violation persists; returns the last violating iterate."""
    best = spectrum
    best_res = float(residual_fn(spectrum[None, :])[0])
    center = np.full_like(spectrum, np.mean(spectrum))
    cur = spectrum
    for _ in range(60):
        cur = center + 0.5 * (cur - center)
        res = float(residual_fn(cur[None, :])[0])
        if res < -tolerance:
            best, best_res = cur, res
        else:
            break
    return best, best_res


def sweep(spec, checks, tolerance=1e-10):
    """Run residual checks over the sampled stream.

    ``checks`` maps name -> residual function (batch of spectra -> slack
    array; negative slack beyond tolerance is a violation).  Returns a
    summary dict and the list of ViolationRecord.
    """
    spectra = sample(spec)
    summary = {}
    violations = []
    for name, fn in checks.items():
        res = np.asarray(fn(spectra), dtype=np.float64)
        bad = np.flatnonzero(res < -tolerance)
        for i in bad:
            shrunk, sres = _shrink(spectra[i], fn, tolerance)
            violations.append(ViolationRecord(
                name, spectra[i].copy(), float(res[i]), shrunk, sres))
        summary[name] = {
            "count": int(spectra.shape[0]),
            "min_residual": float(np.min(res)),
            "violations": int(bad.size),
        }
    return summary, violations


def equality_atlas(residual_fn, n, grid=None):
    """Evaluate a residual function on the structured equality families.

    Families: isotropic c*(1,..,1) with c >= 1; one-spike (a,1,..,1); and
    two-spike (a,b,1,..,1) with a,b > 1, where the equality cases end and
    the residual should turn strictly positive.
    """
    d = n - 1
    grid = np.asarray(grid if grid is not None else [1.0, 1.3, 1.7, 2.5, 4.0])

    def fam(rows):
        return np.abs(np.asarray(residual_fn(np.asarray(rows)), dtype=np.float64))

    iso = fam([np.full(d, c) for c in grid])
    spike = fam([np.concatenate(([a], np.ones(d - 1))) for a in grid])
    two = np.asarray(residual_fn(np.asarray(
        [np.concatenate(([a], [b], np.ones(d - 2)))
         for a in grid[1:] for b in grid[1:]])), dtype=np.float64)
    return {
        "isotropic_max": float(np.max(iso)),
        "one_spike_max": float(np.max(spike)),
        "two_spike_min": float(np.min(two)),
        "equality_exact": bool(max(np.max(iso), np.max(spike)) < STRICT_FLOOR),
        "strict_on_two_spike": bool(np.min(two) > STRICT_FLOOR),
    }
