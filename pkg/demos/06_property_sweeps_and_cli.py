"""Randomized inequality sweeps with shrinking, plus the check registry
behind the command-line driver.

Run with: python3 demos/06_property_sweeps_and_cli.py
"""

import numpy as np

from warpcurv import gaussbonnet as gb, registry, sampling
from warpcurv.sampling import SamplerSpec
from warpcurv.symfunc import nm_residuals, normalized_h_batch

# Deterministic sweeps: Philox substreams keyed per block, so the same
# seed always yields the same stream regardless of scheduling.
spec = SamplerSpec("garding", 8, 50_000, seed=42, k=3)
summary, violations = sampling.sweep(
    spec, {"newton-maclaurin": lambda sp: nm_residuals(sp, 3)})
print("sweep summary:", summary)

# Plant a false inequality to see the shrinker in action: it contracts a
# violating spectrum toward its isotropic mean while the violation
# persists, producing a small readable witness.
def bogus(sp):
    H = normalized_h_batch(sp)
    return H[:, 2] - H[:, 1] ** 2 - 0.01

_, violations = sampling.sweep(
    SamplerSpec("horoconvex", 6, 2000, seed=7), {"bogus": bogus})
rec = violations[0]
print("\nplanted violation witness:")
print("  original:", np.round(rec.spectrum, 3), " residual", f"{rec.residual:.4f}")
print("  shrunk:  ", np.round(rec.shrunk, 3), " residual",
      f"{rec.shrunk_residual:.4f}")

# Structured equality families around an inequality's equality case.
atlas = sampling.equality_atlas(
    lambda sp: gb.refined_nm_residuals(sp, 2), 8)
print("\nequality atlas:", atlas)

# Everything above is also wired into a named check registry; the CLI
# (`warpcurv run`, `warpcurv list-checks`, `warpcurv model-inspect`)
# drives these same runners from a TOML config and writes report.json
# plus per-suite CSVs.
print("\nregistered suites:", registry.suites())
for check in registry.get_suite("oracles"):
    print(f"  {check.name:24s} {check.anchor}")
