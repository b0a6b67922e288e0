"""
Reproducible verification sweeps
================================

Random points of H_g come from SplitMix64 with a documented draw order, so a
seed fixes every sample in any implementation. The sweep runs each identity
family over those samples and reports one row per (identity, sample).
"""

from collections import Counter

from thetamod import SplitMix64, siegel_samples
from thetamod.sweep import SweepConfig, run_sweep

print("first draws, seed 0:", [hex(SplitMix64(0).next_u64())])
print("first g=2 sample, seed 42:\n", siegel_samples(2, 42, 1)[0].entries)

rows = list(run_sweep(SweepConfig(seed=1, samples=3)))
counts = Counter(r.family for r in rows)
fails = [r for r in rows if not r.passed]
print(f"{len(rows)} rows, {len(fails)} failures")
for family, n in counts.items():
    print(f"  {family:20s} {n}")
print(rows[0].csv())
