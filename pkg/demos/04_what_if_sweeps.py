"""What-if sweeps: how sensitive is a verdict to the observer's choices?

Weights are subjective, so it pays to know how far they can move before
the classification flips.  A sweep re-runs the evaluation across a grid
for one weight (the other two rescale proportionally) or one observed
property value, and reports the first flip.
"""

import pathlib

import trustrel as tr

REPO = pathlib.Path(__file__).resolve().parents[1]
catalog = tr.default_catalog()

# A hostile decade between two rivals, scored at 45:10:45.
rival = tr.load_assessment(REPO / "fixtures" / "rival_pair_1950s.json")
weights = tr.WeightVector(0.45, 0.10, 0.45)

spec = tr.SensitivitySpec("weight", "hostile", start=0.45, stop=0.05, step=0.05)
result = tr.run_whatif(catalog, rival, weights, spec, mode="free")
print("sweep: hostile weight from 0.45 down to 0.05")
print(result.to_text())
print()

# The verdict survives until the hostile weight drops to 0.20 --
# an observer would have to discount hostility heavily to see neutral.

# Second sweep: fade out the war-ally evidence in the friendly case.
usa = tr.load_assessment(REPO / "fixtures" / "usa_gbr_2001_2005.json")
spec = tr.SensitivitySpec("property", "f.P1", start=0.5, stop=0.0, step=0.1)
result = tr.run_whatif(catalog, usa, tr.WeightVector(0.40, 0.20, 0.40), spec)
print("sweep: wartime-alliance evidence from 0.5 down to 0")
print(result.to_text())
print()
print("even with the alliance evidence gone the relation stays friendly:")
print("the remaining friendly and neutral evidence keeps the score above the band.")
