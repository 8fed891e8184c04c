"""Refine the three-way verdict into finer labelled bands.

Rather than adding new evidence categories (which would force the
catalogs to be rebuilt), a band table maps the final score onto finer
labels.  Every band must stay inside its parent category's region, so
the refinement can never contradict the coarse classification.
"""

import pathlib

import trustrel as tr

REPO = pathlib.Path(__file__).resolve().parents[1]

weights = tr.WeightVector(0.45, 0.10, 0.45)
bounds = tr.compute_bounds(weights)
print(f"scale [{bounds.lower:+.2f}, {bounds.upper:+.2f}], "
      f"neutral band [{bounds.middle_band_low:.2f}, {bounds.middle_band_high:.2f}]")

# A seven-band refinement: three hostile shades, neutral, three friendly.
table = tr.load_band_table(REPO / "fixtures" / "septuple_bands.json")
table.validate_against(bounds)
for band in table.bands:
    print(f"  [{band.low:+.2f}, {band.high:+.2f})  {band.label:<14} under {band.parent}")
print()

catalog = tr.default_catalog()
rival = tr.load_assessment(REPO / "fixtures" / "rival_pair_1950s.json")
masses = tr.aggregate_masses(rival, catalog, mode="free")
evaluation = tr.evaluate(masses, weights, bands=table)
print(f"trust mass {evaluation.trust_mass:+.4f}")
print(f"coarse label: {evaluation.label}")
print(f"fine label:   {evaluation.band_label}")
print()

# The parent of the fine label always agrees with the coarse verdict.
for score in (-0.40, -0.20, -0.05, 0.05, 0.20, 0.45):
    coarse = tr.classify(score, bounds)
    fine = tr.classify_extended(score, table)
    print(f"score {score:+.2f}: {fine:<14} ({coarse})")
