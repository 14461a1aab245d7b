"""A reduced stability experiment, end to end.

For each mixture weight: sample returns, estimate both networks from the
same draws, compare the degree distribution of the thresholded graph with
the truth, and average over replications.  The Pearson curve degrades as the
returns get heavier-tailed (weight toward 0); the sign curve stays flat.

Writes the curve CSV and config sidecar next to this script, in the exact
format the command-line `netstab experiment` emits.
"""

from pathlib import Path

import netstab as ns

config = ns.ExperimentConfig(
    lambda_source="uk2010",
    characteristic=ns.Characteristic.DEGREES,
    n=100,
    replications=500,
    gamma_grid=(0.0, 0.25, 0.5, 0.75, 1.0),
    thresholds=(0.3,),
    nu=3,
    seed=20260825,
)

pearson_curve, sign_curve = ns.run_experiment(config)

print("degree-distribution divergence vs mixture weight (truth: uk2010, n=100)")
print(f"{'weight':>7} {'pearson':>10} {'sign':>10}")
for p, s in zip(pearson_curve.points, sign_curve.points):
    print(f"{p.gamma:>7.2f} {p.mean_divergence:>10.3f} {s.mean_divergence:>10.3f}")

for curve in (pearson_curve, sign_curve):
    spread, normalized = ns.summarize_flatness(curve)
    print(f"\n{curve.measure_kind.value} curve spread: {spread:.3f} "
          f"({normalized:.1%} of its mean level)")

out = Path(__file__).with_name("stability_curves.csv")
ns.write_curves_csv(out, (pearson_curve, sign_curve), config)
print(f"\nwrote {out.name} and {out.stem}.config.json")
print("re-running this script reproduces both files byte for byte")
