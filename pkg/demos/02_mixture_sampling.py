"""Sampling from the Gaussian / Student-t mixture.

Shows the property the whole study rests on: changing the mixture weight
changes tail heaviness dramatically while leaving the correlation structure
(and therefore the sign-coincidence probabilities) untouched.
"""

import numpy as np

import netstab as ns

scale = ns.load_scale_matrix(ns.fixture_path("uk2010"))
n = 100_000

print("mixture weight = probability of the Gaussian component")
print(f"{'weight':>7} {'P(|X_1|>3)':>12} {'corr(5,6)':>10} {'sign(5,6)':>10}")
for weight in (0.0, 0.5, 1.0):
    model = ns.MixtureModel(location=np.zeros(10), scale=scale, df=3, gaussian_weight=weight)
    sample = ns.draw_mixture(model, n, np.random.default_rng(160))
    tail = float(np.mean(np.abs(sample.data[0]) > 3.0))
    est_p = ns.pearson_sample(sample)
    est_s = ns.sign_sample(sample, np.zeros(10))
    print(f"{weight:>7.1f} {tail:>12.5f} {est_p.values[4, 5]:>10.4f} {est_s.values[4, 5]:>10.4f}")

print("\ntrue values:                      "
      f"{0.49:>10.4f} {float(ns.sign_probability(0.49)):>10.4f}")
print("""
The Gaussian tail beyond 3 is ~0.0013 per side; the pure Student-t(3) column
shows an order of magnitude more mass out there.  Yet both estimated
dependence matrices stay on target for every weight: the scalar that fattens
the tails multiplies whole observation vectors, so it cancels from both the
correlation and the sign of every product.
""")

# Reproducibility: a (seed, model, n) triple pins the sample bit for bit.
model = ns.MixtureModel(location=np.zeros(10), scale=scale, df=3, gaussian_weight=0.5)
a = ns.draw_mixture(model, 1000, np.random.default_rng(7)).data
b = ns.draw_mixture(model, 1000, np.random.default_rng(7)).data
print("same seed reproduces the sample exactly:", bool(np.array_equal(a, b)))
