"""rentlab: short-term-rental price modeling pipeline.

Tabular wrangling, geospatial/amenity feature engineering, lexicon sentiment
scoring, five from-scratch regression families, univariate and greedy feature
selection, Shapley explanations, and a seeded evaluation harness, plus a
synthetic data generator with a known ground-truth price function.
"""

__version__ = "0.1.0"
