"""The executable theorem suite.

Every identity the library claims is checked as an exact polynomial
equality on seeded random instances; a failing seed reproduces the
instance deterministically.
"""

from rgpoly import run_suite

for report, size in run_suite(["main", "identities", "duality", "bracket"],
                              count=5, seed=7, max_size=5):
    print(report.line(size))
