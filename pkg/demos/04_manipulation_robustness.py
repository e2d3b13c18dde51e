"""
How hard is the j-index to game?
================================

A researcher could try to inflate a sum-over-all-papers index by adding
publications that each attract a single (possibly self-) citation.  Two
stress tests make the exposure measurable:

  * drop_singletons -- delete every publication with exactly one citation;
  * decrement_all   -- take one citation away from every publication.

Each singleton contributes exactly sqrt(1) = 1 to j, so removing s of
them lowers j by exactly s, and the cohort ranking barely moves.
"""

import random

from bibindex import (
    CitationRecord,
    ManipulationMode,
    apply_manipulation,
    emit_report,
    h_index,
    j_index,
    manipulation_report,
)

rng = random.Random(7)


def synthetic(name, scale, singletons):
    counts = sorted((rng.randint(2, scale) for _ in range(30)), reverse=True)
    return CitationRecord.from_counts(name, list(counts) + [1] * singletons)


cohort = [
    synthetic("arden", 400, 25),
    synthetic("blake", 380, 2),
    synthetic("cusak", 300, 40),
    synthetic("dietz", 260, 0),
    synthetic("ekman", 150, 60),
    synthetic("friel", 120, 5),
]

print("per-researcher effect of dropping singleton papers:")
for record in cohort:
    stripped = apply_manipulation(record, ManipulationMode.DROP_SINGLETONS)
    singletons = sum(1 for c in record.counts if c == 1)
    print(f"  {record.researcher_id}: j {j_index(record):8.2f} -> {j_index(stripped):8.2f}"
          f"  (delta {j_index(record) - j_index(stripped):5.2f} = {singletons} singletons,"
          f"  h {h_index(record)} -> {h_index(stripped)})")
print()

print(emit_report(manipulation_report(cohort, ManipulationMode.DROP_SINGLETONS, "j"), "plain"))
print()
print(emit_report(manipulation_report(cohort, ManipulationMode.DECREMENT_ALL, "j"), "plain"))
print()

# The h-index moves by at most one under decrement_all; j moves in value
# but the *relative* ordering is stable unless two researchers were close
# to begin with.
