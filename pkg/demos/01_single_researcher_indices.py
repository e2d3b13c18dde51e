"""
Indicators for a single researcher
==================================

Two researchers with the same citation total can have very different
publication patterns.  This script walks through the classic contrast:
alpha published one paper with 100 citations, beta published ten papers
with 10 citations each.
"""

from bibindex import (
    CitationRecord,
    h_core_partition,
    index_profile,
    smooth,
)

# one very highly cited paper versus ten solid ones
alpha = CitationRecord.from_counts("alpha", [100])
beta = CitationRecord.from_counts("beta", [10] * 10)

print("profile fields: T, h, g, A, R, j, jS\n")
for record in (alpha, beta):
    p = index_profile(record)
    print(f"{record.researcher_id}: T={p.total_citations}  h={p.h}  g={p.g}  "
          f"A={float(p.a):.2f}  R={p.r:.2f}  j={p.j:.2f}  jS={p.js:.2f}")

# Both have T = 100 and (with zero-padding allowed) g = 10.  The h-index
# splits them hard: 1 versus 10.  The j-index separates them too, but
# keeps alpha's big paper worth something: sqrt(100) = 10 versus
# 10*sqrt(10) = 31.6.
print()

# A researcher with a long tail of modest papers gets credit for all of
# them, which the h-core based indicators ignore by construction.
tail = CitationRecord.from_counts("tail", [10] * 10 + [4] * 30)
p = index_profile(tail)
print(f"tail: h={p.h} (unmoved by the 30 extra papers), j={p.j:.2f}")
print()

# The smoothing operator replaces each count with the mean of the counts
# up to that rank; the first value is the maximum, the last the average.
counts = [10, 8, 5, 4, 3]
print(f"counts           : {counts}")
print(f"smoothed         : {[round(v, 3) for v in smooth(counts)]}")
record = CitationRecord.from_counts("demo", counts)
p = index_profile(record)
print(f"j vs jS          : {p.j:.3f} vs {p.js:.3f} (smoothing lifts the tail)")
print()

# The h-core partition shows where the citations live: h1 inside the
# core, h2 = h^2 the minimum the h-index certifies, h3 the excess, h4
# outside the core.
part = h_core_partition(record)
print(f"h-core partition : H=({part.h1}, {part.h2}, {part.h3}, {part.h4})")
print(f"as proportions   : G=({part.g1:.3f}, {part.g2:.3f}, {part.g3:.3f}, {part.g4:.3f})")
