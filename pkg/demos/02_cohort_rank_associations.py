"""
Comparing index-induced rankings of a cohort
============================================

Rank the bundled immunology cohort by several indicators and measure how
much the orderings agree, using Spearman's coefficient, the normalised
footrule and the top-weighted M-measure.
"""

from bibindex import (
    Ranking,
    associate,
    load_bundled_dataset,
    m_measure,
    rank_descending,
)

dataset = load_bundled_dataset("immunology")
print(f"{dataset.discipline}: {len(dataset.rows)} researchers\n")

# fractional ranks: the two h = 93 researchers share ranks 4 and 5
h_ranking = rank_descending(dataset.column("h"), index_name="h", ids=dataset.names)
for name, rank in sorted(zip(h_ranking.ids, h_ranking.ranks), key=lambda x: x[1])[:6]:
    print(f"  h rank {rank:>4}: {name}")
print()

# pairwise association between the citation-sum style indices and h
for left in ("T", "h", "g"):
    left_ranking = rank_descending(dataset.column(left), index_name=left, ids=dataset.names)
    for right in ("j", "jS"):
        right_ranking = rank_descending(dataset.column(right), index_name=right,
                                        ids=dataset.names)
        rep = associate(left_ranking, right_ranking)
        print(f"{left:>2} vs {right:>2}: spearman {rep.spearman:.3f}({rep.significance.marker})  "
              f"footrule {rep.footrule:.3f}  M {rep.m_measure:.3f}")
print()

# The M-measure cares most about the top of the list.  Swapping the top
# two researchers moves it far more than swapping the bottom two.
base = rank_descending(range(20, 0, -1), index_name="base")
top_swapped = list(range(1, 21))
top_swapped[0], top_swapped[1] = top_swapped[1], top_swapped[0]
bottom_swapped = list(range(1, 21))
bottom_swapped[-1], bottom_swapped[-2] = bottom_swapped[-2], bottom_swapped[-1]

top = Ranking("top", base.ids, tuple(float(r) for r in top_swapped))
bottom = Ranking("bottom", base.ids, tuple(float(r) for r in bottom_swapped))
print(f"M after swapping ranks 1,2   : {m_measure(base, top):.4f}")
print(f"M after swapping ranks 19,20 : {m_measure(base, bottom):.4f}")
