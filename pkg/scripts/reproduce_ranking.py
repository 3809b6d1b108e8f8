"""Print the worked hybrid scores and the resulting query ranking for the
bundled ten-site corpus.

    python scripts/reproduce_ranking.py [--text Pasta]
"""

import argparse

from linkrank import HybridWeights, hybrid_score, paper_fixture, rank_query

WORKED = ("FoodWorld", "StudyJava", "TennisPro", "Travelogue", "Socialize")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--text", default="Pasta")
    args = parser.parse_args()

    g = paper_fixture()
    w = HybridWeights()
    print(f"query={args.text!r} s={w.s} vl={w.vl} ga={w.ga} d={w.d}")
    for p in WORKED:
        rec = g.page(p)
        print(f"{p:<12} in={g.in_degree(p)} out={g.out_degree(p)} hits={rec.hits:>5}  "
              f"score={hybrid_score(g, p, args.text, w):.3f}")
    print()
    for row in rank_query(g, args.text, w):
        marker = "*" if row.page in WORKED else " "
        print(f"{row.rank:>2} {marker} {row.page:<15} {row.score:.4f}")


if __name__ == "__main__":
    main()
