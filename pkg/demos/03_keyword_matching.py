"""Match two weighted keyword lists greedily and score the agreement.

The similarity matrix has one row per reference keyword and one column per
hypothesis keyword. Each step takes the largest remaining cell and retires
its row and column; the final score is the weight-averaged similarity of
the matched pairs.
"""

from sdpkey import (
    KeywordSet,
    LexiconProvider,
    keyword_similarity,
    match_keywords,
    similarity_matrix,
)

# Tiny in-memory thesaurus: code prefixes shared to more levels mean
# closer senses (1/1/2/1/1 level widths, five levels in total).
provider = LexiconProvider(
    codes={
        "港口": ("Cb25Aa",),
        "码头": ("Cb25Ab",),   # same family as 港口: 4 shared levels
        "恢复": ("If09Aa",),
        "运行": ("Hj12Aa",),
        "运转": ("Hj12Ab",),   # near-synonym of 运行
    }
)

ref = KeywordSet.from_pairs([("恢复", 0.73), ("港口", 0.68), ("运行", 0.62)])
hyp = KeywordSet.from_pairs([("码头", 0.71), ("恢复", 0.69), ("运转", 0.55)])

matrix = similarity_matrix(provider, ref, hyp)
print("similarity matrix (rows ref, cols hyp):")
print("        " + "  ".join(f"{e.word}" for e in hyp))
for row, entry in zip(matrix, ref):
    print(f"  {entry.word}  " + "  ".join(f"{v:.2f}" for v in row))

print("\ngreedy matches:")
for match in match_keywords(provider, ref, hyp):
    print(
        f"  {match.ref_word} ~ {match.hyp_word}"
        f"  sim={match.similarity:.2f} weight={match.weight:.3f}"
    )

score = keyword_similarity(provider, ref, hyp)
print(f"\nweighted keyword similarity: {score.value:.4f}")

# Weights matter: the same matches scored against a low-weight reference
# keyword pull the total toward the heavier pairs.
light = KeywordSet.from_pairs([("恢复", 0.73), ("港口", 0.05), ("运行", 0.62)])
print(f"with 港口 nearly weightless:  {keyword_similarity(provider, light, hyp).value:.4f}")
