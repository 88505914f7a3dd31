"""Compare sentences through their dependency graphs.

The graph score is direction aware: reference to hypothesis measures
coverage, hypothesis to reference punishes additions. The reported value
is the mean of the two directions.
"""

from sdpkey import ExactMatchProvider, SemEdge, SemGraph, Token, compare_graphs


def graph(sentence, words, edges):
    tokens = tuple(
        Token(index=i, surface=w, pos="x") for i, w in enumerate(words, start=1)
    )
    return SemGraph(
        tokens=tokens,
        edges=tuple(SemEdge(head=h, dep=d, relation=r) for h, d, r in edges),
        sentence=sentence,
    )


provider = ExactMatchProvider()

# "Grandpa saw Xiaoming."
ref = graph(
    "爷爷看到了小明。",
    ["爷爷", "看到", "了", "小明", "。"],
    [(2, 1, "Agt"), (2, 4, "Pat"), (2, 3, "mTime"), (0, 2, "Root"), (2, 5, "mPunc")],
)

# Same event plus "on television": every reference pair is still covered,
# but the extra location material has no counterpart in the reference.
hyp = graph(
    "在电视上，爷爷看到了小明。",
    ["在", "电视", "上", "，", "爷爷", "看到", "了", "小明", "。"],
    [
        (6, 5, "Agt"), (6, 8, "Pat"), (6, 7, "mTime"),
        (6, 2, "Loc"), (2, 1, "mPrep"), (2, 3, "mDepd"),
        (6, 4, "mPunc"), (0, 6, "Root"), (6, 9, "mPunc"),
    ],
)

score = compare_graphs(provider, ref, hyp)
print(f"ref: {ref.sentence}")
print(f"hyp: {hyp.sentence}")
print(f"forward  (coverage)  {score.forward:.4f}")
print(f"backward (additions) {score.backward:.4f}")
print(f"combined             {score.value:.4f}\n")

for relation, value in score.backward_relations.items():
    print(f"  backward {relation:6s} {value:.3f}")

# Identical graphs score 1.0 in both directions.
print(f"\nself comparison: {compare_graphs(provider, ref, ref).value:.1f}")
