"""Score one hypothesis translation against one reference end to end.

The final score averages two views of the sentence pair: the dependency
graph comparison and the weighted keyword comparison. A lexicon provider
lets near-synonyms earn partial credit instead of zero.
"""

from sdpkey import (
    AnnotatedSentence,
    ExactMatchProvider,
    KeywordSet,
    LexiconProvider,
    SemEdge,
    SemGraph,
    Token,
    score_pair,
)


def annotated(text, words, edges, keywords):
    tokens = tuple(
        Token(index=i, surface=w, pos="x") for i, w in enumerate(words, start=1)
    )
    graph = SemGraph(
        tokens=tokens,
        edges=tuple(SemEdge(head=h, dep=d, relation=r) for h, d, r in edges),
        sentence=text,
    )
    return AnnotatedSentence(text=text, graph=graph, keywords=KeywordSet.from_pairs(keywords))


EDGES = [(2, 1, "Agt"), (2, 3, "Pat"), (0, 2, "Root"), (2, 4, "mPunc")]

reference = annotated(
    "猫吃鱼。", ["猫", "吃", "鱼", "。"], EDGES, [("猫", 0.8), ("鱼", 0.6)]
)
hypothesis = annotated(
    "狗吃鱼。", ["狗", "吃", "鱼", "。"], EDGES, [("狗", 0.8), ("鱼", 0.6)]
)

lexicon = LexiconProvider(
    codes={"猫": ("Bi07Aa",), "狗": ("Bi07Ab",), "鱼": ("Bi08Aa",)}
)

for name, provider in (("exact", ExactMatchProvider()), ("lexicon", lexicon)):
    breakdown = score_pair(provider, reference, hypothesis)
    print(f"[{name}]")
    print(f"  sim_de = {breakdown.sim_de:.4f}")
    print(f"  sim_kw = {breakdown.sim_kw:.4f}")
    print(f"  final  = {breakdown.final:.4f}")
    for match in breakdown.matched_keyword_pairs:
        print(f"    {match.ref_word} ~ {match.hyp_word}  sim={match.similarity:.2f}")
    print()

# Keywordless scoring falls back to the graph component alone.
bare = score_pair(lexicon, reference, hypothesis, use_keywords=False)
print(f"graph only: sim_kw={bare.sim_kw}  final={bare.final:.4f}")
