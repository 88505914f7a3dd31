"""Surface-overlap baselines versus the graph metric.

BLEU counts n-gram overlap and the vector-space cosine counts shared
words, so both reward surface similarity. The graph comparison instead
keys on who did what to whom, which survives word-order paraphrase.
"""

from sdpkey import ExactMatchProvider, SemEdge, SemGraph, Token, bleu, sim_de, vsm_cosine

ref = ("a", "b", "c", "d")
hyp = ("a", "b", "c", "e")
print(f"BLEU {ref} vs {hyp}: {bleu(ref, hyp):.4f}")
print(f"BLEU identical:      {bleu(ref, ref):.4f}")
print(f"BLEU disjoint:       {bleu(ref, ('x', 'y', 'z', 'w')):.4f}\n")

print(f"cosine ('a a b') vs ('a b b'): {vsm_cosine(('a', 'a', 'b'), ('a', 'b', 'b')):.4f}")
print(f"cosine identical bags:         {vsm_cosine(ref, ref):.4f}\n")


def graph(words, edges):
    tokens = tuple(
        Token(index=i, surface=w, pos="x") for i, w in enumerate(words, start=1)
    )
    return SemGraph(
        tokens=tokens,
        edges=tuple(SemEdge(head=h, dep=d, relation=r) for h, d, r in edges),
        sentence=" ".join(words),
    )


# Passive-order paraphrase: same event, different word order. The n-gram
# baseline collapses while the graph score holds as long as the analyses
# agree on the roles.
active = graph(["狗", "追", "猫"], [(2, 1, "Agt"), (2, 3, "Pat"), (0, 2, "Root")])
passive = graph(["猫", "被", "狗", "追"], [(4, 3, "Agt"), (4, 1, "Pat"), (4, 2, "mDepd"), (0, 4, "Root")])

provider = ExactMatchProvider()
print(f"word order paraphrase:")
print(f"  BLEU   {bleu(active.surfaces, passive.surfaces):.4f}")
print(f"  cosine {vsm_cosine(active.surfaces, passive.surfaces):.4f}")
print(f"  sim_de {sim_de(provider, active, passive):.4f}")
