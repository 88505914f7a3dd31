"""Decompose a semantic dependency graph into association pairs.

Every non-root edge becomes a (governor, dependent, relation) triple, and
triples sharing a relation label form one group. Punctuation edges carry
no meaning, so the default denylist drops them before scoring.
"""

from sdpkey import RelationDenylist, SemEdge, SemGraph, Token, extract_relation_groups

# "The port resumed operation only after several weeks."
tokens = (
    Token(index=1, surface="港口", pos="n"),
    Token(index=2, surface="几", pos="m"),
    Token(index=3, surface="周", pos="q"),
    Token(index=4, surface="后", pos="nd"),
    Token(index=5, surface="才", pos="d"),
    Token(index=6, surface="恢复", pos="v"),
    Token(index=7, surface="运行", pos="v"),
    Token(index=8, surface="。", pos="wp"),
)
edges = (
    SemEdge(head=6, dep=1, relation="Exp"),    # who resumed: the port
    SemEdge(head=3, dep=2, relation="Meas"),   # how many: several weeks
    SemEdge(head=3, dep=4, relation="mDepd"),
    SemEdge(head=6, dep=3, relation="Time"),   # when: after the weeks
    SemEdge(head=6, dep=5, relation="mDepd"),
    SemEdge(head=6, dep=7, relation="Cont"),   # what resumed: operation
    SemEdge(head=0, dep=6, relation="Root"),   # virtual root, never scored
    SemEdge(head=6, dep=8, relation="mPunc"),  # punctuation, denylisted
)
graph = SemGraph(tokens=tokens, edges=edges, sentence="港口几周后才恢复运行。")

groups = extract_relation_groups(graph)
print(f"{graph.sentence}")
print(f"{len(graph.edges)} edges -> {sum(len(p) for p in groups.values())} scored pairs\n")
for relation, pairs in groups.items():
    for pair in pairs:
        print(f"  {relation:6s}  ({pair.head}, {pair.dep})")

# An empty denylist keeps the punctuation edge in play.
keep_all = extract_relation_groups(graph, RelationDenylist.of())
print(f"\nwithout the denylist: {sum(len(p) for p in keep_all.values())} pairs")
