"""Evaluate competing systems over a small corpus.

Each group carries one reference and several system outputs plus the
human-marked best system. A group counts as a hit when the metric's
top-scoring system agrees with the human choice; precision is the hit
rate over all groups. Reports land in a temp directory as JSON and CSV.
"""

import tempfile
from pathlib import Path

from sdpkey import (
    AnnotatedSentence,
    CorpusGroup,
    ExactMatchProvider,
    KeywordSet,
    SemEdge,
    SemGraph,
    SystemOutput,
    Token,
    emit_report_csv,
    emit_report_json,
    evaluate_corpus,
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


SVO = [(2, 1, "Agt"), (2, 3, "Pat"), (0, 2, "Root"), (2, 4, "mPunc")]


def group(gid, source, ref_words, best, outputs):
    reference = annotated("".join(ref_words) + "。", ref_words + ["。"], SVO,
                          [(ref_words[0], 0.8), (ref_words[2], 0.6)])
    systems = tuple(
        SystemOutput(
            name=name,
            sentence=annotated("".join(words) + "。", words + ["。"], SVO,
                               [(words[0], 0.8), (words[2], 0.6)]),
        )
        for name, words in outputs
    )
    return CorpusGroup(id=gid, source_text=source, reference=reference,
                       systems=systems, human_best=best)


groups = [
    group("g1", "The cat eats fish.", ["猫", "吃", "鱼"], "alpha",
          [("alpha", ["猫", "吃", "鱼"]), ("beta", ["狗", "吃", "鱼"])]),
    group("g2", "He writes letters.", ["他", "写", "信"], "beta",
          [("alpha", ["他", "读", "书"]), ("beta", ["他", "写", "信"])]),
    group("g3", "Birds eat worms.", ["鸟", "吃", "虫"], "alpha",
          [("alpha", ["鸟", "吃", "虫"]), ("beta", ["鸟", "看", "虫"])]),
    # Deliberate trap: the human preferred beta but alpha copies the
    # reference, so the metric picks alpha and this group misses.
    group("g4", "Dogs chase cats.", ["狗", "追", "猫"], "beta",
          [("alpha", ["狗", "追", "猫"]), ("beta", ["狗", "追", "车"])]),
]

report = evaluate_corpus(ExactMatchProvider(), groups)
print(f"precision: {report.precision:.4f}")
for metric, value in report.precision_by_metric.items():
    print(f"  {metric:7s} {value:.4f}")

print("\nper-system stats (mean final score):")
for name in sorted(report.per_system):
    stats = report.per_system[name]
    print(f"  {name}: final={stats.final_mean:.4f} var={stats.final_variance:.4f}")

out = Path(tempfile.mkdtemp(prefix="sdpkey-demo-"))
(out / "report.json").write_text(emit_report_json(report, "sdpkey"), encoding="utf-8")
(out / "report.csv").write_text(emit_report_csv(report, "sdpkey"), encoding="utf-8")
print(f"\nreports written to {out}")
print((out / "report.csv").read_text(encoding="utf-8"))
