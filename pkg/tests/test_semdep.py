import numpy as np
import pytest

from sdpkey.ingest import extract_relation_groups, parse_sdp_json
from sdpkey.model import AssociationPair, SemEdge, SemGraph
from sdpkey.semdep import (
    compare_graphs,
    compare_groups,
    directional_scores,
    pair_similarity,
    relation_score,
    sim_de,
)
from sdpkey.wordsim import ExactMatchProvider

from support import HashSimProvider, brute_force_directional, random_graph, random_groups


def pair(head, dep, rel="Agt"):
    return AssociationPair(head=head, dep=dep, relation=rel)


class TestPairSimilarity:
    def test_identical(self, exact):
        assert pair_similarity(exact, pair("吃", "猫"), pair("吃", "猫")) == 1.0

    def test_half_match(self, exact):
        assert pair_similarity(exact, pair("吃", "猫"), pair("吃", "狗")) == 0.5

    def test_disjoint(self, exact):
        assert pair_similarity(exact, pair("吃", "猫"), pair("飞", "鸟")) == 0.0

    def test_symmetric(self):
        provider = HashSimProvider(3)
        a, b = pair("吃", "猫"), pair("写", "信")
        assert pair_similarity(provider, a, b) == pair_similarity(provider, b, a)


class TestRelationScore:
    def test_targets_are_reusable(self, exact):
        # both source pairs match the single target pair's head word
        source = [pair("吃", "猫"), pair("吃", "狗")]
        target = [pair("吃", "鱼")]
        assert relation_score(exact, source, target) == 0.5

    def test_each_source_takes_its_best_target(self, exact):
        source = [pair("吃", "猫"), pair("写", "信")]
        target = [pair("写", "信"), pair("吃", "猫")]
        assert relation_score(exact, source, target) == 1.0

    def test_empty_target_scores_zero(self, exact):
        assert relation_score(exact, [pair("吃", "猫")], []) == 0.0

    def test_empty_source_rejected(self, exact):
        with pytest.raises(ValueError):
            relation_score(exact, [], [pair("吃", "猫")])


class TestDirectionalScores:
    def test_missing_relation_scores_zero(self, exact):
        source = {"Agt": (pair("吃", "猫"),)}
        assert directional_scores(exact, source, {}) == {"Agt": 0.0}

    def test_oracle_agreement_exact_provider(self, exact):
        rng = np.random.default_rng(11)
        for _ in range(300):
            source = random_groups(rng)
            target = random_groups(rng)
            assert directional_scores(exact, source, target) == (
                brute_force_directional(exact, source, target)
            )

    def test_oracle_agreement_graded_provider(self):
        provider = HashSimProvider(5)
        rng = np.random.default_rng(13)
        for _ in range(300):
            source = random_groups(rng)
            target = random_groups(rng)
            assert directional_scores(provider, source, target) == (
                brute_force_directional(provider, source, target)
            )


class TestCompareGroups:
    def test_both_empty_is_one(self, exact):
        score = compare_groups(exact, {}, {})
        assert score.value == 1.0
        assert score.forward == score.backward == 1.0

    def test_one_empty_is_zero(self, exact):
        groups = {"Agt": (pair("吃", "猫"),)}
        assert compare_groups(exact, groups, {}).value == 0.0
        assert compare_groups(exact, {}, groups).value == 0.0

    def test_identity(self, exact):
        groups = {"Agt": (pair("吃", "猫"),), "Pat": (pair("吃", "鱼"),)}
        score = compare_groups(exact, groups, groups)
        assert score.value == 1.0

    def test_value_is_mean_of_directions(self, exact):
        ref = {"Agt": (pair("吃", "猫"),)}
        hyp = {"Agt": (pair("吃", "猫"),), "Pat": (pair("吃", "鱼"),)}
        score = compare_groups(exact, ref, hyp)
        assert score.forward == 1.0
        assert score.backward == 0.5
        assert score.value == 0.75

    def test_symmetry_random(self):
        provider = HashSimProvider(17)
        rng = np.random.default_rng(19)
        for _ in range(300):
            a = random_groups(rng)
            b = random_groups(rng)
            assert compare_groups(provider, a, b).value == (
                compare_groups(provider, b, a).value
            )

    def test_range_random(self):
        provider = HashSimProvider(23)
        rng = np.random.default_rng(29)
        for _ in range(300):
            a = random_groups(rng)
            b = random_groups(rng)
            score = compare_groups(provider, a, b)
            assert 0.0 <= score.value <= 1.0
            assert 0.0 <= score.forward <= 1.0
            assert 0.0 <= score.backward <= 1.0


class TestCompareGraphs:
    def test_addition_penalty(self, fixtures, exact):
        ref = parse_sdp_json((fixtures / "tv_ref.sdp.json").read_text())
        hyp = parse_sdp_json((fixtures / "tv_hyp.sdp.json").read_text())
        score = compare_graphs(exact, ref, hyp)
        assert score.forward == 1.0
        assert score.backward == 0.5
        assert score.value == 0.75

    def test_graph_identity(self, fixtures, exact):
        graph = parse_sdp_json((fixtures / "gangkou.sdp.json").read_text())
        assert sim_de(exact, graph, graph) == 1.0

    def test_punctuation_edges_do_not_move_scores(self, fixtures, exact):
        ref = parse_sdp_json((fixtures / "tv_ref.sdp.json").read_text())
        hyp = parse_sdp_json((fixtures / "tv_hyp.sdp.json").read_text())
        noisy_ref = SemGraph(
            tokens=ref.tokens,
            edges=ref.edges + (SemEdge(head=1, dep=5, relation="mPunc"),),
            sentence=ref.sentence,
        )
        noisy_hyp = SemGraph(
            tokens=hyp.tokens,
            edges=hyp.edges + (SemEdge(head=3, dep=4, relation="mPunc"),),
            sentence=hyp.sentence,
        )
        baseline = sim_de(exact, ref, hyp)
        assert sim_de(exact, noisy_ref, hyp) == baseline
        assert sim_de(exact, ref, noisy_hyp) == baseline
        assert sim_de(exact, noisy_ref, noisy_hyp) == baseline

    def test_random_graphs_range_and_symmetry(self, exact):
        rng = np.random.default_rng(31)
        for _ in range(200):
            a = random_graph(rng)
            b = random_graph(rng)
            forward = sim_de(exact, a, b)
            assert 0.0 <= forward <= 1.0
            assert forward == sim_de(exact, b, a)

    def test_scoff_fixture_scores_low(self, fixtures, exact):
        ref = parse_sdp_json((fixtures / "scoff_ref.sdp.json").read_text())
        hyp = parse_sdp_json((fixtures / "scoff_hyp.sdp.json").read_text())
        value = sim_de(exact, ref, hyp)
        assert value < 0.5
        golden = float((fixtures / "golden" / "scoff_sim_de.txt").read_text().strip())
        assert value == golden

    def test_scoff_directional_detail(self, fixtures, exact):
        ref = parse_sdp_json((fixtures / "scoff_ref.sdp.json").read_text())
        hyp = parse_sdp_json((fixtures / "scoff_hyp.sdp.json").read_text())
        score = compare_graphs(exact, ref, hyp)
        assert score.forward_relations["Loc"] == 1.0
        assert score.forward_relations["mAux"] == 0.5
        assert score.forward_relations["Agt"] == 0.0

    def test_relation_groups_feed_comparison(self, fixtures, exact):
        # comparing graphs equals comparing their extracted groups
        ref = parse_sdp_json((fixtures / "tv_ref.sdp.json").read_text())
        hyp = parse_sdp_json((fixtures / "tv_hyp.sdp.json").read_text())
        direct = compare_graphs(exact, ref, hyp)
        via_groups = compare_groups(
            exact, extract_relation_groups(ref), extract_relation_groups(hyp)
        )
        assert direct == via_groups
