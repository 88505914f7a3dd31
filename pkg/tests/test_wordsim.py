import numpy as np
import pytest
from hypothesis import given, strategies as st

from sdpkey.errors import LoadError
from sdpkey.wordsim import (
    EmbeddingProvider,
    ExactMatchProvider,
    FusionProvider,
    LexiconProvider,
    load_embeddings,
    load_lexicon,
    sw,
)

words = st.text(alphabet="abc猫狗鱼", min_size=1, max_size=4)


class TestSw:
    def test_identical_words_short_circuit(self):
        class Biased:
            def knows(self, word):
                return True

            def similarity(self, a, b):
                return 0.2

        assert sw(Biased(), "猫", "猫") == 1.0

    def test_unknown_pair_falls_back_to_exact(self):
        lex = LexiconProvider({"猫": ("Bi07Aa",)})
        assert sw(lex, "猫", "犬") == 0.0
        assert sw(lex, "犬", "犬") == 1.0

    def test_result_clamped(self):
        class Wild:
            def knows(self, word):
                return True

            def similarity(self, a, b):
                return 7.0

        assert sw(Wild(), "a", "b") == 1.0

    @given(words, words)
    def test_range_and_symmetry_exact(self, a, b):
        provider = ExactMatchProvider()
        value = sw(provider, a, b)
        assert 0.0 <= value <= 1.0
        assert value == sw(provider, b, a)


class TestExactMatch:
    def test_values(self):
        provider = ExactMatchProvider()
        assert provider.similarity("猫", "猫") == 1.0
        assert provider.similarity("猫", "狗") == 0.0
        assert provider.knows("anything")


class TestLexicon:
    def test_adjacent_codes(self):
        lex = LexiconProvider({"a": ("Aa01Aa",), "b": ("Aa01Ab",)})
        assert sw(lex, "a", "b") == 0.8

    def test_level_widths(self):
        lex = LexiconProvider(
            {"a": ("Aa01Aa",), "b": ("Aa02Aa",), "c": ("Ab01Aa",), "d": ("Ba01Aa",)}
        )
        assert sw(lex, "a", "b") == 0.4  # diverges at the two-char level
        assert sw(lex, "a", "c") == 0.2
        assert sw(lex, "a", "d") == 0.0

    def test_best_of_multiple_codes(self):
        lex = LexiconProvider({"a": ("Aa01Aa", "Zz99Zz"), "b": ("Zz99Za",)})
        assert sw(lex, "a", "b") == 0.8

    def test_shared_code_scores_one(self):
        lex = LexiconProvider({"a": ("Aa01Aa",), "b": ("Aa01Aa",)})
        assert sw(lex, "a", "b") == 1.0

    def test_code_length_validated(self):
        with pytest.raises(ValueError):
            LexiconProvider({"a": ("Aa01",)})

    def test_from_tsv(self, fixtures):
        lex = load_lexicon(fixtures / "lexicon.tsv")
        assert sw(lex, "猫", "狗") == 0.8
        assert sw(lex, "猫", "鱼") == 0.4
        assert sw(lex, "港口", "码头") == 0.8

    def test_from_tsv_merges_repeated_words(self):
        lex = LexiconProvider.from_tsv("a\tAa01Aa\na\tBb02Bb\nb\tBb02Ba\n")
        assert sw(lex, "a", "b") == 0.8

    def test_from_tsv_rejects_missing_codes(self):
        with pytest.raises(LoadError) as err:
            LexiconProvider.from_tsv("justaword\n")
        assert "line 1" in str(err.value)

    def test_from_tsv_rejects_bad_code(self):
        with pytest.raises(LoadError):
            LexiconProvider.from_tsv("a\tAb1\n")


class TestEmbedding:
    def make(self):
        return EmbeddingProvider(
            {"x": [1.0, 0.0], "y": [0.0, 1.0], "z": [-1.0, 0.0], "w": [1.0, 0.0]}
        )

    def test_orthogonal_is_half(self):
        assert sw(self.make(), "x", "y") == 0.5

    def test_opposite_is_zero(self):
        assert sw(self.make(), "x", "z") == 0.0

    def test_parallel_is_one(self):
        assert sw(self.make(), "x", "w") == 1.0

    def test_identical_word_is_exactly_one(self):
        provider = EmbeddingProvider({"x": [0.3, 0.4, 0.5]})
        assert sw(provider, "x", "x") == 1.0

    def test_zero_vector_treated_as_unknown(self):
        provider = EmbeddingProvider({"x": [0.0, 0.0], "y": [1.0, 0.0]})
        assert not provider.knows("x")
        assert sw(provider, "x", "y") == 0.0

    def test_unknown_word_falls_back(self):
        assert sw(self.make(), "x", "nope") == 0.0

    def test_from_text_with_header(self, fixtures):
        provider = load_embeddings(fixtures / "embeddings.txt")
        assert provider.knows("港口")
        value = sw(provider, "港口", "码头")
        assert 0.5 < value < 1.0

    def test_from_text_without_header(self):
        provider = EmbeddingProvider.from_text("x 1.0 0.0\ny 0.0 1.0\n")
        assert sw(provider, "x", "y") == 0.5

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(LoadError) as err:
            EmbeddingProvider.from_text("x 1.0 0.0\ny 1.0\n")
        assert "line 2" in str(err.value)

    def test_non_numeric_component_rejected(self):
        with pytest.raises(LoadError):
            EmbeddingProvider.from_text("x 1.0 nope\n")

    @given(st.lists(st.floats(-5, 5), min_size=2, max_size=2))
    def test_range(self, vec):
        provider = EmbeddingProvider({"a": [1.0, 2.0], "b": vec})
        value = sw(provider, "a", "b")
        assert 0.0 <= value <= 1.0


class TestFusion:
    def test_weight_one_zero_reproduces_first(self):
        lex = LexiconProvider({"a": ("Aa01Aa",), "b": ("Aa01Ab",)})
        emb = EmbeddingProvider({"a": [1.0, 0.0], "b": [0.0, 1.0]})
        fused = FusionProvider([(lex, 1.0), (emb, 0.0)])
        for pair in (("a", "b"), ("a", "a"), ("a", "zz")):
            assert sw(fused, *pair) == sw(lex, *pair)

    def test_blend(self):
        lex = LexiconProvider({"a": ("Aa01Aa",), "b": ("Aa01Ab",)})
        emb = EmbeddingProvider({"a": [1.0, 0.0], "b": [0.0, 1.0]})
        fused = FusionProvider([(lex, 1.0), (emb, 1.0)])
        assert sw(fused, "a", "b") == pytest.approx((0.8 + 0.5) / 2)

    def test_weights_normalized(self):
        lex = LexiconProvider({"a": ("Aa01Aa",), "b": ("Aa01Ab",)})
        one = FusionProvider([(lex, 1.0)])
        scaled = FusionProvider([(lex, 123.0)])
        assert sw(one, "a", "b") == sw(scaled, "a", "b") == 0.8

    def test_unknown_words_use_fallback_of_parts(self):
        lex = LexiconProvider({"a": ("Aa01Aa",)})
        fused = FusionProvider([(lex, 1.0)])
        # the constituent cannot score (q, q); its exact fallback can
        assert sw(fused, "q", "q") == 1.0
        assert sw(fused, "q", "r") == 0.0

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            FusionProvider([])

    def test_rejects_negative_weight(self):
        with pytest.raises(ValueError):
            FusionProvider([(ExactMatchProvider(), -1.0)])

    def test_rejects_all_zero_weights(self):
        with pytest.raises(ValueError):
            FusionProvider([(ExactMatchProvider(), 0.0)])

    def test_range_under_random_weights(self):
        rng = np.random.default_rng(7)
        lex = LexiconProvider({"a": ("Aa01Aa",), "b": ("Aa01Ab",)})
        emb = EmbeddingProvider({"a": [1.0, 0.2], "b": [0.3, 1.0]})
        for _ in range(200):
            weights = rng.random(2) + 1e-6
            fused = FusionProvider([(lex, float(weights[0])), (emb, float(weights[1]))])
            value = sw(fused, "a", "b")
            assert 0.0 <= value <= 1.0
