import math
import random

from ontoeg import lap, openie


def analyze_one(text):
    return lap.analyze(text)[0]


def triples(text, **kwargs):
    return [
        (t.arg1, t.rel, t.arg2)
        for t in openie.extract_from_text(text, **kwargs)
    ]


class TestRelationPhrases:
    def spans(self, text):
        sentence = analyze_one(text)
        return [
            " ".join(
                t.surface for t in sentence.tokens[span.start:span.end]
            )
            for span in openie.match_relation_phrases(sentence)
        ]

    def test_verb_adjective_preposition(self):
        assert "is toxic in" in self.spans("Vitamin D is toxic in large amounts.")

    def test_verb_chain_with_nouns(self):
        assert "are an excellent source of" in self.spans(
            "Bananas are an excellent source of potassium"
        )

    def test_verbless_sentence(self):
        assert self.spans("The red apple on the table.") == []

    def test_adjacent_spans_merge(self):
        spans = self.spans("The boy was located by the police")
        assert spans == ["was located by"]

    def test_pattern_invariant_regex_oracle(self):
        # every span matches V (W* P)? on the tag sequence
        texts = [
            "Vitamin D is toxic in large amounts.",
            "Bananas are an excellent source of potassium",
            "The boy was located by the police",
            "Atoms combine with one another to form chemical compounds.",
            "The reaction produces a salt and releases heat.",
        ]
        for text in texts:
            sentence = analyze_one(text)
            for span in openie.match_relation_phrases(sentence):
                tags = [t.pos for t in sentence.tokens[span.start:span.end]]
                assert tags[0] in lap.VERB_TAGS
                if len(tags) > 1 and not span.merged:
                    assert tags[-1] in openie.P_TAGS
                    for tag in tags[1:-1]:
                        assert tag in openie.W_TAGS

    def test_chunk_independence(self):
        # relation matching never consults chunks: tags alone decide
        sentence = analyze_one("The dog chased the cat into the garden.")
        before = openie.match_relation_phrases(sentence)
        lap.chunk_noun_phrases(sentence)
        after = openie.match_relation_phrases(sentence)
        assert before == after


class TestLexicalConstraint:
    def test_above_threshold(self):
        lexicon = openie.RelationLexicon({"be toxic in": 40}, k=20)
        assert openie.apply_lexical_constraint("be toxic in", lexicon)

    def test_below_threshold(self):
        lexicon = openie.RelationLexicon({"be toxic in": 5}, k=20)
        assert not openie.apply_lexical_constraint("be toxic in", lexicon)

    def test_empty_lexicon_disables(self):
        assert openie.apply_lexical_constraint("anything", openie.RelationLexicon())

    def test_filters_extractions(self):
        lexicon = openie.RelationLexicon({"be source of": 100}, k=20)
        assert triples("Vitamin D is toxic in large amounts.", lexicon=lexicon) == []
        assert triples(
            "Bananas are an excellent source of potassium", lexicon=lexicon
        ) == [("bananas", "be source of", "potassium")]


class TestExtract:
    def test_vitamin_d(self):
        assert triples("Vitamin D is toxic in large amounts.") == [
            ("vitamin d", "be toxic in", "large amount"),
        ]

    def test_bananas(self):
        assert triples("Bananas are an excellent source of potassium") == [
            ("bananas", "be source of", "potassium"),
        ]

    def test_existential_there_yields_nothing(self):
        assert triples("There is a problem.") == []

    def test_relative_pronoun_not_an_argument(self):
        for t in openie.extract_from_text(
            "the atoms that constitute carbon are unique"
        ):
            assert t.arg1_head not in ("that", "which")

    def test_left_argument_tag_exclusion_property(self):
        texts = [
            "There is a problem.",
            "the atoms that constitute carbon are different",
            "Sodium chloride is a chemical compound formed from sodium",
            "The formula of a compound indicates the types of atoms present.",
        ]
        for text in texts:
            for sentence in lap.analyze(text):
                for t in openie.extract_triplets(sentence):
                    head = sentence.tokens[t.arg1_span[1] - 1]
                    assert head.pos not in openie.EXCLUDED_ARG_TAGS

    def test_determinism(self):
        text = "Atoms of different elements combine to form chemical compounds."
        assert triples(text) == triples(text)

    def test_rel_begins_with_verb_lemma(self):
        lexicon = lap.default_lexicon()
        for t in openie.extract_from_text(
            "Metals conduct electricity and atoms form molecules in compounds."
        ):
            first = t.rel.split()[0]
            assert (
                first in lexicon.verb_lemmas
                or lexicon.irregular.get(first, first) in lexicon.verb_lemmas
                or first == "be"
            )


class TestConfidence:
    def test_zero_weights_give_half(self):
        weights = {name: 0.0 for name in openie.DEFAULT_CONFIDENCE_WEIGHTS}
        ts = openie.extract_from_text(
            "Vitamin D is toxic in large amounts.", weights=weights
        )
        assert ts[0].confidence == 0.5

    def test_example_confidence_matches_formula_oracle(self):
        # independent recomputation: features read off the tagged sentence
        ts = openie.extract_from_text("Vitamin D is toxic in large amounts.")
        w = openie.DEFAULT_CONFIDENCE_WEIGHTS
        z = (
            w["bias"]
            + w["sentence_length"] * 8
            + w["rel_tokens"] * 3
            + w["x_proper"] * 1
            + w["y_proper"] * 0
            + w["ends_with_prep"] * 1
        )
        expected = 1.0 / (1.0 + math.exp(-z))
        assert abs(ts[0].confidence - expected) < 1e-12
        assert 0.5 < ts[0].confidence <= 1.0

    def test_confidence_decreases_with_distance_feature(self):
        base = {name: 0.0 for name in openie.DEFAULT_CONFIDENCE_WEIGHTS}
        base["dist_x"] = -0.5
        features_near = {"bias": 1.0, "dist_x": 0.0}
        features_far = {"bias": 1.0, "dist_x": 3.0}
        assert openie.score_triplet(features_far, base) < openie.score_triplet(
            features_near, base
        )

    def test_confidence_in_unit_interval_randomized(self):
        rng = random.Random(99)
        names = list(openie.DEFAULT_CONFIDENCE_WEIGHTS)
        for _ in range(500):
            weights = {n: rng.uniform(-3, 3) for n in names}
            features = {n: rng.uniform(-5, 5) for n in names}
            c = openie.score_triplet(features, weights)
            assert 0.0 <= c <= 1.0
