import pytest

from ontoeg import ontology as onto, verbalize as verb
from ontoeg.resources import read_text

TABLE_STRINGS = [
    "Every AcylBromide is an AcylHalide that hasPart an AcylBromideGroup",
    "Every Alcohol is an OrganicCompound that hasPart a HydroxylGroup",
    "Every Aldehyde is an OrganicCompound that hasPart an AldehydeGroup",
    "Every Amide is an OrganicCompound that hasPart an AmideGroup",
    "Every OrganicSulfurCompound is an OrganicCompound that hasPart an "
    "OrganicSulfurGroup",
    "No Atom is an OrganicCompound",
]


def chemistry():
    return onto.parse_ontology(read_text("chemistry.dl"), name="chemistry")


class TestIndefiniteArticle:
    def test_vowel_initial(self):
        assert verb.indefinite_article("OrganicCompound") == "an"
        assert verb.indefinite_article("AldehydeGroup") == "an"

    def test_consonant_initial(self):
        assert verb.indefinite_article("HydroxylGroup") == "a"
        assert verb.indefinite_article("Xylene") == "a"

    def test_lowercase_vowel(self):
        assert verb.indefinite_article("acid") == "an"

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            verb.indefinite_article("")


class TestVerbalizeAxiom:
    def axiom(self, text):
        return onto.parse_ontology(text).axioms[0]

    def test_definition_produces_forward_and_converse(self):
        hyps = verb.verbalize_axiom(self.axiom(
            "OrganicSulfurCompound EQUIV OrganicCompound AND "
            "SOME hasPart . OrganicSulfurGroup"
        ))
        assert [h.text for h in hyps] == [
            "Every OrganicSulfurCompound is an OrganicCompound that "
            "hasPart an OrganicSulfurGroup.",
            "Every OrganicCompound that hasPart an OrganicSulfurGroup is "
            "an OrganicSulfurCompound.",
        ]
        assert [h.direction for h in hyps] == [verb.FORWARD, verb.CONVERSE]

    def test_disjointness_single(self):
        hyps = verb.verbalize_axiom(self.axiom("Atom SUBCLASS NOT OrganicCompound"))
        assert [h.text for h in hyps] == ["No Atom is an OrganicCompound."]
        assert hyps[0].direction == verb.SINGLE

    def test_subsumption_single(self):
        hyps = verb.verbalize_axiom(self.axiom("Ethanol SUBCLASS Alcohol"))
        assert [h.text for h in hyps] == ["Every Ethanol is an Alcohol."]

    def test_multi_restriction_with_universal(self):
        hyps = verb.verbalize_axiom(self.axiom(
            "Hydrocarbon EQUIV OrganicCompound AND SOME hasPart . CarbonAtom "
            "AND SOME hasPart . HydrogenAtom AND "
            "ONLY hasPart . ( CarbonAtom OR HydrogenAtom )"
        ))
        assert hyps[0].text == (
            "Every Hydrocarbon is an OrganicCompound that hasPart a "
            "CarbonAtom and that hasPart a HydrogenAtom and that hasPart "
            "only a CarbonAtom or a HydrogenAtom."
        )
        assert hyps[1].text == (
            "Every OrganicCompound that hasPart a CarbonAtom and that "
            "hasPart a HydrogenAtom and that hasPart only a CarbonAtom or "
            "a HydrogenAtom is a Hydrocarbon."
        )

    def test_unverbalizable_shape_skipped(self):
        assert verb.verbalize_axiom(self.axiom("A EQUIV NOT B")) == []

    def test_ids_carry_index_and_direction(self):
        hyps = verb.verbalize_axiom(self.axiom("A EQUIV B AND SOME r . C"), 7)
        assert [h.id for h in hyps] == ["ax7-f", "ax7-c"]


class TestVerbalizeOntology:
    def test_counts_by_shape(self):
        hyp_set = verb.verbalize_ontology(chemistry())
        # 23 definitions x 2 + 2 disjointness x 1
        assert len(hyp_set.hypotheses) == 48
        singles = [h for h in hyp_set.hypotheses if h.direction == verb.SINGLE]
        assert len(singles) == 2

    def test_contains_all_published_strings(self):
        hyp_set = verb.verbalize_ontology(chemistry())
        texts = {h.text.rstrip(".") for h in hyp_set.hypotheses}
        for expected in TABLE_STRINGS:
            assert expected in texts

    def test_empty_ontology(self):
        assert verb.verbalize_ontology(onto.Ontology(())).hypotheses == ()

    def test_single_subclass_axiom_yields_one(self):
        parsed = onto.parse_ontology("Ethanol SUBCLASS Alcohol")
        assert len(verb.verbalize_ontology(parsed).hypotheses) == 1

    def test_deterministic(self):
        ontology = chemistry()
        assert verb.verbalize_ontology(ontology) == verb.verbalize_ontology(ontology)

    def test_invariants(self):
        hyp_set = verb.verbalize_ontology(chemistry())
        seen = set()
        for h in hyp_set.hypotheses:
            assert h.text.startswith(("Every", "No"))
            assert h.text.endswith(".")
            key = (h.axiom_index, h.direction)
            assert key not in seen
            seen.add(key)
            assert h.selected

    def test_order_forward_before_converse(self):
        hyp_set = verb.verbalize_ontology(chemistry())
        indices = [h.axiom_index for h in hyp_set.hypotheses]
        assert indices == sorted(indices)
        by_axiom = {}
        for h in hyp_set.hypotheses:
            by_axiom.setdefault(h.axiom_index, []).append(h.direction)
        for directions in by_axiom.values():
            if len(directions) == 2:
                assert directions == [verb.FORWARD, verb.CONVERSE]

    def test_articles_follow_first_letter(self):
        for h in verb.verbalize_ontology(chemistry()).hypotheses:
            words = h.text.rstrip(".").split()
            for article, following in zip(words, words[1:]):
                if article in ("a", "an"):
                    assert verb.indefinite_article(following) == article


class TestJsonl:
    def test_round_trip(self):
        hyp_set = verb.verbalize_ontology(chemistry())
        again = verb.from_jsonl(verb.to_jsonl(hyp_set), hyp_set.ontology_name)
        assert again == hyp_set

    def test_selected_flag_preserved(self):
        hyp_set = verb.verbalize_ontology(chemistry())
        flipped = verb.HypothesisSet(
            tuple(
                verb.Hypothesis(h.id, h.text, h.axiom_index, h.direction, False)
                for h in hyp_set.hypotheses
            ),
            hyp_set.ontology_name,
        )
        again = verb.from_jsonl(verb.to_jsonl(flipped), hyp_set.ontology_name)
        assert all(not h.selected for h in again.hypotheses)
