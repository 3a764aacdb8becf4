"""Taxonomy learning from a text corpus.

Common nouns become candidate concepts scored by relative term
frequency; proper nouns become candidate instances, with a concept
attached when a copula pattern links them to a noun phrase. Subclass
axioms come from noun-compound heads ("ionic compound" is a compound)
and "such as" enumerations.
"""

from dataclasses import dataclass
from collections import Counter

from . import lap
from .ontology import IDENT_RE, Named, Ontology, SubClassOf

DEFAULT_RELEVANCE_CUTOFF = 0.005


@dataclass(frozen=True)
class CandidateConcept:
    label: str
    relevance: float
    frequency: int


@dataclass(frozen=True)
class CandidateInstance:
    label: str
    concept: str | None = None


def _analyzed(corpus, lexicon=None):
    for document in corpus:
        yield lap.analyze(document, lexicon)


def extract_concepts(corpus, lexicon=None):
    """One candidate per distinct common-noun lemma, scored by frequency
    over all noun tokens, sorted by relevance then label."""
    counts = Counter()
    noun_tokens = 0
    for sentences in _analyzed(corpus, lexicon):
        for sentence in sentences:
            for token in sentence.tokens:
                if token.pos in lap.NOUN_TAGS:
                    noun_tokens += 1
                if token.pos in ("NN", "NNS"):
                    counts[token.lemma] += 1
    if noun_tokens == 0:
        return []
    concepts = [
        CandidateConcept(label, count / noun_tokens, count)
        for label, count in counts.items()
    ]
    concepts.sort(key=lambda c: (-c.relevance, c.label))
    return concepts


def _copula_concept(sentence, chunks, chunk_index):
    """Concept label for `<chunk> is a <chunk>`, if the pattern holds."""
    chunk = chunks[chunk_index]
    tokens = sentence.tokens
    after = chunk.end
    if after >= len(tokens) or tokens[after].lemma != "be":
        return None
    if chunk_index + 1 >= len(chunks):
        return None
    predicate = chunks[chunk_index + 1]
    if predicate.start != after + 1:
        return None
    head = tokens[predicate.head_index]
    if head.pos not in ("NN", "NNS"):
        return None
    return head.lemma


def extract_instances(corpus, lexicon=None):
    """Distinct proper-noun labels; the copula pattern attaches a
    concept."""
    found = {}
    for sentences in _analyzed(corpus, lexicon):
        for sentence in sentences:
            chunks = lap.chunk_noun_phrases(sentence)
            for idx, chunk in enumerate(chunks):
                tokens = sentence.tokens[chunk.start:chunk.end]
                if not any(t.pos in ("NNP", "NNPS") for t in tokens):
                    continue
                label = " ".join(
                    t.surface for t in tokens if t.pos != "DT"
                )
                concept = _copula_concept(sentence, chunks, idx)
                if label not in found or (
                    concept is not None and found[label] is None
                ):
                    found[label] = concept
    return [
        CandidateInstance(label, concept)
        for label, concept in sorted(found.items())
    ]


def _compound_label(*lemmas):
    label = "_".join(lemmas)
    return label if IDENT_RE.fullmatch(label) else None


def extract_subclass(concepts, corpus, lexicon=None):
    """Subclass axioms from two heuristics over the corpus.

    Head-noun: a premodifier directly before a chunk-final noun whose
    lemma is a candidate concept yields SubClassOf(mod_head, head);
    noun premodifiers must themselves be concepts. Hearst: "C such as
    D(, E)*" yields SubClassOf(D, C) for concept-headed chunks.
    """
    labels = {c.label for c in concepts}
    axioms = []
    seen = set()

    def emit(sub, sup):
        if sub is None or sub == sup or (sub, sup) in seen:
            return
        seen.add((sub, sup))
        axioms.append(SubClassOf(Named(sub), Named(sup)))

    for sentences in _analyzed(corpus, lexicon):
        for sentence in sentences:
            tokens = sentence.tokens
            chunks = lap.chunk_noun_phrases(sentence)
            for chunk in chunks:
                head = tokens[chunk.head_index]
                if head.pos not in ("NN", "NNS") or head.lemma not in labels:
                    continue
                if chunk.head_index == chunk.start:
                    continue
                mod = tokens[chunk.head_index - 1]
                if mod.pos == "JJ" or (
                    mod.pos in ("NN", "NNS") and mod.lemma in labels
                ):
                    emit(_compound_label(mod.lemma, head.lemma), head.lemma)
            for idx in range(len(chunks) - 1):
                gap = tokens[chunks[idx].end:chunks[idx + 1].start]
                surfaces = [t.surface.lower() for t in gap]
                if surfaces != ["such", "as"]:
                    continue
                sup = tokens[chunks[idx].head_index]
                if sup.pos not in ("NN", "NNS") or sup.lemma not in labels:
                    continue
                for follower in chunks[idx + 1:]:
                    sub = tokens[follower.head_index]
                    if sub.pos not in ("NN", "NNS") or sub.lemma not in labels:
                        break
                    emit(sub.lemma, sup.lemma)
                    nxt = chunks.index(follower) + 1
                    if nxt >= len(chunks):
                        break
                    between = tokens[follower.end:chunks[nxt].start]
                    if [t.surface.lower() for t in between] not in (
                        [","], [",", "and"], ["and"], ["or"], [",", "or"],
                    ):
                        break
    return axioms


def build_ontology(concepts, instances, subclass_axioms, name="learned"):
    """Assemble retained concepts and their subclass axioms into an
    ontology (concepts and instances are assumed already cut off)."""
    labels = {c.label for c in concepts}
    axioms = [
        a for a in subclass_axioms
        if isinstance(a.rhs, Named) and a.rhs.name in labels
    ]
    return Ontology(tuple(axioms), name)


def learn(corpus, cutoff=DEFAULT_RELEVANCE_CUTOFF, name="learned",
          lexicon=None):
    """Full pipeline: concepts above the cutoff, instances, subclass
    axioms, assembled ontology."""
    concepts = [
        c for c in extract_concepts(corpus, lexicon) if c.relevance >= cutoff
    ]
    instances = extract_instances(corpus, lexicon)
    axioms = extract_subclass(concepts, corpus, lexicon)
    return concepts, instances, build_ontology(concepts, instances, axioms, name)
