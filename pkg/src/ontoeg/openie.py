"""Relation-first triplet extraction over POS-tagged sentences.

For every verb the longest span matching V | V P | V W* P is taken as a
relation phrase candidate (W: noun/adjective/adverb/pronoun/determiner,
P: preposition or TO). Adjacent or overlapping candidates merge. Each
surviving phrase is paired with the nearest noun-phrase chunk on each
side; emitted phrases and arguments are normalized to lowercase with the
anchor verb and argument heads lemmatized.
"""

from dataclasses import dataclass
import math

from . import lap

W_TAGS = {"NN", "NNS", "NNP", "NNPS", "JJ", "RB", "PRP", "DT"}
P_TAGS = {"IN", "TO"}
EXCLUDED_ARG_TAGS = {"WDT", "WP", "EX"}


@dataclass(frozen=True)
class RelationSpan:
    start: int
    end: int
    merged: bool = False


@dataclass(frozen=True)
class Triplet:
    arg1: str
    rel: str
    arg2: str
    confidence: float
    sentence_index: int
    arg1_span: tuple
    rel_span: tuple
    arg2_span: tuple

    @property
    def arg1_head(self):
        return self.arg1.split()[-1]

    @property
    def arg2_head(self):
        return self.arg2.split()[-1]


class RelationLexicon:
    """Normalized relation phrase -> distinct-argument-pair count. An
    empty lexicon disables the frequency constraint."""

    def __init__(self, counts=None, k=20):
        self.counts = dict(counts or {})
        self.k = k

    def __bool__(self):
        return bool(self.counts)

    @classmethod
    def from_rows(cls, rows, k=20):
        return cls({phrase: int(count) for phrase, count in rows}, k)


def match_relation_phrases(sentence):
    """Longest V | V P | V W* P span per verb, merged when adjacent."""
    tokens = sentence.tokens
    spans = []
    for i, token in enumerate(tokens):
        if token.pos not in lap.VERB_TAGS:
            continue
        end = i + 1
        j = i + 1
        while j < len(tokens) and tokens[j].pos in W_TAGS:
            j += 1
        if j < len(tokens) and tokens[j].pos in P_TAGS:
            end = j + 1
        elif i + 1 < len(tokens) and tokens[i + 1].pos in P_TAGS:
            end = i + 2
        spans.append(RelationSpan(i, end))
    merged = []
    for span in spans:
        if merged and span.start <= merged[-1].end:
            last = merged[-1]
            merged[-1] = RelationSpan(
                last.start, max(last.end, span.end), merged=True
            )
        else:
            merged.append(span)
    return merged


def normalize_relation(sentence, span, lexicon=None):
    """Lowercase phrase with the anchor verb lemmatized; determiners
    dropped, adjectives dropped only when a noun follows inside the span."""
    tokens = sentence.tokens[span.start:span.end]
    parts = []
    for offset, token in enumerate(tokens):
        if token.pos == "DT":
            continue
        if token.pos == "JJ" and any(
            t.pos in lap.NOUN_TAGS for t in tokens[offset + 1:]
        ):
            continue
        if offset == 0:
            parts.append(token.lemma or lap.lemmatize(token, lexicon))
        else:
            parts.append(token.surface.lower())
    return " ".join(parts)


def normalize_argument(sentence, chunk, lexicon=None):
    """Chunk text lowercased, leading determiners stripped, head
    lemmatized."""
    tokens = sentence.tokens[chunk.start:chunk.end]
    head_offset = chunk.head_index - chunk.start
    parts = []
    for offset, token in enumerate(tokens):
        if token.pos == "DT" and not parts:
            continue
        if offset == head_offset:
            parts.append(token.lemma or lap.lemmatize(token, lexicon))
        else:
            parts.append(token.surface.lower())
    return " ".join(parts)


def apply_lexical_constraint(phrase, lexicon):
    """True when the phrase is frequent enough, or the constraint is
    disabled (no lexicon loaded)."""
    if lexicon is None or not lexicon:
        return True
    return lexicon.counts.get(phrase, 0) >= lexicon.k


DEFAULT_CONFIDENCE_WEIGHTS = {
    "bias": 1.5,
    "sentence_length": -0.05,
    "rel_tokens": -0.1,
    "x_proper": 0.3,
    "y_proper": 0.3,
    "ends_with_prep": 0.4,
    "merged": -0.3,
    "dist_x": -0.4,
    "dist_y": -0.4,
}


def triplet_features(sentence, span, left, right):
    tokens = sentence.tokens
    return {
        "bias": 1.0,
        "sentence_length": float(len(tokens)),
        "rel_tokens": float(span.end - span.start),
        "x_proper": float(tokens[left.head_index].pos in ("NNP", "NNPS")),
        "y_proper": float(tokens[right.head_index].pos in ("NNP", "NNPS")),
        "ends_with_prep": float(tokens[span.end - 1].pos in P_TAGS),
        "merged": float(span.merged),
        "dist_x": float(span.start - left.end),
        "dist_y": float(right.start - span.end),
    }


def score_triplet(features, weights=None):
    """Logistic confidence from named features and weights."""
    weights = weights or DEFAULT_CONFIDENCE_WEIGHTS
    z = sum(weights.get(name, 0.0) * value for name, value in features.items())
    return 1.0 / (1.0 + math.exp(-z))


def extract_triplets(sentence, lexicon=None, weights=None, lap_lexicon=None):
    """Triplets for one tagged+lemmatized sentence."""
    chunks = lap.chunk_noun_phrases(sentence)
    tokens = sentence.tokens
    triplets = []
    for span in match_relation_phrases(sentence):
        phrase = normalize_relation(sentence, span, lap_lexicon)
        if not phrase or not apply_lexical_constraint(phrase, lexicon):
            continue
        left = None
        for chunk in chunks:
            if chunk.end <= span.start:
                if tokens[chunk.head_index].pos not in EXCLUDED_ARG_TAGS:
                    left = chunk
            else:
                break
        right = next((c for c in chunks if c.start >= span.end), None)
        if left is None or right is None:
            continue
        confidence = score_triplet(
            triplet_features(sentence, span, left, right), weights
        )
        triplets.append(Triplet(
            arg1=normalize_argument(sentence, left, lap_lexicon),
            rel=phrase,
            arg2=normalize_argument(sentence, right, lap_lexicon),
            confidence=confidence,
            sentence_index=sentence.index,
            arg1_span=(left.start, left.end),
            rel_span=(span.start, span.end),
            arg2_span=(right.start, right.end),
        ))
    return triplets


def extract_from_text(text, lexicon=None, weights=None, lap_lexicon=None):
    triplets = []
    for sentence in lap.analyze(text, lap_lexicon):
        triplets.extend(
            extract_triplets(sentence, lexicon, weights, lap_lexicon)
        )
    return triplets
