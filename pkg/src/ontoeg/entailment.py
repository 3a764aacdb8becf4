"""Entailment core: two trainable decision algorithms over (text,
hypothesis) pairs.

The edit-distance algorithm compares the hypothesis against each text
sentence as sequences of content lemmas (noun/verb/adjective tokens,
auxiliary "be" excluded) and thresholds the best normalized distance.
The classifier algorithm is a maximum-entropy (logistic regression)
model over seven overlap/negation/length features.
"""

from dataclasses import dataclass, field
import json
import math

import numpy as np

from . import lap, openie

ENTAILMENT = "Entailment"
NON_ENTAILMENT = "NonEntailment"

DEFAULT_KAPPA = 8.0
DEFAULT_LAMBDA = 0.1
LEARNING_RATE = 0.5
MAX_ITERATIONS = 10_000
GRADIENT_TOLERANCE = 1e-6

NEGATION_TOKENS = frozenset({"no", "not", "never", "n't", "none"})

CONTENT_TAGS = lap.NOUN_TAGS | lap.VERB_TAGS | {"JJ"}

FEATURE_NAMES = (
    "bias", "word_overlap", "lemma_overlap", "bigram_overlap",
    "triplet_overlap", "negation_mismatch", "length_ratio",
)


@dataclass(frozen=True)
class TrainingPair:
    text: str
    hypothesis: str
    gold: str  # ENTAILMENT or NON_ENTAILMENT


@dataclass(frozen=True)
class EntailmentDecision:
    label: str
    confidence: float
    eda: str
    per_sentence_trace: tuple = ()


class LexicalResource:
    """Directed lemma -> lemma substitution rules."""

    def __init__(self, rules=()):
        self.rules = frozenset(rules)

    def allows(self, lhs, rhs):
        return (lhs, rhs) in self.rules

    def __len__(self):
        return len(self.rules)

    @classmethod
    def from_rows(cls, rows, lexicon=None):
        """Build from (lhs, rhs) surface rows; each side is lemmatized
        word by word so rules match lemma sequences."""
        rules = []
        for lhs, rhs in rows:
            left = " ".join(lap.lemmatize_word(w, lexicon) for w in lhs.split())
            right = " ".join(lap.lemmatize_word(w, lexicon) for w in rhs.split())
            rules.append((left, right))
        return cls(rules)


def edit_distance(tokens_a, tokens_b, resource=None):
    """Minimal edit cost from sequence A to sequence B.

    Insertions and deletions cost 1; a substitution costs 0 when the
    lemmas are equal or a resource rule a -> b applies, else 1.
    """
    resource = resource or LexicalResource()
    n, m = len(tokens_a), len(tokens_b)
    previous = list(range(m + 1))
    for i in range(1, n + 1):
        current = [i] + [0] * m
        a = tokens_a[i - 1]
        for j in range(1, m + 1):
            b = tokens_b[j - 1]
            subst = 0 if (a == b or resource.allows(a, b)) else 1
            current[j] = min(
                previous[j] + 1,        # delete from A
                current[j - 1] + 1,     # insert from B
                previous[j - 1] + subst,
            )
        previous = current
    return float(previous[m])


def content_lemmas(sentence):
    """Lemmas of noun/verb/adjective tokens, with "be" forms dropped."""
    return [
        t.lemma
        for t in sentence.tokens
        if t.pos in CONTENT_TAGS and t.lemma != "be"
    ]


def _content_sequences(text, lexicon=None):
    return [content_lemmas(s) for s in lap.analyze(text, lexicon)]


def _hypothesis_sequence(hypothesis, lexicon=None):
    merged = []
    for seq in _content_sequences(hypothesis, lexicon):
        merged.extend(seq)
    return merged


def normalized_distances(text, hypothesis, resource=None, lexicon=None):
    """Per-sentence (index, d_norm) pairs for d = ed(s, H)/(|s|+|H|)."""
    h_seq = _hypothesis_sequence(hypothesis, lexicon)
    trace = []
    for index, seq in enumerate(_content_sequences(text, lexicon)):
        denominator = len(seq) + len(h_seq)
        if denominator == 0:
            d_norm = 0.0
        else:
            d_norm = edit_distance(seq, h_seq, resource) / denominator
        trace.append((index, d_norm))
    return trace


@dataclass(frozen=True)
class EditDistanceModel:
    theta: float
    kappa: float = DEFAULT_KAPPA
    resource: LexicalResource = field(default_factory=LexicalResource)


def _logistic(z):
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def decide_edit_distance(text, hypothesis, model, lexicon=None):
    """Threshold the best per-sentence normalized distance."""
    if model.theta is None:
        raise ValueError("edit-distance model has no threshold")
    trace = normalized_distances(text, hypothesis, model.resource, lexicon)
    if not trace:
        raise ValueError("text yields no sentences")
    d_norm = min(d for _, d in trace)
    label = ENTAILMENT if d_norm <= model.theta else NON_ENTAILMENT
    raw = _logistic(model.kappa * (model.theta - d_norm))
    return EntailmentDecision(
        label=label,
        confidence=max(raw, 1.0 - raw),
        eda="edit",
        per_sentence_trace=tuple(trace),
    )


def _check_training_pairs(pairs):
    if len(pairs) < 2:
        raise ValueError("need at least 2 training pairs")
    labels = {p.gold for p in pairs}
    if labels != {ENTAILMENT, NON_ENTAILMENT}:
        raise ValueError("training pairs must contain both labels")


def train_edit_distance(pairs, resource=None, kappa=DEFAULT_KAPPA,
                        lexicon=None):
    """Pick the threshold maximizing training accuracy over the observed
    distances and their midpoints; ties go to the smallest candidate."""
    _check_training_pairs(pairs)
    resource = resource or LexicalResource()
    distances = [
        min(d for _, d in normalized_distances(
            p.text, p.hypothesis, resource, lexicon))
        for p in pairs
    ]
    observed = sorted(set(distances))
    candidates = list(observed)
    candidates += [
        (a + b) / 2.0 for a, b in zip(observed, observed[1:])
    ]
    best_theta, best_correct = None, -1
    for theta in sorted(candidates):
        correct = sum(
            1
            for d, p in zip(distances, pairs)
            if (ENTAILMENT if d <= theta else NON_ENTAILMENT) == p.gold
        )
        if correct > best_correct:
            best_theta, best_correct = theta, correct
    model = EditDistanceModel(best_theta, kappa, resource)
    return model, best_correct / len(pairs)


@dataclass(frozen=True)
class ClassifierModel:
    weights: tuple  # aligned with FEATURE_NAMES
    lam: float = DEFAULT_LAMBDA


def _word_sets(sentences):
    words, lemmas, bigrams = set(), set(), set()
    for sentence in sentences:
        sentence_words = [
            t.surface.lower() for t in sentence.tokens if t.is_word
        ]
        words.update(sentence_words)
        lemmas.update(t.lemma for t in sentence.tokens if t.is_word)
        bigrams.update(zip(sentence_words, sentence_words[1:]))
    return words, lemmas, bigrams


def _has_negation(sentences):
    return any(
        t.surface.lower() in NEGATION_TOKENS
        for s in sentences
        for t in s.tokens
    )


def _triplet_key(triplet):
    return (triplet.rel, triplet.arg1_head, triplet.arg2_head)


def extract_features(text, hypothesis, lexicon=None):
    """Seven features: bias, word/lemma/bigram overlap, triplet overlap,
    negation mismatch, length ratio."""
    if not hypothesis.strip():
        raise ValueError("empty hypothesis")
    if not text.strip():
        raise ValueError("empty text")
    t_sents = lap.analyze(text, lexicon)
    h_sents = lap.analyze(hypothesis, lexicon)
    t_words, t_lemmas, t_bigrams = _word_sets(t_sents)
    h_words, h_lemmas, h_bigrams = _word_sets(h_sents)

    def overlap(t_set, h_set):
        return len(t_set & h_set) / len(h_set) if h_set else 0.0

    h_triplets = {
        _triplet_key(t)
        for s in h_sents
        for t in openie.extract_triplets(s, lap_lexicon=lexicon)
    }
    t_triplets = {
        _triplet_key(t)
        for s in t_sents
        for t in openie.extract_triplets(s, lap_lexicon=lexicon)
    }
    triplet_overlap = (
        len(h_triplets & t_triplets) / len(h_triplets) if h_triplets else 0.0
    )
    t_len = sum(1 for s in t_sents for t in s.tokens if t.is_word)
    h_len = sum(1 for s in h_sents for t in s.tokens if t.is_word)
    if t_len == 0 or h_len == 0:
        raise ValueError("pair has no word tokens")
    return np.array([
        1.0,
        overlap(t_words, h_words),
        overlap(t_lemmas, h_lemmas),
        overlap(t_bigrams, h_bigrams),
        triplet_overlap,
        float(_has_negation(t_sents) != _has_negation(h_sents)),
        min(h_len / t_len, 1.0),
    ])


def nll_loss(weights, features, labels, lam=DEFAULT_LAMBDA):
    """Mean negative log-likelihood plus an L2 penalty on the non-bias
    weights."""
    z = features @ weights
    # log(1 + exp(-|z|)) is stable for both signs
    log_p = -np.logaddexp(0.0, -z)
    log_q = -np.logaddexp(0.0, z)
    nll = -np.mean(labels * log_p + (1.0 - labels) * log_q)
    return nll + 0.5 * lam * float(np.dot(weights[1:], weights[1:]))


def nll_gradient(weights, features, labels, lam=DEFAULT_LAMBDA):
    z = features @ weights
    p = 1.0 / (1.0 + np.exp(-np.clip(z, -500, 500)))
    grad = features.T @ (p - labels) / len(labels)
    penalty = lam * weights
    penalty[0] = 0.0
    return grad + penalty


def train_classifier(pairs, lam=DEFAULT_LAMBDA, lexicon=None):
    """Full-batch gradient descent from zero weights, fixed step 0.5,
    stopping at max-norm(grad) < 1e-6 or 10,000 iterations."""
    _check_training_pairs(pairs)
    features = np.array([
        extract_features(p.text, p.hypothesis, lexicon) for p in pairs
    ])
    labels = np.array([1.0 if p.gold == ENTAILMENT else 0.0 for p in pairs])
    weights = np.zeros(features.shape[1])
    for _ in range(MAX_ITERATIONS):
        grad = nll_gradient(weights, features, labels, lam)
        if np.max(np.abs(grad)) < GRADIENT_TOLERANCE:
            break
        weights = weights - LEARNING_RATE * grad
    model = ClassifierModel(tuple(float(w) for w in weights), lam)
    predictions = features @ weights >= 0.0
    accuracy = float(np.mean(predictions == (labels == 1.0)))
    return model, accuracy


def decide_classifier(text, hypothesis, model, lexicon=None):
    if not model.weights:
        raise ValueError("classifier model has no weights")
    features = extract_features(text, hypothesis, lexicon)
    p = _logistic(float(np.dot(model.weights, features)))
    label = ENTAILMENT if p >= 0.5 else NON_ENTAILMENT
    return EntailmentDecision(
        label=label, confidence=max(p, 1.0 - p), eda="maxent"
    )


def decide(text, hypothesis, model, lexicon=None):
    if isinstance(model, EditDistanceModel):
        return decide_edit_distance(text, hypothesis, model, lexicon)
    if isinstance(model, ClassifierModel):
        return decide_classifier(text, hypothesis, model, lexicon)
    raise TypeError(f"unknown model type: {model!r}")


def with_question(question, answer):
    """Entailment text for a question/answer pair."""
    if question:
        return f"{question.strip()} {answer}"
    return answer


# --- pair and model files ---------------------------------------------------

_LABELS = {"E": ENTAILMENT, "NE": NON_ENTAILMENT}
_SHORT = {ENTAILMENT: "E", NON_ENTAILMENT: "NE"}


def parse_pairs(text):
    """TSV training pairs: label<TAB>text<TAB>hypothesis, label E or NE."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 3 tab-separated fields")
        label, t, h = fields
        if label not in _LABELS:
            raise ValueError(f"line {lineno}: unknown label {label!r}")
        if not t.strip() or not h.strip():
            raise ValueError(f"line {lineno}: empty text or hypothesis")
        pairs.append(TrainingPair(t, h, _LABELS[label]))
    return pairs


def format_pairs(pairs):
    return "".join(
        f"{_SHORT[p.gold]}\t{p.text}\t{p.hypothesis}\n" for p in pairs
    )


def load_resource_rows(text):
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        lhs, _, rhs = line.partition("\t")
        if not rhs:
            raise ValueError(f"malformed resource rule: {line!r}")
        rows.append((lhs.strip(), rhs.strip()))
    return rows


def model_to_json(model, resource_path=None):
    if isinstance(model, EditDistanceModel):
        payload = {
            "eda": "edit",
            "theta": model.theta,
            "kappa": model.kappa,
            "resource_path": resource_path,
        }
    elif isinstance(model, ClassifierModel):
        payload = {
            "eda": "maxent",
            "weights": list(model.weights),
            "lambda": model.lam,
            "resource_path": None,
        }
    else:
        raise TypeError(f"unknown model type: {model!r}")
    return json.dumps(payload, indent=2) + "\n"


def model_from_json(text, resource_loader=None):
    """Rebuild a model; resource_loader maps a resource_path to rule rows."""
    payload = json.loads(text)
    eda = payload.get("eda")
    if eda == "edit":
        resource = LexicalResource()
        path = payload.get("resource_path")
        if path and resource_loader is not None:
            resource = LexicalResource.from_rows(resource_loader(path))
        return EditDistanceModel(
            theta=float(payload["theta"]),
            kappa=float(payload.get("kappa", DEFAULT_KAPPA)),
            resource=resource,
        )
    if eda == "maxent":
        return ClassifierModel(
            weights=tuple(float(w) for w in payload["weights"]),
            lam=float(payload.get("lambda", DEFAULT_LAMBDA)),
        )
    raise ValueError(f"unknown eda in model file: {eda!r}")
