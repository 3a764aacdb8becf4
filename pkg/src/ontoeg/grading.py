"""Readability metrics and grade aggregation.

The entailment grade is ten times the mean confidence of the
hypotheses judged entailed (non-entailed hypotheses contribute zero).
The metrics grade scores each readability measure against a rubric
interval: full marks inside, linear decay to zero at one interval-width
outside. The final grade is the weighted mean of the two, reported to
one decimal (half-up).
"""

from dataclasses import dataclass, asdict
from decimal import Decimal, ROUND_HALF_UP
from functools import lru_cache
import json
import re

from . import entailment, lap
from .resources import read_lines

DEFAULT_WEIGHTS = (0.7, 0.3)

DEFAULT_RUBRIC = {
    "token_count": {"lo": 120, "hi": 800, "weight": 0.10},
    "sentence_count": {"lo": 5, "hi": 40, "weight": 0.10},
    "mean_sentence_length": {"lo": 8, "hi": 30, "weight": 0.15},
    "type_token_ratio": {"lo": 0.3, "hi": 0.8, "weight": 0.15},
    "flesch_reading_ease": {"lo": 30, "hi": 70, "weight": 0.20},
    "connective_incidence": {"lo": 1, "hi": 10, "weight": 0.15},
    "adjacent_overlap": {"lo": 0.05, "hi": 0.6, "weight": 0.15},
}


@dataclass(frozen=True)
class Metrics:
    token_count: int
    sentence_count: int
    mean_sentence_length: float
    type_token_ratio: float
    flesch_reading_ease: float
    connective_incidence: float
    adjacent_overlap: float


_VOWEL_GROUP = re.compile(r"[aeiouy]+")


def count_syllables(word):
    """Vowel-group count with a silent-e correction; at least one."""
    lower = "".join(c for c in word.lower() if c.isalpha())
    if not lower:
        return 1
    groups = _VOWEL_GROUP.findall(lower)
    count = len(groups)
    if (
        count > 1
        and lower.endswith("e")
        and not lower.endswith("le")
        and not lower.endswith("ee")
    ):
        count -= 1
    return max(count, 1)


@lru_cache(maxsize=1)
def _connectives():
    phrases = [tuple(p.split()) for p in read_lines("connectives.txt")]
    return sorted(phrases, key=len, reverse=True)


def _count_connectives(sentences):
    count = 0
    for sentence in sentences:
        surfaces = [t.surface.lower() for t in sentence.tokens]
        i = 0
        while i < len(surfaces):
            for phrase in _connectives():
                if tuple(surfaces[i:i + len(phrase)]) == phrase:
                    count += 1
                    i += len(phrase)
                    break
            else:
                i += 1
    return count


def compute_metrics(essay, lexicon=None):
    """Token/sentence counts, type-token ratio, Flesch reading ease,
    connective incidence per 100 tokens, adjacent content overlap."""
    if not essay.strip():
        raise ValueError("empty essay")
    sentences = lap.analyze(essay, lexicon)
    all_tokens = [t for s in sentences for t in s.tokens]
    words = [t for t in all_tokens if t.is_word]
    token_count = len(all_tokens)
    sentence_count = len(sentences)
    word_count = len(words)
    lemmas = [t.lemma for t in words]
    syllables = sum(count_syllables(t.surface) for t in words)
    flesch = (
        206.835
        - 1.015 * (word_count / sentence_count)
        - 84.6 * (syllables / word_count)
    )
    content_sets = [set(entailment.content_lemmas(s)) for s in sentences]
    overlaps = []
    for left, right in zip(content_sets, content_sets[1:]):
        union = left | right
        overlaps.append(len(left & right) / len(union) if union else 0.0)
    return Metrics(
        token_count=token_count,
        sentence_count=sentence_count,
        mean_sentence_length=word_count / sentence_count,
        type_token_ratio=len(set(lemmas)) / word_count,
        flesch_reading_ease=flesch,
        connective_incidence=100.0 * _count_connectives(sentences) / token_count,
        adjacent_overlap=(
            sum(overlaps) / len(overlaps) if overlaps else 0.0
        ),
    )


def entailment_grade(decisions):
    """10 x mean confidence over entailed decisions, zero for the rest."""
    if not decisions:
        raise ValueError("no entailment decisions")
    total = sum(
        d.confidence for d in decisions if d.label == entailment.ENTAILMENT
    )
    return 10.0 * total / len(decisions)


def _interval_score(value, lo, hi):
    width = hi - lo
    if width <= 0:
        raise ValueError("rubric interval must have positive width")
    distance = max(lo - value, value - hi, 0.0)
    return 10.0 * max(0.0, 1.0 - distance / width)


def metrics_grade(metrics, rubric=None):
    """Weighted mean of per-metric interval scores."""
    rubric = rubric or DEFAULT_RUBRIC
    weights = sum(entry["weight"] for entry in rubric.values())
    if abs(weights - 1.0) > 1e-9:
        raise ValueError("rubric weights must sum to 1")
    values = asdict(metrics)
    grade = 0.0
    for name, entry in rubric.items():
        if name not in values:
            raise ValueError(f"rubric names unknown metric {name!r}")
        grade += entry["weight"] * _interval_score(
            values[name], entry["lo"], entry["hi"]
        )
    return grade


def round_grade(value):
    """One decimal, half-up, as reported."""
    return float(Decimal(repr(value)).quantize(
        Decimal("0.1"), rounding=ROUND_HALF_UP
    ))


@dataclass(frozen=True)
class GradingTask:
    essay_text: str
    hypothesis_set: object
    model: object
    question_text: str | None = None
    weights: tuple = DEFAULT_WEIGHTS
    rubric: dict | None = None


@dataclass(frozen=True)
class EssayReport:
    decisions: tuple  # (hypothesis, EntailmentDecision) pairs
    metrics: Metrics
    grade_entailment: float
    grade_metrics: float
    grade_final: float
    weights: tuple


def grade_essay(task, lexicon=None):
    """Run the selected hypotheses through the model, compute metrics,
    and combine the two grades."""
    if not task.essay_text.strip():
        raise ValueError("empty essay")
    w1, w2 = task.weights
    if w1 < 0 or w2 < 0:
        raise ValueError("weights must be non-negative")
    if abs(w1 + w2 - 1.0) > 1e-9:
        raise ValueError("weights must sum to 1")
    selected = task.hypothesis_set.selected()
    if not selected:
        raise ValueError("no selected hypotheses")
    text = entailment.with_question(task.question_text, task.essay_text)
    decisions = tuple(
        (h, entailment.decide(text, h.text, task.model, lexicon))
        for h in selected
    )
    metrics = compute_metrics(task.essay_text, lexicon)
    g_entailment = entailment_grade([d for _, d in decisions])
    g_metrics = metrics_grade(metrics, task.rubric)
    g_final = round_grade(w1 * g_entailment + w2 * g_metrics)
    return EssayReport(
        decisions=decisions,
        metrics=metrics,
        grade_entailment=g_entailment,
        grade_metrics=g_metrics,
        grade_final=g_final,
        weights=(w1, w2),
    )


def report_to_json(report, essay_path):
    """Serialize a report; entailment/metrics grades keep full precision
    so downstream checks can recompute them, the final grade is rounded."""
    payload = {
        "essay_path": str(essay_path),
        "hypotheses": [
            {
                "id": h.id,
                "text": h.text,
                "label": d.label,
                "confidence": d.confidence,
            }
            for h, d in report.decisions
        ],
        "metrics": asdict(report.metrics),
        "grade_entailment": report.grade_entailment,
        "grade_metrics": report.grade_metrics,
        "grade_final": report.grade_final,
        "weights": list(report.weights),
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
