"""Compile ontology axioms into controlled-English hypothesis sentences.

Three templates cover the supported axiom shapes:

  C EQUIV D AND X1 ... Xk   ->  "Every C is a D that <X1> and that <Xk>."
                                plus the converse sentence
  C SUBCLASS NOT D          ->  "No C is a D."
  C SUBCLASS D              ->  "Every C is a D."

Identifiers and role names appear verbatim; a/an is chosen from the
first letter of the identifier.
"""

from dataclasses import dataclass, field, replace
import json
import logging

from . import ontology as onto

logger = logging.getLogger(__name__)

VOWELS = set("AEIOUaeiou")

FORWARD = "Forward"
CONVERSE = "Converse"
SINGLE = "Single"

_SUFFIX = {FORWARD: "f", CONVERSE: "c", SINGLE: "s"}


@dataclass(frozen=True)
class Hypothesis:
    id: str
    text: str
    axiom_index: int
    direction: str
    selected: bool = True


@dataclass(frozen=True)
class HypothesisSet:
    hypotheses: tuple
    ontology_name: str = ""

    def selected(self):
        return [h for h in self.hypotheses if h.selected]

    def by_id(self, hyp_id):
        for h in self.hypotheses:
            if h.id == hyp_id:
                return h
        raise KeyError(hyp_id)


def indefinite_article(identifier):
    """"an" before a vowel-initial identifier, otherwise "a"."""
    if not identifier:
        raise ValueError("empty identifier")
    return "an" if identifier[0] in VOWELS else "a"


def _with_article(name):
    return f"{indefinite_article(name)} {name}"


def _render_restriction(expr):
    if isinstance(expr, onto.Existential):
        return f"{expr.role} {_with_article(expr.filler.name)}"
    filler = expr.filler
    members = (filler,) if isinstance(filler, onto.Named) else filler.operands
    alternatives = " or ".join(_with_article(m.name) for m in members)
    return f"{expr.role} only {alternatives}"


def verbalize_axiom(axiom, axiom_index=0):
    """Hypotheses for one axiom; empty list (with a log entry) when the
    axiom has no template."""
    shape = onto.axiom_shape(axiom)
    if shape == "definition":
        lhs, genus, restrictions = onto.definition_parts(axiom)
        rendered = " and that ".join(
            _render_restriction(r) for r in restrictions
        )
        description = f"{_with_article(genus.name)} that {rendered}"
        forward = f"Every {lhs.name} is {description}."
        converse = (
            f"Every {genus.name} that {rendered} is "
            f"{_with_article(lhs.name)}."
        )
        return [
            Hypothesis(f"ax{axiom_index}-f", forward, axiom_index, FORWARD),
            Hypothesis(f"ax{axiom_index}-c", converse, axiom_index, CONVERSE),
        ]
    if shape == "disjointness":
        text = (
            f"No {axiom.lhs.name} is "
            f"{_with_article(axiom.rhs.operand.name)}."
        )
        return [Hypothesis(f"ax{axiom_index}-s", text, axiom_index, SINGLE)]
    if shape == "subsumption":
        text = (
            f"Every {axiom.lhs.name} is {_with_article(axiom.rhs.name)}."
        )
        return [Hypothesis(f"ax{axiom_index}-s", text, axiom_index, SINGLE)]
    logger.warning(
        "skipping unverbalizable axiom %d: %s",
        axiom_index, onto.serialize_axiom(axiom),
    )
    return []


def verbalize_ontology(ontology):
    hypotheses = []
    for index, axiom in enumerate(ontology.axioms):
        hypotheses.extend(verbalize_axiom(axiom, index))
    return HypothesisSet(tuple(hypotheses), ontology.name)


def to_jsonl(hypothesis_set):
    lines = []
    for h in hypothesis_set.hypotheses:
        lines.append(json.dumps({
            "id": h.id,
            "text": h.text,
            "axiom_index": h.axiom_index,
            "direction": h.direction,
            "selected": h.selected,
        }, ensure_ascii=False))
    return "".join(line + "\n" for line in lines)


def from_jsonl(text, ontology_name=""):
    hypotheses = []
    for line in text.splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        hypotheses.append(Hypothesis(
            id=obj["id"],
            text=obj["text"],
            axiom_index=obj["axiom_index"],
            direction=obj["direction"],
            selected=bool(obj.get("selected", True)),
        ))
    return HypothesisSet(tuple(hypotheses), ontology_name)
