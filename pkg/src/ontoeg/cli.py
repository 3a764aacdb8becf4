"""Command-line surface for the teacher workflow.

Subcommands: learn, verbalize, select, train, extract, metrics, grade.
Defaults come from an optional JSON config file (ONTOEG_CONFIG or
--config); command-line flags override config values. Exit status is 0
on success and 2 on any usage or input error.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import entailment, grading, ontolearn, ontology, openie, verbalize
from .resources import data_path

CONFIG_ENV = "ONTOEG_CONFIG"

CONFIG_DEFAULTS = {
    "weights": list(grading.DEFAULT_WEIGHTS),
    "eda": "edit",
    "relevance_cutoff": ontolearn.DEFAULT_RELEVANCE_CUTOFF,
    "lexical_constraint_k": 20,
    "rubric": None,
    "resource": None,
}


class CliError(Exception):
    pass


def load_config(path=None):
    config = dict(CONFIG_DEFAULTS)
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        try:
            loaded = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read config {path}: {exc}")
        unknown = set(loaded) - set(CONFIG_DEFAULTS)
        if unknown:
            raise CliError(f"unknown config keys: {sorted(unknown)}")
        config.update(loaded)
    _validate_weights(config["weights"])
    if config["eda"] not in ("edit", "maxent"):
        raise CliError(f"unknown eda {config['eda']!r}")
    return config


def _validate_weights(weights):
    if (
        not isinstance(weights, (list, tuple))
        or len(weights) != 2
        or any(w < 0 for w in weights)
        or abs(sum(weights) - 1.0) > 1e-9
    ):
        raise CliError(
            "weights must be two non-negative numbers summing to 1"
        )


def _parse_weights(text):
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise CliError(f"bad weights {text!r}")
    _validate_weights(parts)
    return tuple(parts)


def _read_file(path, what):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {what} {path}: {exc}")


def _write_file(path, content):
    try:
        Path(path).write_text(content, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}")


def _load_rubric(config):
    if not config["rubric"]:
        return None
    rubric = json.loads(_read_file(config["rubric"], "rubric"))
    return rubric


def _load_resource(path):
    rows = entailment.load_resource_rows(_read_file(path, "resource file"))
    return entailment.LexicalResource.from_rows(rows)


def cmd_learn(args, config):
    directory = Path(args.corpus_dir)
    if not directory.is_dir():
        raise CliError(f"not a directory: {directory}")
    documents = []
    for path in sorted(directory.glob("*.txt")):
        documents.append(path.read_text(encoding="utf-8"))
    concepts, instances, learned = ontolearn.learn(
        documents,
        cutoff=args.cutoff if args.cutoff is not None
        else config["relevance_cutoff"],
        name=directory.name,
    )
    _write_file(args.out, ontology.serialize_ontology(learned))
    concept_path = args.concepts or str(Path(args.out).with_suffix(".tsv"))
    _write_file(concept_path, "".join(
        f"{c.label}\t{c.relevance:.6f}\t{c.frequency}\n" for c in concepts
    ))
    print(
        f"{len(documents)} documents -> {len(concepts)} concepts, "
        f"{len(learned.axioms)} axioms"
    )
    return 0


def cmd_verbalize(args, config):
    try:
        parsed = ontology.parse_ontology(
            _read_file(args.ontology, "ontology"), Path(args.ontology).stem
        )
    except ontology.OntologySyntaxError as exc:
        raise CliError(str(exc))
    for warning in ontology.validate(parsed):
        print(f"warning: {warning}", file=sys.stderr)
    hypothesis_set = verbalize.verbalize_ontology(parsed)
    _write_file(args.out, verbalize.to_jsonl(hypothesis_set))
    print(f"{len(hypothesis_set.hypotheses)} hypotheses")
    return 0


def cmd_select(args, config):
    content = _read_file(args.hypotheses, "hypothesis file")
    hypothesis_set = verbalize.from_jsonl(content)
    wanted = [i for chunk in args.ids for i in chunk.split(",") if i]
    if not wanted:
        raise CliError("no hypothesis ids given")
    known = {h.id for h in hypothesis_set.hypotheses}
    unknown = [i for i in wanted if i not in known]
    if unknown:
        raise CliError(f"unknown hypothesis ids: {', '.join(unknown)}")
    chosen = set(wanted)
    updated = verbalize.HypothesisSet(
        tuple(
            verbalize.Hypothesis(
                h.id, h.text, h.axiom_index, h.direction, h.id in chosen
            )
            for h in hypothesis_set.hypotheses
        ),
        hypothesis_set.ontology_name,
    )
    _write_file(args.hypotheses, verbalize.to_jsonl(updated))
    print(f"{len(chosen)} hypotheses selected")
    return 0


def cmd_train(args, config):
    try:
        pairs = entailment.parse_pairs(_read_file(args.pairs, "pairs file"))
    except ValueError as exc:
        raise CliError(str(exc))
    eda = args.eda or config["eda"]
    resource_path = args.resource or config["resource"]
    try:
        if eda == "edit":
            resource = (
                _load_resource(resource_path)
                if resource_path
                else entailment.LexicalResource()
            )
            model, accuracy = entailment.train_edit_distance(pairs, resource)
        else:
            model, accuracy = entailment.train_classifier(pairs)
    except ValueError as exc:
        raise CliError(str(exc))
    _write_file(args.out, entailment.model_to_json(model, resource_path))
    print(f"training accuracy {accuracy:.2f}")
    return 0


def cmd_extract(args, config):
    text = _read_file(args.text, "text file")
    lexicon = None
    if args.lexicon:
        rows = [
            line.split("\t")
            for line in _read_file(args.lexicon, "relation lexicon").splitlines()
            if line.strip()
        ]
        k = args.k if args.k is not None else config["lexical_constraint_k"]
        lexicon = openie.RelationLexicon.from_rows(rows, k)
    if args.pretagged:
        from . import lap
        sentences = lap.parse_pretagged(text)
        triplets = []
        for sentence in sentences:
            triplets.extend(openie.extract_triplets(sentence, lexicon))
    else:
        triplets = openie.extract_from_text(text, lexicon)
    lines = "".join(
        f"{t.arg1}\t{t.rel}\t{t.arg2}\t{t.confidence:.6f}\n"
        for t in triplets
    )
    if args.out:
        _write_file(args.out, lines)
    else:
        sys.stdout.write(lines)
    return 0


def cmd_metrics(args, config):
    essay = _read_file(args.essay, "essay")
    if not essay.strip():
        raise CliError("essay file is empty")
    metrics = grading.compute_metrics(essay)
    from dataclasses import asdict
    print(json.dumps(asdict(metrics), indent=2))
    return 0


def _load_model(path):
    def loader(resource_path):
        resolved = Path(resource_path)
        if not resolved.is_absolute():
            candidate = Path(path).parent / resolved
            resolved = candidate if candidate.exists() else resolved
        return entailment.load_resource_rows(
            _read_file(resolved, "resource file")
        )

    try:
        return entailment.model_from_json(
            _read_file(path, "model"), resource_loader=loader
        )
    except (ValueError, KeyError) as exc:
        raise CliError(f"bad model file {path}: {exc}")


def cmd_grade(args, config):
    essay = _read_file(args.essay, "essay")
    if not essay.strip():
        raise CliError("essay file is empty")
    hypothesis_set = verbalize.from_jsonl(
        _read_file(args.hypotheses, "hypothesis file")
    )
    model = _load_model(args.model)
    question = _read_file(args.question, "question") if args.question else None
    weights = (
        _parse_weights(args.weights)
        if args.weights
        else tuple(config["weights"])
    )
    task = grading.GradingTask(
        essay_text=essay,
        hypothesis_set=hypothesis_set,
        model=model,
        question_text=question,
        weights=weights,
        rubric=_load_rubric(config),
    )
    try:
        report = grading.grade_essay(task)
    except ValueError as exc:
        raise CliError(str(exc))
    for h, d in report.decisions:
        print(f"{h.id}\t{d.label}\t{d.confidence:.6f}")
    print(f"grade_entailment\t{grading.round_grade(report.grade_entailment)}")
    print(f"grade_metrics\t{grading.round_grade(report.grade_metrics)}")
    print(f"grade_final\t{report.grade_final}")
    if args.out:
        _write_file(args.out, grading.report_to_json(report, args.essay))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ontoeg",
        description="Grade essays against hypotheses verbalized from a "
        "domain ontology.",
    )
    parser.add_argument("--config", help="JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("learn", help="learn an ontology from a .txt corpus")
    p.add_argument("corpus_dir")
    p.add_argument("out", help="output .dl ontology path")
    p.add_argument("--concepts", help="concept TSV path")
    p.add_argument("--cutoff", type=float, help="relevance cutoff")
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("verbalize", help="generate hypotheses from an ontology")
    p.add_argument("ontology")
    p.add_argument("out", help="output JSONL hypothesis path")
    p.set_defaults(func=cmd_verbalize)

    p = sub.add_parser("select", help="mark exactly these hypotheses selected")
    p.add_argument("hypotheses")
    p.add_argument("ids", nargs="+", help="hypothesis ids (comma or space separated)")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("train", help="train an entailment model")
    p.add_argument("pairs", help="TSV training pairs")
    p.add_argument("out", help="output model JSON path")
    p.add_argument("--eda", choices=["edit", "maxent"])
    p.add_argument("--resource", help="lexical rule TSV (edit EDA)")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("extract", help="extract relation triplets")
    p.add_argument("text")
    p.add_argument("--out")
    p.add_argument("--lexicon", help="relation frequency TSV")
    p.add_argument("--k", type=int, help="lexical constraint threshold")
    p.add_argument("--pretagged", action="store_true",
                   help="input is surface_TAG tokens, one sentence per line")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("metrics", help="readability metrics for an essay")
    p.add_argument("essay")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("grade", help="grade an essay against selected hypotheses")
    p.add_argument("essay")
    p.add_argument("hypotheses")
    p.add_argument("model")
    p.add_argument("--out", help="report JSON path")
    p.add_argument("--question", help="question text file prefixed to the essay")
    p.add_argument("--weights", help="w1,w2 override")
    p.set_defaults(func=cmd_grade)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
