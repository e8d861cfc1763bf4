"""End-to-end compilation: annotation documents in, planning domain out,
with a machine-readable trace of every decision along the way."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .annotations import AnnotatedDocument, load_document
from .events import build_events, load_lexicon, resolve_entities
from .knowledge import ThresholdPolicy
from .pddl import PlanningDomain, assemble, emit_pddl
from .structuring import SIGNAL_PHRASES, structure_sentence
from .synthesis import (
    ActionModel,
    NegationStrategy,
    build_action,
    generate_negations,
    select_parameters,
)

TRACE_SCHEMA_VERSION = 1


class DocumentErrors(ValueError):
    """One or more input documents failed to load; carries every failure."""

    def __init__(self, failures: list[tuple[Path, Exception]]):
        self.failures = failures
        lines = [f"{path}: {error}" for path, error in failures]
        super().__init__("\n".join(lines))


@dataclass
class PipelineConfig:
    documents: list[Path]
    provider: object  # anything with generate/similarity/nli
    negation: NegationStrategy = NegationStrategy.LOCAL
    domain_name: str = "story"
    policy: ThresholdPolicy = field(default_factory=ThresholdPolicy)
    lexicon: frozenset[str] | None = None
    signal_phrases: tuple[tuple[str, ...], ...] = SIGNAL_PHRASES
    output_path: Path | None = None
    trace_path: Path | None = None
    jobs: int = 1


@dataclass
class PipelineResult:
    domain: PlanningDomain
    pddl: str
    trace: dict


def _process_document(doc: AnnotatedDocument, config: PipelineConfig, lexicon: frozenset[str]):
    doc = resolve_entities(doc)
    events = build_events(doc, lexicon)

    structured = []
    links = []
    doc_trace = {
        "doc_id": doc.doc_id,
        "events": [],
        "condition_pairs": [],
    }
    for sent_index in range(len(doc.sentences)):
        sentence_events = [e for e in events if e.sentence_index == sent_index]
        if not sentence_events:
            continue
        sent_structured, sent_links = structure_sentence(
            sentence_events, doc.sentences[sent_index], config.signal_phrases
        )
        structured.extend(sent_structured)
        links.extend(sent_links)

    for event in structured:
        x_arg, o_arg = select_parameters(event)
        doc_trace["events"].append(
            {
                "id": event.id,
                "sentence": event.sentence_index,
                "verb_phrase": event.merged_verb_phrase,
                "statement": event.is_statement,
                "argument_children": list(event.argument_children),
                "condition_of": event.condition_of,
                "conditions": list(event.conditions),
                "subject": x_arg.resolved_text if x_arg else None,
                "object": o_arg.resolved_text if o_arg else None,
            }
        )
    doc_trace["condition_pairs"] = [
        {
            "condition": link.condition_id,
            "consequence": link.consequence_id,
            "pattern": link.pattern,
        }
        for link in links
    ]

    actions = []
    action_traces = []
    for event in structured:
        candidates_trace: list = []
        filter_trace: list = []
        action = build_action(
            event, doc, config.provider, config.policy, candidates_trace, filter_trace
        )
        if action is None:
            continue
        actions.append(action)
        action_traces.append(
            {
                "name": action.name,
                "event": event.id,
                "doc": doc.doc_id,
                "candidates": candidates_trace,
                "filter_decisions": filter_trace,
                "negations": [],
            }
        )
    return doc_trace, actions, action_traces


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    """Compile every configured document into one planning domain.

    Documents are processed in a worker pool but results keep input order,
    so output is reproducible byte for byte. Negation runs after all
    positive models exist (the global strategy needs the full predicate
    set), then the domain is assembled and emitted.
    """
    lexicon = config.lexicon if config.lexicon is not None else load_lexicon()

    docs = []
    failures: list[tuple[Path, Exception]] = []
    for path in config.documents:
        try:
            with open(path, "rb") as fh:
                docs.append(load_document(fh.read()))
        except (OSError, ValueError) as exc:
            failures.append((Path(path), exc))
    if failures:
        raise DocumentErrors(failures)

    if config.jobs > 1 and len(docs) > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(lambda d: _process_document(d, config, lexicon), docs))
    else:
        results = [_process_document(d, config, lexicon) for d in docs]

    doc_traces = [r[0] for r in results]
    actions: list[ActionModel] = [a for r in results for a in r[1]]
    action_traces = [t for r in results for t in r[2]]

    domain_predicates = sorted(
        {(lit.predicate, lit.args) for a in actions for lit in a.preconditions + a.effects}
    )
    finalized = []
    for action, trace in zip(actions, action_traces):
        negation_trace: list = []
        final = generate_negations(
            action, domain_predicates, config.negation, config.provider, negation_trace
        )
        final.check()
        finalized.append(final)
        trace["negations"] = negation_trace

    domain = assemble(finalized, config.domain_name)
    pddl = emit_pddl(domain)
    trace = {
        "schema_version": TRACE_SCHEMA_VERSION,
        "domain": config.domain_name,
        "negation": config.negation.value,
        "documents": doc_traces,
        "actions": action_traces,
    }

    if config.output_path is not None:
        Path(config.output_path).write_text(pddl, encoding="utf-8", newline="\n")
    if config.trace_path is not None:
        Path(config.trace_path).write_text(
            json.dumps(trace, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
    return PipelineResult(domain=domain, pddl=pddl, trace=trace)
