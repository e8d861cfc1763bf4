"""Build action models from structured events and provider predictions.

One action per synthesizable event: parameters come from the numbered SRL
arguments, positive literals from thresholded relation predictions pruned
for redundancy/contradiction, negated literals from NLI contradictions
under a local or global strategy.
"""

from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass, field, replace

from .annotations import AnnotatedDocument, Span
from .events import EventArgument, resolved_span_text
from .knowledge import (
    EFFECT_RELATIONS,
    RELATION_ORDER,
    REDUNDANCY_BAR,
    NliLabel,
    Relation,
    RelationPrediction,
    ThresholdPolicy,
    apply_thresholds,
)
from .structuring import NEGATION_LEMMAS, StructuredEvent

log = logging.getLogger(__name__)

LIGHT_VERBS = frozenset({"be", "to", "get"})
SUBJECT_PLACEHOLDERS = ("personx", "x")
OBJECT_PLACEHOLDERS = ("persony", "y")

_PREDICATE_RE = re.compile(r"^[a-z0-9-]+$")


class EmptyPredicate(ValueError):
    """Phrase normalized away to nothing; the candidate is discarded."""


class NegationStrategy(enum.Enum):
    GLOBAL = "global"
    LOCAL = "local"


@dataclass(frozen=True)
class Literal:
    predicate: str
    args: tuple[str, ...]  # emission-ordered subset of ("x", "o")
    negated: bool
    source_relation: Relation
    probability: float
    phrase: str = ""  # generation phrase the literal came from

    def __post_init__(self):
        if not _PREDICATE_RE.match(self.predicate):
            raise ValueError(f"bad predicate name {self.predicate!r}")
        if not self.args or len(set(self.args)) != len(self.args):
            raise ValueError(f"bad argument list {self.args!r}")

    def key(self) -> tuple[str, tuple[str, ...], bool]:
        return (self.predicate, self.args, self.negated)


@dataclass(frozen=True)
class Parameter:
    name: str  # "x" or "o"
    type: str  # "subject" or "object"
    text: str  # resolved argument text the parameter stands for


@dataclass
class ActionModel:
    name: str
    parameters: tuple[Parameter, ...]
    preconditions: list[Literal] = field(default_factory=list)
    effects: list[Literal] = field(default_factory=list)
    event_id: str = ""
    doc_id: str = ""

    def parameter(self, name: str) -> Parameter | None:
        for p in self.parameters:
            if p.name == name:
                return p
        return None

    def check(self) -> None:
        declared = {p.name for p in self.parameters}
        for pool in (self.preconditions, self.effects):
            seen = set()
            positives = {(l.predicate, l.args) for l in pool if not l.negated}
            for lit in pool:
                if not set(lit.args) <= declared:
                    raise ValueError(f"{self.name}: literal {lit.predicate} uses undeclared parameter")
                if lit.key() in seen:
                    raise ValueError(f"{self.name}: duplicate literal {lit.key()}")
                seen.add(lit.key())
                if lit.negated and (lit.predicate, lit.args) in positives:
                    raise ValueError(f"{self.name}: {lit.predicate} present both positive and negated")


def select_parameters(event: StructuredEvent) -> tuple[EventArgument | None, EventArgument | None]:
    """Subject = ARG0 else ARG1; object = first later-numbered argument."""
    args = {a.label: a for a in event.arguments if a.label.startswith("ARG") and a.label[3:].isdigit()}
    x = None
    s = None
    for label, number in (("ARG0", 0), ("ARG1", 1)):
        if label in args:
            x = args[label]
            s = number
            break
    if x is None:
        return None, None
    for i in range(s + 1, 6):
        if f"ARG{i}" in args:
            return x, args[f"ARG{i}"]
    return x, None


def _normalize_words(text: str) -> list[str]:
    return [w for w in text.lower().split() if w]


def _strip_word_punct(word: str) -> str:
    return re.sub(r"[^a-z0-9']", "", word.lower())


def _delete_subsequence(words: list[str], mention: list[str]) -> tuple[list[str], bool]:
    """Remove every occurrence of the mention word sequence; True if any hit."""
    if not mention:
        return words, False
    target = [_strip_word_punct(w) for w in mention]
    out: list[str] = []
    i = 0
    hit = False
    while i < len(words):
        window = [_strip_word_punct(w) for w in words[i:i + len(target)]]
        if window == target:
            hit = True
            i += len(target)
        else:
            out.append(words[i])
            i += 1
    return out, hit


def normalize_phrase(text: str) -> str:
    """Canonical predicate/action-name form: lowercase, apostrophes deleted,
    whitespace to hyphens, all other punctuation dropped."""
    text = text.lower().replace("'", "").replace("’", "")
    text = re.sub(r"\s+", "-", text.strip())
    text = re.sub(r"[^a-z0-9-]", "", text)
    text = re.sub(r"-{2,}", "-", text).strip("-")
    return text


def normalize_literal(
    phrase: str,
    relation: Relation,
    x_text: str | None,
    o_text: str | None,
    probability: float = 0.0,
) -> Literal:
    """Turn a generated phrase into a literal.

    The phrase's own subject placeholder is stripped from the front; an
    occurrence of the other parameter's mention is deleted and adds that
    parameter. Object-side relations emit the object first.
    """
    words = _normalize_words(phrase)
    if relation.is_object_side:
        base, other = "o", "x"
        lead_mentions = [list(OBJECT_PLACEHOLDERS[:1]), [OBJECT_PLACEHOLDERS[1]]]
        if o_text:
            lead_mentions.append(_normalize_words(o_text))
        other_mentions = [list(SUBJECT_PLACEHOLDERS[:1]), [SUBJECT_PLACEHOLDERS[1]]]
        if x_text:
            other_mentions.append(_normalize_words(x_text))
    else:
        base, other = "x", "o"
        lead_mentions = [list(SUBJECT_PLACEHOLDERS[:1]), [SUBJECT_PLACEHOLDERS[1]]]
        if x_text:
            lead_mentions.append(_normalize_words(x_text))
        other_mentions = [list(OBJECT_PLACEHOLDERS[:1]), [OBJECT_PLACEHOLDERS[1]]]
        if o_text:
            other_mentions.append(_normalize_words(o_text))

    # Leading subject-of-phrase mention carries no information.
    lead_mentions.sort(key=len, reverse=True)
    for mention in lead_mentions:
        target = [_strip_word_punct(w) for w in mention]
        if target and [_strip_word_punct(w) for w in words[: len(target)]] == target:
            words = words[len(target):]
            break

    other_present = False
    other_mentions.sort(key=len, reverse=True)
    for mention in other_mentions:
        words, hit = _delete_subsequence(words, mention)
        other_present = other_present or hit

    while len(words) > 1 and words[0] in LIGHT_VERBS:
        words = words[1:]

    predicate = normalize_phrase(" ".join(words))
    if not predicate:
        raise EmptyPredicate(f"phrase {phrase!r} normalized to nothing")

    args = (base, other) if other_present else (base,)
    return Literal(
        predicate=predicate,
        args=args,
        negated=False,
        source_relation=relation,
        probability=probability,
        phrase=phrase,
    )


def event_text(doc: AnnotatedDocument, event: StructuredEvent) -> str:
    """Surface rendering of the event: verbs plus arguments, resolved."""
    spans = [event.merged_verb_span] + [a.span for a in event.arguments]
    start = min(s.start for s in spans)
    end = max(s.end for s in spans)
    covered = set()
    for s in spans:
        covered.update(range(s.start, s.end))
    sentence = doc.sentences[event.sentence_index]
    parts = []
    i = start
    while i < end:
        if i in covered:
            run_end = i
            while run_end < end and run_end in covered:
                run_end += 1
            parts.append(resolved_span_text(doc, event.sentence_index, Span(i, run_end)))
            i = run_end
        else:
            i += 1
    return " ".join(p for p in parts if p)


def action_name(event: StructuredEvent, sentence) -> str:
    """Action name from the (merged) verb phrase.

    Statements with argument events are named from the non-copula verbs
    with a be-/be-not- prefix depending on negation inside the merged span.
    """
    if event.is_statement and event.argument_children:
        span = event.merged_verb_span
        copula = set(range(event.base.verb_span.start, event.base.verb_span.end))
        negated = False
        rest = []
        for i in range(span.start, span.end):
            tok = sentence.tokens[i]
            if i in copula:
                continue
            if tok.lemma.lower() in NEGATION_LEMMAS or tok.text.lower() in ("not", "n't"):
                negated = True
                continue
            rest.append(tok.text)
        prefix = "be-not" if negated else "be"
        tail = normalize_phrase(" ".join(rest))
        return f"{prefix}-{tail}" if tail else prefix
    return normalize_phrase(event.merged_verb_phrase)


def synthesizable(event: StructuredEvent) -> bool:
    """Statements only act through their argument events; bare ones do not."""
    return not (event.is_statement and not event.argument_children)


def predict_candidates(
    event: StructuredEvent,
    doc: AnnotatedDocument,
    provider,
    policy: ThresholdPolicy,
    trace: list | None = None,
) -> tuple[list[Literal], list[Literal]]:
    """Thresholded provider predictions as (precondition, effect) candidates."""
    x_arg, o_arg = select_parameters(event)
    if x_arg is None:
        return [], []
    x_text = x_arg.resolved_text
    o_text = o_arg.resolved_text if o_arg is not None else None

    text = event_text(doc, event)
    preconditions: list[Literal] = []
    effects: list[Literal] = []
    for relation in RELATION_ORDER:
        if relation.is_object_side and o_arg is None:
            continue
        raw = provider.generate(text, relation)
        kept = apply_thresholds(raw, policy)
        kept_set = {(p.phrase, p.probability) for p in kept}
        for pred in raw:
            entry = None
            if trace is not None:
                entry = {
                    "relation": relation.value,
                    "phrase": pred.phrase,
                    "p": pred.probability,
                    "threshold_kept": (pred.phrase, pred.probability) in kept_set,
                    "literal": None,
                }
                trace.append(entry)
            if (pred.phrase, pred.probability) not in kept_set:
                continue
            try:
                literal = normalize_literal(pred.phrase, relation, x_text, o_text, pred.probability)
            except EmptyPredicate:
                log.warning("discarding candidate %r: empty predicate", pred.phrase)
                continue
            if entry is not None:
                entry["literal"] = {"predicate": literal.predicate, "args": list(literal.args)}
            if relation is Relation.XNEED:
                preconditions.append(literal)
            else:
                effects.append(literal)
    return preconditions, effects


def _sort_pool(pool: list[Literal]) -> list[Literal]:
    rel_rank = {rel: i for i, rel in enumerate(RELATION_ORDER)}
    return sorted(pool, key=lambda l: (-l.probability, rel_rank[l.source_relation], l.phrase))


def filter_candidates(candidates: list[Literal], provider, trace: list | None = None) -> list[Literal]:
    """Greedy scan in probability order; drop anything similar to or
    contradicting an already-kept candidate."""
    kept: list[Literal] = []
    for cand in _sort_pool(candidates):
        dropped_by = None
        for existing in kept:
            if provider.similarity(existing.phrase, cand.phrase) >= REDUNDANCY_BAR:
                dropped_by = {"reason": "similarity", "against": existing.phrase}
                break
            if provider.nli(existing.phrase, cand.phrase).label is NliLabel.CONTRADICTION:
                dropped_by = {"reason": "contradiction", "against": existing.phrase}
                break
        if trace is not None:
            trace.append(
                {
                    "phrase": cand.phrase,
                    "predicate": cand.predicate,
                    "kept": dropped_by is None,
                    "dropped_by": dropped_by,
                }
            )
        if dropped_by is None:
            kept.append(cand)
    # Distinct phrases can normalize to the same literal; keep the strongest.
    seen: set[tuple] = set()
    unique = []
    for lit in kept:
        if lit.key() in seen:
            continue
        seen.add(lit.key())
        unique.append(lit)
    return unique


def literal_phrase_form(literal: Literal, action: ActionModel) -> str:
    """Natural-language rendering used for NLI probes: parameter texts
    around the de-hyphenated predicate, first argument leading."""
    words = literal.predicate.replace("-", " ")
    texts = []
    for arg in literal.args:
        param = action.parameter(arg)
        texts.append(param.text if param is not None else arg)
    if not texts:
        return words
    lead, rest = texts[0], texts[1:]
    return " ".join([lead, words] + rest)


def generate_negations(
    action: ActionModel,
    domain_predicates: list[tuple[str, tuple[str, ...]]],
    strategy: NegationStrategy,
    provider,
    trace: list | None = None,
) -> ActionModel:
    """Add negated literals for predicates contradicted by positive ones.

    Local: only the action's own precondition predicates may yield negated
    effects, and no negated preconditions are added. Global: every domain
    predicate is probed against both pools.
    """
    declared = {p.name for p in action.parameters}

    if strategy is NegationStrategy.LOCAL:
        effect_templates = [(l.predicate, l.args) for l in action.preconditions if not l.negated]
        precondition_templates: list[tuple[str, tuple[str, ...]]] = []
    else:
        usable = [t for t in domain_predicates if set(t[1]) <= declared]
        effect_templates = sorted(set(usable))
        precondition_templates = sorted(set(usable))

    new_action = replace(
        action, preconditions=list(action.preconditions), effects=list(action.effects)
    )

    def probe(templates, pool: list[Literal], pool_name: str) -> None:
        positives = [l for l in pool if not l.negated]
        positive_keys = {(l.predicate, l.args) for l in positives}
        existing = {l.key() for l in pool}
        for predicate, args in templates:
            if (predicate, args, True) in existing:
                continue
            if (predicate, args) in positive_keys:
                continue  # would clash with a positive literal in this pool
            template = Literal(
                predicate=predicate,
                args=args,
                negated=False,
                source_relation=Relation.XNEED,
                probability=0.0,
            )
            target_phrase = literal_phrase_form(template, new_action)
            for positive in positives:
                source_phrase = literal_phrase_form(positive, new_action)
                if source_phrase == target_phrase:
                    continue
                verdict = provider.nli(source_phrase, target_phrase)
                if verdict.label is NliLabel.CONTRADICTION:
                    negated = Literal(
                        predicate=predicate,
                        args=args,
                        negated=True,
                        source_relation=positive.source_relation,
                        probability=positive.probability,
                        phrase=target_phrase,
                    )
                    pool.append(negated)
                    existing.add(negated.key())
                    if trace is not None:
                        trace.append(
                            {
                                "predicate": predicate,
                                "args": list(args),
                                "pool": pool_name,
                                "contradicted_by": positive.phrase or positive.predicate,
                                "strategy": strategy.value,
                            }
                        )
                    break

    probe(effect_templates, new_action.effects, "effects")
    if strategy is NegationStrategy.GLOBAL:
        probe(precondition_templates, new_action.preconditions, "preconditions")
    return new_action


def build_action(
    event: StructuredEvent,
    doc: AnnotatedDocument,
    provider,
    policy: ThresholdPolicy,
    trace_candidates: list | None = None,
    trace_filters: list | None = None,
) -> ActionModel | None:
    """Positive-literal action model for one event, or None if nothing to build."""
    if not synthesizable(event):
        return None
    x_arg, o_arg = select_parameters(event)
    if x_arg is None:
        return None

    preconditions, effects = predict_candidates(event, doc, provider, policy, trace_candidates)
    if not preconditions and not effects:
        return None

    parameters = [Parameter(name="x", type="subject", text=x_arg.resolved_text)]
    if o_arg is not None:
        parameters.append(Parameter(name="o", type="object", text=o_arg.resolved_text))

    sentence = doc.sentences[event.sentence_index]
    model = ActionModel(
        name=action_name(event, sentence),
        parameters=tuple(parameters),
        preconditions=filter_candidates(preconditions, provider, trace_filters),
        effects=filter_candidates(effects, provider, trace_filters),
        event_id=event.id,
        doc_id=doc.doc_id,
    )
    model.check()
    return model
