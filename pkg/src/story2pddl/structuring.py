"""Structure events within a sentence: argument-event merging and
condition-event splitting.

Argument events (clausal complements/subjects, passives, purpose clauses)
are absorbed into their container, widening its verb phrase. Condition
events are split off their consequence when a signal phrase plus one of
the ten tense patterns matches, and the condition's tokens are removed
from the consequence's argument spans.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .annotations import Sentence, Span
from .events import Event, EventArgument

CLAUSAL_RELATIONS = frozenset({"ccomp", "xcomp", "csubj"})
SUPPORT_RELATIONS = frozenset({"cop", "aux:pass"})
PURPOSE_LABELS = frozenset({"ARGM-PRP", "ARGM-PNC"})

# Longest phrases first so "on the condition that" wins over "on condition that".
SIGNAL_PHRASES: tuple[tuple[str, ...], ...] = (
    ("on", "the", "condition", "that"),
    ("on", "condition", "that"),
    ("as", "long", "as"),
    ("provided", "that"),
    ("whenever",),
    ("if",),
)

NEGATION_LEMMAS = frozenset({"not", "n't", "no", "never"})


class CycleError(ValueError):
    """Argument-relation pairs form a cycle (upstream rule bug)."""


class Tense(enum.Enum):
    FUTURE_SIMPLE = "future-simple"
    PRESENT_SIMPLE = "present-simple"
    PAST_SIMPLE = "past-simple"
    INFINITIVE = "infinitive"
    PAST_PARTICIPLE = "past-participle"
    GERUND = "gerund"
    PAST_CONTINUOUS = "past-continuous"
    PAST_PERFECT = "past-perfect"
    PAST_PERFECT_CONTINUOUS = "past-perfect-continuous"
    PERFECT_CONDITIONAL = "perfect-conditional"
    PERFECT_CONDITIONAL_CONTINUOUS = "perfect-conditional-continuous"
    UNKNOWN = "unknown"


@dataclass
class StructuredEvent:
    base: Event
    merged_verb_span: Span
    merged_verb_phrase: str
    arguments: tuple[EventArgument, ...]
    argument_children: tuple[str, ...] = ()
    condition_of: str | None = None
    conditions: tuple[str, ...] = ()

    @property
    def id(self) -> str:
        return self.base.id

    @property
    def sentence_index(self) -> int:
        return self.base.sentence_index

    @property
    def is_statement(self) -> bool:
        return self.base.is_statement


@dataclass(frozen=True)
class ConditionLink:
    condition_id: str
    consequence_id: str
    pattern: str  # "S1".."S10"
    signal_span: Span = field(compare=False, default=Span(0, 1))


def contained_events(events: list[Event]) -> list[tuple[str, str]]:
    """(container, contained) pairs: e_j's verb lies inside an argument of e_i."""
    pairs = []
    for container in events:
        for contained in events:
            if container.id == contained.id:
                continue
            if any(arg.span.contains_index(contained.verb_index) for arg in container.arguments):
                pairs.append((container.id, contained.id))
    return pairs


def is_argument_event(container: Event, contained: Event, sentence: Sentence) -> bool:
    """Decide whether a contained event is an argument of its container."""
    vi, vj = container.verb_index, contained.verb_index
    if any(r in CLAUSAL_RELATIONS for r in sentence.edges_between(vi, vj)):
        return True
    if any(r in SUPPORT_RELATIONS for r in sentence.edges_between(vj, vi)):
        return True
    for arg in container.arguments:
        if arg.label not in PURPOSE_LABELS:
            continue
        if arg.span.contains(contained.verb_span) and all(
            arg.span.contains(a.span) for a in contained.arguments
        ):
            return True
    return False


def _resolve_parents(pairs: list[tuple[str, str]], events: dict[str, Event]) -> dict[str, str]:
    """One parent per child; multiple candidates resolve to the nearest verb."""
    by_child: dict[str, list[str]] = {}
    for parent, child in pairs:
        by_child.setdefault(child, []).append(parent)
    parent_of: dict[str, str] = {}
    for child, parents in by_child.items():
        child_verb = events[child].verb_index
        parents.sort(key=lambda p: (abs(events[p].verb_index - child_verb), events[p].verb_index))
        parent_of[child] = parents[0]
    # Cycle check over the resolved forest.
    for start in parent_of:
        seen = set()
        cur = start
        while cur in parent_of:
            if cur in seen:
                raise CycleError(f"argument relations form a cycle through {cur}")
            seen.add(cur)
            cur = parent_of[cur]
    return parent_of


def merge_argument_events(events: list[Event], pairs: list[tuple[str, str]], sentence: Sentence) -> list[StructuredEvent]:
    """Absorb argument descendants into their maximal parents.

    The merged verb phrase runs from the first to the last merged verb,
    with the leading verb lemmatized ("got bitten" -> "get bitten").
    Parent arguments fully consumed by the merged verb range are dropped.
    """
    by_id = {e.id: e for e in events}
    parent_of = _resolve_parents(pairs, by_id)

    descendants: dict[str, list[str]] = {e.id: [] for e in events}
    for child, parent in parent_of.items():
        root = parent
        while root in parent_of:
            root = parent_of[root]
        descendants[root].append(child)

    out: list[StructuredEvent] = []
    for event in events:
        if event.id in parent_of:
            continue  # absorbed
        children = sorted(descendants[event.id], key=lambda i: by_id[i].verb_index)
        if not children:
            out.append(
                StructuredEvent(
                    base=event,
                    merged_verb_span=event.verb_span,
                    merged_verb_phrase=event.verb_text,
                    arguments=event.arguments,
                )
            )
            continue
        spans = [event.verb_span] + [by_id[c].verb_span for c in children]
        merged = Span(min(s.start for s in spans), max(s.end for s in spans))
        first_verb = sentence.tokens[merged.start]
        words = [first_verb.lemma.lower()] + [
            sentence.tokens[i].text for i in range(merged.start + 1, merged.end)
        ]
        kept_args = tuple(a for a in event.arguments if not merged.contains(a.span))
        out.append(
            StructuredEvent(
                base=event,
                merged_verb_span=merged,
                merged_verb_phrase=" ".join(words),
                arguments=kept_args,
                argument_children=tuple(children),
            )
        )
    return out


def _aux_surfaces(sentence: Sentence, verb_index: int) -> list[str]:
    """Auxiliary/modal surface forms immediately preceding the verb, left to
    right. Adverbs (incl. negation) are transparent: "will only inherit"
    still reads as will+inherit."""
    seq: list[str] = []
    i = verb_index - 1
    while i >= 0:
        tok = sentence.tokens[i]
        lemma = tok.lemma.lower()
        if tok.pos in ("MD", "TO") or lemma in {"be", "have", "do", "to"}:
            seq.append(tok.text.lower())
            i -= 1
        elif tok.pos == "RB" or lemma in NEGATION_LEMMAS or tok.text.lower() in {"n't", "not"}:
            i -= 1
        else:
            break
    seq.reverse()
    return seq


MODALS = frozenset({"will", "would", "shall", "should", "can", "could", "may", "might", "must"})
CONDITIONAL_MODALS = frozenset({"would", "might", "could"})


def classify_tense(sentence: Sentence, verb_index: int) -> Tense:
    """Map a verb occurrence to a tense from its POS tag and auxiliaries."""
    tag = sentence.tokens[verb_index].pos
    aux = _aux_surfaces(sentence, verb_index)
    modals = [a for a in aux if a in MODALS]

    if tag in ("VBZ", "VBP"):
        return Tense.PRESENT_SIMPLE
    if tag == "VBD":
        return Tense.PAST_SIMPLE
    if tag == "VB":
        if any(m in ("will", "shall") for m in modals):
            return Tense.FUTURE_SIMPLE
        if "to" in aux or modals:
            return Tense.INFINITIVE
        return Tense.UNKNOWN
    if tag == "VBN":
        if "have" in aux and any(m in CONDITIONAL_MODALS for m in modals):
            return Tense.PERFECT_CONDITIONAL
        if "had" in aux:
            return Tense.PAST_PERFECT
        return Tense.PAST_PARTICIPLE
    if tag == "VBG":
        if "had" in aux and "been" in aux:
            return Tense.PAST_PERFECT_CONTINUOUS
        if "have" in aux and "been" in aux and any(m in CONDITIONAL_MODALS for m in modals):
            return Tense.PERFECT_CONDITIONAL_CONTINUOUS
        if "was" in aux or "were" in aux:
            return Tense.PAST_CONTINUOUS
        return Tense.GERUND
    return Tense.UNKNOWN


def _pattern_match(sentence: Sentence, cons_verb: int, cond_verb: int) -> str | None:
    """First tense pattern (S1..S10) holding for consequence/condition verbs."""
    ti = classify_tense(sentence, cons_verb)
    tj = classify_tense(sentence, cond_verb)
    aux = _aux_surfaces(sentence, cons_verb)
    modals = [a for a in aux if a in MODALS]
    modal = modals[-1] if modals else None

    if ti is Tense.FUTURE_SIMPLE and tj is Tense.PRESENT_SIMPLE:
        return "S1"
    if ti is Tense.PRESENT_SIMPLE and tj is Tense.FUTURE_SIMPLE:
        return "S2"
    if modal in ("must", "should", "may", "might") and tj is Tense.PRESENT_SIMPLE:
        return "S3"
    if modal == "would" and ti is Tense.INFINITIVE and tj is Tense.PAST_SIMPLE:
        return "S4"
    if modal in ("could", "might") and tj is Tense.PAST_SIMPLE:
        return "S5"
    if modal == "could" and ti is Tense.INFINITIVE and tj in (Tense.PAST_CONTINUOUS, Tense.PAST_PERFECT):
        return "S6"
    if ti is Tense.PERFECT_CONDITIONAL and tj is Tense.PAST_PERFECT:
        return "S7"
    if ti is Tense.PERFECT_CONDITIONAL_CONTINUOUS and tj is Tense.PAST_PERFECT:
        return "S8"
    if ti is Tense.PERFECT_CONDITIONAL and tj is Tense.PAST_PERFECT_CONTINUOUS:
        return "S9"
    if len(aux) >= 2 and aux[-2:] == ["would", "be"] and ti is Tense.GERUND and tj is Tense.PAST_PERFECT:
        return "S10"
    return None


def _signal_occurrences(sentence: Sentence, signals: tuple[tuple[str, ...], ...]) -> list[Span]:
    words = [t.text.lower() for t in sentence.tokens]
    ordered = sorted(signals, key=len, reverse=True)
    found: list[Span] = []
    taken: set[int] = set()
    i = 0
    while i < len(words):
        matched = None
        for phrase in ordered:
            if tuple(words[i:i + len(phrase)]) == phrase and not taken.intersection(range(i, i + len(phrase))):
                matched = Span(i, i + len(phrase))
                break
        if matched is not None:
            found.append(matched)
            taken.update(range(matched.start, matched.end))
            i = matched.end
        else:
            i += 1
    return found


def _event_token_hull(event: StructuredEvent) -> Span:
    spans = [event.merged_verb_span] + [a.span for a in event.arguments]
    return Span(min(s.start for s in spans), max(s.end for s in spans))


def _subtract_condition(args: tuple[EventArgument, ...], hull: Span) -> tuple[EventArgument, ...]:
    """Truncate argument spans at the removed condition region."""
    kept: list[EventArgument] = []
    for arg in args:
        span = arg.span
        if not span.overlaps(hull):
            kept.append(arg)
            continue
        if span.start < hull.start:
            kept.append(replace(arg, span=Span(span.start, hull.start)))
        elif span.end > hull.end:
            kept.append(replace(arg, span=Span(hull.end, span.end)))
        # otherwise the argument lies inside the condition region: dropped
    return tuple(kept)


def detect_conditions(
    events: list[StructuredEvent],
    sentence: Sentence,
    signals: tuple[tuple[str, ...], ...] = SIGNAL_PHRASES,
) -> tuple[list[StructuredEvent], list[ConditionLink]]:
    """Split condition events from their consequences.

    For every signal occurrence, the nearest event verbs on each side form
    the candidate subsequence (consequence-first checked before
    signal-first); a pair is emitted when a tense pattern S1..S10 holds.
    The matched consequence loses the condition's tokens from its
    argument spans.
    """
    out = {e.id: e for e in events}
    links: list[ConditionLink] = []

    for signal in _signal_occurrences(sentence, signals):
        ordered = sorted(out.values(), key=lambda e: e.merged_verb_span.start)

        def nearest_left(pos: int):
            cands = [e for e in ordered if e.merged_verb_span.end <= pos]
            return cands[-1] if cands else None

        def nearest_right(pos: int):
            cands = [e for e in ordered if e.merged_verb_span.start >= pos]
            return cands[0] if cands else None

        def blocked(first, second) -> bool:
            subseq = Span(
                min(first.merged_verb_span.start, signal.start),
                max(second.merged_verb_span.end, signal.end),
            )
            return any(
                e.id not in (first.id, second.id) and e.merged_verb_span.overlaps(subseq)
                for e in ordered
            )

        match = None  # (condition, consequence)
        # Ordering A: consequence verb, signal, condition verb.
        cons = nearest_left(signal.start)
        cond = nearest_right(signal.end)
        if cons is not None and cond is not None and cons.id != cond.id and not blocked(cons, cond):
            pattern = _pattern_match(sentence, cons.base.verb_index, cond.base.verb_index)
            if pattern is not None:
                match = (cond, cons, pattern)
        if match is None:
            # Ordering B: signal, condition verb, consequence verb.
            cond = nearest_right(signal.end)
            if cond is not None:
                cons = nearest_right(cond.merged_verb_span.end)
                if cons is not None and cons.id != cond.id and not blocked(cond, cons):
                    pattern = _pattern_match(sentence, cons.base.verb_index, cond.base.verb_index)
                    if pattern is not None:
                        match = (cond, cons, pattern)
        if match is None:
            continue

        cond, cons, pattern = match
        if cond.condition_of is not None:
            continue  # already a condition of some consequence
        cond_hull = _event_token_hull(cond)
        removal = Span(min(signal.start, cond_hull.start), max(signal.end, cond_hull.end))
        out[cons.id] = replace(
            out[cons.id],
            arguments=_subtract_condition(out[cons.id].arguments, removal),
            conditions=out[cons.id].conditions + (cond.id,),
        )
        out[cond.id] = replace(out[cond.id], condition_of=cons.id)
        links.append(
            ConditionLink(
                condition_id=cond.id,
                consequence_id=cons.id,
                pattern=pattern,
                signal_span=signal,
            )
        )

    return [out[e.id] for e in events], links


def structure_sentence(
    events: list[Event],
    sentence: Sentence,
    signals: tuple[tuple[str, ...], ...] = SIGNAL_PHRASES,
) -> tuple[list[StructuredEvent], list[ConditionLink]]:
    """Full per-sentence structuring: containment, merging, conditions."""
    pairs = contained_events(events)
    by_id = {e.id: e for e in events}
    argument_pairs = [
        (ci, cj) for ci, cj in pairs if is_argument_event(by_id[ci], by_id[cj], sentence)
    ]
    merged = merge_argument_events(events, argument_pairs, sentence)
    return detect_conditions(merged, sentence, signals)
